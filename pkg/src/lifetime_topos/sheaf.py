"""The canonical sheaf ``x -> down(x)`` over the algebra of lifetimes.

A section over ``x`` is a single lifetime ``z <= x``; restricting it to
``y <= x`` is ``z & y``.  The subobject classifier has the same sections
and restrictions, so :func:`omega_contains` and :func:`omega_restrict` are
thin views on the same operations.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .algebra import (
    AlgebraError,
    Bounds,
    Lifetime,
    join_family,
    leq,
    meet,
    parse_lifetime,
    parse_rational,
)


class SheafError(AlgebraError):
    pass


class PatchNestingError(SheafError):
    """Restriction target is not below the source patch."""


class SectionError(SheafError):
    """A section does not lie in ``down(patch)``."""


class CoverError(SheafError):
    """The declared base is not the join of the patches."""


class GluingError(SheafError):
    def __init__(self, i: int, j: int, message: str):
        super().__init__(message)
        self.pair = (i, j)


@dataclass(frozen=True)
class CoverItem:
    patch: Lifetime
    section: Lifetime

    def __post_init__(self):
        if not leq(self.section, self.patch):
            raise SectionError(f"section {self.section} is not below patch {self.patch}")


@dataclass(frozen=True)
class Cover:
    items: tuple[CoverItem, ...]
    base: Lifetime

    def __post_init__(self):
        if not self.items:
            raise CoverError("a cover needs at least one item")
        object.__setattr__(self, "items", tuple(self.items))
        joined = join_family([it.patch for it in self.items])
        if joined != self.base:
            raise CoverError(f"base {self.base} is not the join {joined} of the patches")

    @classmethod
    def from_items(cls, items: Iterable[CoverItem]) -> Cover:
        items = tuple(items)
        if not items:
            raise CoverError("a cover needs at least one item")
        return cls(items, join_family([it.patch for it in items]))

    @property
    def patches(self) -> list[Lifetime]:
        return [it.patch for it in self.items]

    @property
    def sections(self) -> list[Lifetime]:
        return [it.section for it in self.items]


def restrict(z: Lifetime, from_x: Lifetime, to_y: Lifetime) -> Lifetime:
    if not leq(to_y, from_x):
        raise PatchNestingError(f"cannot restrict from {from_x} to {to_y}: not nested")
    if not leq(z, from_x):
        raise SectionError(f"{z} is not a section over {from_x}")
    return meet(z, to_y)


def incompatible_pair(c: Cover) -> Optional[tuple[int, int]]:
    """First ``(i, j)`` whose sections disagree on the overlap, or None."""
    items = c.items
    for i in range(len(items)):
        zi, xi = items[i].section, items[i].patch
        for j in range(i + 1, len(items)):
            zj, xj = items[j].section, items[j].patch
            # z_i & x_i & x_j reduces to z_i & x_j since z_i <= x_i
            if meet(zi, xj) != meet(zj, xi):
                return (i, j)
    return None


def is_compatible(c: Cover) -> bool:
    return incompatible_pair(c) is None


def glue(c: Cover) -> Lifetime:
    """The unique section over the base restricting to every item."""
    bad = incompatible_pair(c)
    if bad is not None:
        i, j = bad
        zi, xi = c.items[i].section, c.items[i].patch
        zj, xj = c.items[j].section, c.items[j].patch
        raise GluingError(
            i, j,
            f"items {i},{j} disagree on their overlap: {meet(zi, xj)} vs {meet(zj, xi)}",
        )
    return join_family(c.sections)


def separated_check(base: Lifetime, patches: Sequence[Lifetime], s: Lifetime, t: Lifetime) -> bool:
    """Whether agreement of ``s`` and ``t`` on every patch forces ``s == t``."""
    if join_family(patches) != base:
        raise CoverError(f"base {base} is not the join of the patches")
    if not (leq(s, base) and leq(t, base)):
        raise SectionError("s and t must be sections over the base")
    agree = all(meet(s, x) == meet(t, x) for x in patches)
    return (not agree) or s == t


def omega_contains(x: Lifetime, z: Lifetime) -> bool:
    return leq(z, x)


def omega_restrict(z: Lifetime, from_x: Lifetime, to_y: Lifetime) -> Lifetime:
    return restrict(z, from_x, to_y)


def omega_top(x: Lifetime) -> Lifetime:
    """The maximal sieve on ``x``, i.e. ``x`` itself."""
    return x


# "states of knowledge": sections over x are up(x); shrinking x enlarges the
# section set, and restriction is plain inclusion.

def knowledge_contains(x: Lifetime, z: Lifetime) -> bool:
    return leq(x, z)


def knowledge_restrict(z: Lifetime, from_x: Lifetime, to_y: Lifetime) -> Lifetime:
    if not leq(to_y, from_x):
        raise PatchNestingError(f"cannot restrict from {from_x} to {to_y}: not nested")
    if not leq(from_x, z):
        raise SectionError(f"{z} is not a section over {from_x}")
    return z


def random_compatible_cover(
    rng: random.Random, bounds: Bounds, max_patches: int = 5, denominators=(1, 2, 3, 4)
) -> tuple[Cover, Lifetime]:
    """A compatible cover built by restricting a hidden global section.

    Returns the cover and the hidden section, which gluing must recover.
    """

    def coord(limit):
        d = rng.choice(denominators)
        return parse_rational(f"{rng.randint(0, int(limit * d))}/{d}")

    def point():
        return Lifetime(coord(bounds.eps1), coord(bounds.eps2), bounds)

    patches = [point() for _ in range(rng.randint(1, max_patches))]
    base = join_family(patches)
    hidden = meet(point(), base)
    items = tuple(CoverItem(x, meet(hidden, x)) for x in patches)
    return Cover(items, base), hidden


_ITEM_RE = re.compile(r"^patch\s*=\s*(\([^)]*\))\s+section\s*=\s*(\([^)]*\))$")
_BASE_RE = re.compile(r"^base\s*=\s*(\([^)]*\))$")


class CoverParseError(SheafError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_cover(text: str, bounds: Optional[Bounds] = None) -> Cover:
    """Read a cover file.

    One ``patch=(a,b) section=(c,d)`` per line, an optional ``base=(p,q)``
    and an optional ``bounds E1 E2`` (default ``bounds``, else 10 10).
    ``#`` starts a comment.
    """
    raw_items: list[tuple[int, str, str]] = []
    raw_base: Optional[tuple[int, str]] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("bounds"):
            parts = line.split()
            if len(parts) != 3:
                raise CoverParseError(lineno, "expected 'bounds E1 E2'")
            try:
                bounds = Bounds(parse_rational(parts[1]), parse_rational(parts[2]))
            except ValueError as exc:
                raise CoverParseError(lineno, str(exc)) from None
            continue
        m = _BASE_RE.match(line)
        if m:
            if raw_base is not None:
                raise CoverParseError(lineno, "duplicate base line")
            raw_base = (lineno, m.group(1))
            continue
        m = _ITEM_RE.match(line)
        if m is None:
            raise CoverParseError(lineno, f"unrecognised line {line!r}")
        raw_items.append((lineno, m.group(1), m.group(2)))
    if bounds is None:
        bounds = Bounds(10, 10)
    if not raw_items:
        raise CoverParseError(0, "no cover items")

    def lifetime(lineno, s):
        try:
            return parse_lifetime(s, bounds)
        except AlgebraError:
            raise
        except ValueError as exc:
            raise CoverParseError(lineno, str(exc)) from None

    items = tuple(CoverItem(lifetime(n, p), lifetime(n, s)) for n, p, s in raw_items)
    if raw_base is None:
        return Cover.from_items(items)
    return Cover(items, lifetime(*raw_base))
