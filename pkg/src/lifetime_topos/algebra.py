"""The algebra of lifetimes.

Points ``(x1, x2)`` of the rectangle ``[0, eps1]^op x [0, eps2]`` with exact
rational coordinates.  ``x1`` is read as a birth time, ``x2`` as a death
time; the order is bar inclusion, so ``a <= b`` iff ``b.x1 <= a.x1`` and
``a.x2 <= b.x2``.  Top is ``(0, eps2)`` and bottom is ``(eps1, 0)``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

RationalLike = Union[int, str, Fraction]

_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class AlgebraError(ValueError):
    """Base error for invalid lifetime-algebra inputs."""


class BoundsMismatchError(AlgebraError):
    """Raised when lifetimes from different carrier rectangles are combined."""


class OutOfBoundsError(AlgebraError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or a bare integer into a Fraction.

    Decimal and exponent syntax is rejected so that every accepted string
    has an exact, canonical reading.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(q: Fraction, decimals: Optional[int] = None) -> str:
    """``p/q`` rendering, integers without ``/1``.

    With ``decimals`` set, a rounded decimal for human consumption.
    """
    if decimals is None:
        return str(q)
    return f"{float(q):.{decimals}f}"


@dataclass(frozen=True)
class Bounds:
    """The carrier rectangle; fixes top, bottom and the coordinate ranges."""

    eps1: Fraction
    eps2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "eps1", to_rational(self.eps1))
        object.__setattr__(self, "eps2", to_rational(self.eps2))
        if self.eps1 <= 0 or self.eps2 <= 0:
            raise AlgebraError(f"bounds must be positive, got ({self.eps1}, {self.eps2})")

    def top(self) -> Lifetime:
        return Lifetime._raw(Fraction(0), self.eps2, self)

    def bottom(self) -> Lifetime:
        return Lifetime._raw(self.eps1, Fraction(0), self)

    def point(self, x1: RationalLike, x2: RationalLike) -> Lifetime:
        return Lifetime(x1, x2, self)

    def grid(self, step: RationalLike = 1) -> list[Lifetime]:
        """All points whose coordinates are multiples of ``step``."""
        step = to_rational(step)
        n1, n2 = int(self.eps1 / step), int(self.eps2 / step)
        return [
            Lifetime._raw(i * step, j * step, self)
            for i in range(n1 + 1)
            for j in range(n2 + 1)
        ]


class Lifetime:
    """An element of the algebra of lifetimes.

    Immutable.  ``&`` is meet, ``|`` is join, ``<=`` is the lattice order.
    """

    __slots__ = ("x1", "x2", "bounds")

    def __init__(self, x1: RationalLike, x2: RationalLike, bounds: Bounds):
        x1, x2 = to_rational(x1), to_rational(x2)
        if not (0 <= x1 <= bounds.eps1 and 0 <= x2 <= bounds.eps2):
            raise OutOfBoundsError(
                f"({x1}, {x2}) lies outside [0,{bounds.eps1}]x[0,{bounds.eps2}]"
            )
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)
        object.__setattr__(self, "bounds", bounds)

    @classmethod
    def _raw(cls, x1: Fraction, x2: Fraction, bounds: Bounds) -> Lifetime:
        # trusted constructor for results of lattice operations
        obj = object.__new__(cls)
        object.__setattr__(obj, "x1", x1)
        object.__setattr__(obj, "x2", x2)
        object.__setattr__(obj, "bounds", bounds)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Lifetime is immutable")

    def __eq__(self, other):
        if not isinstance(other, Lifetime):
            return NotImplemented
        return self.x1 == other.x1 and self.x2 == other.x2 and self.bounds == other.bounds

    def __hash__(self):
        return hash((self.x1, self.x2, self.bounds))

    def __repr__(self):
        return f"Lifetime({self.x1!s}, {self.x2!s})"

    def __str__(self):
        return format_lifetime(self)

    def __reduce__(self):
        return (Lifetime, (self.x1, self.x2, self.bounds))

    def __and__(self, other: Lifetime) -> Lifetime:
        return meet(self, other)

    def __or__(self, other: Lifetime) -> Lifetime:
        return join(self, other)

    def __le__(self, other: Lifetime) -> bool:
        return leq(self, other)

    def __ge__(self, other: Lifetime) -> bool:
        return leq(other, self)

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.x1, self.x2)


@dataclass(frozen=True)
class BarInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise AlgebraError(f"empty bar [{self.lo}, {self.hi}]")

    def contains(self, other: BarInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi


class Orientation(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    DEGENERATE = "degenerate"


def _check(a: Lifetime, b: Lifetime) -> Bounds:
    if a.bounds is not b.bounds and a.bounds != b.bounds:
        raise BoundsMismatchError(f"{a!r} and {b!r} live in different bounds")
    return a.bounds


def leq(a: Lifetime, b: Lifetime) -> bool:
    _check(a, b)
    return b.x1 <= a.x1 and a.x2 <= b.x2


def meet(a: Lifetime, b: Lifetime) -> Lifetime:
    bounds = _check(a, b)
    return Lifetime._raw(max(a.x1, b.x1), min(a.x2, b.x2), bounds)


def join(a: Lifetime, b: Lifetime) -> Lifetime:
    bounds = _check(a, b)
    return Lifetime._raw(min(a.x1, b.x1), max(a.x2, b.x2), bounds)


def _common_bounds(xs: list[Lifetime], bounds: Optional[Bounds]) -> Bounds:
    if not xs:
        if bounds is None:
            raise AlgebraError("empty family needs explicit bounds")
        return bounds
    first = xs[0].bounds if bounds is None else bounds
    for x in xs:
        if x.bounds is not first and x.bounds != first:
            raise BoundsMismatchError(f"{x!r} does not live in {first}")
    return first


def meet_family(xs: Iterable[Lifetime], bounds: Optional[Bounds] = None) -> Lifetime:
    """Meet of a finite family; the empty meet is top (``bounds`` required)."""
    xs = list(xs)
    b = _common_bounds(xs, bounds)
    if not xs:
        return b.top()
    return Lifetime._raw(max(x.x1 for x in xs), min(x.x2 for x in xs), b)


def join_family(xs: Iterable[Lifetime], bounds: Optional[Bounds] = None) -> Lifetime:
    """Join of a finite family; the empty join is bottom (``bounds`` required)."""
    xs = list(xs)
    b = _common_bounds(xs, bounds)
    if not xs:
        return b.bottom()
    return Lifetime._raw(min(x.x1 for x in xs), max(x.x2 for x in xs), b)


def implies(a: Lifetime, b: Lifetime) -> Lifetime:
    """Relative pseudo-complement: the largest ``x`` with ``x & a <= b``.

    Each coordinate is decided independently.  The birth coordinate is free
    (0) when ``a`` already starts no earlier than ``b``, otherwise it is
    pinned to ``b.x1``; the death coordinate is free (``eps2``) when ``a``
    already ends no later than ``b``, otherwise pinned to ``b.x2``.
    """
    bounds = _check(a, b)
    c1 = Fraction(0) if b.x1 <= a.x1 else b.x1
    c2 = bounds.eps2 if a.x2 <= b.x2 else b.x2
    return Lifetime._raw(c1, c2, bounds)


def pseudo_complement(a: Lifetime) -> Lifetime:
    return implies(a, a.bounds.bottom())


def complement_of(a: Lifetime) -> Optional[Lifetime]:
    """The Boolean complement of ``a`` if one exists, else None.

    ``a & c = bottom`` and ``a | c = top`` force ``{a.x1, c.x1} = {0, eps1}``
    and ``{a.x2, c.x2} = {0, eps2}``, so only the four corners qualify.
    """
    e1, e2 = a.bounds.eps1, a.bounds.eps2
    if a.x1 not in (0, e1) or a.x2 not in (0, e2):
        return None
    c1 = e1 if a.x1 == 0 else Fraction(0)
    c2 = e2 if a.x2 == 0 else Fraction(0)
    return Lifetime._raw(c1, c2, a.bounds)


def orientation(a: Lifetime) -> Orientation:
    if a.x1 < a.x2:
        return Orientation.POSITIVE
    if a.x2 < a.x1:
        return Orientation.NEGATIVE
    return Orientation.DEGENERATE


def length(a: Lifetime) -> Fraction:
    return abs(a.x2 - a.x1)


def bar_interval(a: Lifetime) -> BarInterval:
    return BarInterval(min(a.x1, a.x2), max(a.x1, a.x2))


def format_lifetime(a: Lifetime, decimals: Optional[int] = None) -> str:
    return f"({format_rational(a.x1, decimals)},{format_rational(a.x2, decimals)})"


_PAIR_RE = re.compile(r"\s*\(\s*([^,()]+?)\s*,\s*([^,()]+?)\s*\)\s*$")


def parse_lifetime(text: str, bounds: Bounds) -> Lifetime:
    """Inverse of :func:`format_lifetime` (exact rendering only)."""
    m = _PAIR_RE.match(text)
    if m is None:
        raise ValueError(f"not a pair: {text!r}")
    return Lifetime(parse_rational(m.group(1)), parse_rational(m.group(2)), bounds)
