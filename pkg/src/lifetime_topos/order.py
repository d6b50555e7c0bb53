"""Ideals, filters, irreducible and prime elements, and the dual space."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import (
    AlgebraError,
    Bounds,
    Lifetime,
    format_rational,
    join_family,
    leq,
    meet,
    meet_family,
)


@dataclass(frozen=True)
class Rectangle:
    """Closed product ``[lo1, hi1] x [lo2, hi2]`` inside the carrier."""

    lo1: Fraction
    hi1: Fraction
    lo2: Fraction
    hi2: Fraction
    bounds: Bounds

    def __post_init__(self):
        b = self.bounds
        if not (0 <= self.lo1 <= self.hi1 <= b.eps1 and 0 <= self.lo2 <= self.hi2 <= b.eps2):
            raise AlgebraError(f"degenerate or out-of-bounds rectangle {self}")

    def __contains__(self, z: Lifetime) -> bool:
        return self.lo1 <= z.x1 <= self.hi1 and self.lo2 <= z.x2 <= self.hi2

    def __str__(self):
        f = format_rational
        return f"[{f(self.lo1)},{f(self.hi1)}]x[{f(self.lo2)},{f(self.hi2)}]"


def principal_ideal(a: Lifetime) -> Rectangle:
    """``down(a) = [a1, eps1] x [0, a2]``."""
    return Rectangle(a.x1, a.bounds.eps1, Fraction(0), a.x2, a.bounds)


def principal_filter(a: Lifetime) -> Rectangle:
    """``up(a) = [0, a1] x [a2, eps2]``."""
    return Rectangle(Fraction(0), a.x1, a.x2, a.bounds.eps2, a.bounds)


def ideal_generated(xs: Iterable[Lifetime]) -> Rectangle:
    xs = list(xs)
    if not xs:
        raise AlgebraError("ideal_generated needs at least one generator")
    return principal_ideal(meet_family(xs))


def filter_generated(xs: Iterable[Lifetime]) -> Rectangle:
    xs = list(xs)
    if not xs:
        raise AlgebraError("filter_generated needs at least one generator")
    return principal_filter(join_family(xs))


def is_join_irreducible(a: Lifetime) -> bool:
    # bottom edge or right edge, bottom itself excluded
    e1 = a.bounds.eps1
    if a.x1 == e1 and a.x2 == 0:
        return False
    return a.x2 == 0 or a.x1 == e1


def is_meet_irreducible(a: Lifetime) -> bool:
    # left edge or top edge; top counts, matching the prime elements below
    return a.x1 == 0 or a.x2 == a.bounds.eps2


def is_prime_element(a: Lifetime) -> bool:
    """True iff ``down(a)`` is a prime ideal: ``a = (0, x2)`` or ``a = (x1, eps2)``."""
    return a.x1 == 0 or a.x2 == a.bounds.eps2


def prime_decompose(a: Lifetime) -> tuple[Lifetime, Lifetime]:
    """Split ``a`` into its death prime ``(0, a2)`` and birth prime ``(a1, eps2)``.

    Their meet is ``a``.
    """
    b = a.bounds
    return (Lifetime._raw(Fraction(0), a.x2, b), Lifetime._raw(a.x1, b.eps2, b))


class NotPrimeError(AlgebraError):
    pass


@dataclass(frozen=True)
class DualOpen:
    """Basic open of the dual space: ``up(vertical_base) | up(horizontal_base)``."""

    vertical_base: Lifetime
    horizontal_base: Lifetime

    def __post_init__(self):
        if self.vertical_base.x1 != 0:
            raise NotPrimeError(f"vertical base {self.vertical_base} must have x1 = 0")
        if self.horizontal_base.x2 != self.horizontal_base.bounds.eps2:
            raise NotPrimeError(f"horizontal base {self.horizontal_base} must have x2 = eps2")

    def point(self) -> Lifetime:
        """The lattice element this open corresponds to."""
        return meet(self.vertical_base, self.horizontal_base)


def dual_open(a: Lifetime) -> DualOpen:
    vertical, horizontal = prime_decompose(a)
    return DualOpen(vertical, horizontal)


def dual_open_contains(o: DualOpen, p: Lifetime) -> bool:
    if not is_prime_element(p):
        raise NotPrimeError(f"{p} is not a point of the dual space")
    return leq(o.vertical_base, p) or leq(o.horizontal_base, p)

