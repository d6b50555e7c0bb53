from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lifetime_topos.algebra import (
    BarInterval,
    Bounds,
    BoundsMismatchError,
    Lifetime,
    Orientation,
    OutOfBoundsError,
    bar_interval,
    complement_of,
    format_lifetime,
    implies,
    join,
    join_family,
    leq,
    length,
    meet,
    meet_family,
    orientation,
    parse_lifetime,
    parse_rational,
    pseudo_complement,
)

from conftest import B10, P, lifetimes
from oracles import grid_implies

TOP, BOT = B10.top(), B10.bottom()


def test_bounds_corners():
    assert TOP == P(0, 10) and BOT == P(10, 0)
    with pytest.raises(ValueError):
        Bounds(0, 5)


def test_coordinates_are_exact_and_checked():
    a = P("7/2", Fraction(1, 3))
    assert a.x1 == Fraction(7, 2) and isinstance(a.x2, Fraction)
    with pytest.raises(OutOfBoundsError):
        P(11, 0)
    with pytest.raises(TypeError):
        P(0.5, 1)


def test_bounds_must_match():
    other = Bounds(5, 5)
    with pytest.raises(BoundsMismatchError):
        meet(P(1, 1), Lifetime(1, 1, other))
    with pytest.raises(BoundsMismatchError):
        leq(P(1, 1), Lifetime(1, 1, other))


def test_leq_examples():
    assert leq(P(5, 6), P(2, 8))
    assert not leq(P(1, 4), P(3, 7)) and not leq(P(3, 7), P(1, 4))
    assert all(leq(BOT, a) for a in B10.grid())


def test_meet_join_examples():
    assert meet(P(1, 4), P(3, 7)) == P(3, 4)
    assert meet(P(5, 6), P(2, 8)) == P(5, 6)
    assert meet(P(2, 8), BOT) == BOT
    assert join(P(1, 4), P(3, 7)) == P(1, 7)
    assert join(P(5, 6), P(2, 8)) == P(2, 8)
    assert P(1, 4) & P(3, 7) == P(3, 4) and P(1, 4) | P(3, 7) == P(1, 7)


def test_top_absorbs_join():
    assert all(join(TOP, a) == TOP for a in B10.grid())


def test_families():
    xs = [P(1, 4), P(3, 7), P(2, 2)]
    assert meet_family(xs) == P(3, 2)
    assert join_family(xs) == P(1, 7)
    assert meet_family([P(4, 4)]) == P(4, 4)


def test_empty_families_need_bounds():
    assert meet_family([], B10) == TOP
    assert join_family([], B10) == BOT
    with pytest.raises(ValueError):
        meet_family([])


@pytest.mark.parametrize(
    "a, b, expected",
    [
        ((5, 6), (2, 8), (0, 10)),
        ((2, 8), (5, 6), (5, 6)),
        ((1, 4), (3, 7), (3, 10)),
        ((3, 7), (1, 4), (0, 4)),
        ((0, 0), (10, 0), (10, 10)),
    ],
)
def test_implies_examples(a, b, expected):
    assert grid_implies(a, b) == expected  # oracle agrees with the frozen value
    assert implies(P(*a), P(*b)) == P(*expected)


def test_pseudo_complement_examples():
    assert grid_implies((2, 8), (10, 0)) == (10, 0)
    assert pseudo_complement(P(2, 8)) == BOT
    assert pseudo_complement(BOT) == TOP
    assert grid_implies((0, 0), (10, 0)) == (10, 10)
    assert pseudo_complement(P(0, 0)) == P(10, 10)


def test_complement_examples():
    assert complement_of(P(0, 0)) == P(10, 10)
    assert complement_of(P(2, 8)) is None
    assert complement_of(TOP) == BOT
    assert complement_of(BOT) == TOP


@pytest.mark.parametrize(
    "pt, orient, size",
    [((2, 5), Orientation.POSITIVE, 3), ((5, 2), Orientation.NEGATIVE, 3), ((4, 4), Orientation.DEGENERATE, 0)],
)
def test_orientation_and_length(pt, orient, size):
    assert orientation(P(*pt)) is orient
    assert length(P(*pt)) == size


def test_bar_interval():
    assert bar_interval(P(2, 5)) == BarInterval(2, 5)
    assert bar_interval(P(5, 2)) == BarInterval(2, 5)
    assert bar_interval(P(4, 4)) == BarInterval(4, 4)


def test_rendering_round_trip():
    a = P(Fraction(7, 2), 5)
    assert format_lifetime(a) == "(7/2,5)"
    assert parse_lifetime("( 7/2 , 5 )", B10) == a
    assert format_lifetime(a, decimals=2) == "(3.50,5.00)"
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(lifetimes())
def test_render_parse_identity(a):
    assert parse_lifetime(format_lifetime(a), B10) == a


@given(lifetimes(), lifetimes(), lifetimes())
def test_lattice_laws(a, b, c):
    assert meet(a, meet(b, c)) == meet(meet(a, b), c)
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert meet(a, b) == meet(b, a) and join(a, b) == join(b, a)
    assert meet(a, a) == a and join(a, a) == a
    assert meet(a, join(a, b)) == a == join(a, meet(a, b))


@given(lifetimes(), lifetimes())
def test_order_agrees_with_operations(a, b):
    assert leq(a, b) == (meet(a, b) == a) == (join(a, b) == b)


@given(lifetimes(), lifetimes(), lifetimes())
def test_glb_lub(a, b, c):
    m, j = meet(a, b), join(a, b)
    assert leq(m, a) and leq(m, b) and leq(a, j) and leq(b, j)
    if leq(c, a) and leq(c, b):
        assert leq(c, m)
    if leq(a, c) and leq(b, c):
        assert leq(j, c)


@given(lifetimes(), lifetimes(), lifetimes())
def test_adjunction(a, b, x):
    assert leq(meet(x, a), b) == leq(x, implies(a, b))


@given(lifetimes(), st.lists(lifetimes(), min_size=1, max_size=8))
def test_finite_distributivity(a, ys):
    assert meet(a, join_family(ys)) == join_family([meet(a, y) for y in ys])
    assert meet_family(ys) == _fold(meet, ys) and join_family(ys) == _fold(join, ys)


def _fold(op, xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = op(acc, x)
    return acc


@given(lifetimes(), lifetimes())
def test_implication_identities(a, b):
    assert implies(a, a) == TOP
    assert implies(TOP, b) == b
    assert leq(meet(a, implies(a, b)), b)


@given(lifetimes())
def test_not_boolean(a):
    if 0 < a.x1 < 10 and 0 < a.x2 < 10:
        assert join(a, pseudo_complement(a)) != TOP
        assert complement_of(a) is None


@given(lifetimes(), lifetimes())
def test_bar_containment_for_positive(a, b):
    if orientation(a) is Orientation.POSITIVE and orientation(b) is Orientation.POSITIVE:
        assert leq(a, b) == bar_interval(b).contains(bar_interval(a))


def test_immutable():
    a = P(1, 2)
    with pytest.raises(AttributeError):
        a.x1 = Fraction(3)
    assert hash(a) == hash(P(1, 2))
