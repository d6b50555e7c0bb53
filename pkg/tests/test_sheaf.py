import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lifetime_topos.algebra import join_family, leq, meet
from lifetime_topos.sheaf import (
    Cover,
    CoverError,
    CoverItem,
    CoverParseError,
    GluingError,
    PatchNestingError,
    SectionError,
    glue,
    is_compatible,
    knowledge_contains,
    knowledge_restrict,
    omega_contains,
    omega_restrict,
    parse_cover,
    random_compatible_cover,
    restrict,
    separated_check,
)
from lifetime_topos.varcomplex import alive_over, triangle_fixture

from conftest import B10, FIXTURES, P, lifetimes

COMPATIBLE = Cover.from_items([CoverItem(P(1, 5), P(2, 5)), CoverItem(P(3, 8), P(3, 6))])
INCOMPATIBLE = Cover.from_items([CoverItem(P(1, 5), P(2, 4)), CoverItem(P(3, 8), P(4, 6))])


def test_restrict_examples():
    assert restrict(P(5, 7), P(2, 8), P(4, 6)) == P(5, 6)
    assert restrict(P(5, 7), P(2, 8), P(2, 8)) == P(5, 7)
    step = restrict(restrict(P(5, 7), P(2, 8), P(4, 6)), P(4, 6), P(5, 5))
    assert step == restrict(P(5, 7), P(2, 8), P(5, 5)) == P(5, 5)


def test_restrict_preconditions_are_distinct():
    with pytest.raises(PatchNestingError):
        restrict(P(5, 6), P(4, 6), P(2, 8))
    with pytest.raises(SectionError):
        restrict(P(1, 9), P(2, 8), P(4, 6))


def test_compatibility_examples():
    # both sections are restrictions of (2,6); overlaps agree at (3,5)
    assert meet(P(2, 5), P(3, 8)) == meet(P(3, 6), P(1, 5)) == P(3, 5)
    assert is_compatible(COMPATIBLE)
    assert meet(P(2, 4), P(3, 8)) == P(3, 4) and meet(P(4, 6), P(1, 5)) == P(4, 5)
    assert not is_compatible(INCOMPATIBLE)
    assert is_compatible(Cover.from_items([CoverItem(P(2, 8), P(4, 4))]))


def test_glue_examples():
    assert COMPATIBLE.base == P(1, 8)
    z = glue(COMPATIBLE)
    assert z == P(2, 6)
    assert restrict(z, P(1, 8), P(1, 5)) == P(2, 5)
    assert restrict(z, P(1, 8), P(3, 8)) == P(3, 6)
    assert glue(Cover.from_items([CoverItem(P(2, 8), P(4, 4))])) == P(4, 4)
    with pytest.raises(GluingError) as info:
        glue(INCOMPATIBLE)
    assert info.value.pair == (0, 1)


def test_cover_invariants():
    with pytest.raises(SectionError):
        CoverItem(P(3, 5), P(1, 5))
    with pytest.raises(CoverError):
        Cover((CoverItem(P(1, 5), P(2, 5)),), P(0, 9))


def test_separated_examples():
    assert separated_check(P(1, 8), [P(1, 5), P(3, 8)], P(2, 6), P(2, 6))
    assert separated_check(P(1, 8), [P(1, 8)], P(2, 6), P(2, 5))


def test_separated_randomized_search():
    rng = random.Random(7)
    for _ in range(2000):
        cover, _ = random_compatible_cover(rng, B10)
        s = meet(P(rng.randint(0, 10), rng.randint(0, 10)), cover.base)
        t = meet(P(rng.randint(0, 10), rng.randint(0, 10)), cover.base)
        assert separated_check(cover.base, cover.patches, s, t)


@given(lifetimes(), lifetimes(), lifetimes(), lifetimes())
def test_functoriality(z, x, y, w):
    x = join_family([x, y, w, z])
    y = join_family([y, w])
    z = meet(z, x)
    assert restrict(z, x, x) == z
    assert restrict(restrict(z, x, y), y, w) == restrict(z, x, w)


def test_random_covers_glue_back():
    rng = random.Random(3)
    for _ in range(2000):
        cover, hidden = random_compatible_cover(rng, B10)
        z = glue(cover)
        assert z == hidden and leq(z, cover.base)
        assert all(restrict(z, cover.base, it.patch) == it.section for it in cover.items)


def test_omega():
    assert omega_contains(P(3, 7), P(5, 6))
    assert not omega_contains(P(3, 7), P(2, 6))
    assert omega_contains(P(3, 7), P(3, 7))
    assert omega_restrict(P(5, 7), P(2, 8), P(4, 6)) == restrict(P(5, 7), P(2, 8), P(4, 6))


def test_states_of_knowledge_is_inclusion():
    x, y = P(3, 7), P(4, 6)
    z = P(1, 9)
    assert knowledge_contains(x, z) and knowledge_contains(y, z)
    assert knowledge_restrict(z, x, y) == z
    with pytest.raises(SectionError):
        knowledge_restrict(P(5, 6), x, y)


@given(st.lists(st.integers(0, 10), min_size=4, max_size=4))
def test_barcode_sheaf_restrictions_are_inclusions(ts):
    # nested positive bars: q inside q2, so q <= q2
    c = triangle_fixture()
    a, b, x, y = sorted(Fraction(t, 2) for t in ts)
    q, q2 = P(b, x, c.bounds), P(a, y, c.bounds)
    assert leq(q, q2)
    assert alive_over(c, q2) <= alive_over(c, q)


def test_parse_cover_files():
    cover = parse_cover((FIXTURES / "cover_compatible.txt").read_text())
    assert cover == COMPATIBLE
    assert not is_compatible(parse_cover((FIXTURES / "cover_incompatible.txt").read_text()))
    with pytest.raises(CoverParseError):
        parse_cover("patch=(1,2)\n")
    with pytest.raises(CoverError):
        parse_cover("patch=(1,5) section=(2,5)\nbase=(0,9)\n")
