import random
from fractions import Fraction

import pytest

from lifetime_topos.algebra import AlgebraError, Bounds, Lifetime, leq
from lifetime_topos.varcomplex import (
    TRIANGLE_FIXTURE,
    ComplexParseError,
    DuplicateIdError,
    FaceCountError,
    FaceDimensionError,
    LifetimeContainmentError,
    LifetimeRangeError,
    UnknownFaceError,
    VariableComplex,
    alive_over,
    critical_values,
    format_complex,
    parse_complex,
    random_complex,
    sample_points,
    slice_at,
    triangle_fixture,
)

from conftest import FIXTURES, REPO

MALFORMED = FIXTURES / "malformed"
ALL = {"x", "y", "z", "d", "e", "f", "t"}


def ids(s):
    return s.all_ids()


def test_fixture_parses_in_file_order():
    c = triangle_fixture()
    assert [e.id for e in c] == ["x", "y", "z", "d", "e", "f", "t"]
    assert c.bounds == Bounds(5, 5)
    assert c["t"].faces == ("d", "e", "f")
    assert (REPO / "fixtures" / "triangle_lifetimes.pc").read_text() == TRIANGLE_FIXTURE


@pytest.mark.parametrize(
    "name, error",
    [
        ("parse_error", ComplexParseError),
        ("unknown_face", UnknownFaceError),
        ("face_count", FaceCountError),
        ("face_dimension", FaceDimensionError),
        ("lifetime_containment", LifetimeContainmentError),
        ("duplicate_id", DuplicateIdError),
    ],
)
def test_malformed_files(name, error):
    with pytest.raises(error):
        parse_complex((MALFORMED / f"{name}.pc").read_text())


def test_containment_error_names_simplex_and_face():
    text = TRIANGLE_FIXTURE.replace("simplex t 2 2 3", "simplex t 2 2 5")
    with pytest.raises(LifetimeContainmentError) as info:
        parse_complex(text)
    assert info.value.simplex == "t"
    assert "e" in info.value.faces  # e dies at 3 < 5 (d at 4 < 5 as well)


def test_parse_error_carries_line_number():
    with pytest.raises(ComplexParseError) as info:
        parse_complex("pcomplex v1\n\nsimplex x 0 0 5\nsimplex y 0 0 1/0\n")
    assert info.value.lineno == 4
    with pytest.raises(ComplexParseError):
        parse_complex("simplex x 0 0 5\n")


def test_negative_lifetime_rejected():
    with pytest.raises(LifetimeRangeError):
        parse_complex("pcomplex v1\nbounds 5 5\nsimplex x 0 3 1\n")
    with pytest.raises(LifetimeRangeError):
        parse_complex("pcomplex v1\nbounds 5 5\nsimplex x 0 0 6\n")


def test_slices():
    c = triangle_fixture()
    assert ids(slice_at(c, 0)) == {"x", "y"}
    assert ids(slice_at(c, 2)) == ALL
    assert ids(slice_at(c, Fraction(7, 2))) == {"x", "y", "d"}
    assert slice_at(c, 2).ids(1) == ("d", "e", "f")


def test_slices_are_closed_and_piecewise_constant():
    rng = random.Random(11)
    for _ in range(50):
        c = random_complex(rng)
        crit = critical_values(c)
        for t in sample_points(c):
            assert slice_at(c, t).is_closed()
        for lo, hi in zip(crit, crit[1:]):
            a, b = lo + (hi - lo) / 3, lo + 2 * (hi - lo) / 3
            assert ids(slice_at(c, a)) == ids(slice_at(c, b))


def test_alive_over():
    c = triangle_fixture()
    q = lambda a, b: Lifetime(a, b, c.bounds)
    assert alive_over(c, q(1, 3)) == ALL - {"t"}
    assert alive_over(c, q(2, 3)) == ALL
    for t in sample_points(c):
        assert alive_over(c, q(t, t)) == ids(slice_at(c, t))
    with pytest.raises(AlgebraError):
        alive_over(c, q(3, 1))


def test_alive_over_is_antitone():
    c = triangle_fixture()
    pts = [Lifetime(a, b, c.bounds) for a in range(6) for b in range(a, 6)]
    for p in pts:
        for p2 in pts:
            if leq(p, p2):
                assert alive_over(c, p2) <= alive_over(c, p)


def test_critical_values_and_samples():
    c = triangle_fixture()
    assert critical_values(c) == [0, 1, 2, 3, 4, 5]
    assert sample_points(c) == [Fraction(k, 2) for k in range(11)]
    single = parse_complex("pcomplex v1\nsimplex v 0 1 1\n")
    assert critical_values(single) == [1] and sample_points(single) == [1]


def test_round_trip():
    rng = random.Random(5)
    for _ in range(30):
        c = random_complex(rng)
        text = format_complex(c)
        again = parse_complex(text)
        assert again == c and format_complex(again) == text


def test_empty_complex():
    c = parse_complex("pcomplex v1\n")
    assert len(c) == 0 and critical_values(c) == []
    assert isinstance(c, VariableComplex)
