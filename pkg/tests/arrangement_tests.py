from fractions import Fraction

import pytest

from vcradon.classes import (
    dual_shatters,
    is_isomorphic,
    is_maximum,
    sauer_shelah_bound,
    vc,
    vc_star,
)
from vcradon.convex import radon_number
from vcradon.errors import ArrangementFileError, GenericityError
from vcradon.gen import (
    Arrangement,
    cell_points,
    find_cell_point,
    gen_arrangement_class,
    gen_dented_cube,
    gen_random_generic_arrangement,
    gen_shattered_points_arrangement,
    gen_simplex_arrangement,
    is_generic,
    parse_arrangement,
    read_arrangement,
    shattered_points_certificate,
    sign_pattern_feasible,
    simplex_vertices,
    write_arrangement,
)


@pytest.fixture
def strip():
    # the hyperplanes x = 0 and x = 1 of the real line
    return Arrangement.from_rows(1, [[1, 0], [1, 1]])


# Arrangements
def test_arrangement_validation():
    with pytest.raises(ValueError):
        Arrangement.from_rows(0, [])
    with pytest.raises(ValueError):
        Arrangement.from_rows(2, [[1, 0]])
    with pytest.raises(ValueError):
        Arrangement.from_rows(2, [[0, 0, 1]])


def test_sign_vector(strip):
    assert strip.n == 2
    assert strip.evaluate([Fraction(1, 2)]) == (Fraction(1, 2), Fraction(-1, 2))
    assert strip.sign_vector([Fraction(1, 2)]) == 0b10
    assert strip.sign_vector([2]) == 0b11
    assert strip.sign_vector([-1]) == 0b00
    with pytest.raises(ValueError):
        strip.sign_vector([1])


def test_sign_pattern_feasible(strip):
    assert sign_pattern_feasible(strip, "+-")
    assert sign_pattern_feasible(strip, "11")
    assert not sign_pattern_feasible(strip, "-+")
    assert not sign_pattern_feasible(strip, 0b01)
    assert sign_pattern_feasible(strip, (-1, -1))
    with pytest.raises(ValueError):
        sign_pattern_feasible(strip, "+")
    with pytest.raises(ValueError):
        sign_pattern_feasible(strip, (1, 0))


def test_find_cell_point(strip):
    x = find_cell_point(strip, "+-")
    assert strip.sign_vector(x) == 0b10
    assert find_cell_point(strip, "-+") is None


def test_cell_points(strip):
    cells = cell_points(strip)
    assert [c for c, _ in cells] == [0b00, 0b10, 0b11]
    for c, x in cells:
        assert strip.sign_vector(x) == c


# File format
def test_parse_arrangement():
    A = parse_arrangement("# two lines\n2 2\n1 0 1/2\n\n0 -3/4 1\n")
    assert A.d == 2 and A.n == 2
    assert A.hyperplanes[0] == ((Fraction(1), Fraction(0)), Fraction(1, 2))
    assert A.hyperplanes[1] == ((Fraction(0), Fraction(-3, 4)), Fraction(1))
    assert parse_arrangement(A.format()) == A


@pytest.mark.parametrize(
    "text, line",
    [
        ("2\n", 1),
        ("2 2\n1 0 1\n1 0\n", 3),
        ("1 1\n0 1\n", 2),
        ("1 1\n1 x\n", 2),
        ("1 1\n1 1/0\n", 2),
        ("1 2\n1 0\n", None),
        ("# nothing\n", None),
    ],
)
def test_parse_arrangement_errors(text, line):
    with pytest.raises(ArrangementFileError) as info:
        parse_arrangement(text)
    assert info.value.line == line


def test_read_write_arrangement(tmp_path):
    A = gen_simplex_arrangement(2)
    path = tmp_path / "a.txt"
    write_arrangement(A, path)
    assert read_arrangement(path) == A


# Genericity
def test_is_generic():
    assert is_generic(gen_simplex_arrangement(2))
    assert not is_generic(Arrangement.from_rows(2, [[1, 0, 0], [2, 0, 1]]))
    assert not is_generic(Arrangement.from_rows(2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]]))


def test_random_generic_arrangement_is_seeded():
    A = gen_random_generic_arrangement(2, 4, seed=3)
    assert A == gen_random_generic_arrangement(2, 4, seed=3)
    assert is_generic(A)
    assert all(v.denominator == 1 for a, b in A.hyperplanes for v in a + (b,))


def test_random_generic_arrangement_budget():
    # integer points in [-1, 1] leave room for at most three distinct hyperplanes of the line
    with pytest.raises(GenericityError):
        gen_random_generic_arrangement(1, 4, seed=0, max_tries=5, bound=1)


# Classes of arrangements
def test_three_lines():
    C = gen_arrangement_class(gen_random_generic_arrangement(2, 3, seed=0))
    assert len(C) == 7
    assert (vc(C), vc_star(C), radon_number(C).value) == (2, 1, 3)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_generic_arrangements_are_maximum(n):
    for seed in range(2):
        C = gen_arrangement_class(gen_random_generic_arrangement(2, n, seed))
        assert len(C) == sauer_shelah_bound(n, 2)
        assert is_maximum(C) and vc(C) == 2
        assert radon_number(C).value <= 3


def test_simplex_arrangement():
    assert len(gen_arrangement_class(gen_simplex_arrangement(1))) == 3
    C = gen_arrangement_class(gen_simplex_arrangement(2))
    assert len(C) == 7
    assert is_isomorphic(C, gen_dented_cube(2))
    C = gen_arrangement_class(gen_simplex_arrangement(3))
    assert len(C) == 15
    assert radon_number(C).value == 4


def test_simplex_vertices():
    assert simplex_vertices(2) == [(0, 0), (1, 0), (0, 1)]


@pytest.mark.parametrize("d, expected", [(1, (1, 2, 2)), (2, (2, 3, 3))])
def test_shattered_points_arrangement(d, expected):
    A = gen_shattered_points_arrangement(d)
    assert A.n == 2 ** (d + 1)
    C = gen_arrangement_class(A)
    assert is_maximum(C)
    assert (vc(C), vc_star(C), radon_number(C).value) == expected
    assert dual_shatters(C, shattered_points_certificate(A, d))


def test_shattered_points_certificate_dimension():
    with pytest.raises(ValueError):
        shattered_points_certificate(gen_shattered_points_arrangement(1), 2)
