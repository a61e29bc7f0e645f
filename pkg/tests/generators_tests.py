from fractions import Fraction

import pytest

from vcradon.classes import (
    ConceptClass,
    dual_shatters,
    from_string,
    is_maximum,
    relabel,
    sauer_shelah_bound,
    vc,
)
from vcradon.gen import (
    TIGHT_D1,
    TIGHT_D1_DUAL_SHATTERED,
    TIGHT_D1_SYMMETRY,
    gen_ball,
    gen_cube,
    gen_dented_cube,
    gen_singletons,
    gen_tight_d1,
)
from vcradon.gen.fme import eliminate, simplify, strict_feasible_point


# Named families
def test_gen_cube():
    C = gen_cube(3)
    assert len(C) == 8 and C.n == 3
    with pytest.raises(ValueError):
        gen_cube(0)


def test_gen_dented_cube():
    C = gen_dented_cube(2)
    assert C.n == 3
    assert len(C) == 7
    assert "111" not in C


def test_gen_singletons():
    assert gen_singletons(3).to_strings() == ["001", "010", "100"]
    with pytest.raises(ValueError):
        gen_singletons(-2)


def test_gen_ball():
    C = gen_ball(4, 1)
    assert len(C) == 5
    assert is_maximum(C) and vc(C) == 1
    assert gen_ball(3, 1, "111").to_strings() == ["011", "101", "110", "111"]
    assert gen_ball(3, 3) == gen_cube(3)
    with pytest.raises(ValueError):
        gen_ball(3, 4)
    with pytest.raises(ValueError):
        gen_ball(3, 1, 8)


def test_tight_class():
    C = gen_tight_d1()
    assert C.to_strings() == sorted(TIGHT_D1)
    assert len(C) == sauer_shelah_bound(8, 1)
    assert relabel(C, TIGHT_D1_SYMMETRY) == C


def test_tight_class_dual_shattering():
    C = gen_tight_d1()
    marked = [from_string(s) for s in TIGHT_D1_DUAL_SHATTERED]
    for skip in range(4):
        assert dual_shatters(C, marked[:skip] + marked[skip + 1:])
    assert not dual_shatters(C, marked)


# Fourier-Motzkin elimination
def test_simplify_keeps_strongest_parallel_constraint():
    assert simplify([((2, 0), 2), ((1, 0), 0)]) == [((1, 0), 1)]
    assert simplify([((0, 0), -1)]) == []


def test_eliminate():
    # x > 0, y > x, 1 > y projects to 1 > x > 0 after removing y
    system = simplify([((1, 0), 0), ((-1, 1), 0), ((0, -1), -1)])
    projected = eliminate(system, 1)
    assert all(g[1] == 0 for g, _ in projected)
    assert ((Fraction(-1), Fraction(0)), Fraction(-1)) in projected


def test_strict_feasible_point_interval():
    x = strict_feasible_point([((1,), 0), ((-1,), -1)], 1)
    assert x == (Fraction(1, 2),)


def test_strict_feasible_point_triangle():
    system = [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)]
    x = strict_feasible_point(system, 2)
    assert x is not None
    for g, h in system:
        assert sum(a * v for a, v in zip(g, x)) > h


def test_strict_feasible_point_infeasible():
    assert strict_feasible_point([((1,), 1), ((-1,), 0)], 1) is None
    # x > 0 and -x > 0 cannot both hold
    assert strict_feasible_point([((1, 0), 0), ((-1, 0), 0)], 2) is None
    assert strict_feasible_point([((0, 0), 0)], 2) is None


def test_strict_feasible_point_unconstrained():
    assert strict_feasible_point([], 2) == (Fraction(0), Fraction(0))


def test_families_are_concept_classes():
    for C in (gen_cube(2), gen_dented_cube(1), gen_singletons(2), gen_ball(2, 1), gen_tight_d1()):
        assert isinstance(C, ConceptClass)
