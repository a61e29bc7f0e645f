r"""
Reproduction of the reference examples: the named families with their (vc, vc*, r) triples, the
nine-concept tight class, the small extremal class with one square, and the arrangement families.
Every line compares an exact expected value with the computed one.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Any, Callable, List, NamedTuple

from vcradon.classes import (
    ConceptClass,
    dual_shatters,
    forbidden_trace,
    from_string,
    is_extremal,
    is_isomorphic,
    is_maximum,
    relabel,
    sauer_shelah_bound,
    shattered_sets,
    to_string,
    vc,
    vc_star,
)
from vcradon.classes.util import floor_log2
from vcradon.convex import (
    is_radon_independent,
    radon_number,
    radon_witness_from_shattering,
    radon_witness_maximum,
)
from vcradon.cubes import enumerate_cubes
from vcradon.gen import (
    TIGHT_D1_DUAL_SHATTERED,
    TIGHT_D1_SYMMETRY,
    gen_arrangement_class,
    gen_cube,
    gen_dented_cube,
    gen_random_generic_arrangement,
    gen_shattered_points_arrangement,
    gen_simplex_arrangement,
    gen_singletons,
    gen_tight_d1,
    shattered_points_certificate,
)
from .report import CheckResult, check_bounds

logger = logging.getLogger(__name__)

# extremal class over [3] whose complex has 5 vertices, 5 edges and 1 square
SQUARE_AND_EDGE = ("000", "010", "110", "100", "001")


class LineItem(NamedTuple):
    name: str
    expected: Any
    observed: Any
    passed: bool


def square_and_edge() -> ConceptClass:
    return ConceptClass(3, SQUARE_AND_EDGE)


def triple(C: ConceptClass):
    return (vc(C), vc_star(C), radon_number(C).value)


def _witness(C: ConceptClass, witness) -> tuple:
    return (witness.certified_size, is_radon_independent(C, witness.concepts))


def _cells(A) -> int:
    return len(gen_arrangement_class(A))


def _tight_dual_shattering() -> bool:
    C = gen_tight_d1()
    blue = [from_string(s) for s in TIGHT_D1_DUAL_SHATTERED]
    return all(dual_shatters(C, P) for P in combinations(blue, 3)) and not dual_shatters(C, blue)


def _random_arrangements() -> str:
    good = 0
    total = 0
    for n in range(3, 7):
        for seed in range(5):
            total += 1
            C = gen_arrangement_class(gen_random_generic_arrangement(2, n, seed))
            if len(C) == sauer_shelah_bound(n, 2) and radon_number(C).value <= 3:
                good += 1
    return f"{good}/{total}"


def _applicable_all_pass(C: ConceptClass) -> bool:
    report = check_bounds(C, "")
    return all(v in (CheckResult.PASS, CheckResult.NA) for v in report.checks.values())


def _singleton_checks() -> tuple:
    report = check_bounds(gen_singletons(6), "singletons 6")
    extremal_only = ("thm_b_upper", "thm_c_upper", "thm_d_extremal_upper")
    return (
        all(report.checks[k] == CheckResult.NA for k in extremal_only),
        str(report.checks["thm_d_vcstar_le_r"]),
    )


def _lines_summary(seed: int) -> tuple:
    C = gen_arrangement_class(gen_random_generic_arrangement(2, 3, seed))
    return (len(C),) + triple(C)


def _simplex_cells_and_radon(d: int) -> tuple:
    C = gen_arrangement_class(gen_simplex_arrangement(d))
    return (len(C), radon_number(C).value)


def _shattered_points_summary(d: int) -> tuple:
    C = gen_arrangement_class(gen_shattered_points_arrangement(d))
    return triple(C) + (is_maximum(C),)


def _shattered_points_certified(d: int) -> bool:
    A = gen_shattered_points_arrangement(d)
    return dual_shatters(gen_arrangement_class(A), shattered_points_certificate(A, d))


def _maximum_lower_equality(d: int) -> tuple:
    report = check_bounds(gen_dented_cube(d), f"dented cube {d}")
    return (str(report.checks["thm_c_maximum_lower"]), report.radon == report.vc + 1)


def _maximal_edges(C: ConceptClass) -> List[str]:
    return [c.describe() for c in enumerate_cubes(C).maximal if c.dim == 1]


def _items() -> List[tuple]:
    r"""
    (name, thunk, expected) for every line. Coordinates in names and outputs are 1-based.
    """
    items: List[tuple] = [
        ("singletons n=10 (vc, vc*, r)", lambda: triple(gen_singletons(10)), (1, 1, 10)),
        ("singletons n=4 extremal", lambda: is_extremal(gen_singletons(4)), False),
        ("cube d=3 (vc, vc*, r)", lambda: triple(gen_cube(3)), (3, 1, 3)),
        ("cube d=7 (vc, vc*, r)", lambda: triple(gen_cube(7)), (7, 2, 4)),
        ("cube d=2 r", lambda: radon_number(gen_cube(2)).value, 2),
    ]
    for d in (1, 2, 3):
        items.append(
            (f"dented cube d={d} (vc, vc*, r)", lambda d=d: triple(gen_dented_cube(d)), (d, floor_log2(d + 1), d + 1))
        )
    items += [
        ("dented cube d=2 forbidden trace on {1,2,3}",
         lambda: to_string(forbidden_trace(gen_dented_cube(2), (0, 1, 2)).value(3), 3), "111"),
        ("tight d=1 class (vc, vc*, r)", lambda: triple(gen_tight_d1()), (1, 3, 3)),
        ("tight d=1 class maximum", lambda: is_maximum(gen_tight_d1()), True),
        ("tight d=1 class fixed by a permutation of coordinate pairs",
         lambda: relabel(gen_tight_d1(), TIGHT_D1_SYMMETRY) == gen_tight_d1(), True),
        ("tight d=1 class: any 3 of the 4 marked concepts dually shattered", _tight_dual_shattering, True),
        ("square-and-edge class extremal", lambda: is_extremal(square_and_edge()), True),
        ("square-and-edge class cube counts", lambda: enumerate_cubes(square_and_edge()).f_vector(), (5, 5, 1)),
        ("square-and-edge class maximal edges", lambda: _maximal_edges(square_and_edge()), ["Y={3} f={1:0,2:0}"]),
        ("square-and-edge class shattered sets", lambda: len(shattered_sets(square_and_edge())), 5),
        ("3 seeded generic lines (cells, vc, vc*, r)", lambda: _lines_summary(0), (7, 2, 1, 3)),
        ("simplex arrangement d=2 cells", lambda: _cells(gen_simplex_arrangement(2)), 7),
        ("simplex arrangement d=2 isomorphic to dented cube d=2",
         lambda: is_isomorphic(gen_arrangement_class(gen_simplex_arrangement(2)), gen_dented_cube(2)), True),
        ("simplex arrangement d=1 cells", lambda: _cells(gen_simplex_arrangement(1)), 3),
        ("simplex arrangement d=3 (cells, r)", lambda: _simplex_cells_and_radon(3), (15, 4)),
        ("shattered points d=1 (vc, vc*, r, maximum)", lambda: _shattered_points_summary(1), (1, 2, 2, True)),
        ("shattered points d=2 (vc, vc*, r, maximum)", lambda: _shattered_points_summary(2), (2, 3, 3, True)),
        ("shattered points d=2 vertex cells dually shattered", lambda: _shattered_points_certified(2), True),
        ("random generic arrangements d=2, n=3..6, 5 seeds: SSP size and r <= 3", _random_arrangements, "20/20"),
        ("shattering witness cube d=3 (size, independent)",
         lambda: _witness(gen_cube(3), radon_witness_from_shattering(gen_cube(3))), (3, True)),
        ("shattering witness cube d=7 (size, independent)",
         lambda: _witness(gen_cube(7), radon_witness_from_shattering(gen_cube(7))), (4, True)),
        ("maximum-class witness dented cube d=2",
         lambda: radon_witness_maximum(gen_dented_cube(2)).to_strings(3), ["011", "101", "110"]),
        ("maximum-class witness dented cube d=3 (size, independent)",
         lambda: _witness(gen_dented_cube(3), radon_witness_maximum(gen_dented_cube(3))), (4, True)),
        ("maximum-class witness tight d=1 class (size, independent)",
         lambda: _witness(gen_tight_d1(), radon_witness_maximum(gen_tight_d1())), (2, True)),
        ("bound checks cube d=3 all pass", lambda: _applicable_all_pass(gen_cube(3)), True),
        ("bound checks dented cube d=3 maximum lower bound met with equality",
         lambda: _maximum_lower_equality(3), ("pass", True)),
        ("bound checks singletons n=6 (extremal checks n/a, vc* <= r)", _singleton_checks, (True, "pass")),
    ]
    return items


def verify_examples(progress: Callable[[LineItem], None] | None = None) -> List[LineItem]:
    r"""
    Run every reference example and compare with its expected value.

    Args:
        progress: optional callback receiving each LineItem as soon as it is computed

    Returns:
        the list of LineItems; an exception inside a line counts as a mismatch
    """
    out = []
    for name, compute, expected in _items():
        try:
            observed = compute()
        except Exception as e:
            logger.exception("line '%s' raised", name)
            observed = f"error: {e}"
        item = LineItem(name, expected, observed, observed == expected)
        if not item.passed:
            logger.error("mismatch on '%s': expected %r, observed %r", name, expected, observed)
        if progress is not None:
            progress(item)
        out.append(item)
    return out


def format_items(items: List[LineItem]) -> str:
    width = max(len(i.name) for i in items)
    lines = [
        f"{'PASS' if i.passed else 'FAIL'}  {i.name:<{width}}  expected {i.expected}  observed {i.observed}"
        for i in items
    ]
    lines.append(f"{sum(i.passed for i in items)}/{len(items)} lines pass")
    return "\n".join(lines) + "\n"
