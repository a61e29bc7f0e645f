import pickle
from itertools import product

import numpy as np
import pytest

from vcradon.classes import (
    ConceptClass,
    PartialAssignment,
    canonical_form,
    dual,
    dual_shattered_witness,
    dual_shatters,
    floor_log2,
    forbidden_trace,
    format_class,
    is_extremal,
    is_isomorphic,
    is_maximum,
    minimal_non_shattered_sets,
    parse_class,
    read_class,
    relabel,
    restrict,
    sauer_shelah_bound,
    shattered_sets,
    shatters,
    translation_stabilizer,
    vc,
    vc_star,
    write_class,
)
from vcradon.errors import (
    ClassFileError,
    CoordinateError,
    EmptyClassError,
    PreconditionError,
)
from vcradon.gen import gen_cube, gen_dented_cube, gen_singletons, gen_tight_d1

from utils import naive_isomorphic, naive_shattered_sets


@pytest.fixture
def square_and_edge():
    return ConceptClass.from_strings(["000", "010", "110", "100", "001"])


@pytest.fixture
def empty():
    return ConceptClass(3)


# Concept classes
def test_concepts_sorted_and_deduplicated():
    C = ConceptClass(3, ["110", 1, "001", 6])
    assert C.concepts == (1, 6)
    assert C.to_strings() == ["001", "110"]
    assert len(C) == 2
    assert "110" in C and 6 in C and "111" not in C and "11" not in C


def test_concept_validation():
    with pytest.raises(ValueError):
        ConceptClass(3, ["01"])
    with pytest.raises(ValueError):
        ConceptClass(2, [4])
    with pytest.raises(ValueError):
        ConceptClass(-1)


def test_set_operations(square_and_edge):
    D = ConceptClass.from_strings(["000", "111"])
    assert (square_and_edge | D).to_strings() == ["000", "001", "010", "100", "110", "111"]
    assert (square_and_edge & D).to_strings() == ["000"]
    assert (square_and_edge - D).to_strings() == ["001", "010", "100", "110"]
    assert ConceptClass(3, ["000"]) <= square_and_edge
    with pytest.raises(AssertionError):
        square_and_edge | ConceptClass(2, ["00"])


def test_matrix(square_and_edge):
    M = square_and_edge.matrix
    assert M.shape == (5, 3)
    assert M.dtype == np.uint8
    assert M.tolist()[-1] == [1, 1, 0]
    with pytest.raises(ValueError):
        M[0, 0] = 1


def test_hash_and_pickle(square_and_edge):
    copy = pickle.loads(pickle.dumps(square_and_edge))
    assert copy == square_and_edge
    assert hash(copy) == hash(square_and_edge)
    assert copy.index[6] == 4


def test_full_cube():
    assert ConceptClass.full_cube(2).is_full_cube
    assert not gen_dented_cube(1).is_full_cube


# Dual class
def test_dual(square_and_edge):
    D = dual(square_and_edge)
    assert D.n == 5
    assert D.to_strings() == ["00011", "00101", "01000"]
    assert square_and_edge.T == D


def test_dual_collapses_equal_columns():
    C = ConceptClass.from_strings(["00", "11"])
    assert len(dual(C)) == 1


def test_dual_of_empty_class(empty):
    with pytest.raises(EmptyClassError):
        dual(empty)


# Shattering
def test_shattered_sets(square_and_edge):
    assert shattered_sets(square_and_edge) == [(), (0,), (1,), (2,), (0, 1)]
    assert minimal_non_shattered_sets(square_and_edge) == [(0, 2), (1, 2)]
    assert shatters(square_and_edge, [1, 0])
    assert not shatters(square_and_edge, (0, 2))


def test_shattered_sets_match_oracle():
    for C in (gen_tight_d1(), gen_singletons(5), gen_dented_cube(3)):
        assert shattered_sets(C) == naive_shattered_sets(C)


def test_shatters_rejects_bad_coordinates(square_and_edge):
    with pytest.raises(CoordinateError):
        shatters(square_and_edge, [3])


def test_empty_class(empty):
    assert not shatters(empty, ())
    assert shattered_sets(empty) == []
    assert minimal_non_shattered_sets(empty) == [()]
    for metric in (vc, vc_star, is_maximum, is_extremal, dual_shattered_witness):
        with pytest.raises(EmptyClassError):
            metric(empty)


def test_single_concept():
    C = ConceptClass(3, ["101"])
    assert vc(C) == 0
    assert vc_star(C) == 1
    assert is_maximum(C) and is_extremal(C)
    assert minimal_non_shattered_sets(C) == [(0,), (1,), (2,)]


@pytest.mark.parametrize("d", [1, 2, 3, 5])
def test_cube_metrics(d):
    C = gen_cube(d)
    assert vc(C) == d
    assert vc_star(C) == floor_log2(d)
    assert is_maximum(C) and is_extremal(C)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_dented_cube_metrics(d):
    C = gen_dented_cube(d)
    assert vc(C) == d
    assert vc_star(C) == floor_log2(d + 1)
    assert is_maximum(C)


def test_singletons_metrics():
    C = gen_singletons(10)
    assert vc(C) == 1 and vc_star(C) == 1
    assert not is_extremal(gen_singletons(4))
    assert not is_maximum(gen_singletons(4))


def test_tight_class_metrics():
    C = gen_tight_d1()
    assert len(C) == sauer_shelah_bound(8, 1)
    assert vc(C) == 1
    assert vc_star(C) == 3
    assert is_maximum(C)


def test_square_and_edge_is_extremal_not_maximum(square_and_edge):
    assert is_extremal(square_and_edge)
    assert not is_maximum(square_and_edge)
    assert vc(square_and_edge) == 2
    assert vc_star(square_and_edge) == 1


def test_dual_shattered_witness():
    C = gen_tight_d1()
    witness = dual_shattered_witness(C)
    assert len(witness) == 3
    assert dual_shatters(C, witness)
    with pytest.raises(PreconditionError):
        dual_shatters(C, [0])


# Restrictions and forbidden traces
def test_restrict(square_and_edge):
    R = restrict(square_and_edge, PartialAssignment({2: 0, 0: 1}))
    assert R.to_strings() == ["100", "110"]
    assert restrict(square_and_edge, PartialAssignment({0: 1, 2: 1})).is_empty
    with pytest.raises(CoordinateError):
        restrict(square_and_edge, PartialAssignment({3: 0}))


def test_restrictions_of_extremal_classes_are_extremal():
    assignments = [
        PartialAssignment((x, y) for x, y in enumerate(t) if y is not None)
        for t in product((None, 0, 1), repeat=3)
    ]
    checked = 0
    for index in range(1, 1 << 8):
        C = ConceptClass(3, (c for c in range(8) if (index >> c) & 1))
        if not is_extremal(C):
            continue
        for a in assignments:
            R = restrict(C, a)
            assert R.is_empty or is_extremal(R), (C.to_strings(), dict(a))
        checked += 1
    assert checked > 0


def test_forbidden_trace(square_and_edge):
    t = forbidden_trace(square_and_edge, (0, 2))
    assert dict(t) == {0: 1, 2: 1}
    t = forbidden_trace(gen_dented_cube(2), (0, 1, 2))
    assert t.value(3) == 0b111


def test_forbidden_trace_preconditions(square_and_edge):
    with pytest.raises(PreconditionError):
        forbidden_trace(gen_singletons(3), (0, 1))
    with pytest.raises(PreconditionError):
        forbidden_trace(square_and_edge, (0, 1))


# Partial assignments
def test_partial_assignment():
    a = PartialAssignment({2: 1, 0: 0})
    assert a.coords == (0, 2) and a.bits == (0, 1)
    assert a.mask(3) == 0b101 and a.value(3) == 0b001
    assert a.matches(0b011, 3) and not a.matches(0b100, 3)
    assert dict(a.flipped(0)) == {0: 1, 2: 1}
    assert dict(a.restricted([2])) == {2: 1}
    assert a == PartialAssignment.from_masks(0b101, 0b001, 3)
    assert dict(a | PartialAssignment({1: 1})) == {0: 0, 1: 1, 2: 1}
    with pytest.raises(ValueError):
        a | PartialAssignment({0: 1})
    with pytest.raises(ValueError):
        PartialAssignment({0: 2})
    for bad in (-1, "0", 1.0):
        with pytest.raises(ValueError, match="nonnegative integer") as info:
            PartialAssignment({bad: 0})
        assert not isinstance(info.value, CoordinateError)


# Symmetries
def test_relabel():
    C = ConceptClass.from_strings(["100", "110"])
    assert relabel(C, perm=(2, 0, 1)).to_strings() == ["001", "101"]
    assert relabel(C, flip="111").to_strings() == ["001", "011"]
    with pytest.raises(ValueError):
        relabel(C, perm=(0, 0, 1))


def test_canonical_form_agrees_with_oracle(square_and_edge):
    images = list(relabel(square_and_edge, perm, flip) for perm, flip in [((1, 0, 2), 0), ((2, 1, 0), 5)])
    for D in images:
        assert is_isomorphic(square_and_edge, D)
        assert naive_isomorphic(square_and_edge, D)
    assert not is_isomorphic(square_and_edge, gen_dented_cube(2) - ConceptClass(3, ["000", "001"]))
    assert canonical_form(gen_cube(2)) == (0, 1, 2, 3)
    assert canonical_form(ConceptClass(3)) == ()


def test_translation_stabilizer(square_and_edge):
    assert translation_stabilizer(gen_cube(2)) == (0, 1, 2, 3)
    assert translation_stabilizer(square_and_edge) == (0,)
    assert translation_stabilizer(ConceptClass.from_strings(["00", "11"])) == (0, 3)


# Class files
def test_parse_and_format(square_and_edge):
    text = format_class(square_and_edge, header="square and edge")
    assert text.splitlines()[0] == "# square and edge"
    assert parse_class(text) == square_and_edge
    assert parse_class("\n# comment\n 01 \n10\n") == ConceptClass(2, ["01", "10"])


@pytest.mark.parametrize(
    "text, line",
    [
        ("01\n011\n", 2),
        ("01\n0a\n", 2),
        ("# c\n01\n10\n01\n", 4),
        ("# only a comment\n", None),
    ],
)
def test_parse_errors(text, line):
    with pytest.raises(ClassFileError) as info:
        parse_class(text)
    assert info.value.line == line
    if line is not None:
        assert str(info.value).startswith(f"line {line}:")


def test_read_write(tmp_path, square_and_edge):
    path = tmp_path / "c.txt"
    write_class(square_and_edge, path)
    assert read_class(path) == square_and_edge


def test_utilities():
    assert sauer_shelah_bound(8, 1) == 9
    assert sauer_shelah_bound(3, 5) == 8
    assert floor_log2(0) == -1
    assert floor_log2(7) == 2
