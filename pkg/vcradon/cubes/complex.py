r"""
The cube complex Q(C) of a concept class.

A cube is a pair (Y, f) with f an assignment on the coordinates outside Y such that every completion of f
lies in C. Its vertices are those completions, and Y is then strongly shattered.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterator, List, TextIO, Tuple, Union

from vcradon.classes import ConceptClass, PartialAssignment, shattered_sets
from vcradon.classes.util import coords_mask, full_mask
from vcradon.errors import EmptyClassError, ExportError

logger = logging.getLogger(__name__)

CoordSet = Tuple[int, ...]


@dataclass(frozen=True)
class Cube:
    r"""
    A cube (Y, f) of a concept class over [n].

    Attributes:
        free: Y, sorted
        fixed: f, defined exactly on the coordinates outside Y
        n: domain size
    """

    free: CoordSet
    fixed: PartialAssignment
    n: int

    def __post_init__(self):
        assert set(self.free).isdisjoint(self.fixed.coords), "Free and fixed coordinates overlap!"
        assert len(self.free) + len(self.fixed) == self.n, (
            "Free and fixed coordinates must cover the domain!"
        )

    @property
    def dim(self) -> int:
        return len(self.free)

    def vertices(self) -> Tuple[int, ...]:
        r"""
        The :math:`2^{|Y|}` completions of f, in increasing order.
        """
        base = self.fixed.value(self.n)
        out = [base]
        for x in self.free:
            b = 1 << (self.n - 1 - x)
            out.extend([v | b for v in out])
        return tuple(sorted(out))

    def is_subcube_of(self, other: Cube) -> bool:
        return set(self.free) <= set(other.free) and other.fixed.compatible(self.fixed)

    def sort_key(self):
        return (self.dim, self.free, tuple(self.fixed.items()))

    def describe(self) -> str:
        r"""
        Text form with 1-based coordinates, e.g. ``Y={1,2} f={3:0}``.
        """
        free = ",".join(str(x + 1) for x in self.free)
        fixed = ",".join(f"{x + 1}:{y}" for x, y in self.fixed.items())
        return f"Y={{{free}}} f={{{fixed}}}"


@dataclass(frozen=True)
class CubeComplex:
    r"""
    All cubes of a class, grouped by dimension.

    Attributes:
        base: the concept class
        cubes: dimension -> cubes of that dimension, sorted
        maximal: the inclusion-maximal cubes, sorted
    """

    base: ConceptClass
    cubes: Dict[int, Tuple[Cube, ...]] = field(default_factory=dict)
    maximal: Tuple[Cube, ...] = ()

    @property
    def dim(self) -> int:
        return max(self.cubes) if self.cubes else -1

    def __iter__(self) -> Iterator[Cube]:
        for k in sorted(self.cubes):
            yield from self.cubes[k]

    def __len__(self) -> int:
        return sum(len(v) for v in self.cubes.values())

    def f_vector(self) -> Tuple[int, ...]:
        r"""
        Number of cubes in each dimension 0, 1, ..., dim.
        """
        return tuple(len(self.cubes.get(k, ())) for k in range(self.dim + 1))

    def __repr__(self):
        return f"<CubeComplex of dim {self.dim} with f-vector {self.f_vector()} over {self.base!r}>"


def enumerate_cubes(C: ConceptClass) -> CubeComplex:
    r"""
    Build Q(C).

    Only shattered sets Y can carry a cube. For each of them the concepts are grouped by their restriction
    to the coordinates outside Y, and every group of size :math:`2^{|Y|}` is a cube.
    A cube is maximal if no coordinate outside Y can be freed while staying in C.

    Args:
        C: nonempty concept class

    Returns:
        CubeComplex
    """
    if C.is_empty:
        raise EmptyClassError("enumerate_cubes")
    n = C.n
    full = full_mask(n)
    cubes: Dict[int, List[Cube]] = {}
    maximal: List[Cube] = []
    for Y in shattered_sets(C):
        ymask = coords_mask(Y, n)
        rest = full & ~ymask
        groups = Counter(c & rest for c in C.concepts)
        size = 1 << len(Y)
        outside = [x for x in range(n) if x not in Y]
        for key, count in groups.items():
            if count != size:
                continue
            cube = Cube(Y, PartialAssignment.from_masks(rest, key, n), n)
            cubes.setdefault(len(Y), []).append(cube)
            if not any(groups.get(key ^ (1 << (n - 1 - x)), 0) == size for x in outside):
                maximal.append(cube)
    for k in cubes:
        cubes[k].sort(key=Cube.sort_key)
    maximal.sort(key=Cube.sort_key)
    Q = CubeComplex(C, {k: tuple(v) for k, v in sorted(cubes.items())}, tuple(maximal))
    logger.debug("%r", Q)
    return Q


def strongly_shattered_sets(C: ConceptClass) -> List[CoordSet]:
    r"""
    The sets Y carrying at least one cube, sorted by size then lexicographically.
    """
    if C.is_empty:
        return []
    Q = enumerate_cubes(C)
    return sorted({cube.free for cube in Q}, key=lambda Y: (len(Y), Y))


def complex_dimension(C: ConceptClass) -> int:
    return enumerate_cubes(C).dim


def format_complex(Q: CubeComplex) -> str:
    lines = [f"n {Q.base.n} dim {Q.dim}"]
    lines.extend(cube.describe() for cube in sorted(Q, key=Cube.sort_key))
    return "\n".join(lines) + "\n"


def export_complex(Q: CubeComplex, sink: Union[str, Path, TextIO, None] = None) -> str:
    r"""
    Write the text description of Q: a header ``n <n> dim <dim>`` and one line per cube,
    sorted by dimension and then lexicographically, with 1-based coordinates.

    Args:
        Q: the complex
        sink: a path, an open text stream, or None to only return the text

    Returns:
        the text written

    Raises:
        ExportError: if writing to the sink fails
    """
    text = format_complex(Q)
    if sink is None:
        return text
    try:
        if hasattr(sink, "write"):
            sink.write(text)
        else:
            with open(sink, "w") as f:
                f.write(text)
    except OSError as e:
        raise ExportError(f"Could not write the cube complex to {sink}: {e}") from e
    return text
