r"""
Hyperplane arrangements over exact rationals and the classes of their cells.

A point x off all hyperplanes :math:`H_i = \{x : \langle a_i, x \rangle = b_i\}` has the sign vector
:math:`c_x(i) = +` if :math:`\langle a_i, x \rangle > b_i` and :math:`-` otherwise; encoded + as 1 and - as 0,
the sign vectors of all cells form a concept class over [n].
"""

from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np
import sympy

from vcradon.classes import ConceptClass
from vcradon.errors import ArrangementFileError, GenericityError
from .fme import strict_feasible_point

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
Hyperplane = Tuple[Vector, Fraction]
SignLike = Union[int, str, Sequence[int]]


def _fraction(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class Arrangement:
    r"""
    n affine hyperplanes in :math:`\mathbb{R}^d`.

    Attributes:
        d: ambient dimension
        hyperplanes: pairs (a, b) with a a nonzero vector of d Fractions and b a Fraction
    """

    d: int
    hyperplanes: Tuple[Hyperplane, ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"Ambient dimension should be a positive integer, got {self.d!r}.")
        clean = []
        for i, (a, b) in enumerate(self.hyperplanes):
            a = tuple(_fraction(v) for v in a)
            if len(a) != self.d:
                raise ValueError(f"Hyperplane {i} has {len(a)} coefficients, expected {self.d}.")
            if all(v == 0 for v in a):
                raise ValueError(f"Hyperplane {i} has a zero normal vector.")
            clean.append((a, _fraction(b)))
        object.__setattr__(self, "hyperplanes", tuple(clean))

    @classmethod
    def from_rows(cls, d: int, rows: Iterable[Sequence]) -> Arrangement:
        r"""
        Build from rows :math:`(a_1, \ldots, a_d, b)`.
        """
        return cls(d, tuple((tuple(r[:-1]), r[-1]) for r in rows))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def __repr__(self):
        return f"<Arrangement of {self.n} hyperplanes in R^{self.d}>"

    def evaluate(self, x: Sequence) -> Tuple[Fraction, ...]:
        r"""
        :math:`\langle a_i, x \rangle - b_i` for every hyperplane.
        """
        x = tuple(_fraction(v) for v in x)
        if len(x) != self.d:
            raise ValueError(f"Point has {len(x)} coordinates, expected {self.d}.")
        return tuple(sum(p * q for p, q in zip(a, x)) - b for a, b in self.hyperplanes)

    def sign_vector(self, x: Sequence) -> int:
        r"""
        The concept of the cell containing x.

        Raises:
            ValueError: if x lies on a hyperplane
        """
        c = 0
        for i, v in enumerate(self.evaluate(x)):
            if v == 0:
                raise ValueError(f"Point {x} lies on hyperplane {i}.")
            c = (c << 1) | (v > 0)
        return c

    def format(self) -> str:
        lines = [f"{self.d} {self.n}"]
        for a, b in self.hyperplanes:
            lines.append(" ".join(str(v) for v in a + (b,)))
        return "\n".join(lines) + "\n"


def parse_arrangement(lines: Union[str, Iterable[str]]) -> Arrangement:
    r"""
    Parse the arrangement file format: a line ``d n``, then n lines of d + 1 rationals ``p/q``
    giving :math:`a_1, \ldots, a_d, b`. Blank lines and '#' comments are skipped.
    """
    if isinstance(lines, str):
        lines = lines.splitlines()
    header = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        fields = s.split()
        if header is None:
            try:
                d, n = (int(f) for f in fields)
            except ValueError:
                raise ArrangementFileError(f"expected 'd n', got '{s}'.", lineno) from None
            if d < 1 or n < 0:
                raise ArrangementFileError(f"invalid sizes d = {d}, n = {n}.", lineno)
            header = (d, n)
            continue
        d = header[0]
        if len(fields) != d + 1:
            raise ArrangementFileError(f"expected {d + 1} rationals, got {len(fields)}.", lineno)
        try:
            row = [Fraction(f) for f in fields]
        except (ValueError, ZeroDivisionError):
            raise ArrangementFileError(f"'{s}' is not a row of rationals.", lineno) from None
        if all(v == 0 for v in row[:-1]):
            raise ArrangementFileError("zero normal vector.", lineno)
        rows.append(row)
    if header is None:
        raise ArrangementFileError("missing 'd n' header.")
    if len(rows) != header[1]:
        raise ArrangementFileError(f"header announces {header[1]} hyperplanes, found {len(rows)}.")
    return Arrangement.from_rows(header[0], rows)


def read_arrangement(path: Union[str, Path], stdin: TextIO | None = None) -> Arrangement:
    if str(path) == "-":
        return parse_arrangement((stdin or sys.stdin).read())
    with open(path, "r") as f:
        return parse_arrangement(f)


def write_arrangement(A: Arrangement, path: Union[str, Path], stdout: TextIO | None = None):
    text = A.format()
    if str(path) == "-":
        (stdout or sys.stdout).write(text)
        return
    with open(path, "w") as f:
        f.write(text)


def _signs(A: Arrangement, s: SignLike) -> Tuple[int, ...]:
    r"""
    Normalize a sign pattern to a tuple of +1/-1. Accepts a concept int, a string over '+-' or '01',
    or a sequence of +1/-1.
    """
    n = A.n
    if isinstance(s, (int, np.integer)) and not isinstance(s, bool):
        if not 0 <= s < (1 << n):
            raise ValueError(f"Sign pattern {s} does not fit {n} hyperplanes.")
        return tuple(1 if (s >> (n - 1 - i)) & 1 else -1 for i in range(n))
    if isinstance(s, str):
        table = {"+": 1, "-": -1, "1": 1, "0": -1}
        if len(s) != n or set(s) - set(table):
            raise ValueError(f"Malformed sign pattern '{s}' for {n} hyperplanes.")
        return tuple(table[ch] for ch in s)
    s = tuple(s)
    if len(s) != n or set(s) - {1, -1}:
        raise ValueError(f"Malformed sign pattern {s} for {n} hyperplanes.")
    return s


def _constraints(A: Arrangement, signs: Sequence[int]):
    out = []
    for (a, b), sg in zip(A.hyperplanes, signs):
        if sg > 0:
            out.append((a, b))
        else:
            out.append((tuple(-v for v in a), -b))
    return out


def find_cell_point(A: Arrangement, s: SignLike) -> Optional[Vector]:
    r"""
    An exact rational point of the open cell with sign pattern s, or None if the cell is empty.
    """
    signs = _signs(A, s)
    return strict_feasible_point(_constraints(A, signs), A.d)


def sign_pattern_feasible(A: Arrangement, s: SignLike) -> bool:
    r"""
    Whether the open region :math:`\{x : \mathrm{sign}(\langle a_i,x \rangle - b_i) = s_i\}` is nonempty,
    decided by exact Fourier-Motzkin elimination.
    """
    return find_cell_point(A, s) is not None


def cell_points(A: Arrangement) -> List[Tuple[int, Vector]]:
    r"""
    Enumerate the cells as (concept, interior point) pairs.

    Sign prefixes are extended depth-first and a prefix is only kept while its region is nonempty.
    A known interior point of the prefix region settles one side of the next hyperplane
    without elimination; only the other side needs a feasibility check.
    """
    n, d = A.n, A.d
    out = []
    stack: List[Tuple[Tuple[int, ...], Vector]] = [((), tuple(Fraction(0) for _ in range(d)))]
    while stack:
        prefix, x = stack.pop()
        i = len(prefix)
        if i == n:
            c = 0
            for sg in prefix:
                c = (c << 1) | (sg > 0)
            out.append((c, x))
            continue
        a, b = A.hyperplanes[i]
        v = sum(p * q for p, q in zip(a, x)) - b
        for sg in (1, -1):
            if v * sg > 0:
                stack.append((prefix + (sg,), x))
                continue
            y = strict_feasible_point(_constraints(A, prefix + (sg,)), d)
            if y is not None:
                stack.append((prefix + (sg,), y))
    out.sort()
    return out


def gen_arrangement_class(A: Arrangement) -> ConceptClass:
    r"""
    The class of sign vectors of all cells of A, over the domain [n].
    """
    cells = cell_points(A)
    logger.info("%r has %d cells", A, len(cells))
    return ConceptClass(A.n, (c for c, _ in cells))


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows]).rank()


def is_generic(A: Arrangement) -> bool:
    r"""
    Whether every :math:`k \leq d` hyperplanes meet in codimension k and no d + 1 of them share a point.

    The first condition is checked on subsets of size min(d, n), from which all smaller sizes follow.
    For d + 1 hyperplanes whose normals have rank d, a common point exists iff the augmented
    matrix [a | b] also has rank d.
    """
    d, n = A.d, A.n
    k = min(d, n)
    normals = [a for a, _ in A.hyperplanes]
    for S in combinations(range(n), k):
        if _rank([normals[i] for i in S]) < k:
            return False
    if n > d:
        for S in combinations(range(n), d + 1):
            if _rank([A.hyperplanes[i][0] + (A.hyperplanes[i][1],) for i in S]) < d + 1:
                return False
    return True


def gen_random_generic_arrangement(d: int, n: int, seed: int, max_tries: int = 100, bound: int = 1000) -> Arrangement:
    r"""
    A generic arrangement with integer coefficients drawn uniformly from [-bound, bound].
    Arrangements failing :func:`is_generic` are redrawn.

    Args:
        d: ambient dimension
        n: number of hyperplanes
        seed: seed of the numpy generator
        max_tries: number of draws before giving up
        bound: coefficient range

    Raises:
        GenericityError: if no generic arrangement was drawn within max_tries
    """
    if d < 1 or n < 1:
        raise ValueError(f"Need d >= 1 and n >= 1, got d = {d}, n = {n}.")
    rng = np.random.default_rng(seed)
    for attempt in range(max_tries):
        rows = rng.integers(-bound, bound + 1, size=(n, d + 1))
        if (rows[:, :d] == 0).all(axis=1).any():
            continue
        A = Arrangement.from_rows(d, [[int(v) for v in r] for r in rows])
        if is_generic(A):
            logger.debug("generic arrangement after %d draws", attempt + 1)
            return A
    raise GenericityError(f"No generic arrangement of {n} hyperplanes in R^{d} after {max_tries} draws.")


def gen_simplex_arrangement(d: int) -> Arrangement:
    r"""
    The d + 1 hyperplanes :math:`x_i = 0` and :math:`\sum_i x_i = 1` supporting the standard d-simplex.
    They cut space into :math:`2^{d+1} - 1` cells.
    """
    if d < 1:
        raise ValueError(f"d should be at least 1, got {d}.")
    rows = []
    for i in range(d):
        rows.append([1 if j == i else 0 for j in range(d)] + [0])
    rows.append([1] * d + [1])
    return Arrangement.from_rows(d, rows)


def simplex_vertices(d: int) -> List[Vector]:
    r"""
    The vertices 0, e_1, ..., e_d of the standard simplex.
    """
    zero = tuple(Fraction(0) for _ in range(d))
    return [zero] + [tuple(Fraction(int(j == i)) for j in range(d)) for i in range(d)]


def gen_shattered_points_arrangement(d: int, seed: int = 0, max_tries: int = 64) -> Arrangement:
    r"""
    :math:`2^{d+1}` hyperplanes shattering the d + 1 vertices of the standard simplex, one per labeling.

    The hyperplane of a labeling L is the zero set of the affine map taking the value
    :math:`\pm 1 + \delta_j` at vertex j, with the sign given by L. The offsets :math:`\delta_j` are seeded
    rationals whose magnitude halves on every attempt until the arrangement is generic; they stay below 1/2,
    so each hyperplane keeps realizing its labeling.

    Raises:
        GenericityError: if the perturbation budget runs out
    """
    if d < 1:
        raise ValueError(f"d should be at least 1, got {d}.")
    rng = np.random.default_rng(seed)
    labelings = list(product((1, 0), repeat=d + 1))
    for attempt in range(max_tries):
        scale = Fraction(1, 2 ** attempt)
        rows = []
        for L in labelings:
            delta = rng.integers(-499, 500, size=d + 1)
            y = [(1 if lab else -1) + Fraction(int(e), 1000) * scale for lab, e in zip(L, delta)]
            a = [y[i + 1] - y[0] for i in range(d)]
            rows.append(a + [-y[0]])
        if any(all(v == 0 for v in r[:-1]) for r in rows):
            continue
        A = Arrangement.from_rows(d, rows)
        if is_generic(A):
            logger.debug("shattered-points arrangement generic after %d attempts", attempt + 1)
            return A
    raise GenericityError(f"Perturbation budget exhausted for the shattered-points arrangement in R^{d}.")


def shattered_points_certificate(A: Arrangement, d: int) -> Tuple[int, ...]:
    r"""
    The concepts of the cells containing the simplex vertices. For a shattered-points arrangement
    these d + 1 concepts are shattered by the dual class.
    """
    if d != A.d:
        raise ValueError(f"Arrangement lives in R^{A.d}, not R^{d}.")
    return tuple(A.sign_vector(v) for v in simplex_vertices(d))
