"""
Shattering-theoretic metrics of a concept class: shattered sets, VC and dual VC dimension,
maximum and extremal status, restrictions and forbidden traces.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Tuple

import numpy as np

from vcradon.errors import CoordinateError, EmptyClassError, ForbiddenTraceError, PreconditionError
from .conceptclass import ConceptClass, PartialAssignment, dual
from .util import coords_mask, sauer_shelah_bound

logger = logging.getLogger(__name__)

CoordSet = Tuple[int, ...]

# number of candidate sets tested per vectorized block
_BLOCK = 2048


def _check_coords(A: Iterable[int], n: int) -> CoordSet:
    A = tuple(sorted(set(int(x) for x in A)))
    for x in A:
        if not 0 <= x < n:
            raise CoordinateError(x, n)
    return A


def _distinct_per_column(codes: np.ndarray) -> np.ndarray:
    if codes.shape[0] == 0:
        return np.zeros(codes.shape[1], dtype=np.int64)
    s = np.sort(codes, axis=0)
    return 1 + np.count_nonzero(np.diff(s, axis=0), axis=0)


def _shattered_mask(M: np.ndarray, cand: np.ndarray) -> np.ndarray:
    r"""
    For every row of cand (a K x k array of coordinate sets) decide whether the rows of M
    attain all 2^k patterns on it.
    """
    K, k = cand.shape
    out = np.zeros(K, dtype=bool)
    if M.shape[0] < (1 << k):
        return out
    for start in range(0, K, _BLOCK):
        block = cand[start:start + _BLOCK]
        codes = np.zeros((M.shape[0], block.shape[0]), dtype=np.int64)
        for j in range(k):
            codes |= M[:, block[:, j]].astype(np.int64) << j
        out[start:start + _BLOCK] = _distinct_per_column(codes) == (1 << k)
    return out


def _join(prev: List[CoordSet], n: int) -> List[CoordSet]:
    r"""
    Candidate k-sets whose (k-1)-subsets all lie in prev (prev sorted, all of size k-1).
    """
    if not prev:
        return []
    if len(prev[0]) == 0:
        return [(x,) for x in range(n)]
    known = set(prev)
    out = []
    i = 0
    while i < len(prev):
        j = i
        prefix = prev[i][:-1]
        while j < len(prev) and prev[j][:-1] == prefix:
            j += 1
        tails = [p[-1] for p in prev[i:j]]
        for a, b in combinations(tails, 2):
            cand = prefix + (a, b)
            if all(cand[:t] + cand[t + 1:] in known for t in range(len(prefix))):
                out.append(cand)
        i = j
    return out


@lru_cache(maxsize=512)
def shatter_lattice(C: ConceptClass) -> Tuple[Tuple[CoordSet, ...], Tuple[CoordSet, ...]]:
    r"""
    Walk the family of shattered sets level by level.

    A k-set is tested only when all of its (k-1)-subsets are shattered, and the walk stops at the first
    level without a shattered set. The candidates that fail the test are exactly the minimal
    non-shattered sets, so both families come out of the same pass.

    Args:
        C: concept class

    Returns:
        (shattered sets, minimal non-shattered sets), each sorted by size then lexicographically
    """
    if C.is_empty:
        return (), ((),)
    M = C.matrix
    shattered: List[CoordSet] = [()]
    mns: List[CoordSet] = []
    level: List[CoordSet] = [()]
    while level:
        cand = _join(level, C.n)
        if not cand:
            break
        ok = _shattered_mask(M, np.array(cand, dtype=np.int64).reshape(len(cand), -1))
        level = [c for c, s in zip(cand, ok) if s]
        shattered.extend(level)
        mns.extend(c for c, s in zip(cand, ok) if not s)
    logger.debug("%r: %d shattered, %d minimal non-shattered sets", C, len(shattered), len(mns))
    return tuple(shattered), tuple(mns)


def shatters(C: ConceptClass, A: Iterable[int]) -> bool:
    r"""
    Whether the restriction of C to A attains all :math:`2^{|A|}` patterns.
    The empty class shatters nothing; every nonempty class shatters the empty set.
    """
    A = _check_coords(A, C.n)
    if C.is_empty:
        return False
    if len(C) < (1 << len(A)):
        return False
    mask = coords_mask(A, C.n)
    return len({c & mask for c in C.concepts}) == (1 << len(A))


def shattered_sets(C: ConceptClass) -> List[CoordSet]:
    r"""
    The family :math:`\mathrm{shatter}(C)`, sorted by size then lexicographically.
    """
    return list(shatter_lattice(C)[0])


def minimal_non_shattered_sets(C: ConceptClass) -> List[CoordSet]:
    r"""
    Sets that are not shattered although all of their proper subsets are.
    """
    return list(shatter_lattice(C)[1])


def vc(C: ConceptClass) -> int:
    r"""
    VC dimension: the largest size of a shattered set; 0 for a single concept.
    """
    if C.is_empty:
        raise EmptyClassError("vc")
    return len(shatter_lattice(C)[0][-1])


def is_maximum(C: ConceptClass) -> bool:
    r"""
    Whether C meets the Sauer-Shelah-Perles bound with equality,

    .. math::

        |C| = \sum_{i \leq vc(C)} \binom{n}{i}
    """
    if C.is_empty:
        raise EmptyClassError("is_maximum")
    return len(C) == sauer_shelah_bound(C.n, vc(C))


def is_extremal(C: ConceptClass) -> bool:
    r"""
    Whether C meets Pajor's inequality with equality, :math:`|C| = |\mathrm{shatter}(C)|`.
    """
    if C.is_empty:
        raise EmptyClassError("is_extremal")
    return len(C) == len(shatter_lattice(C)[0])


def vc_star(C: ConceptClass) -> int:
    r"""
    Dual VC dimension, vc of :func:`~vcradon.classes.dual`.
    """
    if C.is_empty:
        raise EmptyClassError("vc_star")
    return vc(dual(C))


def dual_shattered_witness(C: ConceptClass) -> Tuple[int, ...]:
    r"""
    A largest set of concepts of C shattered by the dual class: for every pattern on them some
    coordinate x realizes it as :math:`(c_1(x), \ldots, c_k(x))`.

    Returns:
        vc_star(C) concepts in increasing order (the lexicographically smallest such set)
    """
    if C.is_empty:
        raise EmptyClassError("dual_shattered_witness")
    shattered = shatter_lattice(dual(C))[0]
    top = len(shattered[-1])
    first = next(s for s in shattered if len(s) == top)
    return tuple(C.concepts[i] for i in first)


def dual_shatters(C: ConceptClass, P: Iterable[int]) -> bool:
    r"""
    Whether the concepts P of C are shattered by the dual class, i.e. the columns of C restricted to P
    attain all :math:`2^{|P|}` patterns.
    """
    P = list(P)
    index = C.index
    for c in P:
        if c not in index:
            raise PreconditionError(f"Concept {c} is not in {C!r}.")
    n = C.n
    patterns = set()
    for x in range(n):
        shift = n - 1 - x
        patterns.add(tuple((c >> shift) & 1 for c in P))
    return len(patterns) == (1 << len(P))


def restrict(C: ConceptClass, a: PartialAssignment) -> ConceptClass:
    r"""
    The subclass :math:`C_{X,t} = \{c \in C : c(x) = t(x),\ x \in X\}` over the same domain.
    This may be empty.
    """
    a.check(C.n)
    mask, value = a.mask(C.n), a.value(C.n)
    return ConceptClass(C.n, (c for c in C.concepts if c & mask == value))


def forbidden_trace(C: ConceptClass, X: Iterable[int]) -> PartialAssignment:
    r"""
    The unique pattern t on a minimal non-shattered set X that no concept of the extremal class C realizes.

    Args:
        C: an extremal class
        X: a set minimal non-shattered by C

    Returns:
        t as a PartialAssignment on X

    Raises:
        PreconditionError: C is not extremal, or X is not minimal non-shattered
        ForbiddenTraceError: X has more than one missing pattern
    """
    X = _check_coords(X, C.n)
    if C.is_empty or not is_extremal(C):
        raise PreconditionError(f"{C!r} is not extremal.")
    if X not in set(shatter_lattice(C)[1]):
        raise PreconditionError(f"{X} is not minimal non-shattered by {C!r}.")
    n = C.n
    mask = coords_mask(X, n)
    seen = {c & mask for c in C.concepts}
    missing = []
    for bits in range(1 << len(X)):
        t = PartialAssignment(
            (x, (bits >> (len(X) - 1 - j)) & 1) for j, x in enumerate(X)
        )
        if t.value(n) not in seen:
            missing.append(t)
    if len(missing) != 1:
        raise ForbiddenTraceError(X, missing)
    return missing[0]
