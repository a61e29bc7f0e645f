r"""
Radon independence and the Radon number of the convexity space of a class.

The search grows independent sets one concept at a time, which is valid since every subset of an
independent set is independent. Sets are only grown from orbit representatives of the xor
symmetries fixing the class, so symmetric classes such as the full cube are searched from a single seed.
"""

from __future__ import annotations

import logging
from typing import List, NamedTuple, Tuple

import numpy as np

from vcradon.classes import (
    ConceptClass,
    forbidden_trace,
    is_maximum,
    shattered_sets,
    translation_stabilizer,
    vc,
)
from vcradon.classes.util import floor_log2, to_string
from vcradon.errors import EmptyClassError, PreconditionError
from .convexity import is_radon_independent

logger = logging.getLogger(__name__)

# realized (mask, value) pairs are tabulated densely up to this domain size
_TABLE_MAX_N = 10
# frontiers larger than this are reported at INFO
_LOUD_FRONTIER = 10000


class RadonWitness(NamedTuple):
    r"""
    A Radon-independent list of concepts.

    Attributes:
        concepts: the concepts, in increasing order
        certified_size: the size the witness certifies
    """

    concepts: Tuple[int, ...]
    certified_size: int

    def to_strings(self, n: int) -> List[str]:
        return [to_string(c, n) for c in self.concepts]


class RadonResult(NamedTuple):
    r"""
    Attributes:
        value: the Radon number if exact, otherwise a lower bound equal to the search limit
        witness: an independent set of size value
        exact: False when the search stopped at its limit
    """

    value: int
    witness: RadonWitness
    exact: bool


def _dtype(n: int):
    return np.int64 if n <= 62 else object


class _RealizedIndex:
    r"""
    Answers "is the assignment (mask, value) realized by some concept" for arrays of queries.
    """

    def __init__(self, C: ConceptClass):
        self.n = C.n
        self.concepts = np.array(C.concepts, dtype=_dtype(C.n))
        self.table = None
        self._projections = {}
        if C.n <= _TABLE_MAX_N:
            masks = np.arange(1 << C.n, dtype=np.int64)[:, None]
            idx = (masks << C.n) | (self.concepts[None, :] & masks)
            self.table = np.zeros(1 << (2 * C.n), dtype=bool)
            self.table[idx.ravel()] = True

    def _projection(self, mask) -> np.ndarray:
        key = int(mask)
        if key not in self._projections:
            self._projections[key] = np.unique(self.concepts & key)
        return self._projections[key]

    def __call__(self, masks: np.ndarray, values: np.ndarray) -> np.ndarray:
        if self.table is not None:
            return self.table[(masks << self.n) | values]
        out = np.zeros(len(masks), dtype=bool)
        for m in np.unique(masks):
            sel = masks == m
            out[sel] = np.isin(values[sel], self._projection(m))
        return out


def _extensions(S: Tuple[int, ...], cand: np.ndarray, n: int, realized: _RealizedIndex) -> np.ndarray:
    r"""
    For an independent set S, mark the candidates p for which S + p is still independent.

    Every bipartition of S + p puts p with some T strictly inside S, against B = S minus T.
    """
    full = (1 << n) - 1
    k = len(S)
    ands = [full] * (1 << k)
    ors = [0] * (1 << k)
    for t in range(1, 1 << k):
        low = t & -t
        j = low.bit_length() - 1
        ands[t] = ands[t ^ low] & S[j]
        ors[t] = ors[t ^ low] | S[j]
    ok = np.ones(len(cand), dtype=bool)
    whole = (1 << k) - 1
    for t in range(whole):
        live = np.flatnonzero(ok)
        if live.size == 0:
            break
        b = whole ^ t
        mB = ~(ands[b] ^ ors[b]) & full
        vB = ands[b] & mB
        P = cand[live]
        a_and = P & ands[t]
        a_or = P | ors[t]
        mA = ~(a_and ^ a_or) & full
        vA = a_and & mA
        meet = np.flatnonzero((mA & mB & (vA ^ vB)) == 0)
        if meet.size == 0:
            continue
        hit = realized(mA[meet] | mB, vA[meet] | vB)
        ok[live[meet[hit]]] = False
    return ok


def radon_number(C: ConceptClass, limit: int | None = None) -> RadonResult:
    r"""
    The Radon number r(C): the largest size of a Radon-independent set of concepts.

    Args:
        C: nonempty concept class
        limit: stop once an independent set of this size is found (default n * |C|)

    Returns:
        RadonResult; ``exact`` is False when the limit was hit, in which case r(C) >= value
    """
    if C.is_empty:
        raise EmptyClassError("radon_number")
    if limit is None:
        limit = max(C.n * len(C), 1)
    if limit < 1:
        raise ValueError(f"The Radon search limit should be at least 1, got {limit}.")
    first = RadonWitness((C.concepts[0],), 1)
    if len(C) == 1:
        return RadonResult(1, first, True)
    if limit == 1:
        return RadonResult(1, first, False)

    n = C.n
    dtype = _dtype(n)
    concepts = np.array(C.concepts, dtype=dtype)
    group = np.array(translation_stabilizer(C), dtype=dtype)
    reps = (concepts[:, None] ^ group[None, :]).min(axis=1)
    seeds = [int(c) for c, r in zip(C.concepts, reps) if c == r]
    eligible = {s: concepts[(concepts > s) & (reps >= s)] for s in seeds}
    realized = _RealizedIndex(C)
    logger.debug("%r: %d seeds under a stabilizer of order %d", C, len(seeds), len(group))

    level: List[Tuple[int, ...]] = [(s,) for s in seeds]
    k = 1
    while k < limit:
        nxt = []
        for S in level:
            cand = eligible[S[0]]
            cand = cand[np.searchsorted(cand, S[-1], side="right"):]
            if cand.size == 0:
                continue
            ok = _extensions(S, cand, n, realized)
            nxt.extend(S + (int(p),) for p in cand[ok])
        if not nxt:
            break
        level = nxt
        k += 1
        if len(level) > _LOUD_FRONTIER:
            logger.info("%r: %d independent sets of size %d", C, len(level), k)
        else:
            logger.debug("%r: %d independent sets of size %d", C, len(level), k)
    exact = k < limit or k >= len(C)
    return RadonResult(k, RadonWitness(tuple(sorted(level[0])), k), exact)


def _smallest_matching(C: ConceptClass, mask: int, value: int) -> int:
    return next(c for c in C.concepts if c & mask == value)


def radon_witness_from_shattering(C: ConceptClass) -> RadonWitness:
    r"""
    An independent set of size :math:`\lfloor \log_2(2d+2) \rfloor` built on a shattered d-set A.

    With k the target size, each bipartition (I, J) of the elements with element 0 in I gets its own
    coordinate of A, on which the elements of J read 1 and those of I read 0. There are
    :math:`2^{k-1} - 1 \leq d` such bipartitions, and every one of them is separated by its coordinate.

    Args:
        C: class with vc(C) >= 1

    Returns:
        RadonWitness, independence checked before returning
    """
    if C.is_empty:
        raise EmptyClassError("radon_witness_from_shattering")
    d = vc(C)
    if d < 1:
        raise PreconditionError("radon_witness_from_shattering needs vc(C) >= 1.")
    n = C.n
    A = next(s for s in shattered_sets(C) if len(s) == d)
    k = floor_log2(2 * d + 2)
    parts = (1 << (k - 1)) - 1
    mask = 0
    for x in A:
        mask |= 1 << (n - 1 - x)
    concepts = []
    for i in range(k):
        value = 0
        for j in range(1, parts + 1):
            # bipartition j holds element i (i >= 1) in J iff bit i-1 of j is set
            if i >= 1 and (j >> (i - 1)) & 1:
                value |= 1 << (n - 1 - A[j - 1])
        concepts.append(_smallest_matching(C, mask, value))
    witness = tuple(sorted(concepts))
    assert is_radon_independent(C, witness), "Shattering witness is not Radon independent!"
    return RadonWitness(witness, k)


def radon_witness_maximum(C: ConceptClass) -> RadonWitness:
    r"""
    An independent set of size d + 1 for a maximum class of VC dimension 0 < d < n.

    X = {0, ..., d} is minimal non-shattered, so it carries a unique forbidden trace t. Flipping t at each
    x in X gives d + 1 realized traces, and a concept realizing each of them is taken.

    Returns:
        RadonWitness, independence checked before returning
    """
    if C.is_empty:
        raise EmptyClassError("radon_witness_maximum")
    if not is_maximum(C):
        raise PreconditionError(f"{C!r} is not maximum.")
    if C.is_full_cube:
        raise PreconditionError("radon_witness_maximum does not apply to the full cube.")
    d = vc(C)
    n = C.n
    if not 0 < d < n:
        raise PreconditionError(f"radon_witness_maximum needs 0 < vc(C) < n, got vc = {d}, n = {n}.")
    X = tuple(range(d + 1))
    t = forbidden_trace(C, X)
    mask = t.mask(n)
    concepts = [_smallest_matching(C, mask, t.flipped(x).value(n)) for x in X]
    witness = tuple(sorted(concepts))
    assert is_radon_independent(C, witness), "Maximum-class witness is not Radon independent!"
    return RadonWitness(witness, d + 1)
