"""
Relabeling symmetries of concept classes: coordinate permutations combined with xor by a fixed vector.
All metrics in this package are invariant under them.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence, Tuple, Union

import numpy as np

from .conceptclass import ConceptClass
from .util import from_string

# canonical forms enumerate all n! permutations
MAX_CANONICAL_N = 8


def _flip_value(flip: Union[int, str, Sequence[int]], n: int) -> int:
    if isinstance(flip, str):
        if len(flip) != n:
            raise ValueError(f"Flip vector '{flip}' does not have length {n}.")
        return from_string(flip)
    if isinstance(flip, (int, np.integer)):
        if not 0 <= flip < (1 << n):
            raise ValueError(f"Flip vector {flip} does not fit a domain of size {n}.")
        return int(flip)
    flip = list(flip)
    if len(flip) != n:
        raise ValueError(f"Flip vector {flip} does not have length {n}.")
    return from_string("".join(str(int(b)) for b in flip))


def _check_perm(perm: Sequence[int], n: int) -> Tuple[int, ...]:
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of range({n}).")
    return perm


def relabel(C: ConceptClass, perm: Sequence[int] | None = None, flip: Union[int, str, Sequence[int]] = 0) -> ConceptClass:
    r"""
    Apply a relabeling symmetry: coordinate x of every concept moves to perm[x], then the result is
    xor-ed with flip.

    Args:
        C: concept class
        perm: permutation of range(n), identity if None
        flip: vector to xor with, as an int, a 0/1 string or a bit sequence

    Returns:
        the relabeled ConceptClass
    """
    n = C.n
    v = _flip_value(flip, n)
    if perm is None:
        return ConceptClass(n, (c ^ v for c in C.concepts))
    perm = _check_perm(perm, n)
    out = []
    for c in C.concepts:
        d = 0
        for x in range(n):
            if (c >> (n - 1 - x)) & 1:
                d |= 1 << (n - 1 - perm[x])
        out.append(d ^ v)
    return ConceptClass(n, out)


def canonical_form(C: ConceptClass) -> Tuple[int, ...]:
    r"""
    The lexicographically smallest sorted concept tuple among all relabelings of C.
    Two classes over the same domain are isomorphic iff their canonical forms agree.

    The smallest image always contains the zero concept, so only xor vectors taken from the
    permuted class itself are tried.
    """
    n = C.n
    if n > MAX_CANONICAL_N:
        raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL_N}, got {n}.")
    if C.is_empty:
        return ()
    M = C.matrix.astype(np.int64)
    weights = np.left_shift(1, np.arange(n - 1, -1, -1, dtype=np.int64))
    best = None
    for perm in permutations(range(n)):
        inv = np.argsort(perm)
        P = M[:, inv] @ weights
        images = np.sort(P[:, None] ^ P[None, :], axis=0).T
        cand = min(tuple(int(v) for v in row) for row in images)
        if best is None or cand < best:
            best = cand
    return best


def is_isomorphic(C: ConceptClass, D: ConceptClass) -> bool:
    if C.n != D.n or len(C) != len(D):
        return False
    return canonical_form(C) == canonical_form(D)


def translation_stabilizer(C: ConceptClass) -> Tuple[int, ...]:
    r"""
    The group :math:`\{v : C \oplus v = C\}` of xor vectors fixing C, in increasing order.
    It always contains 0; the full cube is fixed by every vector.
    """
    if C.is_empty:
        return (0,)
    index = C.index
    c0 = C.concepts[0]
    out = []
    for c in C.concepts:
        v = c0 ^ c
        if all((d ^ v) in index for d in C.concepts):
            out.append(v)
    return tuple(sorted(out))
