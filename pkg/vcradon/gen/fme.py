r"""
Fourier-Motzkin elimination for systems of strict inequalities over exact rationals.

A constraint is a pair (g, h) meaning :math:`\langle g, x \rangle > h`. Eliminating a variable keeps the
constraints that do not involve it and adds the sum of every lower/upper pair, which describes the
projection exactly for strict systems. The stages are kept so that a point can be recovered by
back-substitution.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]
Constraint = Tuple[Vector, Fraction]


class Infeasible(Exception):
    pass


def _normalize(g: Vector, h: Fraction) -> Constraint:
    r"""
    Scale so that the first nonzero coefficient has absolute value 1.
    """
    for a in g:
        if a != 0:
            s = abs(a)
            return tuple(v / s for v in g), h / s
    return g, h


def _add(store: Dict[Vector, Fraction], g: Vector, h: Fraction):
    if all(a == 0 for a in g):
        if h >= 0:
            raise Infeasible
        return
    g, h = _normalize(g, h)
    if g not in store or h > store[g]:
        store[g] = h


def simplify(constraints: Sequence[Constraint]) -> List[Constraint]:
    r"""
    Normalize, drop trivially true constraints and keep the strongest of parallel ones.

    Raises:
        Infeasible: if a constant constraint :math:`0 > h` with :math:`h \geq 0` appears
    """
    store: Dict[Vector, Fraction] = {}
    for g, h in constraints:
        _add(store, tuple(Fraction(a) for a in g), Fraction(h))
    return sorted(store.items())


def eliminate(constraints: Sequence[Constraint], j: int) -> List[Constraint]:
    r"""
    Project the strict system onto the coordinates other than j.
    The result still has full-length coefficient vectors, with zeros at j.
    """
    store: Dict[Vector, Fraction] = {}
    lower, upper = [], []
    for g, h in constraints:
        a = g[j]
        if a == 0:
            _add(store, g, h)
        elif a > 0:
            lower.append((tuple(v / a for v in g), h / a))
        else:
            upper.append((tuple(v / -a for v in g), h / -a))
    for gl, hl in lower:
        for gu, hu in upper:
            _add(store, tuple(p + q for p, q in zip(gl, gu)), hl + hu)
    return sorted(store.items())


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    if lo is not None and hi is not None:
        assert lo < hi, "Empty interval during back-substitution!"
        return (lo + hi) / 2
    if lo is not None:
        return lo + 1
    if hi is not None:
        return hi - 1
    return Fraction(0)


def strict_feasible_point(constraints: Sequence[Constraint], d: int) -> Optional[Vector]:
    r"""
    Find a rational point satisfying every strict constraint.

    Variables are eliminated from the last to the first. The point is then rebuilt from the first variable on,
    each coordinate chosen strictly inside the interval left by the previous ones.

    Args:
        constraints: pairs (g, h) with len(g) == d, meaning g.x > h
        d: number of variables

    Returns:
        a point as a tuple of Fractions, or None if the system is infeasible
    """
    try:
        stages = [simplify(constraints)]
        for j in range(d - 1, -1, -1):
            stages.append(eliminate(stages[-1], j))
    except Infeasible:
        return None
    logger.debug("elimination stage sizes %s", [len(s) for s in stages])
    # stages[d - k] only involves the variables 0..k-1
    x: List[Fraction] = []
    for k in range(1, d + 1):
        j = k - 1
        lo = hi = None
        for g, h in stages[d - k]:
            a = g[j]
            if a == 0:
                continue
            bound = (h - sum(g[i] * x[i] for i in range(j))) / a
            if a > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        x.append(_pick(lo, hi))
    return tuple(x)
