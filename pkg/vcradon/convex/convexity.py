r"""
The convexity space of a concept class.

Half-spaces are :math:`C_{x,y} = \{c \in C : c(x) = y\}` and convex sets are their intersections.
Every nonempty convex set is some :math:`C_{X,t}`, and the hull of a nonempty P is obtained by
fixing the coordinates on which all of P agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from vcradon.classes import ConceptClass, PartialAssignment, restrict
from vcradon.classes.conceptclass import ConceptLike
from vcradon.classes.util import from_string, to_string
from vcradon.errors import CoordinateError, PreconditionError


def as_concepts(C: ConceptClass, P: Iterable[ConceptLike]) -> List[int]:
    r"""
    Convert concepts given as ints or 0/1 strings, checking membership in C.
    """
    out = []
    for c in P:
        if isinstance(c, str):
            if len(c) != C.n:
                raise PreconditionError(f"Concept '{c}' does not have length {C.n}.")
            c = from_string(c)
        c = int(c)
        if c not in C.index:
            raise PreconditionError(f"Concept {to_string(c, C.n)} is not in {C!r}.")
        out.append(c)
    return out


def agreement_masks(P: Sequence[int], n: int) -> Tuple[int, int]:
    r"""
    (mask, value) of the coordinates on which all concepts of the nonempty P agree.
    """
    assert len(P) > 0, "The agreement of an empty set is undefined."
    conj = (1 << n) - 1
    disj = 0
    for c in P:
        conj &= c
        disj |= c
    mask = ~(conj ^ disj) & ((1 << n) - 1)
    return mask, conj & mask


def agreement(C: ConceptClass, P: Iterable[ConceptLike]) -> PartialAssignment:
    r"""
    The assignment (X, t): X are the coordinates where all of P agree and t their common values.
    """
    P = as_concepts(C, P)
    if not P:
        raise PreconditionError("The agreement of an empty set is undefined.")
    return PartialAssignment.from_masks(*agreement_masks(P, C.n), C.n)


@dataclass(frozen=True, eq=False)
class ConvexSet:
    r"""
    A member of the convexity space of a class.

    Equality is extensional: two sets are equal when they have the same base class and the same members,
    whatever assignment generated them.

    Attributes:
        base: the owning concept class
        members: the concepts in the set
        provenance: an assignment (X, t) with members = C_{X,t}, None for the empty set
    """

    base: ConceptClass
    members: FrozenSet[int]
    provenance: PartialAssignment | None = field(default=None)

    def __eq__(self, other):
        if isinstance(other, ConvexSet):
            return self.base == other.base and self.members == other.members
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, c: ConceptLike) -> bool:
        if isinstance(c, str):
            c = from_string(c)
        return c in self.members

    def __and__(self, other: ConvexSet) -> ConvexSet:
        assert self.base == other.base, "Convex sets of different classes cannot be intersected."
        members = self.members & other.members
        provenance = None
        if members and self.provenance is not None and other.provenance is not None:
            provenance = self.provenance | other.provenance
        return ConvexSet(self.base, members, provenance)

    def __repr__(self):
        body = ", ".join(to_string(c, self.base.n) for c in self)
        return f"<ConvexSet {{{body}}} of {self.base!r}>"

    @property
    def is_empty(self) -> bool:
        return not self.members

    def to_class(self) -> ConceptClass:
        return ConceptClass(self.base.n, self.members)


def halfspace(C: ConceptClass, x: int, y: int) -> ConvexSet:
    if not 0 <= x < C.n:
        raise CoordinateError(x, C.n)
    if y not in (0, 1):
        raise ValueError(f"{y!r} is not a bit.")
    a = PartialAssignment({x: y})
    return ConvexSet(C, frozenset(restrict(C, a).concepts), a)


def convex_hull(C: ConceptClass, P: Iterable[ConceptLike]) -> ConvexSet:
    r"""
    The smallest convex set containing P, i.e. the intersection of all half-spaces containing it.

    Args:
        C: concept class
        P: concepts of C, as ints or 0/1 strings

    Returns:
        conv(P); the empty set for empty P
    """
    P = as_concepts(C, P)
    if not P:
        return ConvexSet(C, frozenset())
    a = PartialAssignment.from_masks(*agreement_masks(P, C.n), C.n)
    return ConvexSet(C, frozenset(restrict(C, a).concepts), a)


def realizes(C: ConceptClass, mask: int, value: int) -> bool:
    return any(c & mask == value for c in C.concepts)


def hulls_disjoint(C: ConceptClass, I: Sequence[int], J: Sequence[int]) -> bool:
    r"""
    Whether conv(I) and conv(J) are disjoint, decided on agreement assignments:
    they intersect iff the two assignments are compatible and their union is realized in C.
    """
    if not I or not J:
        return True
    mI, vI = agreement_masks(I, C.n)
    mJ, vJ = agreement_masks(J, C.n)
    if mI & mJ & (vI ^ vJ):
        return True
    return not realizes(C, mI | mJ, vI | vJ)


def is_radon_independent(C: ConceptClass, P: Sequence[ConceptLike]) -> bool:
    r"""
    Whether every nontrivial bipartition (I, J) of P has disjoint hulls.
    Only partitions with the first element in I are visited; sets of size at most 1 are independent.

    Raises:
        ValueError: on repeated concepts
        PreconditionError: if P is not a subset of C
    """
    P = as_concepts(C, P)
    if len(set(P)) != len(P):
        raise ValueError("Radon independence is defined for distinct concepts.")
    k = len(P)
    for size in range(1, k):
        for J in combinations(range(1, k), size):
            Jset = set(J)
            I = [P[i] for i in range(k) if i not in Jset]
            if not hulls_disjoint(C, I, [P[j] for j in J]):
                return False
    return True


def separating_coordinate(C: ConceptClass, I: Iterable[ConceptLike], J: Iterable[ConceptLike]) -> int | None:
    r"""
    The smallest coordinate x on which I is constant, J is constant, and the two constants differ.

    Returns:
        x, or None if no coordinate separates I from J
    """
    I = as_concepts(C, I)
    J = as_concepts(C, J)
    if not I or not J:
        raise PreconditionError("separating_coordinate needs two nonempty sets.")
    if set(I) & set(J):
        raise PreconditionError("separating_coordinate needs disjoint sets.")
    mI, vI = agreement_masks(I, C.n)
    mJ, vJ = agreement_masks(J, C.n)
    sep = mI & mJ & (vI ^ vJ)
    if not sep:
        return None
    return C.n - sep.bit_length()
