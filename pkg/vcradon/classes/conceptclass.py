from __future__ import annotations

from collections.abc import Mapping
from typing import Iterable, Iterator, List, Tuple, Union

import numpy as np

from vcradon.errors import CoordinateError
from .util import bit, from_string, full_mask, mask_coords, to_string

ConceptLike = Union[int, str]


class PartialAssignment(Mapping):
    r"""
    A partial function :math:`t: X \to \{0, 1\}` on the coordinates of a domain.
    Traces, convex sets :math:`C_{X,t}` and the fixed part of a cube are all described by one.

    It behaves as an immutable mapping ``coordinate -> bit`` ordered by coordinate.
    Coordinates are 0-based.

    Attributes:
        coords: the sorted coordinate tuple X
        bits: the bits t(x), aligned with coords
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: Union[Mapping, Iterable[Tuple[int, int]]] = ()):
        items = dict(entries)
        for x, y in items.items():
            if not isinstance(x, (int, np.integer)) or x < 0:
                raise ValueError(f"Assignment coordinate {x!r} is not a nonnegative integer.")
            if y not in (0, 1):
                raise ValueError(f"Assignment value {y!r} at coordinate {x} is not a bit.")
        self._entries = tuple(sorted((int(x), int(y)) for x, y in items.items()))

    @classmethod
    def from_masks(cls, mask: int, value: int, n: int) -> PartialAssignment:
        r"""
        Build the assignment fixing the coordinates set in mask to the corresponding bits of value.
        """
        return cls(
            (x, (value >> (n - 1 - x)) & 1) for x in mask_coords(mask, n)
        )

    def __getitem__(self, x: int) -> int:
        for k, v in self._entries:
            if k == x:
                return v
        raise KeyError(x)

    def __iter__(self) -> Iterator[int]:
        return (k for k, _ in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __hash__(self):
        return hash(self._entries)

    def __eq__(self, other):
        if isinstance(other, PartialAssignment):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self):
        body = ", ".join(f"{x}:{y}" for x, y in self._entries)
        return f"<PartialAssignment {{{body}}}>"

    @property
    def coords(self) -> Tuple[int, ...]:
        return tuple(x for x, _ in self._entries)

    @property
    def bits(self) -> Tuple[int, ...]:
        return tuple(y for _, y in self._entries)

    def check(self, n: int):
        r"""
        Raise CoordinateError unless every coordinate lies in [0, n).
        """
        for x, _ in self._entries:
            if x >= n:
                raise CoordinateError(x, n)

    def mask(self, n: int) -> int:
        m = 0
        for x, _ in self._entries:
            m |= bit(x, n)
        return m

    def value(self, n: int) -> int:
        v = 0
        for x, y in self._entries:
            if y:
                v |= bit(x, n)
        return v

    def matches(self, c: int, n: int) -> bool:
        return (c & self.mask(n)) == self.value(n)

    def flipped(self, x: int) -> PartialAssignment:
        r"""
        The same assignment with the bit at x complemented.
        """
        if x not in self:
            raise KeyError(x)
        return PartialAssignment((k, 1 - v if k == x else v) for k, v in self._entries)

    def restricted(self, coords: Iterable[int]) -> PartialAssignment:
        keep = set(coords)
        return PartialAssignment((k, v) for k, v in self._entries if k in keep)

    def compatible(self, other: PartialAssignment) -> bool:
        return all(other.get(x, y) == y for x, y in self._entries)

    def __or__(self, other: PartialAssignment) -> PartialAssignment:
        r"""
        Union of two compatible assignments.
        """
        if not self.compatible(other):
            raise ValueError(f"{self!r} and {other!r} disagree on a shared coordinate.")
        merged = dict(self._entries)
        merged.update(other.items())
        return PartialAssignment(merged)


class ConceptClass:
    r"""
    A finite concept class :math:`C \subseteq \{0,1\}^n`, stored as a sorted tuple of ints.

    The class is immutable and hashable, so it can key caches and be shipped to worker processes.
    Duplicates passed to the constructor collapse. The empty class can be built (restriction produces it)
    but every metric rejects it.

    The set operators ``|``, ``&`` and ``-`` work on classes over the same domain,
    and ``C.T`` is the dual class :math:`C^\star`.

    Attributes:
        n: the domain size
        concepts: the concepts in increasing (lexicographic) order
    """

    __slots__ = ("n", "concepts", "_index", "_matrix")

    def __init__(self, n: int, concepts: Iterable[ConceptLike] = ()):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError(f"Domain size should be a non-negative integer, got {n!r}.")
        n = int(n)
        top = 1 << n
        values = set()
        for c in concepts:
            if isinstance(c, str):
                if len(c) != n:
                    raise ValueError(f"Concept '{c}' does not have length {n}.")
                c = from_string(c)
            c = int(c)
            if not 0 <= c < top:
                raise ValueError(f"Concept {c} does not fit a domain of size {n}.")
            values.add(c)
        self.n = n
        self.concepts: Tuple[int, ...] = tuple(sorted(values))
        self._index = None
        self._matrix = None

    @classmethod
    def from_strings(cls, strings: Iterable[str], n: int | None = None) -> ConceptClass:
        strings = list(strings)
        if n is None:
            if not strings:
                raise ValueError("Cannot infer the domain size of an empty list of strings.")
            n = len(strings[0])
        return cls(n, strings)

    @classmethod
    def full_cube(cls, n: int) -> ConceptClass:
        return cls(n, range(1 << n))

    def __repr__(self):
        return f"<ConceptClass of {len(self.concepts)} concepts over [{self.n}]>"

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.concepts)

    def __contains__(self, c: ConceptLike) -> bool:
        if isinstance(c, str):
            if len(c) != self.n:
                return False
            c = from_string(c)
        return c in self.index

    def __eq__(self, other):
        if isinstance(other, ConceptClass):
            return self.n == other.n and self.concepts == other.concepts
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.concepts))

    def __getstate__(self):
        return (self.n, self.concepts)

    def __setstate__(self, state):
        self.n, self.concepts = state
        self._index = None
        self._matrix = None

    def _check_same_domain(self, other: ConceptClass):
        assert isinstance(other, ConceptClass), "Set operations need another ConceptClass."
        assert self.n == other.n, (
            f"Domain sizes {self.n} and {other.n} do not match!"
        )

    def __or__(self, other: ConceptClass) -> ConceptClass:
        self._check_same_domain(other)
        return ConceptClass(self.n, self.concepts + other.concepts)

    def __and__(self, other: ConceptClass) -> ConceptClass:
        self._check_same_domain(other)
        return ConceptClass(self.n, (c for c in self.concepts if c in other.index))

    def __sub__(self, other: ConceptClass) -> ConceptClass:
        self._check_same_domain(other)
        return ConceptClass(self.n, (c for c in self.concepts if c not in other.index))

    def __le__(self, other: ConceptClass) -> bool:
        self._check_same_domain(other)
        return all(c in other.index for c in self.concepts)

    @property
    def index(self) -> dict:
        r"""
        Position of each concept in the sorted order.
        """
        if self._index is None:
            self._index = {c: i for i, c in enumerate(self.concepts)}
        return self._index

    @property
    def is_empty(self) -> bool:
        return not self.concepts

    @property
    def is_full_cube(self) -> bool:
        return len(self.concepts) == (1 << self.n)

    @property
    def full_mask(self) -> int:
        return full_mask(self.n)

    @property
    def matrix(self) -> np.ndarray:
        r"""
        The class as a read-only |C| x n uint8 matrix; row i is the i-th concept.
        """
        if self._matrix is None:
            shifts = np.arange(self.n - 1, -1, -1, dtype=object)
            rows = np.array(self.concepts, dtype=object).reshape(-1, 1)
            if self.n:
                m = ((rows >> shifts) & 1).astype(np.uint8)
            else:
                m = np.zeros((len(self.concepts), 0), dtype=np.uint8)
            m.setflags(write=False)
            self._matrix = m
        return self._matrix

    def to_strings(self) -> List[str]:
        return [to_string(c, self.n) for c in self.concepts]

    def column(self, x: int) -> int:
        r"""
        The function :math:`f_x(c) = c(x)` over the sorted concepts, packed like a concept of the dual.
        """
        if not 0 <= x < self.n:
            raise CoordinateError(x, self.n)
        shift = self.n - 1 - x
        out = 0
        for c in self.concepts:
            out = (out << 1) | ((c >> shift) & 1)
        return out

    @property
    def T(self) -> ConceptClass:
        r"""
        The dual class, see :func:`dual`.
        """
        return dual(self)


def dual(C: ConceptClass) -> ConceptClass:
    r"""
    The dual class :math:`C^\star = \{f_x : x \in [n]\}` with :math:`f_x(c) = c(x)`.

    The domain of the result is C itself, in sorted order, so its size is |C|.
    Coordinates with identical columns give the same function and collapse.

    Args:
        C: a nonempty concept class

    Returns:
        the dual ConceptClass over a domain of size |C|
    """
    from vcradon.errors import EmptyClassError

    if C.is_empty:
        raise EmptyClassError("dual")
    return ConceptClass(len(C), (C.column(x) for x in range(C.n)))
