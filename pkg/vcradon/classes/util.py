"""
Bit-level helpers for concepts stored as Python ints.

A concept over the domain [0, n) is the int whose n-digit binary expansion is its 0/1 string,
so coordinate 0 is the most significant digit and int order is lexicographic string order.
"""

from __future__ import annotations

from typing import Iterable, Tuple

from scipy.special import comb


def bit(x: int, n: int) -> int:
    """
    Single-bit mask of coordinate x in a domain of size n.
    """
    return 1 << (n - 1 - x)


def coords_mask(coords: Iterable[int], n: int) -> int:
    mask = 0
    for x in coords:
        mask |= 1 << (n - 1 - x)
    return mask


def mask_coords(mask: int, n: int) -> Tuple[int, ...]:
    """
    Inverse of coords_mask: the sorted coordinates whose bits are set.
    """
    return tuple(x for x in range(n) if (mask >> (n - 1 - x)) & 1)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_string(c: int, n: int) -> str:
    return format(c, "b").zfill(n) if n else ""


def from_string(s: str) -> int:
    r"""
    Parse a 0/1 string into a concept.

    Args:
        s: the string, e.g. '0110'

    Returns:
        the concept as an int (0 for the empty string)
    """
    if s and set(s) - {"0", "1"}:
        raise ValueError(f"'{s}' is not a 0/1 string.")
    return int(s, 2) if s else 0


def floor_log2(x: int) -> int:
    r"""
    :math:`\lfloor \log_2 x \rfloor` for integers, with floor_log2(0) = -1 so that bounds of the form
    floor_log2(v) <= w hold vacuously when v = 0.
    """
    if x < 0:
        raise ValueError(f"floor_log2 is undefined for negative input {x}.")
    return x.bit_length() - 1


def sauer_shelah_bound(n: int, d: int) -> int:
    r"""
    The binomial sum

    .. math::

        \binom{n}{\leq d} = \sum_{i=0}^{d} \binom{n}{i}

    which upper-bounds the size of a class of VC dimension d over [n].
    """
    return sum(int(comb(n, i, exact=True)) for i in range(0, min(d, n) + 1))
