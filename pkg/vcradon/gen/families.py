"""
Named concept class families.
"""

from __future__ import annotations

from vcradon.classes import ConceptClass
from vcradon.classes.util import from_string

# maximum class over [8] with vc = 1 and vc* = r = 3
TIGHT_D1 = (
    "01010101",
    "11010101",
    "10010101",
    "01110101",
    "01100101",
    "01011101",
    "01011001",
    "01010111",
    "01010110",
)
# four concepts of TIGHT_D1, any three of which the dual class shatters
TIGHT_D1_DUAL_SHATTERED = ("10010101", "01100101", "01011001", "01010110")
# coordinate x moves to TIGHT_D1_SYMMETRY[x]; the class is fixed. Coordinates come in pairs
# (2k, 2k+1) and any permutation of whole pairs is a symmetry.
TIGHT_D1_SYMMETRY = (2, 3, 6, 7, 0, 1, 4, 5)


def _positive(name: str, value: int):
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} should be a positive integer, got {value!r}.")


def gen_cube(d: int) -> ConceptClass:
    r"""
    The full cube :math:`\{0,1\}^d`.
    """
    _positive("d", d)
    return ConceptClass.full_cube(d)


def gen_dented_cube(d: int) -> ConceptClass:
    r"""
    :math:`\{0,1\}^{d+1}` without the all-ones concept, a maximum class of VC dimension d.
    """
    _positive("d", d)
    top = (1 << (d + 1)) - 1
    return ConceptClass(d + 1, range(top))


def gen_singletons(n: int) -> ConceptClass:
    r"""
    The n indicator concepts of single points.
    """
    _positive("n", n)
    return ConceptClass(n, (1 << (n - 1 - i) for i in range(n)))


def gen_tight_d1() -> ConceptClass:
    return ConceptClass(8, TIGHT_D1)


def gen_ball(n: int, d: int, center: int | str = 0) -> ConceptClass:
    r"""
    The Hamming ball of radius d around center. For d < n it is a maximum class of VC dimension d.

    Args:
        n: domain size
        d: radius, 0 <= d <= n
        center: the center as an int or a 0/1 string
    """
    _positive("n", n)
    if not 0 <= d <= n:
        raise ValueError(f"Radius should lie in [0, {n}], got {d}.")
    if isinstance(center, str):
        center = from_string(center)
    if not 0 <= center < (1 << n):
        raise ValueError(f"Center {center} does not fit a domain of size {n}.")
    return ConceptClass(n, (c ^ center for c in range(1 << n) if bin(c).count("1") <= d))
