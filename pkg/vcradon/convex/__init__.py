from .convexity import (
    ConvexSet,
    agreement,
    halfspace,
    convex_hull,
    hulls_disjoint,
    is_radon_independent,
    separating_coordinate,
)
from .radon import (
    RadonWitness,
    RadonResult,
    radon_number,
    radon_witness_from_shattering,
    radon_witness_maximum,
)

__all__ = [
    "ConvexSet",
    "agreement",
    "halfspace",
    "convex_hull",
    "hulls_disjoint",
    "is_radon_independent",
    "separating_coordinate",
    "RadonWitness",
    "RadonResult",
    "radon_number",
    "radon_witness_from_shattering",
    "radon_witness_maximum",
]
