from .conceptclass import ConceptClass, PartialAssignment, dual
from .metrics import (
    shatters,
    shattered_sets,
    minimal_non_shattered_sets,
    shatter_lattice,
    vc,
    vc_star,
    is_maximum,
    is_extremal,
    restrict,
    forbidden_trace,
    dual_shattered_witness,
    dual_shatters,
)
from .symmetry import relabel, canonical_form, is_isomorphic, translation_stabilizer
from .io import parse_class, format_class, read_class, write_class
from .util import sauer_shelah_bound, floor_log2, to_string, from_string

__all__ = [
    "ConceptClass",
    "PartialAssignment",
    "dual",
    "shatters",
    "shattered_sets",
    "minimal_non_shattered_sets",
    "shatter_lattice",
    "vc",
    "vc_star",
    "is_maximum",
    "is_extremal",
    "restrict",
    "forbidden_trace",
    "dual_shattered_witness",
    "dual_shatters",
    "relabel",
    "canonical_form",
    "is_isomorphic",
    "translation_stabilizer",
    "parse_class",
    "format_class",
    "read_class",
    "write_class",
    "sauer_shelah_bound",
    "floor_log2",
    "to_string",
    "from_string",
]
