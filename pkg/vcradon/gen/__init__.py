from .families import (
    gen_cube,
    gen_dented_cube,
    gen_singletons,
    gen_tight_d1,
    gen_ball,
    TIGHT_D1,
    TIGHT_D1_DUAL_SHATTERED,
    TIGHT_D1_SYMMETRY,
)
from .arrangement import (
    Arrangement,
    parse_arrangement,
    read_arrangement,
    write_arrangement,
    find_cell_point,
    sign_pattern_feasible,
    cell_points,
    gen_arrangement_class,
    is_generic,
    gen_random_generic_arrangement,
    gen_simplex_arrangement,
    gen_shattered_points_arrangement,
    simplex_vertices,
    shattered_points_certificate,
)

__all__ = [
    "gen_cube",
    "gen_dented_cube",
    "gen_singletons",
    "gen_tight_d1",
    "gen_ball",
    "TIGHT_D1",
    "TIGHT_D1_DUAL_SHATTERED",
    "TIGHT_D1_SYMMETRY",
    "Arrangement",
    "parse_arrangement",
    "read_arrangement",
    "write_arrangement",
    "find_cell_point",
    "sign_pattern_feasible",
    "cell_points",
    "gen_arrangement_class",
    "is_generic",
    "gen_random_generic_arrangement",
    "gen_simplex_arrangement",
    "gen_shattered_points_arrangement",
    "simplex_vertices",
    "shattered_points_certificate",
]
