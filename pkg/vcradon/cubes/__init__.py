from .complex import (
    Cube,
    CubeComplex,
    enumerate_cubes,
    strongly_shattered_sets,
    complex_dimension,
    format_complex,
    export_complex,
)

__all__ = [
    "Cube",
    "CubeComplex",
    "enumerate_cubes",
    "strongly_shattered_sets",
    "complex_dimension",
    "format_complex",
    "export_complex",
]
