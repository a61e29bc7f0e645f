from vcradon import classes
from vcradon import convex
from vcradon import cubes
from vcradon import gen
from vcradon import harness

__version__ = "0.1.0"

__all__ = ["classes", "convex", "cubes", "gen", "harness"]
