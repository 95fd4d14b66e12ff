"""Exact computations with bound quiver algebras and their representations."""

from .algebra import AlgebraError, BoundQuiverAlgebra, NotFiniteDimensional, Quiver, build_algebra
from .linalg import GF, QQ, Field, Mat
from .textformat import ParseError, format_algebra, load_algebra, parse_algebra

__all__ = [
    "AlgebraError",
    "BoundQuiverAlgebra",
    "Field",
    "GF",
    "Mat",
    "NotFiniteDimensional",
    "ParseError",
    "QQ",
    "Quiver",
    "build_algebra",
    "format_algebra",
    "load_algebra",
    "parse_algebra",
]
