"""Skein-relation engines and twist-family calculus for HOMFLYPT."""

from .core import IMPLEMENTATION
from .diagram import Diagram, TwistRegion, parse_pd
from .poly import FamilyPoly, HomflyPoly, LaurentPoly

__version__ = "0.1.0"

__all__ = [
    "IMPLEMENTATION",
    "Diagram",
    "TwistRegion",
    "parse_pd",
    "FamilyPoly",
    "HomflyPoly",
    "LaurentPoly",
    "__version__",
]
