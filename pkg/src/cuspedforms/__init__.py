"""Combinatorial volume-form quasi-cocycles on the cusped graph of
F(a,b) x| Z relative to its peripheral Z^2, in exact rational arithmetic."""

from .config import RunConfig
from .errors import CuspedFormsError
from .fill import FillEngine, FillResult
from .graph import CuspedGraph, Vertex, parse_vertex
from .moebius import Hyperbolization, OrientationCocycle
from .quasicocycle import QuasiCocycle
from .words import Automorphism, DEFAULT_PSI, GroupElem

__all__ = [
    "Automorphism", "CuspedFormsError", "CuspedGraph", "DEFAULT_PSI",
    "FillEngine", "FillResult", "GroupElem", "Hyperbolization",
    "OrientationCocycle", "QuasiCocycle", "RunConfig", "Vertex",
    "parse_vertex",
]

__version__ = "0.1.0"
