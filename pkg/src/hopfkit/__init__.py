"""Exact verification of Hopf-algebraic constructions."""

from ._kernels import BACKEND
from .exactfield import DivisionByZero, Scalar, Tag, parse_scalar
from .reports import LawReport, Status

__version__ = "0.1.0"

__all__ = ["BACKEND", "DivisionByZero", "LawReport", "Scalar", "Status", "Tag",
           "parse_scalar", "__version__"]
