"""Tail-index estimation and diagnostics with the lambda(p) inequality curve."""

from ._lambdatail import *  # noqa: F401,F403
from ._lambdatail import (  # noqa: F401
    DataError,
    DegenerateCurveError,
    DegenerateSampleError,
    DomainError,
    InfiniteMeanError,
    NumericDegeneracyError,
    UnsupportedFamilyError,
)

__version__ = "0.1.0"
