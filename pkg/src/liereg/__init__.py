"""Exact computer algebra for free Lie algebras, their duals, and Kac-Moody modules."""

from . import cli, duals, grp, jsonio, kacmoody, linalg, reps, words
from .duals import FiniteFunctional, MatrixCoefficient
from .grp import GroupWord, OneParamFactor, RegularFunction
from .kacmoody import GCM, IrrTrunc, KMFactor, TruncVector, validate_gcm
from .reps import RepSpec
from .words import Alphabet, NcPoly

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "NcPoly",
    "RepSpec",
    "FiniteFunctional",
    "MatrixCoefficient",
    "OneParamFactor",
    "GroupWord",
    "RegularFunction",
    "GCM",
    "IrrTrunc",
    "KMFactor",
    "TruncVector",
    "validate_gcm",
    "cli",
    "duals",
    "grp",
    "jsonio",
    "kacmoody",
    "linalg",
    "reps",
    "words",
    "__version__",
]
