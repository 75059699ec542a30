"""Executable abelian-category checks over finitely presented modules."""

from .core import (AbelianCategory, BiproductData, Mor, QuotientObject, SequenceSpec,
                   SubObject)
from .errors import (AbelcatError, DomainMismatch, ShapeError, RingMismatch,
                     WellDefinednessError, NotInvertible, EnumerationRefused, CapExceeded,
                     LiftFailed, UnsupportedGenerator, InvalidInput, VerificationFailure,
                     ParseError)
from .fpmod import FpCategory, FpModule, HomGroup, Matrix, RingSpec, snf
from .report import Report

__all__ = [
    "AbelcatError", "AbelianCategory", "BiproductData", "CapExceeded", "DomainMismatch",
    "EnumerationRefused", "FpCategory", "FpModule", "HomGroup", "InvalidInput",
    "LiftFailed", "Matrix", "Mor", "NotInvertible", "ParseError", "QuotientObject",
    "Report", "RingMismatch", "RingSpec", "SequenceSpec", "ShapeError", "SubObject",
    "UnsupportedGenerator", "VerificationFailure", "WellDefinednessError", "snf",
]
