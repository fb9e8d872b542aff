"""Exact q-Stirling numbers of both kinds, computed several independent ways."""
from .exactmath import ONE, Q, ZERO, NonExactDivisionError, QPoly, QRational, XQPoly, qint
from .enumeration import BoundExceededError, s1_enum, s2_enum
from .formulas import identity_first, identity_second, s1, s1_closed, s2, s2_closed
from .paths import s1_scaled_via_schroder, s1_via_tfraction, s2_via_jfraction
from .qcomb import coeff_A, coeff_B, qbinom

__all__ = [
    "ONE", "Q", "ZERO", "NonExactDivisionError", "QPoly", "QRational", "XQPoly", "qint",
    "BoundExceededError", "s1_enum", "s2_enum", "identity_first", "identity_second",
    "s1", "s1_closed", "s2", "s2_closed", "s1_scaled_via_schroder", "s1_via_tfraction",
    "s2_via_jfraction", "coeff_A", "coeff_B", "qbinom",
]
