"""gcrystal: exact invariants, normal forms and deformation arithmetic
for F-crystals with G-structure over truncated Witt vectors."""

from .errors import (
    BadIndices,
    BigCellFailure,
    DifferentFibers,
    DomainError,
    ExtensionBudgetExceeded,
    GCrystalError,
    InvalidParams,
    NotAdapted,
    NotDominant,
    NotInDoubleCoset,
    NotInGroup,
    NotIntegral,
    NotLiftOfF,
    NotNormalForm,
    NotOrdinary,
    ParseError,
    PrecisionError,
    PrecisionLoss,
)
from .witt import (
    LaurentElem,
    WittElem,
    WittRing,
    frobenius,
    make_ring,
    solve_sigma_linear,
    teichmuller,
)

__version__ = "0.1.0"
