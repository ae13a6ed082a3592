"""Exception hierarchy shared by all gcrystal modules.

Domain errors (bad input, failed preconditions) derive from DomainError;
precision exhaustion derives from PrecisionError.  The CLI maps these to
exit codes 2 and 3 respectively.
"""


class GCrystalError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GCrystalError):
    """Input violates a documented precondition."""


class PrecisionError(GCrystalError):
    """Requested result is not determined at the working precision."""


class InvalidParams(DomainError):
    pass


class ParseError(DomainError):
    pass


class NotDominant(DomainError):
    pass


class NotIntegral(DomainError):
    pass


class NotInGroup(DomainError):
    pass


class NotInDoubleCoset(DomainError):
    pass


class NotOrdinary(DomainError):
    pass


class NotNormalForm(DomainError):
    pass


class NotLiftOfF(DomainError):
    pass


class NotAdapted(DomainError):
    pass


class DifferentFibers(DomainError):
    pass


class BadIndices(DomainError):
    pass


class BigCellFailure(DomainError):
    """Residue of the K-part never reached the big cell.

    Carries the list of corrective moves that were attempted.
    """

    def __init__(self, msg, attempted=()):
        super().__init__(msg)
        self.attempted = tuple(attempted)


class ExtensionBudgetExceeded(DomainError):
    pass


class PrecisionLoss(PrecisionError):
    pass
