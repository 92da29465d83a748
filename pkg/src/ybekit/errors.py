"""Exception hierarchy shared by all modules."""


class YbeError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(YbeError):
    pass


class SingularMatrix(YbeError):
    pass


class NotAssociative(YbeError):
    pass


class NotUnital(YbeError):
    pass


class NotInvariant(YbeError):
    pass


class NotSymmetric(YbeError):
    pass


class Degenerate(YbeError):
    pass


class NotInvariantForm(YbeError):
    pass


class NotSymmetricForm(YbeError):
    pass


class InvalidAugmentation(YbeError):
    pass


class NotDendriform(YbeError):
    pass


class UndefinedProduct(YbeError):
    """Raised when a partially defined dendriform product is evaluated
    outside its domain (unit in both slots)."""


class PreconditionViolated(YbeError):
    """A stated hypothesis of a construction does not hold.

    Carries the name of the violated equation and, when available, a
    witness of the defect.
    """

    def __init__(self, equation, witness=None):
        super().__init__(equation)
        self.equation = equation
        self.witness = witness


class UnknownName(YbeError):
    pass


class ZeroMu(YbeError):
    pass


class BudgetExceeded(YbeError):
    pass
