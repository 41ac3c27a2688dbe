"""Exception hierarchy for bchwork."""


class BCHError(Exception):
    """Base class for every error raised by this package."""


class NotPrime(BCHError, ValueError):
    pass


class CapExceeded(BCHError, ValueError):
    pass


class FieldMismatch(BCHError, ValueError):
    pass


class NotASubfield(BCHError, ValueError):
    pass


class FieldDivisionByZero(BCHError, ZeroDivisionError):
    pass


class OutOfRange(BCHError, ValueError):
    pass


class UnsupportedM(BCHError, ValueError):
    pass


class KTooLarge(BCHError, ValueError):
    pass


class DeltaOutOfRange(BCHError, ValueError):
    pass


class LengthMismatch(BCHError, ValueError):
    pass


class BudgetExceeded(BCHError, RuntimeError):
    def __init__(self, required, budget, what="enumeration"):
        self.required = required
        self.budget = budget
        super().__init__(
            f"{what} needs {required} symbol-operations, budget is {budget}; "
            "raise the budget to run it"
        )


class EvenQ(BCHError, ValueError):
    pass


class EvenM(BCHError, ValueError):
    pass


class SingularSystem(BCHError, ValueError):
    pass


class NonIntegerSolution(BCHError, ValueError):
    pass


class MalformedReference(BCHError, ValueError):
    pass
