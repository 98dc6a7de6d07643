"""Exception types raised across the package."""


class ArgumentOutOfRange(ValueError):
    """An argument lies outside the domain where the operation is defined."""


class BudgetExceeded(RuntimeError):
    """A series hit its term budget before its tail bound met the tolerance."""


class NotUnitModulus(ValueError):
    """A rotation factor (epsilon, beta) is not on the unit circle."""


class NotConvexWeights(ValueError):
    """Combination weights are negative or do not sum to one."""


class BracketFailure(RuntimeError):
    """No sign change was found for a root below the admissible radius cap."""


class CoefficientFileError(ValueError):
    """A coefficient CSV file is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
