"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed literal; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        self.message = message
        where = f" at position {pos}: {text!r}" if text else ""
        super().__init__(message + where)


class ValidationError(ValueError):
    """Well-formed input describing an invalid object (e.g. non-squarefree d)."""


class AllGeneratorsZero(ValueError):
    pass


class NormBoundExceeded(ValueError):
    pass


class NonInvertiblePrime(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class NotPseudoDedekind(RuntimeError):
    pass


class PreconditionViolated(ValueError):
    pass
