"""Exception hierarchy shared by all modules."""


class MomentsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(MomentsError, ValueError):
    """An argument lies outside the domain an operation supports."""


class PoleError(DomainError):
    """A Gamma-function argument is a nonpositive integer."""


class ConvergenceError(MomentsError, ArithmeticError):
    """A series did not reach its tolerance within the term budget."""


class OrderOutOfRangeError(DomainError):
    """The moment order is not strictly greater than -1."""


class InvalidPathError(DomainError):
    """The requested formula path cannot evaluate the given query."""


class ToleranceNotMetError(MomentsError, ArithmeticError):
    """Adaptive quadrature exhausted its subdivision budget.

    The best estimate reached so far is kept on the exception so that callers
    can report it instead of fabricating a value.
    """

    def __init__(self, message, value=None, error=None):
        super().__init__(message)
        self.value = value
        self.error = error
