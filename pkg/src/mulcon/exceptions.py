class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """Raised when an operation is well defined but its precondition fails,
    e.g. a falling factorial that vanishes in the chosen characteristic."""
