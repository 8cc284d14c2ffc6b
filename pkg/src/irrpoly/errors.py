"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotPrimePower(DomainError):
    """The supplied field order is not a prime power."""


class CapacityError(RuntimeError):
    """A computation would exceed a configured size cap."""
