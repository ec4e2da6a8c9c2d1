"""Error taxonomy: invalid mathematical input vs exceeded resource budget."""


class DomainError(ValueError):
    """The input is outside the mathematical domain of the operation."""


class CapExceeded(RuntimeError):
    """The computation would exceed a configured resource cap."""
