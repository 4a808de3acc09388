"""Error types shared by every module."""


class DomainError(ValueError):
    """An argument is outside the documented domain of an operation."""


class ResourceError(RuntimeError):
    """A request would exceed the configured memory budget.

    Carries the estimate so callers can report how much would be needed.
    """

    def __init__(self, message: str, required_bytes: int | None = None,
                 budget_bytes: int | None = None):
        super().__init__(message)
        self.required_bytes = required_bytes
        self.budget_bytes = budget_bytes
