"""Exception types shared across the package."""


class GenericityError(RuntimeError):
    """Random choices failed verification more often than the retry budget allows."""


class InvariantViolation(AssertionError):
    """A state that the underlying theorems rule out; always an implementation bug."""
