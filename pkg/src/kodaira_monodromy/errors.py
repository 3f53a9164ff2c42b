"""Exception types raised by the engine."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class UnresolvedError(LookupError):
    """The requested case is not settled by the encoded results."""

    def __init__(self, what: str):
        super().__init__(f"unresolved by paper: {what}")
        self.what = what


class InconsistencyError(RuntimeError):
    """An internal classification invariant failed."""


class UsageError(ValueError):
    """Bad user input to a top-level entry point."""
