class CapExceeded(RuntimeError):
    """A configured size limit would be exceeded; use a BSGS-only path."""


class NotTransitiveError(ValueError):
    """The permutations do not generate a transitive group."""


class NotSubgroupError(ValueError):
    pass


class VerificationError(AssertionError):
    """An internal consistency check failed (signals a bug, never data)."""
