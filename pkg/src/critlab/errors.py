"""Exception types shared across the library."""


class CritlabError(Exception):
    """Base class for all library errors."""


class UsageError(CritlabError):
    """The caller violated an operation's contract (bad arguments, stale state)."""


class Graph6Error(UsageError):
    """Malformed graph6 input.  Carries the byte offset of the offending character."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class HypothesisError(UsageError):
    """An instance fails the hypotheses a derivation needs; reported, not a crash."""


class FalsificationError(CritlabError):
    """A verified claim failed on a valid instance.

    Carries a JSON-serializable counterexample bundle so the event can be
    reproduced from the report alone.
    """

    def __init__(self, message, bundle):
        super().__init__(message)
        self.bundle = bundle
