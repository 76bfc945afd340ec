"""Exception types shared across the engine."""


class KdeformError(Exception):
    """Base class for all engine errors."""


class TruncationMismatch(KdeformError):
    """Raised when combining scalars carrying different finite truncations."""


class PresentationError(KdeformError):
    """Raised for malformed generator/relation data."""


class RewriteError(KdeformError):
    """Raised when normal ordering cannot complete (fuel or word length)."""


class ClassicalLimitError(KdeformError):
    """Raised when the h -> 0 limit does not exist for an element."""


class ClassificationError(KdeformError):
    """Raised when a commutator table cannot be processed by the classifier."""
