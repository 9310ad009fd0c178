"""Exception types shared across the toolkit."""


class UnimarkError(Exception):
    """Base class for all unimark errors."""


class MessageTooLong(UnimarkError):
    """The text has fewer embeddable whitespace slots than the message needs."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f"message needs {needed} whitespace slot(s), text has {available}"
        )


class InsufficientPositions(UnimarkError):
    """The text has fewer readable positions than the requested bit count."""

    def __init__(self, needed: int, available: int):
        self.needed = needed
        self.available = available
        super().__init__(
            f"requested {needed} bit position(s), text has {available}"
        )


class BlockLengthError(UnimarkError):
    """Bit string length is not a multiple of the codec block size."""


class DecodeFailure(UnimarkError):
    """Extraction could not recover a trustworthy payload."""


class UndefinedConditional(UnimarkError):
    """Posterior requested at a point the watermarked text never reaches."""


class SetupInvalid(UnimarkError):
    """An erasure-experiment setup violates one of the required conditions.

    ``condition`` is a stable code naming the violated requirement:
    ``metric``, ``distribution``, ``structure``, ``lipschitz``,
    ``loss_excess``, ``natural_detect``, ``detect_reliability`` or
    ``metric_closeness``.
    """

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"[{condition}] {message}")


class FormatError(UnimarkError):
    """Malformed input file; ``line`` is 1-based when applicable."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
