class FlatcheckError(Exception):
    """Base class for all errors raised by flatcheck."""


class InputError(FlatcheckError, ValueError):
    """Malformed input. ``field`` names the offending part when known."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field


class RingConstructionError(InputError):
    pass


class InfiniteRingError(FlatcheckError):
    """An operation that needs element enumeration was given a seq ring."""


class UnsupportedIdealError(FlatcheckError):
    """A finite-support ideal reached an operation that needs generators."""


class NoIdempotentGenerator(FlatcheckError):
    """The ideal is not generated by an idempotent element."""


class NotFlat(FlatcheckError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotLocalError(FlatcheckError):
    """Raised for local-only operations; decompose the ring first."""


class PreconditionError(FlatcheckError):
    pass


class DependentImagesError(PreconditionError):
    """The residue images of a candidate subset are linearly dependent."""
