"""Exception hierarchy shared by every packpaint module."""


class PackpaintError(Exception):
    """Base class for all errors raised by the toolkit."""


class GraphError(PackpaintError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class NotAPermutation(GraphError):
    pass


class ParseError(PackpaintError):
    """Malformed serialized input; the message carries the line or offset."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScaleExceeded(PackpaintError):
    """A soft size cap was hit (raise it with PACKPAINT_SCALE_CAP)."""


class EmptyGraph(PackpaintError):
    pass


class InvalidSpec(PackpaintError):
    pass


class ClassOutOfRange(PackpaintError):
    pass


class InconsistentForcing(PackpaintError):
    pass


class UnknownColor(PackpaintError):
    pass


class InvalidCycleLength(PackpaintError):
    pass


class GadgetUnavailable(PackpaintError):
    pass


class PreconditionViolated(PackpaintError):
    """A structural fact the theory guarantees did not hold on this input."""


class BadPartialColoring(PackpaintError):
    pass


class SiteMismatch(PackpaintError):
    pass


class InconsistentProfile(PackpaintError):
    pass


class UnknownClaimId(PackpaintError):
    pass
