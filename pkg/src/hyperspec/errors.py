"""Exception hierarchy shared by all modules."""


class HyperspecError(Exception):
    """Base class for every error raised by hyperspec."""


class InvalidHypergraph(HyperspecError, ValueError):
    pass


class EdgeTooSmall(InvalidHypergraph):
    pass


class VertexOutOfRange(InvalidHypergraph):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class Disconnected(HyperspecError, ValueError):
    pass


class ScaleExceeded(HyperspecError, ValueError):
    pass


class BudgetExceeded(HyperspecError, RuntimeError):
    pass


class AlphaOutOfRange(HyperspecError, ValueError):
    pass


class ZeroVector(HyperspecError, ValueError):
    pass


class NoConvergence(HyperspecError, RuntimeError):
    pass


class BadParameters(HyperspecError, ValueError):
    def __init__(self, tag, reason):
        super().__init__(f"{tag}: {reason}")
        self.tag = tag
        self.reason = reason


class UncoveredClass(HyperspecError, ValueError):
    pass


class PreconditionViolated(HyperspecError, ValueError):
    pass


class NotTwoUniform(PreconditionViolated):
    pass


class NoSuchEdge(PreconditionViolated):
    pass


class NoValidInstanceFound(HyperspecError, RuntimeError):
    pass
