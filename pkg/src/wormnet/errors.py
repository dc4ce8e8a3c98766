"""Exception types raised deliberately anywhere in the package.

Everything here derives from :class:`WormnetError`, so callers (and the CLI)
can distinguish "bad input data" from genuine bugs.
"""


class WormnetError(Exception):
    """Base class for all errors this package raises on purpose."""


# --------------------------------------------------------------------------
# connectome parsing

class ParseError(WormnetError):
    """Problem in an input CSV; carries the 1-based physical line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownNeuronClass(ParseError):
    pass


class DanglingEdge(ParseError):
    """A synapse row references a neuron id that was never declared."""


class MalformedRow(ParseError):
    """Wrong column count, non-numeric weight, duplicate id, or similar."""


# --------------------------------------------------------------------------
# graph analysis

class GraphTooSmall(WormnetError):
    pass


class NoConnectedPairs(WormnetError):
    pass


class TooFewEdges(WormnetError):
    pass


class DegenerateReference(WormnetError):
    """Random reference graphs produced unusable baseline statistics."""


# --------------------------------------------------------------------------
# graph generators

class InvalidSpec(WormnetError):
    """A generator or architecture spec violates one of its constraints."""


class CannotMatch(WormnetError):
    """No legal parameterization reaches the reference edge count."""


class SizeMismatch(WormnetError):
    pass


# --------------------------------------------------------------------------
# compiler

class NoSensors(WormnetError):
    pass


class NoMotors(WormnetError):
    pass


class NoMotorReachable(WormnetError):
    """Every motor neuron was dropped as unreachable during compilation."""


class SchemaViolation(WormnetError):
    """Serialized architecture spec does not match the expected schema."""


# --------------------------------------------------------------------------
# tensor engine

class ShapeMismatch(WormnetError):
    pass


class StaleTape(WormnetError):
    """Backward called on a tape whose forward state is no longer valid."""


class CheckpointError(WormnetError):
    """Parameter checkpoint file is corrupt or has the wrong magic."""


# --------------------------------------------------------------------------
# datasets and training

class BadMagic(WormnetError):
    pass


class CountMismatch(WormnetError):
    pass


class Truncated(WormnetError):
    pass


class LabelOutOfRange(WormnetError):
    pass


class WidthMismatch(WormnetError):
    pass


class IndivisibleImage(WormnetError):
    pass


class TaskMismatch(WormnetError):
    pass


class DegenerateLatents(WormnetError):
    pass


class KTooLarge(WormnetError):
    pass


class NonSquare(WormnetError):
    pass


class NonFinite(WormnetError):
    pass
