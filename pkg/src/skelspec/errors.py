"""Exception hierarchy for skelspec.

Each class maps to one failure category named in the library contracts, so
callers (including the CLI) can translate failures into exit codes without
string matching.
"""


class SkelspecError(Exception):
    """Base class for all library errors."""


class TopologyError(SkelspecError):
    """Invalid skeleton topology (bad edge indices, duplicate edges, ...)."""


class ShapeError(SkelspecError):
    """Array dimensions or basis pairing do not match the operation."""


class NumericError(SkelspecError):
    """Numerical failure: eigensolver non-convergence, excess imaginary residue."""


class ParameterError(SkelspecError):
    """Out-of-range or inconsistent user parameter."""


class DataError(SkelspecError):
    """Dataset-level problem: empty set, missing labels, degenerate geometry."""


class ParseError(SkelspecError):
    """Malformed input file. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class FormatError(SkelspecError):
    """Artifact file does not match the expected schema."""


class BridgeError(SkelspecError):
    """External classifier bridge failure: handshake, protocol, process exit."""


class CapabilityError(SkelspecError):
    """Model lacks a required capability (e.g. input gradients for PGD)."""
