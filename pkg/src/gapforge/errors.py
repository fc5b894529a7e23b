"""Exception types shared across the package."""

from __future__ import annotations


class GapforgeError(Exception):
    """Base class for all gapforge errors."""


class StatementSyntaxError(GapforgeError, ValueError):
    """Malformed statement text. ``offset`` is the byte offset of the failure."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class ProofSyntaxError(GapforgeError, ValueError):
    """Malformed proof text. ``line_no`` is the 1-based offending line."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"{message} (line {line_no})")
        self.line_no = line_no


class DecodeError(GapforgeError, ValueError):
    """Malformed machine encoding. ``offset`` is the character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


class UnknownSystemError(GapforgeError, KeyError):
    """Requested formal-system id is not registered."""


class UnknownMachineError(GapforgeError, KeyError):
    """Machine description resolves neither to a registered name nor an encoding."""


class TermsFormatError(GapforgeError, ValueError):
    """Local-term-set document is malformed or fails its canonical hash."""


class CapacityError(GapforgeError):
    """Compiled local dimension would exceed the configured cap."""


class SizeError(GapforgeError):
    """Requested Hilbert-space dimension exceeds the memory budget."""


class ConvergenceError(GapforgeError):
    """Iterative eigensolver failed its residual certificate."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class InsufficientDataError(GapforgeError):
    """Gap report does not cover enough sizes to classify."""


class ConfigError(GapforgeError):
    """Invalid pipeline or classifier configuration."""
