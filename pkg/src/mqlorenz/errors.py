"""Typed errors shared across the package.

Numerical failure modes get their own exception types so callers (and the
command line front end) can map them to exit codes without string matching.
"""


class BlowUpError(RuntimeError):
    """A state left the finite/bounded domain during evaluation or integration.

    Carries the last finite state and its time so callers can report where
    the run died.
    """

    def __init__(self, message, t=None, state=None):
        super().__init__(message)
        self.t = t
        self.state = state


class ZeroCoordinateError(ValueError):
    """A multiplicative operation was asked to act on a zero coordinate."""


class DegenerateFrameError(RuntimeError):
    """Orthonormalization hit a (numerically) linearly dependent frame."""
