"""Exception types raised by the solver stack.

Unphysical values are never silently floored or clipped anywhere in the
package; they always surface as one of these exceptions.
"""


class SolverError(Exception):
    """Base class for all errors raised by symfv."""


class NonPositiveDensity(SolverError):
    """Density <= 0 encountered where a positive density is required."""


class NonPositivePressure(SolverError):
    """Pressure <= 0 recovered from a conserved state."""


class ImaginarySoundSpeed(SolverError):
    """Squared sound speed <= 0 while building a characteristic frame."""


class DegenerateWaveFan(SolverError):
    """An intermediate HLLC state is requested for a zero-width wave fan."""


class WindowTooSmall(SolverError):
    """A reconstruction window does not contain the required stencil."""


class ShapeMismatch(SolverError):
    """Grid shape is incompatible with the requested operation."""


class MalformedDump(SolverError):
    """A dump file has a bad magic tag, header, or payload size."""


class UnphysicalState(SolverError):
    """A time step produced an invalid state at some cell.

    Carries the interior cell index ``(i, j)`` when known.
    """

    def __init__(self, message, i=None, j=None):
        super().__init__(message)
        self.i = i
        self.j = j
