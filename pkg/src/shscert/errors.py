"""Exception hierarchy shared by all shscert modules."""


class ShscertError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShscertError):
    """Input lies outside the mathematical domain of an operation."""


class ParameterError(ShscertError):
    """A construction parameter violates its stated constraints."""


class ConstructionError(ShscertError):
    """A derived object failed its own construction-time invariants."""


class SymmetryError(ShscertError):
    """A half-integer cover was requested over a non-symmetric base."""


class IntegrationError(ShscertError):
    """The ODE solver failed; ``partial`` carries the trajectory so far.

    ``partial`` is a tuple ``(ts, ys)`` of whatever the solver produced
    before giving up (may be empty arrays).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class SectionError(ShscertError):
    """A return-map start point does not sit on the section, or crosses
    it in the wrong direction (including tangentially)."""


class NoReturnError(ShscertError):
    """A trajectory failed to re-cross the section within max-time.

    Signals a start on a stable separatrix or inside the eye.  ``point``
    is the offending start, ``last`` the final integrated state.
    """

    def __init__(self, message, point=None, last=None):
        super().__init__(message)
        self.point = point
        self.last = last


class EyeError(ShscertError):
    """Separatrix continuation failed to close up an eye boundary."""


class AssemblyError(ShscertError):
    """Radial profiles cannot be assembled into a valid structure."""


class GluingError(ShscertError):
    """Surgery gluing refused; ``profiles`` carries the two mismatching
    slope profiles as ``(r, interior, exterior)`` arrays."""

    def __init__(self, message, profiles=None):
        super().__init__(message)
        self.profiles = profiles


class DegenerateReturnError(ShscertError):
    """A linearized return map has |trace| = 2 within tolerance and is
    refused classification."""


class BadOrbitError(ShscertError):
    """A generator word mentions a bad orbit (even cover of a negative
    hyperbolic orbit); these are excluded from the algebra."""


class PartitionError(ShscertError):
    """A position partition is not a partition of the word's factors."""


class SizeCapError(ShscertError):
    """Brute-force enumeration refused: instance exceeds the size cap."""


class ConfigError(ShscertError):
    """An experiment configuration contains unknown or invalid keys."""
