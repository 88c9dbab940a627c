"""Exception types shared across the package.

Every error raised by the library derives from ArcPlateError so callers can
catch the whole family; each also derives from the closest builtin so code
that only knows the stdlib hierarchy still behaves sensibly.
"""


class ArcPlateError(Exception):
    """Base class for all library errors."""


class InvalidIntervalError(ArcPlateError, ValueError):
    """Integration bounds are reversed or non-finite."""


class NonConvergenceError(ArcPlateError, RuntimeError):
    """Adaptive refinement exhausted max subdivisions without meeting tolerance."""


class OutOfSpanError(ArcPlateError, ValueError):
    """Transverse coordinate lies outside the arc's half-span."""


class ContactViolationError(ArcPlateError, ValueError):
    """The arc touches or penetrates the plate (separation <= 0 somewhere)."""


class NonPositiveGapError(ArcPlateError, ValueError):
    """A gap or plate separation that must be > 0 is not."""


class PfaViolationError(ArcPlateError, ValueError):
    """gap/radius ratio outside the regime the proximity approximation allows."""


class NonPositiveThicknessError(ArcPlateError, ValueError):
    """Membrane thickness must be > 0."""


class NonNegativeEnergyError(ArcPlateError, ValueError):
    """An attractive (negative) interaction energy was required."""


class ZeroReferenceError(ArcPlateError, ValueError):
    """Reference value of a relative deviation must be positive."""


class MaterialNotFoundError(ArcPlateError, LookupError):
    """Requested material name is not in the available set."""


class MaterialConfigError(ArcPlateError, ValueError):
    """A materials config file is malformed or an entry fails validation."""
