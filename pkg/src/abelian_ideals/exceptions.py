"""Exception hierarchy shared by all modules."""


class AbelianIdealsError(Exception):
    """Base class for every error raised by this package."""


class RankBoundsError(AbelianIdealsError, ValueError):
    """Family letter or rank outside the supported range."""


class ResourceBoundError(AbelianIdealsError):
    """Rank above the configured cap for an expensive operation."""


class DimensionError(AbelianIdealsError, ValueError):
    """Coefficient sequences of different lengths were compared."""


class InvalidRootError(AbelianIdealsError, ValueError):
    """A coefficient sequence is not a positive root of the system."""


class AdmissibilityError(AbelianIdealsError, ValueError):
    """A generator set violates incomparability or the pair-sum condition."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InvalidAntichainError(AbelianIdealsError, ValueError):
    """Index lists do not describe a type A antichain."""


class UnsupportedTypeError(AbelianIdealsError, ValueError):
    """Operation is not defined for this Lie type."""


class ArithmeticCapacityError(AbelianIdealsError, OverflowError):
    """A coefficient left the signed 64-bit range."""
