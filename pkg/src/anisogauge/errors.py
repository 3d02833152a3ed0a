"""Exception types shared across the package.

The CLI maps ExistenceViolated to exit code 2 and BoundExceeded to exit
code 3; everything else is a usage or programming error.
"""


class AnisogaugeError(ValueError):
    """Base class for all package errors."""


class NotPrime(AnisogaugeError):
    """A parameter that must be prime is not."""


class BoundExceeded(AnisogaugeError):
    """A size parameter exceeds the configured bound."""


class NoSuchElement(AnisogaugeError):
    """No field element satisfies the requested constraints."""


class UnsupportedKind(AnisogaugeError):
    """Operation not defined for this kind of quadratic space."""


class EvenCharacteristic(AnisogaugeError):
    """Operation requires odd characteristic (needs division by 2)."""


class NotNormOne(AnisogaugeError):
    """Rotation coefficient must lie in the norm-one subgroup."""


class ExistenceViolated(AnisogaugeError):
    """The divisibility condition for the construction fails."""


class BetaSingular(AnisogaugeError):
    """The off-diagonal block of the split map is not invertible."""


class ZeroEigenvalue(AnisogaugeError):
    """An eigenvalue vanishes, so the eigenvalue ratio is undefined."""


class NotACharacter(AnisogaugeError):
    """No consistent positive character exists for the fusion ring."""


class BadParameter(AnisogaugeError):
    """A parameter is outside the documented domain."""
