"""Exception types raised across the package."""


class AlloyscopeError(Exception):
    """Base class for all alloyscope errors."""


class ConfigError(AlloyscopeError):
    """Invalid experiment configuration or violated precondition."""


class EmptyPlateau(AlloyscopeError):
    """No source site covers the box with a constant plateau value."""


class BadRadius(AlloyscopeError):
    """Layer radius too small for the requested box."""


class SingularOrigin(AlloyscopeError):
    """Kernel evaluated at the origin where it is singular."""


class NotSubset(AlloyscopeError):
    """Requested point set is not contained in the sampled window."""


class WindowTooSmall(AlloyscopeError):
    """Configuration window does not cover the required source set."""


class SourceTooClose(AlloyscopeError):
    """Source site violates the minimum distance to the box."""


class OrthantViolation(AlloyscopeError):
    """Box or source set leaves its designated orthant."""


class LayerViolation(AlloyscopeError):
    """Source site fails the sector condition of a max-norm layer."""


class InsufficientDecay(AlloyscopeError):
    """Too few strictly decaying samples to fit a decay law."""


class NotIntegrable(AlloyscopeError):
    """Characteristic function does not decay enough for inversion."""


class ShapeMismatch(AlloyscopeError):
    """Operands defined on different boxes or of incompatible sizes."""


class NoConvergence(AlloyscopeError):
    """Eigensolver failed to reach the certified residual."""


class FactorizationDomainViolation(AlloyscopeError):
    """Sources outside the domain where the scalar-shift factorization holds."""


class NegativityViolation(AlloyscopeError):
    """Signed kernel or marginal supplied where nonnegativity is required."""


class HypothesisViolation(AlloyscopeError):
    """Measured parameters fall outside a lemma's hypothesis range."""


class TooClose(AlloyscopeError):
    """Boxes too close for the comparison estimate geometry."""


class DegenerateDirection(AlloyscopeError):
    """Observation direction orthogonal to the source axis."""
