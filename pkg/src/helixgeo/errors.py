"""Exception types shared across the package."""


class HelixGeoError(Exception):
    """Base class for all helixgeo errors."""


class DomainError(HelixGeoError, ValueError):
    """Input outside the admissible domain (bad point, parameter, or s value)."""


class ParameterError(DomainError):
    """A generator or CLI parameter violates its stated invariant."""


class NotUnitSpeedError(HelixGeoError):
    """Frame computation requested on a curve that is not unit speed at s."""


class GeodesicPointError(HelixGeoError):
    """Curvature below threshold: normal, binormal and torsion are undefined."""
