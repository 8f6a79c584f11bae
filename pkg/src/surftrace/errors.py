"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for all surftrace errors."""


class OutOfDomainError(GeometryError):
    """Parameter point lies outside the chart's rectangular domain."""


class SingularJetError(GeometryError):
    """The chart is not regular at the requested point (X_t x X_z ~ 0)."""


class UmbilicPointError(GeometryError):
    """Principal directions are undefined (kappa1 == kappa2)."""


class NonTangentDirectionError(GeometryError):
    """A supposedly tangent vector has a normal component."""


class DegenerateParameterError(GeometryError):
    """A surface-family parameter is outside its admissible range."""


class NonUnitSpeedError(GeometryError):
    """Curve samples are not arc-length parametrized."""


class VanishingCurvatureError(GeometryError):
    """Torsion (or a helix axis) is undefined because kappa ~ 0."""


class TooFewSamplesError(GeometryError):
    """A statistic needs more samples than were provided."""


class UmbilicEncounteredError(GeometryError):
    """An isogonal trace was started at (or ran into) an umbilic point."""


class SingularDecompositionError(GeometryError):
    """The 2x2 tangent-decomposition system is singular; upstream bug."""


class NonOrthogonalChartError(GeometryError):
    """Pseudo-geodesic tracing requires an orthogonal (F = 0) chart."""


class ThetaOutOfRangeError(GeometryError):
    """Pseudo-geodesic angle must satisfy |theta| < pi/2."""


class BoundaryExitError(GeometryError):
    """A trace left the chart domain before reaching the requested parameter."""


class PreimageMismatchError(GeometryError):
    """Chart preimages of a shared curve do not reproduce its points."""


class TangencyError(GeometryError):
    """Two surfaces are tangent along the curve; the frame angle is undefined."""


class UnknownFixtureError(GeometryError):
    """Requested intersection fixture name is not in the catalogue."""
