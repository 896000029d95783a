"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is defined."""


class DirectionDegenerateError(DomainError):
    """The direction e^{it} is purely imaginary, so cos t vanishes."""


class DegenerateRegionError(ValueError):
    """A boundary was requested for a region that collapses to a point."""


class DegenerateExponentError(DomainError):
    """A power-deformation exponent with zero real part."""


class TangencyNotFoundError(RuntimeError):
    """The common tangent solver failed to bracket or converge."""


class QuadratureFailure(RuntimeError):
    """Panel doubling did not converge within the allowed number of steps."""
