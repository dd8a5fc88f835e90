"""Exception types shared across the package."""


class CasimirPolderError(Exception):
    """Base class for all cpmirror errors."""


class InputError(CasimirPolderError):
    """Malformed user input: bad config document, bad tensor, bad sweep axis."""


class GeometryError(CasimirPolderError):
    """Geometrically impossible or degenerate configuration."""


class QuadratureError(CasimirPolderError):
    """Adaptive quadrature did not converge within its subdivision budget.

    ``partial`` holds the best estimate reached when the budget ran out,
    so callers can inspect how far the integration got.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
