"""Exception types raised by the geometry and routing layers."""


class DimensionMismatchError(ValueError):
    """Binary vector operation applied to vectors of different lengths."""


class DegenerateVectorError(ValueError):
    """Normalization requested for a vector with near-zero norm."""


class AnchorSingularityError(ValueError):
    """Operation evaluated at (or too close to) an anchor position."""


class DegenerateBasisError(ValueError):
    """Neighbor coordinate differences are collinear; no tangent basis."""


class InsufficientNeighborsError(ValueError):
    """Fewer than two neighbors available for basis construction."""


class RankDeficientError(ValueError):
    """Pseudoinverse norm requested for a rank-1 distance Jacobian."""


class InfeasibleDensityError(RuntimeError):
    """Node placement rejection sampling exceeded its attempt budget."""
