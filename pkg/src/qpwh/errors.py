"""Exception types shared across the package."""


class QPWHError(Exception):
    """Base class for all package errors."""


class BranchPointHit(QPWHError):
    """Evaluation point is too close to a branch point of a multivalued function."""


class SingularLocus(QPWHError):
    """Evaluation point lies on (or too close to) the singular set of the kernel."""


class BranchTrackingError(QPWHError):
    """A continuity-tracked branch evaluation could not resolve the sheet
    (step too large, or the tracking path crossed a cut)."""


class RegionMismatch(QPWHError):
    """A continuation formula was requested outside its region of validity."""


class PoleProximity(QPWHError):
    """Evaluation requested too close to a polar set; use residue extraction instead."""


class NoConvergence(QPWHError):
    """An iterative solve or adaptive quadrature exhausted its budget."""

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = list(history) if history is not None else []


class SingularityOnContour(QPWHError):
    """The integrand blows up at an interior contour point."""


class InnerFailure(QPWHError):
    """Inner integral of an iterated quadrature failed; carries the outer
    node at which it happened."""

    def __init__(self, message, outer_node):
        super().__init__(message)
        self.outer_node = outer_node


class DecayError(QPWHError):
    """An integrand decays too slowly along an unbounded contour for the
    requested operation."""


class ConfigError(QPWHError):
    """Scenario configuration failed validation."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field
