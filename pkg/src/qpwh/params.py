"""Physical problem parameters.

The scatterer is the quarter-plane x3 = 0, x1 > 0, x2 > 0 with Dirichlet
conditions, immersed in a slightly absorbing medium: the wavenumber obeys
k^2 = 1 + i*eps with eps > 0.  The incident plane wave is
exp{i(k1*x1 + k2*x2 - sqrt(k^2-k1^2-k2^2)*x3)} with Re(k1,2) > 0 and
Im(k1,2) > 0.

The strip half-width kappa controls every shifted-line contour used by the
analytic-continuation formulas.  It is derived, never user-set:

    kappa = (1/4) * min(eps/2, Im k1, Im k2)

which guarantees that the boundary data decays at least like
exp(-4*kappa*sqrt(x1^2+x2^2)), so the spectral functions are analytic in
Im(xi) > -2*kappa in each variable.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

from .errors import ConfigError


@dataclass(frozen=True)
class ProblemParams:
    """Wavenumbers and derived strip geometry for one scattering scenario."""

    eps: float
    k1: complex
    k2: complex
    k: complex = field(init=False)
    kappa: float = field(init=False)

    def __post_init__(self):
        if self.eps <= 0:
            raise ConfigError("eps must be positive", field="eps")
        for name in ("k1", "k2"):
            val = getattr(self, name)
            if val.real <= 0:
                raise ConfigError(f"Re({name}) must be positive", field=name)
            if val.imag <= 0:
                raise ConfigError(f"Im({name}) must be positive", field=name)
        object.__setattr__(self, "k", cmath.sqrt(1.0 + 1j * self.eps))
        kappa = 0.25 * min(self.eps / 2.0, self.k1.imag, self.k2.imag)
        object.__setattr__(self, "kappa", kappa)

    @property
    def k2sq(self) -> complex:
        """k squared, i.e. 1 + i*eps."""
        return 1.0 + 1j * self.eps

    def as_dict(self) -> dict:
        return {
            "eps": self.eps,
            "k1": [self.k1.real, self.k1.imag],
            "k2": [self.k2.real, self.k2.imag],
            "k": [self.k.real, self.k.imag],
            "kappa": self.kappa,
        }


def default_params() -> ProblemParams:
    """Small-absorption parameters used by pointwise identity tests."""
    return ProblemParams(eps=1e-2, k1=0.8 + 0.01j, k2=0.6 + 0.012j)


def desk_params() -> ProblemParams:
    """Well-separated parameters for quadrature-heavy runs.

    The absorption is deliberately large so that the singular loci (the cut
    curves, the complexified circle and the incidence poles) are separated
    from the integration contours on a scale resolvable with 64-128 nodes
    per axis.  All verified properties are uniform in eps.
    """
    return ProblemParams(eps=2.5, k1=0.8 + 1.25j, k2=0.7 + 1.25j)
