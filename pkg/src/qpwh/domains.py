"""Cut curves h+- and point classification.

The cut curves are the images of the real axis under the two branches of
sqrt(k^2 - tau^2):

    h+-  =  {+-sqrt(k^2 - tau^2) : tau real}

h+ runs from +k to +i*infinity through the upper half-plane, h- is its
mirror through the lower half-plane.  H+ / H- are the open upper / lower
half-planes cut along h+ / h-, and the uncut upper half-plane is labelled
UHP.  The hook contour (label HOOK) is the two-shore traversal of h- and
coincides with h- as a point set.
"""

from __future__ import annotations

import enum

import numpy as np

from .branching import upper_root
from .params import ProblemParams

H_MEMBERSHIP_TOL = 1e-6
REAL_AXIS_TOL = 1e-9


class DomainLabel(enum.Enum):
    UHP = "uhp"            # uncut upper half-plane
    H_PLUS = "H+"          # upper half-plane cut along h+
    H_MINUS = "H-"         # lower half-plane cut along h-
    CURVE_H_PLUS = "h+"
    CURVE_H_MINUS = "h-"
    HOOK = "P"             # two-shore pass along h-, same point set as h-
    REAL_AXIS = "R"


def h_point(params: ProblemParams, tau, sign: int):
    """Point of h+ (sign=+1) or h- (sign=-1) at parameter tau >= 0."""
    tau_arr = np.asarray(tau, dtype=float)
    return sign * upper_root(params.k2sq - tau_arr * tau_arr)


def h_tangent(params: ProblemParams, tau, sign: int):
    """Unit tangent of h+- in the direction of increasing tau."""
    tau_arr = np.asarray(tau, dtype=float)
    s = upper_root(params.k2sq - tau_arr * tau_arr)
    d = sign * tau_arr / s
    mag = np.abs(d)
    # parametrization is stationary at tau=0; fall back to the curve's
    # second-order direction there (h ~ -+k +- tau^2/(2k))
    d = np.where(mag > 0, d / np.where(mag > 0, mag, 1.0),
                 sign / (2 * params.k) / abs(sign / (2 * params.k)))
    return d


def distance_to_h(params: ProblemParams, z: complex, sign: int,
                  tau_max: float | None = None) -> tuple[float, float]:
    """Minimum distance from z to the curve h+-, with the minimizing tau.

    Dense sampling followed by two zoom rounds; accurate to ~1e-12 of the
    local scale, far below the membership tolerance.
    """
    if tau_max is None:
        tau_max = 2.0 * abs(z) + 3.0 * abs(params.k) + 3.0
    lo, hi, n = 0.0, float(tau_max), 4001
    best_tau = 0.0
    for _ in range(4):
        taus = np.linspace(lo, hi, n)
        d = np.abs(h_point(params, taus, sign) - z)
        i = int(np.argmin(d))
        best_tau = taus[i]
        step = taus[1] - taus[0]
        lo, hi = max(0.0, best_tau - 2 * step), best_tau + 2 * step
        n = 401
    return float(np.abs(h_point(params, best_tau, sign) - z)), float(best_tau)


def classify_point(params: ProblemParams, xi: complex,
                   h_tol: float = H_MEMBERSHIP_TOL,
                   real_tol: float = REAL_AXIS_TOL) -> set[DomainLabel]:
    """All domain labels whose predicate holds at xi."""
    labels: set[DomainLabel] = set()
    xi = complex(xi)
    if abs(xi.imag) <= real_tol:
        labels.add(DomainLabel.REAL_AXIS)
    on_hp = on_hm = False
    if xi.imag > -h_tol:
        d, _ = distance_to_h(params, xi, +1)
        on_hp = d <= h_tol
    if xi.imag < h_tol:
        d, _ = distance_to_h(params, xi, -1)
        on_hm = d <= h_tol
    if on_hp:
        labels.add(DomainLabel.CURVE_H_PLUS)
    if on_hm:
        labels.add(DomainLabel.CURVE_H_MINUS)
        labels.add(DomainLabel.HOOK)
    if xi.imag > 0:
        labels.add(DomainLabel.UHP)
        if not on_hp:
            labels.add(DomainLabel.H_PLUS)
    if xi.imag < 0 and not on_hm:
        labels.add(DomainLabel.H_MINUS)
    return labels
