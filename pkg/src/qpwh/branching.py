"""Branch-tracked elementary functions on the physical sheet.

Three multivalued ingredients appear throughout:

* ``sqrt_upper`` -- the square root of k^2 - xi^2 whose value has positive
  imaginary part for real xi.  Its cuts are exactly the curves
  h+- = {+-sqrt(k^2 - tau^2), tau real}; off those curves the upper-half-plane
  root *is* the physical sheet, so no path tracking is needed.

* ``gamma_factor`` -- sqrt(sqrt(k^2 - xi1^2) + xi2) with arithmetic branches
  on the real plane.  The outer root is continued off the real plane by
  tracking along the homotopy that lifts Im(xi2) linearly; within every
  strip product used here the branch locus is not crossed, so the tracked
  value is the analytic continuation from the real plane.

* ``kernel`` -- (k^2 - xi1^2 - xi2^2)^(-1/2), close to real positive for
  real arguments inside the unit circle.  With kappa <= eps/8 the
  positive-imaginary-part root rule reproduces the continuation from the
  real plane on every product of horizontal lines with |Im| <= kappa (the
  rule's jump set requires |Re xi1| + |Re xi2| >= eps/(2 kappa) >= 4
  together with Re(k^2-xi1^2-xi2^2) > 0, which is impossible).  Surfaces
  that leave the strips (e.g. the hook contour) must use ``track_sqrt``
  along an explicit deformation path instead.

Sheet tags count loops around the branch loci; each loop negates the
corresponding root.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BranchPointHit, BranchTrackingError, SingularLocus
from .params import ProblemParams

BRANCH_TOL_FACTOR = 1e-8   # "near branch point" radius, in units of |k|
_TRACK_MAX_STEPS = 4096


@dataclass(frozen=True)
class SheetTag:
    """Winding counts around branch loci.

    ``plus_k``/``minus_k`` count loops around the branch points +k / -k of
    the single-variable root; ``outer`` counts loops around the outer root
    locus of the gamma factor, or around the complexified circle for the
    kernel.  The all-zero tag is the physical sheet.
    """

    plus_k: int = 0
    minus_k: int = 0
    outer: int = 0

    @property
    def inner_sign(self) -> int:
        return -1 if (self.plus_k + self.minus_k) % 2 else 1

    @property
    def outer_sign(self) -> int:
        return -1 if self.outer % 2 else 1

    def is_physical(self) -> bool:
        return self.inner_sign == 1 and self.outer_sign == 1


PHYSICAL = SheetTag()


def _as_array(x):
    arr = np.asarray(x, dtype=complex)
    return arr, (arr.ndim == 0)


def _ret(arr, scalar):
    return complex(arr) if scalar else arr


def upper_root(z):
    """Root of w^2 = z with Im w > 0; ties broken toward Re w > 0."""
    z_arr, scalar = _as_array(z)
    w = np.sqrt(z_arr)
    flip = (w.imag < 0) | ((w.imag == 0) & (w.real < 0))
    w = np.where(flip, -w, w)
    return _ret(w, scalar)


def sqrt_upper(params: ProblemParams, xi, tag: SheetTag = PHYSICAL):
    """sqrt(k^2 - xi^2) on the physical sheet (positive imaginary part for
    real xi), negated once per loop recorded in ``tag``.

    Raises BranchPointHit within 1e-8*|k| of +-k.
    """
    xi_arr, scalar = _as_array(xi)
    k = params.k
    tol = BRANCH_TOL_FACTOR * abs(k)
    if np.any(np.abs(xi_arr - k) < tol) or np.any(np.abs(xi_arr + k) < tol):
        raise BranchPointHit("xi within tolerance of a branch point +-k")
    w = upper_root(params.k2sq - xi_arr * xi_arr)
    if tag.inner_sign < 0:
        w = -w
    return _ret(w, scalar)


def track_sqrt(w2_path, anchor=None):
    """Continue a square root along a discrete path of radicand values.

    ``w2_path`` has shape (nsteps, ...); step 0 is the anchor point.  If
    ``anchor`` is None the principal root of step 0 is used.  At each step
    the root nearer the previous value is chosen; a step is rejected (and
    BranchTrackingError raised) when the increment is comparable to the
    distance between the two roots, which indicates the path was sampled
    too coarsely or ran through the branch locus.
    """
    path = np.asarray(w2_path, dtype=complex)
    w = np.sqrt(path[0]) if anchor is None else np.asarray(anchor, dtype=complex) + 0j
    for step in range(1, path.shape[0]):
        r = np.sqrt(path[step])
        pick_minus = np.abs(-r - w) < np.abs(r - w)
        nxt = np.where(pick_minus, -r, r)
        # reject if increment not clearly smaller than root separation 2|r|
        bad = np.abs(nxt - w) > 1.2 * np.abs(r)
        if np.any(bad & (np.abs(r) > 0)):
            raise BranchTrackingError(
                "root tracking step too large; refine the path")
        w = nxt
    return w


def _tracked_outer_root(s, xi2, max_doublings=8):
    """Outer root of gamma continued from the real-xi2 anchor.

    Anchor value: principal sqrt(s + Re xi2), valid because Im(s) > 0 off
    the cuts.  The homotopy lifts Im(xi2) from 0 to its value; the number of
    steps doubles until every per-step increment is resolved.
    """
    s_arr = np.asarray(s, dtype=complex)
    xi2_arr = np.asarray(xi2, dtype=complex)
    base = s_arr + xi2_arr.real
    lift = 1j * xi2_arr.imag
    n = 8
    while True:
        t = np.linspace(0.0, 1.0, n + 1).reshape((-1,) + (1,) * base.ndim)
        path = base + t * lift
        try:
            return track_sqrt(path)
        except BranchTrackingError:
            n *= 2
            if n > _TRACK_MAX_STEPS:
                raise


def gamma_factor(params: ProblemParams, xi1, xi2, tag: SheetTag = PHYSICAL):
    """gamma(xi1, xi2) = sqrt(sqrt(k^2 - xi1^2) + xi2), physical sheet.

    Participates in the multiplicative factorization of the kernel:
    K(xi1, xi2) * gamma(xi1, xi2) * gamma(xi1, -xi2) = 1.
    """
    xi1_arr, s1 = _as_array(xi1)
    xi2_arr, s2 = _as_array(xi2)
    xi1_b, xi2_b = np.broadcast_arrays(xi1_arr, xi2_arr)
    s = sqrt_upper(params, xi1_b)
    s = np.asarray(s, dtype=complex)
    if tag.inner_sign < 0:
        s = -s
    arg_scale = np.abs(s) + np.abs(xi2_b) + 1.0
    if np.any(np.abs(s + xi2_b) < BRANCH_TOL_FACTOR * arg_scale):
        raise BranchPointHit("outer root argument of gamma vanishes")
    g = _tracked_outer_root(s, xi2_b)
    if tag.outer_sign < 0:
        g = -g
    return _ret(g, s1 and s2)


def kernel(params: ProblemParams, xi1, xi2, tag: SheetTag = PHYSICAL):
    """K(xi1, xi2) = (k^2 - xi1^2 - xi2^2)^(-1/2) on the physical sheet.

    1/K has positive imaginary part for real arguments.  Raises
    SingularLocus on the complexified circle xi1^2 + xi2^2 = k^2.
    """
    xi1_arr, s1 = _as_array(xi1)
    xi2_arr, s2 = _as_array(xi2)
    w2 = params.k2sq - xi1_arr * xi1_arr - xi2_arr * xi2_arr
    scale = np.abs(params.k2sq) + np.abs(xi1_arr) ** 2 + np.abs(xi2_arr) ** 2
    if np.any(np.abs(w2) < (BRANCH_TOL_FACTOR * scale) ** 1):
        raise SingularLocus("point on the singular circle xi1^2+xi2^2=k^2")
    w = upper_root(w2)
    if tag.outer_sign < 0:
        w = -w
    res = 1.0 / w
    return _ret(res, s1 and s2)


def kernel_inv(params: ProblemParams, xi1, xi2, tag: SheetTag = PHYSICAL):
    """1/K = sqrt(k^2 - xi1^2 - xi2^2), the upper root (used in the
    transverse propagation exponent)."""
    xi1_arr, s1 = _as_array(xi1)
    xi2_arr, s2 = _as_array(xi2)
    w = upper_root(params.k2sq - xi1_arr * xi1_arr - xi2_arr * xi2_arr)
    if tag.outer_sign < 0:
        w = -w
    return _ret(w, s1 and s2)


def kernel_on_path(params: ProblemParams, xi1, xi2_path):
    """Kernel values K(xi1, z) for z along a discrete path, branch chosen by
    continuity from the path's first point (anchored on the physical sheet,
    so the first point must lie where the root rule is valid, e.g. on the
    real axis or deep on the negative imaginary axis).

    ``xi1`` may be an array (shape broadcast against each path node);
    ``xi2_path`` has shape (nsteps, ...).  Returns kernel values of shape
    ``xi2_path.shape[1:]`` broadcast with xi1 at the final node.
    """
    xi1_arr = np.asarray(xi1, dtype=complex)
    path = np.asarray(xi2_path, dtype=complex)
    w2 = params.k2sq - xi1_arr * xi1_arr - path * path
    anchor = upper_root(w2[0])
    w = track_sqrt(w2, anchor=anchor)
    return 1.0 / w
