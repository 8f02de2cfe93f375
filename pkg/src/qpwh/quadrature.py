"""Panel quadrature and the Cauchy-kernel engine.

Plain integration is composite Gauss-Legendre over the contour's panels with
adaptive bisection (error estimated by comparing a panel against its two
halves).

The Cauchy machinery evaluates integrals

    (C g)(xi) = int_C g(zeta) / (zeta - xi) d zeta

accurately for targets *on* the contour (principal value / one-sided limits)
and targets at any small distance from it.  Near targets the pole is removed
exactly: on the few panels nearest the target the density is replaced by
g(zeta) - g(xi), which is analytic, and the removed part is added back via
the closed-form moment int d zeta/(zeta - xi), computed by a winding-safe
argument walk along the panel polyline.  The subtraction needs g at the
target; square systems get it from the node value itself (the coincident
node contributes the interpolant derivative), off-contour evaluations
receive it from the caller.

Side convention for on-contour limits: side=+1 is the limit from the left
of the direction of travel (principal value + i*pi*g), side=-1 from the
right (principal value - i*pi*g), side=0 the principal value itself.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .contours import Contour
from .errors import InnerFailure, NoConvergence, SingularityOnContour

_HUGE = 1e14


@dataclass
class QuadratureResult:
    value: complex
    error_estimate: float
    nodes_used: int


@lru_cache(maxsize=32)
def gauss01(p: int):
    """Gauss-Legendre nodes/weights on [0, 1]."""
    x, w = np.polynomial.legendre.leggauss(p)
    return (x + 1.0) / 2.0, w / 2.0


@lru_cache(maxsize=32)
def diffmat01(p: int):
    """Differentiation matrix at the Gauss nodes on [0,1] (barycentric)."""
    x, _ = gauss01(p)
    n = len(x)
    c = np.ones(n)
    for i in range(n):
        for j in range(n):
            if i != j:
                c[i] *= (x[i] - x[j])
    D = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                D[i, j] = (c[i] / c[j]) / (x[i] - x[j])
        D[i, i] = -np.sum(D[i, np.arange(n) != i])
    return D


# ----------------------------------------------------------------------
# discretization

class Discretization:
    """Flat node/weight arrays for a contour plus panel structure."""

    def __init__(self, contour: Contour, p: int = 8):
        self.contour = contour
        self.p = p
        xg, wg = gauss01(p)
        zs, ws = [], []
        panel_ends, panel_poly, panel_len = [], [], []
        for seg in contour.segments:
            for (t0, t1) in seg.panels:
                dt = t1 - t0
                t = t0 + dt * xg
                z = np.asarray(seg.point(t), dtype=complex)
                dz = np.asarray(seg.deriv(t), dtype=complex)
                za = complex(seg.point(t0))
                zb = complex(seg.point(t1))
                poly = np.concatenate([[za], z, [zb]])
                panel_ends.append((za, zb))
                panel_poly.append(poly)
                panel_len.append(float(np.sum(np.abs(np.diff(poly)))))
                zs.append(z)
                ws.append(wg * dz * dt)
        self.z = np.concatenate(zs)
        self.w = np.concatenate(ws)
        n_panels = len(panel_ends)
        self.panel_start = np.arange(n_panels) * p
        self.panel_ends = panel_ends
        self.panel_poly = panel_poly
        self.panel_len = np.asarray(panel_len)
        self.n_panels = n_panels
        self.panel_of_node = np.repeat(np.arange(n_panels), p)
        scale = float(np.mean(self.panel_len)) + 1e-300
        self.closed = abs(panel_ends[0][0] - panel_ends[-1][1]) < 1e-12 * scale

    @property
    def n(self) -> int:
        return self.z.size

    def integrate_values(self, vals: np.ndarray) -> complex:
        return complex(np.sum(np.asarray(vals) * self.w))

    def integrate(self, f) -> complex:
        return self.integrate_values(f(self.z))

    # -- Cauchy machinery ------------------------------------------------

    def _window(self, panel: int, width: int = 1):
        if self.closed and self.n_panels > 2 * width:
            panels = [(panel + q) % self.n_panels
                      for q in range(-width, width + 1)]
        else:
            lo = max(0, panel - width)
            hi = min(self.n_panels - 1, panel + width)
            panels = list(range(lo, hi + 1))
        idx = np.concatenate([np.arange(self.panel_start[q],
                                        self.panel_start[q] + self.p)
                              for q in panels])
        poly = np.concatenate([self.panel_poly[q] for q in panels])
        return idx, poly

    def _log_moment(self, poly: np.ndarray, xi: complex, side: int) -> complex:
        """int d zeta/(zeta - xi) along the polyline, winding-safe.

        side=+-1 displaces xi slightly to that side of the travel direction
        (one-sided limit); side=0 with xi on the contour yields the
        principal value via symmetric displacement.
        """
        a, b = poly[0], poly[-1]
        dmin = float(np.min(np.abs(poly - xi)))
        scale = float(np.max(np.abs(np.diff(poly)))) + 1e-300

        def walk(target):
            wvec = poly - target
            ang = np.angle(wvec[1:] / wvec[:-1])
            return (np.log(abs(b - target)) - np.log(abs(a - target))
                    + 1j * float(np.sum(ang)))

        if dmin > 1e-9 * scale and side == 0:
            return walk(xi)
        # on the contour: principal value by symmetric displacement (the
        # O(delta) terms cancel), one-sided limits are PV +- i*pi exactly
        j = int(np.argmin(np.abs(poly - xi)))
        tdir = poly[min(j + 1, len(poly) - 1)] - poly[max(j - 1, 0)]
        tdir = tdir / abs(tdir)
        delta = 1e-7 * scale * 1j * tdir
        pv = 0.5 * (walk(xi + delta) + walk(xi - delta))
        return pv + side * 1j * np.pi

    def cauchy_square(self, side: int) -> np.ndarray:
        """Matrix M with (M g)_i = one-sided limit of the Cauchy integral at
        node i, for densities sampled at the nodes."""
        z, w, n, p = self.z, self.w, self.n, self.p
        diff = z[None, :] - z[:, None]
        np.fill_diagonal(diff, 1.0)
        M = w[None, :] / diff
        np.fill_diagonal(M, 0.0)
        xg, wg = gauss01(p)
        D = diffmat01(p)
        for i in range(n):
            pan = self.panel_of_node[i]
            idx, poly = self._window(pan)
            lam = self._log_moment(poly, z[i], side)
            off = idx[idx != i]
            M[i, i] = lam - np.sum(w[off] / (z[off] - z[i]))
            iloc = i - self.panel_start[pan]
            sl = slice(self.panel_start[pan], self.panel_start[pan] + p)
            M[i, sl] += wg[iloc] * D[iloc, :]
        return M

    def cauchy_to_targets(self, targets, side: int = 0,
                          near_factor: float = 1.0):
        """Rows M0 and coupling c with (integral at target t) =
        (M0 g)_t + c_t * g(target_t).

        Far targets get a plain discrete sum (c_t = 0).  Near targets (within
        ``near_factor`` panel lengths) get exact pole removal and need the
        caller to supply g at the target.  Targets must not coincide with
        quadrature nodes (use cauchy_square for that).
        """
        tgt = np.asarray(targets, dtype=complex).ravel()
        z, w = self.z, self.w
        M0 = w[None, :] / (z[None, :] - tgt[:, None])
        coupling = np.zeros(tgt.size, dtype=complex)
        d = np.abs(z[None, :] - tgt[:, None])
        jmin = np.argmin(d, axis=1)
        for t in range(tgt.size):
            pan = self.panel_of_node[jmin[t]]
            if d[t, jmin[t]] > near_factor * self.panel_len[pan]:
                continue
            if d[t, jmin[t]] < 1e-13 * (abs(tgt[t]) + 1.0):
                raise SingularityOnContour(
                    "target coincides with a quadrature node; "
                    "use cauchy_square for on-node collocation")
            idx, poly = self._window(pan)
            lam = self._log_moment(poly, tgt[t], side)
            coupling[t] = lam - np.sum(w[idx] / (z[idx] - tgt[t]))
        return M0, coupling


def discretize(contour: Contour, p: int = 8) -> Discretization:
    return Discretization(contour, p=p)


# ----------------------------------------------------------------------
# adaptive integration

def _panel_value(f, seg, t0, t1, p):
    xg, wg = gauss01(p)
    t = t0 + (t1 - t0) * xg
    z = np.asarray(seg.point(t), dtype=complex)
    dz = np.asarray(seg.deriv(t), dtype=complex)
    fv = np.asarray(f(z), dtype=complex)
    if np.any(~np.isfinite(fv)) or np.any(np.abs(fv) > _HUGE):
        raise SingularityOnContour("integrand blows up at a contour node")
    return complex(np.sum(fv * wg * dz * (t1 - t0))), len(t)


def integrate(f, contour: Contour, tol: float = 1e-10, p: int = 8,
              max_nodes: int = 400_000) -> QuadratureResult:
    """Adaptive composite Gauss integration of a vectorized integrand along
    a contour."""
    nodes = 0
    heap = []
    count = 0
    for seg in contour.segments:
        for (t0, t1) in seg.panels:
            v, used = _panel_value(f, seg, t0, t1, p)
            vl, ul = _panel_value(f, seg, t0, 0.5 * (t0 + t1), p)
            vr, ur = _panel_value(f, seg, 0.5 * (t0 + t1), t1, p)
            nodes += used + ul + ur
            err = abs(v - vl - vr)
            count += 1
            heapq.heappush(heap, (-err, count, seg, t0, t1, vl + vr, err))
    while True:
        total = sum(item[5] for item in heap)
        total_err = sum(item[6] for item in heap)
        if total_err <= tol or not heap:
            return QuadratureResult(total, total_err, nodes)
        if nodes >= max_nodes:
            raise NoConvergence(
                f"adaptive quadrature budget exceeded (err={total_err:.2e}, "
                f"tol={tol:.2e})", history=[total_err])
        neg_err, _, seg, t0, t1, _, _ = heapq.heappop(heap)
        tm = 0.5 * (t0 + t1)
        for (a, b) in ((t0, tm), (tm, t1)):
            v, used = _panel_value(f, seg, a, b, p)
            vl, ul = _panel_value(f, seg, a, 0.5 * (a + b), p)
            vr, ur = _panel_value(f, seg, 0.5 * (a + b), b, p)
            nodes += used + ul + ur
            err = abs(v - vl - vr)
            count += 1
            heapq.heappush(heap, (-err, count, seg, a, b, vl + vr, err))


def integrate_product(f, c1: Contour, c2: Contour, tol: float = 1e-8,
                      p: int = 8, max_nodes: int = 3_000_000
                      ) -> QuadratureResult:
    """Iterated adaptive integration of f(z1, z2) over c1 x c2 (inner z1).

    The inner integral runs at a tighter tolerance; inner failures are
    re-raised with the outer node attached.
    """
    nodes_used = [0]
    inner_tol = tol / 10.0

    def outer_density(z2_arr):
        out = np.empty(z2_arr.shape, dtype=complex)
        for idx, z2 in np.ndenumerate(z2_arr):
            try:
                r = integrate(lambda z1: f(z1, z2), c1, tol=inner_tol, p=p,
                              max_nodes=max_nodes // 4)
            except (NoConvergence, SingularityOnContour) as exc:
                raise InnerFailure(str(exc), outer_node=complex(z2)) from exc
            nodes_used[0] += r.nodes_used
            out[idx] = r.value
        return out

    res = integrate(outer_density, c2, tol=tol, p=p, max_nodes=max_nodes)
    return QuadratureResult(res.value, res.error_estimate,
                            res.nodes_used + nodes_used[0])


def fixed_product(f, d1: Discretization, d2: Discretization) -> complex:
    """Non-adaptive product-rule integral Sum_ij w1_i w2_j f(z1_i, z2_j)."""
    vals = f(d1.z[:, None], d2.z[None, :])
    return complex(d1.w @ vals @ d2.w)
