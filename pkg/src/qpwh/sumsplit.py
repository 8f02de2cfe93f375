"""Cauchy sum-split operators on strip-analytic functions.

For a function analytic in |Im xi| < h and decaying along horizontal lines,
the plus/minus parts at a point xi inside the strip are

    [f]+(xi) =  (1/2 i pi) int_{Im=-kappa} f(zeta)/(zeta - xi) d zeta
    [f]-(xi) = -(1/2 i pi) int_{Im=+kappa} f(zeta)/(zeta - xi) d zeta

with 0 < kappa < h; [f]+ is analytic above the lower line, [f]- below the
upper one, and [f]+ + [f]- = f inside the strip.  Two-variable evaluators
are split along one axis with the other variable frozen.

The operators return memoizing evaluators: the line data (nodes and sampled
density) is built once and reused for every evaluation point.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .contours import make_shifted_line
from .errors import DecayError, PoleProximity
from .quadrature import discretize

_MIN_DECAY = 0.5


@dataclass
class StripFunction:
    """Evaluator analytic in a strip |Im| < half_width around the real axis
    of the split axis, with algebraic decay |f| <= C |xi|^-decay there."""
    f: callable
    half_width: float
    decay: float = 1.0
    nvars: int = 1

    def __call__(self, *args):
        return self.f(*args)


class SplitPart:
    """Memoized half-plane-analytic part produced by ``cauchy_split``.

    Near the integration line the Cauchy pole is removed exactly, which
    requires the original density to be evaluable at the target; targets on
    the line itself are rejected.
    """

    def __init__(self, disc, density, prefactor, label, density_fn=None,
                 line_height=None):
        self.disc = disc
        self.density = density
        self.prefactor = prefactor
        self.label = label
        self.density_fn = density_fn
        self.line_height = (line_height if line_height is not None
                            else float(np.median(disc.z.imag)))

    def __call__(self, xi):
        xi_arr = np.atleast_1d(np.asarray(xi, dtype=complex))
        if np.any(np.abs(xi_arr.imag - self.line_height) < 1e-12):
            raise PoleProximity("split value is one-sided on its own line")
        M0, coupling = self.disc.cauchy_to_targets(xi_arr)
        out = M0 @ self.density
        near = coupling != 0
        if np.any(near):
            if self.density_fn is None:
                raise PoleProximity(
                    "split evaluated too close to its integration line")
            out[near] = out[near] + coupling[near] * np.asarray(
                self.density_fn(xi_arr[near]), dtype=complex)
        out = self.prefactor * out
        return complex(out[0]) if np.isscalar(xi) or np.ndim(xi) == 0 else out


def _line_for(sign: str, kappa: float, decay: float, R: float = 60.0):
    if decay < _MIN_DECAY:
        raise DecayError(
            f"decay exponent {decay} too slow for a sum split "
            f"(need at least {_MIN_DECAY})")
    height = -kappa if sign == "+" else +kappa
    edges = sorted({round(x, 12) for x in
                    np.concatenate([np.linspace(-8, 8, 41),
                                    np.geomspace(8, R, 10),
                                    -np.geomspace(8, R, 10)])})
    return make_shifted_line(1j * height, R=R, edges=edges,
                             tail_decay=decay + 1.0, tail_panels=5)


def cauchy_split(f: StripFunction, axis: int, sign: str, at,
                 kappa: float | None = None) -> complex:
    """Sum-split part of ``f`` along one axis, evaluated at ``at``.

    axis is 1 or 2 (ignored for single-variable functions); sign '+'
    selects the part analytic in the upper half-plane of that variable.
    Returns the value at ``at`` (a scalar for 1-var functions, a pair for
    2-var ones).
    """
    op = split_operator(f, axis, sign, kappa=kappa)
    if f.nvars == 1:
        return complex(op(at))
    return complex(op(at))


def split_operator(f: StripFunction, axis: int, sign: str,
                   kappa: float | None = None):
    """Memoized evaluator of the requested split part.

    For 2-variable f the returned callable takes (xi1, xi2) and freezes the
    non-split axis per call (line data cached per frozen value).
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    kappa = kappa if kappa is not None else 0.5 * f.half_width
    if not 0 < kappa < f.half_width:
        raise ValueError("kappa must lie inside the declared strip")
    pref = 1.0 / (2j * np.pi) if sign == "+" else -1.0 / (2j * np.pi)
    line = _line_for(sign, kappa, f.decay)
    disc = discretize(line, p=10)
    if f.nvars == 1:
        density = np.asarray(f(disc.z), dtype=complex)
        return SplitPart(disc, density, pref, f"[{sign}]", density_fn=f.f)
    cache: dict[complex, SplitPart] = {}

    def eval2(xi1, xi2):
        frozen = complex(xi2) if axis == 1 else complex(xi1)
        part = cache.get(frozen)
        if part is None:
            if axis == 1:
                density = np.asarray(f(disc.z, frozen), dtype=complex)
                fn_t = lambda x: f(x, frozen)
            else:
                density = np.asarray(f(frozen, disc.z), dtype=complex)
                fn_t = lambda x: f(frozen, x)
            part = SplitPart(disc, density, pref, f"[{sign}]ax{axis}",
                             density_fn=fn_t)
            cache[frozen] = part
        return part(xi1 if axis == 1 else xi2)

    def wrapper(arg1, arg2=None):
        if arg2 is None:
            xi1, xi2 = arg1
        else:
            xi1, xi2 = arg1, arg2
        return eval2(xi1, xi2)

    return wrapper


def pole_removal_split(f: StripFunction, pole: complex,
                       residue: complex | None = None):
    """Split off a declared simple pole explicitly.

    Returns (regularized, pole_part, half) with
    f = regularized + pole_part, pole_part(xi) = residue/(xi - pole), and
    ``half`` = '+' if the pole part is analytic in the upper half-plane
    (pole strictly below the real axis) else '-'.  The regularized part
    keeps f's strip analyticity and is pole-free at ``pole``.
    """
    pole = complex(pole)
    if abs(pole.imag) <= f.half_width:
        raise PoleProximity("declared pole must lie strictly outside the strip"
                            " ... inside one half-plane")
    if residue is None:
        r = 0.25 * abs(pole.imag)
        th = np.linspace(0.0, 2 * np.pi, 801)[:-1]
        zs = pole + r * np.exp(1j * th)
        vals = np.asarray(f(zs), dtype=complex) * (r * np.exp(1j * th))
        residue = complex(np.mean(vals))
    half = "+" if pole.imag < 0 else "-"

    def pole_part(xi):
        return residue / (np.asarray(xi, dtype=complex) - pole)

    def regularized(xi):
        return f(xi) - pole_part(xi)

    reg = StripFunction(regularized, f.half_width, min(f.decay, 1.0), f.nvars)
    return reg, pole_part, half
