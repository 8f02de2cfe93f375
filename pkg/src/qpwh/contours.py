"""Contours: piecewise-smooth oriented paths with quadrature panels.

A Contour is an ordered chain of segments, each a smooth map t in [0,1] -> C
carrying its own panel subdivision (sub-intervals of [0,1]).  Discretizing a
contour lays Gauss-Legendre nodes on every panel and returns flat node /
weight arrays plus enough panel structure for the singular (Cauchy)
quadrature machinery.

Unbounded ends are realized by power-law tail maps s = scale*(t/(1-t))^q,
which turn integrands with algebraic decay |f| ~ s^(-beta) into smooth
functions of t (the nodes never touch t=1).  Tail segments carry the decay
exponent they were built for so that integration routines can estimate the
残 truncation error of a finite-radius alternative.

All segments serialize to JSON (kind + parameters) for reproducibility.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .branching import upper_root
from .params import ProblemParams


# ----------------------------------------------------------------------
# panel helpers

def uniform_panels(n: int) -> tuple[tuple[float, float], ...]:
    e = np.linspace(0.0, 1.0, n + 1)
    return tuple((float(a), float(b)) for a, b in zip(e[:-1], e[1:]))


def graded_panels(n: int, toward_end: bool = True, ratio: float = 0.5
                  ) -> tuple[tuple[float, float], ...]:
    """n panels with geometrically shrinking lengths toward one end."""
    lengths = np.array([ratio ** i for i in range(n)], dtype=float)
    lengths /= lengths.sum()
    if toward_end:
        edges = np.concatenate([[0.0], np.cumsum(lengths)])
    else:
        edges = np.concatenate([[0.0], np.cumsum(lengths[::-1])])
    edges[-1] = 1.0
    return tuple((float(a), float(b)) for a, b in zip(edges[:-1], edges[1:]))


def edges_to_panels(edges) -> tuple[tuple[float, float], ...]:
    e = list(edges)
    return tuple((float(a), float(b)) for a, b in zip(e[:-1], e[1:]))


# ----------------------------------------------------------------------
# segments

_FD_STEP = 1e-6


class Segment:
    """Base segment: smooth map of [0,1] into the plane."""

    kind = "base"

    def __init__(self, panels=None):
        self.panels = tuple(panels) if panels is not None else uniform_panels(1)

    def point(self, t):
        raise NotImplementedError

    def deriv(self, t):
        # central difference; exact overrides exist where it matters
        t = np.asarray(t, dtype=float)
        h = _FD_STEP
        tm = np.clip(t - h, 0.0, 1.0)
        tp = np.clip(t + h, 0.0, 1.0)
        return (self.point(tp) - self.point(tm)) / (tp - tm)

    def with_panels(self, panels):
        import copy
        seg = copy.copy(self)
        seg.panels = tuple(panels)
        return seg

    def spec(self) -> dict:
        raise NotImplementedError

    def to_json(self) -> dict:
        d = self.spec()
        d["kind"] = self.kind
        d["panels"] = [list(p) for p in self.panels]
        return d


class LineSegment(Segment):
    kind = "line"

    def __init__(self, a: complex, b: complex, panels=None):
        super().__init__(panels)
        self.a = complex(a)
        self.b = complex(b)

    def point(self, t):
        return self.a + (self.b - self.a) * np.asarray(t, dtype=float)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        return np.full(t.shape, self.b - self.a, dtype=complex)

    def spec(self):
        return {"a": [self.a.real, self.a.imag], "b": [self.b.real, self.b.imag]}


class ArcSegment(Segment):
    kind = "arc"

    def __init__(self, center: complex, radius: float, theta0: float,
                 theta1: float, panels=None):
        super().__init__(panels)
        self.center = complex(center)
        self.radius = float(radius)
        self.theta0 = float(theta0)
        self.theta1 = float(theta1)

    def _theta(self, t):
        return self.theta0 + (self.theta1 - self.theta0) * np.asarray(t, dtype=float)

    def point(self, t):
        return self.center + self.radius * np.exp(1j * self._theta(t))

    def deriv(self, t):
        dth = self.theta1 - self.theta0
        return 1j * dth * self.radius * np.exp(1j * self._theta(t))

    def spec(self):
        return {"center": [self.center.real, self.center.imag],
                "radius": self.radius, "theta0": self.theta0,
                "theta1": self.theta1}


class TailSegment(Segment):
    """Unbounded ray base -> base + direction*inf via s = scale*(t/(1-t))^q.

    ``decay`` records the integrand decay exponent beta (|f| ~ s^-beta) the
    tail is meant for; q defaults to 2 which makes f*ds smooth for
    beta >= 3/2.  ``outward=False`` reverses orientation (from infinity in).
    """

    kind = "tail"

    def __init__(self, base: complex, direction: complex, scale: float = 10.0,
                 q: float = 2.0, decay: float = 2.0, outward: bool = True,
                 panels=None):
        if panels is None:
            panels = graded_panels(4, toward_end=outward, ratio=0.45)
        super().__init__(panels)
        self.base = complex(base)
        d = complex(direction)
        self.direction = d / abs(d)
        self.scale = float(scale)
        self.q = float(q)
        self.decay = float(decay)
        self.outward = bool(outward)

    def _s(self, u):
        # clamp keeps panel endpoints at t=1 finite (quadrature nodes are
        # interior; endpoints only seed the Cauchy window polylines)
        u = np.minimum(u, 1.0 - 1e-9)
        return self.scale * (u / (1.0 - u)) ** self.q

    def point(self, t):
        t = np.asarray(t, dtype=float)
        u = t if self.outward else 1.0 - t
        return self.base + self.direction * self._s(u)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        u = t if self.outward else 1.0 - t
        u = np.minimum(u, 1.0 - 1e-9)
        ds = self.scale * self.q * (u / (1.0 - u)) ** (self.q - 1.0) / (1.0 - u) ** 2
        sign = 1.0 if self.outward else -1.0
        return sign * self.direction * ds

    def spec(self):
        return {"base": [self.base.real, self.base.imag],
                "direction": [self.direction.real, self.direction.imag],
                "scale": self.scale, "q": self.q, "decay": self.decay,
                "outward": self.outward}


class HShoreSegment(Segment):
    """Piece of one shore of the cut h- (or h+), offset from the curve.

    Parametrized by tau in [tau0, tau1]; shore +1 offsets to the left of the
    direction of increasing tau (for h- that is the side facing the real
    axis on the flat part), -1 to the right.
    """

    kind = "hshore"

    def __init__(self, params: ProblemParams, tau0: float, tau1: float,
                 offset: float, shore: int, sign: int = -1, panels=None):
        super().__init__(panels)
        self.params = params
        self.tau0 = float(tau0)
        self.tau1 = float(tau1)
        self.offset = float(offset)
        self.shore = int(shore)
        self.sign = int(sign)

    def _tau(self, t):
        return self.tau0 + (self.tau1 - self.tau0) * np.asarray(t, dtype=float)

    def point(self, t):
        tau = self._tau(t)
        s = upper_root(self.params.k2sq - tau * tau)
        h = self.sign * s
        d = self.sign * tau / s
        mag = np.abs(d)
        unit = np.where(mag > 1e-300, d / np.where(mag > 1e-300, mag, 1.0), 1.0)
        return h + 1j * self.shore * self.offset * unit

    def spec(self):
        return {"tau0": self.tau0, "tau1": self.tau1, "offset": self.offset,
                "shore": self.shore, "sign": self.sign,
                "eps": self.params.eps,
                "k1": [self.params.k1.real, self.params.k1.imag],
                "k2": [self.params.k2.real, self.params.k2.imag]}


class HShoreTailSegment(HShoreSegment):
    """Unbounded continuation of a shore, tau = tau0/(1-u)^q, u in [0,1)."""

    kind = "hshore_tail"

    def __init__(self, params: ProblemParams, tau0: float, offset: float,
                 shore: int, sign: int = -1, q: float = 1.0,
                 decay: float = 1.5, outward: bool = True, panels=None):
        if panels is None:
            panels = graded_panels(3, toward_end=outward, ratio=0.4)
        Segment.__init__(self, panels)
        self.params = params
        self.tau0 = float(tau0)
        self.offset = float(offset)
        self.shore = int(shore)
        self.sign = int(sign)
        self.q = float(q)
        self.decay = float(decay)
        self.outward = bool(outward)

    def _tau(self, t):
        t = np.asarray(t, dtype=float)
        u = t if self.outward else 1.0 - t
        u = np.minimum(u, 1.0 - 1e-9)
        # u in [0,1): tau runs from tau0 to infinity
        return self.tau0 / (1.0 - u) ** (2.0 * self.q)

    def spec(self):
        return {"tau0": self.tau0, "offset": self.offset, "shore": self.shore,
                "sign": self.sign, "q": self.q, "decay": self.decay,
                "outward": self.outward, "eps": self.params.eps,
                "k1": [self.params.k1.real, self.params.k1.imag],
                "k2": [self.params.k2.real, self.params.k2.imag]}


class ReversedSegment(Segment):
    kind = "reversed"

    def __init__(self, inner: Segment):
        panels = tuple(sorted(((1.0 - b, 1.0 - a) for a, b in inner.panels)))
        super().__init__(panels)
        self.inner = inner

    def point(self, t):
        return self.inner.point(1.0 - np.asarray(t, dtype=float))

    def deriv(self, t):
        return -self.inner.deriv(1.0 - np.asarray(t, dtype=float))

    def spec(self):
        return {"inner": self.inner.to_json()}


# ----------------------------------------------------------------------
# contour

@dataclass
class Contour:
    segments: list
    name: str = ""
    meta: dict = field(default_factory=dict)

    def reversed(self) -> "Contour":
        return Contour([ReversedSegment(s) for s in reversed(self.segments)],
                       name=self.name + "~", meta=dict(self.meta))

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "meta": self.meta,
                           "segments": [s.to_json() for s in self.segments]},
                          indent=1)

    def n_panels(self) -> int:
        return sum(len(s.panels) for s in self.segments)


def contour_from_json(text: str, params: ProblemParams | None = None) -> Contour:
    data = json.loads(text)

    def build(sd):
        kind = sd["kind"]
        panels = [tuple(p) for p in sd.get("panels", [(0.0, 1.0)])]
        if kind == "line":
            return LineSegment(complex(*sd["a"]), complex(*sd["b"]), panels)
        if kind == "arc":
            return ArcSegment(complex(*sd["center"]), sd["radius"],
                              sd["theta0"], sd["theta1"], panels)
        if kind == "tail":
            return TailSegment(complex(*sd["base"]), complex(*sd["direction"]),
                               sd["scale"], sd["q"], sd["decay"],
                               sd["outward"], panels)
        if kind in ("hshore", "hshore_tail"):
            p = params or ProblemParams(eps=sd["eps"], k1=complex(*sd["k1"]),
                                        k2=complex(*sd["k2"]))
            if kind == "hshore":
                return HShoreSegment(p, sd["tau0"], sd["tau1"], sd["offset"],
                                     sd["shore"], sd["sign"], panels)
            return HShoreTailSegment(p, sd["tau0"], sd["offset"], sd["shore"],
                                     sd["sign"], sd["q"], sd["decay"],
                                     sd["outward"], panels)
        if kind == "reversed":
            return ReversedSegment(build(sd["inner"]))
        raise ValueError(f"unknown segment kind {kind!r}")

    return Contour([build(sd) for sd in data["segments"]],
                   name=data.get("name", ""), meta=data.get("meta", {}))


# ----------------------------------------------------------------------
# standard contours

def line_core_edges(R: float, fine: float = 0.0, fine_len: float = 0.0,
                    n_fine: int = 0, n_coarse: int = 4) -> list[float]:
    """Symmetric breakpoints for [-R, R]: |x| < fine_len uniformly fine,
    then geometric growth out to R."""
    edges = [0.0]
    if n_fine > 0 and fine_len > 0:
        edges.extend(np.linspace(0.0, fine_len, n_fine + 1)[1:])
    start = edges[-1] if edges[-1] > 0 else R / (2.0 ** n_coarse)
    g = np.geomspace(max(start, 1e-9), R, n_coarse + 1)[1:]
    for v in g:
        if v > edges[-1] * (1 + 1e-12):
            edges.append(float(v))
    edges[-1] = float(R)
    return sorted({-e for e in edges} | set(edges))


def make_shifted_line(offset: complex, R: float = 40.0,
                      edges: list[float] | None = None,
                      tail_decay: float = 2.5,
                      tail_panels: int = 3, tail_q: float = 2.0) -> Contour:
    """Horizontal line Im(xi) = Im(offset), oriented left to right, with
    power-mapped tails beyond +-R."""
    offset = complex(offset)
    if edges is None:
        edges = line_core_edges(R)
    else:
        edges = sorted(edges)
        R = max(abs(edges[0]), abs(edges[-1]))
    pts = [e + offset for e in edges]
    segs: list[Segment] = [
        TailSegment(pts[0], -1.0, scale=R / 2, q=tail_q, decay=tail_decay,
                    outward=False,
                    panels=graded_panels(tail_panels, toward_end=False, ratio=0.4))]
    for a, b in zip(pts[:-1], pts[1:]):
        segs.append(LineSegment(a, b))
    segs.append(TailSegment(pts[-1], +1.0, scale=R / 2, q=tail_q,
                            decay=tail_decay,
                            panels=graded_panels(tail_panels, ratio=0.4)))
    return Contour(segs, name=f"line_im_{offset.imag:+.6g}",
                   meta={"offset": [offset.real, offset.imag], "R": R})


def make_loop(center: complex, radius: float, n_panels: int = 4,
              orientation: int = +1) -> Contour:
    th1 = 2 * math.pi * orientation
    return Contour([ArcSegment(center, radius, 0.0, th1,
                               panels=uniform_panels(n_panels))],
                   name="loop",
                   meta={"center": [complex(center).real, complex(center).imag],
                         "radius": radius, "orientation": orientation})


def hook_tau_edges(params: ProblemParams, tau_cap: float, tau_end: float,
                   n_mid: int = 6, n_cap: int = 4) -> list[float]:
    """tau breakpoints for one shore: geometric refinement toward the cap
    (branch-point end), regular panels across the flat part and the turn."""
    cap = list(tau_cap * np.geomspace(1.0, 8.0, n_cap + 1))
    rest = list(np.geomspace(cap[-1], tau_end, n_mid + 1))[1:]
    return cap + rest


def make_P(params: ProblemParams, offset: float | None = None,
           tau_end: float | None = None, with_tails: bool = True,
           n_mid: int = 8, n_cap: int = 5, tail_decay: float = 1.5) -> Contour:
    """Two-shore traversal of the cut h-: in along the right shore from
    -i*infinity to -k, across a short connector near -k, back out along the
    left shore.  ``offset`` is the shore distance from the cut.
    """
    if offset is None:
        offset = 1e-4
    if tau_end is None:
        tau_end = 20.0 * abs(params.k)
    # the curve leaves -k quadratically: h(tau) ~ -k + tau^2/(2k)
    tau_cap = math.sqrt(4.0 * offset * abs(params.k))
    edges = hook_tau_edges(params, tau_cap, tau_end, n_mid=n_mid, n_cap=n_cap)
    span = edges[-1] - edges[0]
    panels = edges_to_panels([(e - edges[0]) / span for e in edges])
    left = HShoreSegment(params, edges[0], edges[-1], offset, shore=+1,
                         panels=panels)
    right = HShoreSegment(params, edges[0], edges[-1], offset, shore=-1,
                          panels=panels)
    segs: list[Segment] = []
    if with_tails:
        segs.append(HShoreTailSegment(params, tau_end, offset, shore=-1,
                                      outward=False, decay=tail_decay))
    segs.append(ReversedSegment(right))
    segs.append(LineSegment(right.point(0.0), left.point(0.0),
                            panels=uniform_panels(1)))
    segs.append(left)
    if with_tails:
        segs.append(HShoreTailSegment(params, tau_end, offset, shore=+1,
                                      outward=True, decay=tail_decay))
    return Contour(segs, name="P",
                   meta={"offset": offset, "tau_end": tau_end,
                         "with_tails": with_tails})


def make_h_shore(params: ProblemParams, shore: int, offset: float,
                 tau0: float, tau1: float, n_panels: int = 8,
                 sign: int = -1) -> Contour:
    """Single shore of h- (sign=-1) or h+ (+1) as an oriented contour from
    tau0 to tau1 (tau increasing: from the branch point outward)."""
    edges = np.geomspace(max(tau0, 1e-6), tau1, n_panels + 1)
    span = edges[-1] - edges[0]
    panels = edges_to_panels([(e - edges[0]) / span for e in edges])
    seg = HShoreSegment(params, float(edges[0]), float(edges[-1]), offset,
                        shore=shore, sign=sign, panels=panels)
    return Contour([seg], name=f"h{'-' if sign < 0 else '+'}_shore{shore:+d}")
