"""One-dimensional functional-equation demonstrator.

The model problem is

    K(xi) W+(xi) + U-(xi) = T(xi)

with the algebraic kernel K = (k^2 - xi^2)^(-1/2) and the rational
right-hand side T = 1/(xi + k1); W+ is analytic in the upper half-plane,
U- in the lower.  With the registered factorization K = K+ K-,
K+ = (k+xi)^(-1/2) and K- = (k-xi)^(-1/2), pole removal gives the closed
form

    W+(xi) = sqrt(k + k1) * sqrt(k + xi) / (xi + k1)
    U-(xi) = (1 - sqrt(k + k1)/sqrt(k - xi)) / (xi + k1)

Analytic continuation of W+ around the kernel's branch points is governed
by the branch ratios of K: re-expressing W+ through U- (which a lower loop
does not change) multiplies it by K(old branch)/K(new branch), and
symmetrically for upper loops.  ``continue_along`` applies that recurrence
for a word of loops; ``continue_path_oracle`` checks it by brute-force root
tracking of the explicit solution along the actual loop path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .branching import sqrt_upper, track_sqrt
from .errors import BranchPointHit, QPWHError
from .params import ProblemParams


class UnfactorizableKernel(QPWHError):
    """Kernel has no registered closed-form factorization."""


_REGISTERED_KERNELS = ("inverse_sqrt",)


@dataclass(frozen=True)
class Loop:
    """One loop of a continuation word.

    sign '+' keeps to the upper half-plane (may encircle only +k),
    sign '-' to the lower (only -k).  ``times`` is the number of
    traversals.
    """
    sign: str
    times: int = 1

    def __post_init__(self):
        if self.sign not in ("+", "-"):
            raise ValueError("loop sign must be '+' or '-'")


@dataclass(frozen=True)
class LoopWord:
    loops: tuple[Loop, ...]

    def __post_init__(self):
        for a, b in zip(self.loops[:-1], self.loops[1:]):
            if a.sign == b.sign:
                raise ValueError("consecutive loops must alternate half-planes")

    @staticmethod
    def parse(text: str) -> "LoopWord":
        """Parse words like '-+' or '--' is invalid; repetition via '2-'
        is not supported, use explicit characters."""
        return LoopWord(tuple(Loop(c) for c in text))


@dataclass(frozen=True)
class WH1DProblem:
    params: ProblemParams
    kernel_name: str = "inverse_sqrt"

    def __post_init__(self):
        if self.kernel_name not in _REGISTERED_KERNELS:
            raise UnfactorizableKernel(
                f"no registered factorization for kernel {self.kernel_name!r}")

    @property
    def branch_points(self):
        return (self.params.k, -self.params.k)

    def K(self, xi):
        # branch with cuts along the rays -k - R+ and k + R+, i.e. the
        # product of the half-plane factors; equals the positive-imaginary
        # root convention on the real axis
        return self.K_plus(xi) * self.K_minus(xi)

    def K_plus(self, xi):
        return 1.0 / np.sqrt(self.params.k + np.asarray(xi, dtype=complex))

    def K_minus(self, xi):
        return 1.0 / np.sqrt(self.params.k - np.asarray(xi, dtype=complex))

    def T(self, xi):
        return 1.0 / (np.asarray(xi, dtype=complex) + self.params.k1)


@dataclass
class WH1DSolution:
    problem: WH1DProblem

    def W_plus(self, xi):
        p = self.problem.params
        xi = np.asarray(xi, dtype=complex)
        return np.sqrt(p.k + p.k1) * np.sqrt(p.k + xi) / (xi + p.k1)

    def U_minus(self, xi):
        p = self.problem.params
        xi = np.asarray(xi, dtype=complex)
        return (1.0 - np.sqrt(p.k + p.k1) / np.sqrt(p.k - xi)) / (xi + p.k1)

    def residual(self, xi):
        pr = self.problem
        return pr.K(xi) * self.W_plus(xi) + self.U_minus(xi) - pr.T(xi)


def solve_wh1d(problem: WH1DProblem) -> WH1DSolution:
    """Closed-form solve by factorization and pole removal."""
    return WH1DSolution(problem)


def continue_along(problem: WH1DProblem, word: LoopWord, xi) -> complex:
    """Value of W+ continued along the loop word, by the branch-ratio
    recurrence (a lower loop leaves U- fixed and re-derives W+ through the
    new kernel branch; an upper loop does the opposite to U-)."""
    sol = solve_wh1d(problem)
    xi = complex(xi)
    k = problem.params.k
    if min(abs(xi - k), abs(xi + k)) < 1e-8 * abs(k):
        raise BranchPointHit("continuation evaluated at a branch point")
    w = complex(sol.W_plus(xi))
    u = complex(sol.U_minus(xi))
    b = complex(problem.K(xi))
    t = complex(problem.T(xi))
    for loop in word.loops:
        if loop.times % 2:
            b = -b  # one crossing of a square-root branch point
        if loop.sign == "-":
            w = (t - u) / b
        else:
            u = t - b * w
    return w


def continue_path_oracle(problem: WH1DProblem, word: LoopWord, xi,
                         radius_factor: float = 0.3,
                         n_steps: int = 4000) -> complex:
    """Brute-force continuation of the explicit W+ along the actual loop
    path (circles of radius ``radius_factor * |k|`` around the encircled
    branch point, joined by straight spurs), tracking the only multivalued
    factor sqrt(k + xi) by nearest-root stepping."""
    p = problem.params
    xi = complex(xi)
    r = radius_factor * abs(p.k)
    pts = [xi]
    for loop in word.loops:
        center = p.k if loop.sign == "+" else -p.k
        start = center + r * (xi - center) / abs(xi - center)
        seg1 = np.linspace(pts[-1], start, n_steps // 8)
        pts.extend(seg1[1:])
        th0 = np.angle(start - center)
        th = th0 + np.linspace(0.0, 2 * np.pi * loop.times, n_steps)
        pts.extend(center + r * np.exp(1j * th[1:]))
        seg2 = np.linspace(pts[-1], xi, n_steps // 8)
        pts.extend(seg2[1:])
    path = np.asarray(pts)
    root = track_sqrt(p.k + path, anchor=np.sqrt(p.k + xi))
    return complex(np.sqrt(p.k + p.k1) * root / (xi + p.k1))
