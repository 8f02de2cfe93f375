"""Contour construction, serialization, plain and singular quadrature."""

import numpy as np
import pytest

from qpwh import (Contour, contour_from_json, default_params, desk_params,
                  discretize, integrate, integrate_product, make_loop,
                  make_P, make_shifted_line)
from qpwh.contours import LineSegment, uniform_panels
from qpwh.errors import InnerFailure, SingularityOnContour
from qpwh.quadrature import fixed_product


def test_shifted_line_geometry():
    c = make_shifted_line(0.5j)
    d = discretize(c)
    assert np.allclose(d.z.imag, 0.5)
    assert d.z.real[0] < -100 and d.z.real[-1] > 100  # tails reach far out


def test_line_oscillatory_residue_oracle():
    # int_R exp(iz)/(z^2+1) dz = pi/e  (close upward, pole at i)
    # oscillation has constant magnitude along any horizontal line, so the
    # absolute tolerance is set by the phase-resolved tail budget
    c = make_shifted_line(0.0, R=60.0)
    res = integrate(lambda z: np.exp(1j * z) / (z * z + 1), c, tol=2e-5)
    assert abs(res.value - np.pi / np.e) < 5e-5


def test_line_half_residue_sign_convention():
    # f = 1/(z-2i) decays like 1/z: regularize with the same integrand's
    # known closed form: int_R [1/(z-2i) - 1/(z+2i)] dz = 2*pi*i (pole above)
    c = make_shifted_line(0.0, R=50.0)
    res = integrate(lambda z: 1 / (z - 2j) - 1 / (z + 2j), c, tol=1e-10)
    assert abs(res.value - 2j * np.pi) < 1e-8


def test_pole_on_contour_raises():
    c = make_shifted_line(0.0, R=10.0)
    with pytest.raises(SingularityOnContour):
        # force node landing arbitrarily close via adaptive refinement
        integrate(lambda z: 1 / (z - 0.1234), c, tol=1e-12)


def test_orientation_reversal_negates():
    c = make_shifted_line(0.3j, R=30.0)
    f = lambda z: np.exp(-(z - 1.0) ** 2 / 6.0) / (z * z + 4)
    a = integrate(f, c, tol=1e-10).value
    b = integrate(f, c.reversed(), tol=1e-10).value
    assert abs(a + b) < 1e-9


def test_deformation_invariance_between_lines():
    # integrand analytic between the Im=0.3 and Im=0.8 lines and
    # exponentially damped along both
    f = lambda z: np.exp(-(z - 1.0) ** 2 / 6.0) / (z * z + 4)
    a = integrate(f, make_shifted_line(0.3j, R=40.0), tol=1e-10).value
    b = integrate(f, make_shifted_line(0.8j, R=40.0), tol=1e-10).value
    assert abs(a - b) < 1e-8


def test_loop_residue():
    c = make_loop(1.0 + 1.0j, 0.3)
    res = integrate(lambda z: 1.0 / (z - (1 + 1j)), c, tol=1e-12)
    assert abs(res.value - 2j * np.pi) < 1e-10


def test_json_round_trip():
    p = default_params()
    for c in (make_shifted_line(0.3j), make_loop(0.5j, 0.2), make_P(p)):
        c2 = contour_from_json(c.to_json(), params=p)
        d1, d2 = discretize(c), discretize(c2)
        assert np.allclose(d1.z, d2.z)
        assert np.allclose(d1.w, d2.w)


def test_truncation_tail_doubling_invariance():
    # doubling the core radius changes the result far below tol for an
    # integrand with the guaranteed decay
    f = lambda z: 1.0 / (z * z + 4) ** 1.25
    a = integrate(f, make_shifted_line(0.0, R=40.0), tol=1e-10).value
    b = integrate(f, make_shifted_line(0.0, R=80.0), tol=1e-10).value
    assert abs(a - b) < 1e-10


def test_hook_closed_for_analytic_integrands():
    # shores cancel for functions analytic across h- (truncated hook; the
    # residual is the end-gap contribution, of order the shore offset)
    p = desk_params()
    c = make_P(p, offset=1e-4, with_tails=False)
    res = integrate(lambda z: 1.0 / (z - 2j), c, tol=1e-9)
    # residual = end-gap contribution ~ 2*offset*|f(end)|
    assert abs(res.value) < 5e-5
    # pole off the cut below: 1/(xi+k2) with -k2 away from h-
    res2 = integrate(lambda z: 1.0 / (z + p.k2), c, tol=1e-9)
    assert abs(res2.value) < 5e-5


def test_hook_jump_extraction():
    # a function with a jump across h- integrates on the hook to the
    # shore-difference integral of the jump; use a decaying sqrt-type
    # integrand whose cut is exactly h-
    p = desk_params()
    from qpwh import sqrt_upper

    def f(z):
        return sqrt_upper(p, z) / (z - 2j) ** 3

    c = make_P(p, offset=1e-5, with_tails=False)
    res = integrate(f, c, tol=1e-10)
    # reference: much smaller offset approximates the shore limit
    c_ref = make_P(p, offset=1e-7, with_tails=False)
    ref = integrate(f, c_ref, tol=1e-10)
    assert abs(res.value) > 1e-3  # genuinely nonzero jump integral
    assert abs(res.value - ref.value) < 1e-3 * abs(ref.value) + 1e-7


def test_product_separable():
    # separable integrand: iterated result equals the product of the two
    # one-dimensional integrals
    c = make_shifted_line(0.3j, R=30.0)
    g = lambda z: np.exp(-z * z / 9.0) / (z - 2j)
    h = lambda z: np.exp(-z * z / 9.0) / (z + 1 - 3j)
    f = lambda z1, z2: g(z1) * h(z2)
    res = integrate_product(f, c, c, tol=1e-9)
    expected = integrate(g, c, tol=1e-11).value * integrate(h, c, tol=1e-11).value
    assert abs(res.value - expected) < 1e-8


def test_product_cauchy_pair():
    # damped pole pair off the lines: iterated result equals the product of
    # the two one-dimensional Cauchy integrals
    a, b = 1.0 + 1.5j, -0.5 + 2.0j
    c = make_shifted_line(0.3j, R=30.0)
    g = lambda z: np.exp(-z * z / 16.0) / (z - a)
    h = lambda z: np.exp(-z * z / 16.0) / (z - b)
    res = integrate_product(lambda z1, z2: g(z1) * h(z2), c, c, tol=1e-8)
    expected = integrate(g, c, tol=1e-11).value * integrate(h, c, tol=1e-11).value
    assert abs(res.value - expected) < 1e-7 * abs(expected) + 1e-9


def test_inner_failure_carries_outer_node():
    c1 = Contour([LineSegment(-1, 1, panels=uniform_panels(2))])
    c2 = Contour([LineSegment(-1, 1, panels=uniform_panels(2))])
    with pytest.raises(InnerFailure) as exc:
        integrate_product(lambda z1, z2: 1.0 / (z1 - 0.07), c1, c2, tol=1e-12)
    assert exc.value.outer_node is not None


def test_fixed_product_matches_iterated():
    c1 = make_shifted_line(0.3j, R=24.0,
                           edges=list(np.linspace(-24, 24, 33)))
    d1 = discretize(c1, p=10)
    f = lambda z1, z2: (np.exp(-(z1 * z1 + z2 * z2) / 9.0)
                        / ((z1 ** 2 + 1) * (z2 ** 2 + 4)))
    v = fixed_product(f, d1, d1)
    ref = integrate_product(f, c1, c1, tol=1e-10)
    assert abs(v - ref.value) < 1e-8
