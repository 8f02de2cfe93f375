"""Sum-split operators: rational oracle, reconstruction, idempotence."""

import numpy as np
import pytest

from qpwh import default_params, gamma_factor
from qpwh.errors import DecayError, PoleProximity
from qpwh.sumsplit import (StripFunction, cauchy_split, pole_removal_split,
                           split_operator)


def test_rational_plus_part_oracle():
    # f = 1/(xi^2+4): the plus part keeps the pole at -2i: i/(4(xi+2i))
    f = StripFunction(lambda z: 1.0 / (z * z + 4.0), half_width=1.5, decay=2.0)
    plus = split_operator(f, 1, "+")
    for xi in (0.3, -1.2 + 0.4j, 2.0 - 0.3j):
        want = 1j / (4.0 * (xi + 2j))
        assert abs(plus(xi) - want) < 1e-10


def test_plus_minus_reconstruction():
    rng = np.random.default_rng(5)
    funcs = [
        StripFunction(lambda z: 1.0 / (z * z + 4.0), 1.5, 2.0),
        StripFunction(lambda z: z / (z * z + 9.0) ** 1.5, 2.0, 2.0),
        StripFunction(lambda z: np.exp(-z * z / 25.0), 2.0, 2.0),
        StripFunction(lambda z: 1.0 / ((z - 3j) * (z + 2.5j)), 1.8, 2.0),
        StripFunction(lambda z: (z + 1.0) / (z ** 4 + 16.0), 1.6, 3.0),
    ]
    pts = rng.uniform(-6, 6, 100) + 1j * rng.uniform(-0.4, 0.4, 100)
    for f in funcs:
        plus = split_operator(f, 1, "+", kappa=0.6)
        minus = split_operator(f, 1, "-", kappa=0.6)
        vals = plus(pts) + minus(pts) - f(pts)
        assert np.max(np.abs(vals)) < 1e-10


def test_idempotence_on_plus_function():
    # already a plus function (pole below the strip): minus part vanishes
    f = StripFunction(lambda z: 1.0 / (z + 2j) ** 2, 1.5, 2.0)
    minus = split_operator(f, 1, "-")
    pts = np.array([0.1, 1.5 - 0.2j, -3.0 + 0.3j])
    assert np.max(np.abs(minus(pts))) < 1e-10


def test_two_variable_axis_split():
    p = default_params()

    def f2(xi1, xi2):
        return 1.0 / ((np.asarray(xi2) ** 2 + 4.0) * (np.asarray(xi1) - 3j))

    f = StripFunction(f2, half_width=1.5, decay=2.0, nvars=2)
    val = cauchy_split(f, 2, "+", (0.5, 0.25))
    want = (1j / (4.0 * (0.25 + 2j))) / (0.5 - 3j)
    assert abs(val - want) < 1e-10


def test_decay_guard():
    f = StripFunction(lambda z: 1.0 / np.sqrt(4.0 + z), 1.0, decay=0.3)
    with pytest.raises(DecayError):
        split_operator(f, 1, "+")


def test_split_near_line_guard():
    f = StripFunction(lambda z: 1.0 / (z * z + 4.0), 1.5, 2.0)
    plus = split_operator(f, 1, "+", kappa=0.6)
    with pytest.raises(PoleProximity):
        plus(0.123 - 0.6j)  # exactly on the integration line


def test_pole_removal_rational():
    # partial fractions oracle: f = 1/((xi+2.5j)(xi-4j)) with the declared
    # pole at -2.5j
    a, b = -2.5j, 4j
    f = StripFunction(lambda z: 1.0 / ((z - a) * (z - b)), 1.5, 2.0)
    reg, pole_part, half = pole_removal_split(f, a)
    assert half == "+"
    res_exact = 1.0 / (a - b)
    for xi in (0.3, 1.0 + 0.5j, -2.0):
        assert abs(pole_part(xi) - res_exact / (xi - a)) < 1e-8
        assert abs(reg(xi) + pole_part(xi) - f(xi)) < 1e-12


def test_pole_removal_matches_display_instance():
    # the kernel-factor instance: f(xi2) = gamma(xi1,-xi2)/((xi1+k1)(xi2+k2))
    # splits into a regular part and gamma(xi1,k2)/((xi1+k1)(xi2+k2))
    p = default_params()
    xi1 = 0.4 + 0.2j

    def f(xi2):
        return gamma_factor(p, xi1, -np.asarray(xi2)) / ((xi1 + p.k1)
                                                         * (np.asarray(xi2) + p.k2))

    sf = StripFunction(f, half_width=0.5 * p.k2.imag, decay=0.5)
    reg, pole_part, half = pole_removal_split(sf, -p.k2)
    want_res = gamma_factor(p, xi1, p.k2) / (xi1 + p.k1)
    got_res = pole_part(1.0) * (1.0 + p.k2)
    assert abs(got_res - want_res) < 1e-6 * abs(want_res)
    # explicit two-term display reproduces f
    for xi2 in (0.7, -1.1 + 0.1j):
        two_term = (gamma_factor(p, xi1, -xi2) - gamma_factor(p, xi1, p.k2)) \
            / ((xi1 + p.k1) * (xi2 + p.k2)) + want_res / ((xi1 + p.k1) ** 0
                                                          * (xi2 + p.k2))
        assert abs(two_term - f(xi2)) < 1e-12


def test_pole_removal_entire_function():
    f = StripFunction(lambda z: np.exp(-z * z / 16.0), 1.0, 2.0)
    reg, pole_part, half = pole_removal_split(f, -3j)
    for xi in (0.0, 1.0, -2.0 + 0.2j):
        assert abs(pole_part(xi)) < 1e-10
