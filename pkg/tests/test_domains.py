"""Point classification against the cut geometry."""

import numpy as np
import pytest

from qpwh import DomainLabel, classify_point, default_params, distance_to_h, h_point


@pytest.fixture(scope="module")
def params():
    return default_params()


def test_away_from_cut_upper(params):
    labels = classify_point(params, 2j)
    assert DomainLabel.UHP in labels
    assert DomainLabel.H_PLUS in labels
    assert DomainLabel.CURVE_H_PLUS not in labels


def test_minus_k_is_on_h_minus(params):
    labels = classify_point(params, -params.k)
    assert DomainLabel.CURVE_H_MINUS in labels
    assert DomainLabel.HOOK in labels
    assert DomainLabel.H_MINUS not in labels


def test_derived_distance_point(params):
    # -0.5 - 3i is well inside the cut lower half-plane, off the curve
    z = -0.5 - 3.0j
    d, _ = distance_to_h(params, z, -1)
    assert d > 0.3
    labels = classify_point(params, z)
    assert labels == {DomainLabel.H_MINUS}


def test_curve_points_classify_on_curve(params):
    for tau in (0.0, 0.5, 1.0, 2.0, 7.0):
        zp = complex(h_point(params, tau, +1))
        zm = complex(h_point(params, tau, -1))
        assert DomainLabel.CURVE_H_PLUS in classify_point(params, zp)
        labm = classify_point(params, zm)
        assert DomainLabel.CURVE_H_MINUS in labm and DomainLabel.HOOK in labm


def test_real_axis_label(params):
    labels = classify_point(params, 3.0)
    assert DomainLabel.REAL_AXIS in labels
    assert DomainLabel.UHP not in labels


def test_h_curve_shape(params):
    # flat part hugs the real axis from below between -1 and 0, tail goes to
    # -i*infinity near the negative imaginary axis
    taus = np.linspace(0, 0.99, 50)
    pts = h_point(params, taus, -1)
    assert np.all(pts.imag < 0) and np.all(pts.real < 0)
    deep = complex(h_point(params, 30.0, -1))
    assert deep.imag < -25 and abs(deep.real) < 0.1
