import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from passperf import (
    IntegrationError,
    chebyshev_rule,
    integrate_interval,
    integrate_unit,
    j0,
    j1,
    refined_interval,
    refined_unit,
)


def test_single_node_rule():
    rule = chebyshev_rule(1)
    assert rule.nodes[0] == 0.0


def test_two_node_rule():
    rule = chebyshev_rule(2)
    assert rule.nodes[0] == pytest.approx(math.sqrt(2) / 2, rel=1e-15)
    assert rule.nodes[1] == pytest.approx(-math.sqrt(2) / 2, rel=1e-15)


def test_nodes_match_cosine_formula_and_decrease():
    for n in (3, 7, 64):
        rule = chebyshev_rule(n)
        k = np.arange(1, n + 1)
        expected = np.cos((2 * k - 1) * np.pi / (2 * n))
        assert np.allclose(rule.nodes, expected, rtol=0, atol=1e-15)
        assert np.all(np.diff(rule.nodes) < 0)


@pytest.mark.parametrize("n", [2, 8, 64])
def test_node_symmetry_exact(n):
    rule = chebyshev_rule(n)
    assert np.array_equal(rule.nodes, -rule.nodes[::-1])


def test_rejects_zero_order():
    with pytest.raises(ValueError):
        chebyshev_rule(0)


def test_constant_integral():
    assert integrate_unit(lambda t: np.ones_like(t), 64) == pytest.approx(2.0, abs=1e-3)
    assert integrate_interval(lambda x: 3.0, -2.0, 5.0, 64) == pytest.approx(21.0, rel=1e-3)


def test_sine_integral():
    assert integrate_interval(np.sin, 0.0, math.pi, 64) == pytest.approx(2.0, abs=1e-4)


def test_empty_interval_is_exactly_zero():
    assert integrate_interval(np.exp, 1.3, 1.3, 64) == 0.0
    assert refined_interval(np.exp, 1.3, 1.3, 64) == 0.0


def test_refined_rule_is_much_tighter():
    assert refined_unit(lambda t: np.ones_like(t), 64) == pytest.approx(2.0, abs=1e-7)
    assert refined_interval(np.sin, 0.0, math.pi, 64) == pytest.approx(2.0, abs=1e-7)
    # doubling the order moves a smooth integral by well under 1e-6 relative
    f = lambda t: 1.0 / (2.0 + t)
    assert refined_unit(f, 64) == pytest.approx(refined_unit(f, 128), rel=1e-7)


def test_non_finite_integrand_reports_node():
    with pytest.raises(IntegrationError, match="node"):
        integrate_unit(lambda t: np.where(t > 0, 1.0, np.inf), 16)


def test_j1_at_zero_keeps_antiderivative_constant():
    a, b = 3.0, 0.7
    assert j1(0.0, a, b) == pytest.approx((a * math.log(a) - a) / (2 * b), rel=1e-14)


def test_j0_zero_curvature_limit():
    assert j0(2.5, 4.0, 0.0) == pytest.approx(2.5 * math.log(4.0), rel=1e-14)
    assert j1(2.5, 4.0, 0.0) == pytest.approx(0.5 * 2.5**2 * math.log(4.0), rel=1e-14)


def test_j_rejects_bad_arguments():
    with pytest.raises(ValueError):
        j0(1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        j1(1.0, -2.0, 1.0)
    with pytest.raises(ValueError):
        j0(1.0, 1.0, -1.0)


def test_derivative_matches_integrand_by_finite_differences():
    rng = np.random.default_rng(42)
    for _ in range(50):
        a = rng.uniform(0.1, 50.0)
        b = rng.uniform(0.0, 10.0)
        u = rng.uniform(0.1, 20.0)
        h = 1e-5 * max(u, 1.0)
        d0 = (j0(u + h, a, b) - j0(u - h, a, b)) / (2 * h)
        assert d0 == pytest.approx(math.log(a + b * u**2), rel=1e-6, abs=1e-6)
        d1 = (j1(u + h, a, b) - j1(u - h, a, b)) / (2 * h)
        assert d1 == pytest.approx(u * math.log(a + b * u**2), rel=1e-6, abs=1e-6)


@given(
    st.floats(min_value=0.1, max_value=30.0),
    st.floats(min_value=1e-3, max_value=5.0),
    st.floats(min_value=0.0, max_value=8.0),
    st.floats(min_value=0.05, max_value=8.0),
)
@settings(max_examples=40, deadline=None)
def test_fundamental_theorem(a, b, u1, width):
    u2 = u1 + width
    numeric, _ = quad(lambda u: math.log(a + b * u * u), u1, u2, limit=200, epsrel=1e-12)
    closed = j0(u2, a, b) - j0(u1, a, b)
    assert closed == pytest.approx(numeric, rel=1e-8, abs=1e-10)
    numeric1, _ = quad(lambda u: u * math.log(a + b * u * u), u1, u2, limit=200, epsrel=1e-12)
    closed1 = j1(u2, a, b) - j1(u1, a, b)
    assert closed1 == pytest.approx(numeric1, rel=1e-8, abs=1e-10)


def test_j_functions_broadcast_over_arrays():
    a = np.array([1.0, 2.0, 5.0])
    out = j0(1.5, a, 0.3)
    assert out.shape == (3,)
    assert out[1] == pytest.approx(j0(1.5, 2.0, 0.3), rel=1e-15)
    mixed = j1(np.array([0.5, 1.0]), 2.0, np.array([0.0, 1.0]))
    assert mixed[0] == pytest.approx(j1(0.5, 2.0, 0.0))
    assert mixed[1] == pytest.approx(j1(1.0, 2.0, 1.0))
