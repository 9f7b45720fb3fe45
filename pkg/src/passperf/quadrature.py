"""Gauss-Chebyshev quadrature (first kind) and logarithmic antiderivatives.

The N-node rule approximates int_{-1}^{1} f(t) dt by
(pi/N) * sum_k sqrt(1 - t_k^2) f(t_k) with t_k = cos((2k - 1) pi / (2N)).
Its plain form carries an O(1/N^2) endpoint error; the ``refined_*``
variants apply one Richardson step (N and 2N evaluations), reducing the
error to O(1/N^4) so that doubling N moves smooth integrals by less than
1e-6 relative at N = 64.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class IntegrationError(RuntimeError):
    """The integrand produced a non-finite value at a quadrature node."""


@dataclass(frozen=True)
class QuadratureRule:
    order: int
    nodes: np.ndarray  # strictly decreasing, in (-1, 1)
    weights: np.ndarray  # (pi/N) * sqrt(1 - t_k^2)


@lru_cache(maxsize=128)
def chebyshev_rule(n_nodes: int) -> QuadratureRule:
    """First-kind Chebyshev nodes and weights of the given order."""
    if n_nodes < 1:
        raise ValueError(f"quadrature order must be >= 1, got {n_nodes!r}")
    k = np.arange(1, n_nodes + 1)
    theta = (2.0 * k - 1.0) * np.pi / (2.0 * n_nodes)
    nodes = np.cos(theta)
    weights = (np.pi / n_nodes) * np.sin(theta)
    # Symmetrise so that t_k == -t_{N+1-k} holds exactly in floating point.
    nodes = 0.5 * (nodes - nodes[::-1])
    weights = 0.5 * (weights + weights[::-1])
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(order=n_nodes, nodes=nodes, weights=weights)


def _evaluate(f, nodes: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(nodes), dtype=float)
    except (TypeError, ValueError):
        vals = np.asarray([float(f(t)) for t in nodes])
    if vals.ndim == 0:
        vals = np.full(nodes.shape, vals.item())
    bad = ~np.isfinite(vals)
    if np.any(bad):
        t = nodes[bad][0]
        raise IntegrationError(f"integrand not finite at node t={t!r}")
    return vals


def integrate_unit(f, n_nodes: int) -> float:
    """Approximate int_{-1}^{1} f(t) dt with the plain N-node rule."""
    rule = chebyshev_rule(n_nodes)
    return float(rule.weights @ _evaluate(f, rule.nodes))


def integrate_interval(f, a: float, b: float, n_nodes: int) -> float:
    """Approximate int_a^b f(x) dx via the affine map onto [-1, 1]."""
    if a == b:
        return 0.0
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * integrate_unit(lambda t: f(half * np.asarray(t) + mid), n_nodes)


def refined_unit(f, n_nodes: int) -> float:
    """Richardson-corrected unit integral: (4 I_{2N} - I_N) / 3."""
    return (4.0 * integrate_unit(f, 2 * n_nodes) - integrate_unit(f, n_nodes)) / 3.0


def refined_interval(f, a: float, b: float, n_nodes: int) -> float:
    if a == b:
        return 0.0
    return (
        4.0 * integrate_interval(f, a, b, 2 * n_nodes)
        - integrate_interval(f, a, b, n_nodes)
    ) / 3.0


def _check_log_args(a, b, u) -> None:
    if np.any(np.asarray(a) <= 0.0):
        raise ValueError("j0/j1 require a > 0 (logarithm of a non-positive value)")
    if np.any(np.asarray(b) < 0.0):
        raise ValueError("j0/j1 require b >= 0")
    if np.any(np.asarray(u) < 0.0):
        raise ValueError("j0/j1 require u >= 0")


def j0(u, a, b):
    """Antiderivative of ln(a + b u^2).

    u ln(a + b u^2) - 2u + 2 sqrt(a/b) arctan(u sqrt(b/a)); the exact b -> 0
    limit u ln(a) is used on the b == 0 branch.
    """
    _check_log_args(a, b, u)
    u, a, b = np.broadcast_arrays(
        np.asarray(u, float), np.asarray(a, float), np.asarray(b, float)
    )
    zero_b = b == 0.0
    b_safe = np.where(zero_b, 1.0, b)
    q = a + b * u**2
    general = (
        u * np.log(q)
        - 2.0 * u
        + 2.0 * np.sqrt(a / b_safe) * np.arctan(u * np.sqrt(b_safe / a))
    )
    out = np.where(zero_b, u * np.log(a), general)
    out = np.asarray(out)
    return out.item() if out.ndim == 0 else out


def j1(u, a, b):
    """Antiderivative of u ln(a + b u^2).

    ((a + b u^2) ln(a + b u^2) - (a + b u^2)) / (2 b); the exact b -> 0
    limit (u^2 / 2) ln(a) is used on the b == 0 branch (its additive
    constant is dropped, harmless in the definite differences callers form).
    """
    _check_log_args(a, b, u)
    u, a, b = np.broadcast_arrays(
        np.asarray(u, float), np.asarray(a, float), np.asarray(b, float)
    )
    zero_b = b == 0.0
    b_safe = np.where(zero_b, 1.0, b)
    q = a + b * u**2
    general = (q * np.log(q) - q) / (2.0 * b_safe)
    out = np.where(zero_b, 0.5 * u**2 * np.log(a), general)
    out = np.asarray(out)
    return out.item() if out.ndim == 0 else out
