"""Numerical integration oracles.

Three independent engines:

- ``integrate_1d``: tanh-sinh (double exponential) quadrature on a finite
  interval.  The variable transform pushes the trapezoid nodes doubly
  exponentially toward the endpoints, so integrable endpoint singularities
  of log or inverse-square-root type converge at full precision without any
  special casing.
- ``integrate_periodic``: equal weight trapezoid rule for period-1 functions,
  with an optional phase offset so callers can dodge isolated zeros of a
  log-singular integrand.
- ``mc_torus``: plain Monte Carlo over the unit n-torus with a seeded PCG64
  generator (numpy's default_rng) for cross-platform reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

_T_MAX = 5.95          # (pi/2)*sinh(t) ~ 300 here; weights below are subnormal
_MAX_LEVEL = 11
_MIN_LEVEL = 4


@dataclass(frozen=True)
class Tolerance:
    abs_tol: float = 1e-12
    rel_tol: float = 0.0
    max_evals: int = 200_000

    def __post_init__(self):
        if not self.abs_tol >= 1e-15:
            raise ValueError("abs_tol must be >= 1e-15")
        if self.rel_tol < 0:
            raise ValueError("rel_tol must be >= 0")
        if self.max_evals < 10:
            raise ValueError("max_evals too small")

    def target(self, scale: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(scale))


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    evals: int
    converged: bool


# Cached tanh-sinh abscissas.  Level 0 holds every node at spacing h=1;
# level L > 0 holds only the new nodes (odd multiples of 2^-L).
# Each entry is (t>0 nodes as (s, 1-s, w) triples, weight at t=0 for level 0).
_levels: list[list[tuple[float, float, float]]] = []


def _build_level(level: int) -> list[tuple[float, float, float]]:
    h = 0.5**level
    ks = range(1, int(_T_MAX / h) + 1) if level == 0 else range(1, int(_T_MAX / h) + 1, 2)
    nodes = []
    for k in ks:
        t = k * h
        y = 0.5 * math.pi * math.sinh(t)
        if y > 300.0:
            break
        s = math.tanh(y)
        one_minus_s = 2.0 / (math.exp(2.0 * y) + 1.0)
        w = 0.5 * math.pi * math.cosh(t) / math.cosh(y) ** 2
        nodes.append((s, one_minus_s, w))
    return nodes


def _level_nodes(level: int) -> list[tuple[float, float, float]]:
    while len(_levels) <= level:
        _levels.append(_build_level(len(_levels)))
    return _levels[level]


def integrate_1d(f: Callable[[float], float], a: float, b: float,
                 tol: Tolerance | None = None) -> QuadResult:
    """Integrate f over [a, b] by tanh-sinh quadrature with level doubling.

    Raises ValueError on a > b, non-finite limits, or a non-finite integrand
    value at any node.  If the eval budget runs out first, the best estimate
    is returned with converged=False.

    Accuracy limit: integrands with an inverse-square-root endpoint blowup
    sampled through a plain f(x) interface hit a ~1e-8 double precision floor
    (the node's distance to the endpoint cannot be resolved below 1 ulp of
    the endpoint); log-type endpoint singularities are unaffected.  Callers
    needing such integrals to full precision should substitute the
    singularity away first (all in-package callers do).
    """
    if tol is None:
        tol = Tolerance()
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("integration limits must be finite")
    if a >= b:
        if a == b:
            return QuadResult(0.0, 0.0, 0, True)
        raise ValueError("require a < b")

    mid = 0.5 * (a + b)
    hw = 0.5 * (b - a)

    def node_sum(nodes) -> tuple[float, int]:
        acc = 0.0
        n = 0
        for s, oms, w in nodes:
            xp = b - hw * oms
            xm = a + hw * oms
            if xp < b:
                fp = f(xp)
                if not math.isfinite(fp):
                    raise ValueError(f"integrand returned non-finite value {fp} at x={xp}")
                acc += w * fp
                n += 1
            if xm > a:
                fm = f(xm)
                if not math.isfinite(fm):
                    raise ValueError(f"integrand returned non-finite value {fm} at x={xm}")
                acc += w * fm
                n += 1
        return acc, n

    f0 = f(mid)
    if not math.isfinite(f0):
        raise ValueError(f"integrand returned non-finite value {f0} at x={mid}")
    evals = 1
    raw = 0.5 * math.pi * f0  # t=0 node, weight pi/2
    s0, n0 = node_sum(_level_nodes(0))
    raw += s0
    evals += n0
    value = raw * hw  # h = 1 at level 0
    prev = value
    err = math.inf

    for level in range(1, _MAX_LEVEL + 1):
        h = 0.5**level
        s_new, n_new = node_sum(_level_nodes(level))
        evals += n_new
        # raw accumulates w*f over every node seen so far; the union of levels
        # 0..L is exactly the multiples of h = 2^-L, so S(h) = h * hw * raw.
        raw = raw + s_new
        value = raw * hw * h
        err = abs(value - prev)
        scale = tol.target(value)
        if level >= _MIN_LEVEL and err <= scale:
            return QuadResult(value, err, evals, True)
        prev = value
        if evals >= tol.max_evals:
            break
    return QuadResult(value, err, evals, False)


def integrate_periodic(f: Callable[[float], float], n_points: int, *,
                       phase: float | None = None,
                       rng: np.random.Generator | None = None) -> float:
    """Equal-weight trapezoid value of a period-1 function at n_points nodes.

    The nodes are (j + phase)/n_points; when an rng is supplied the phase is
    drawn uniformly from [0, 1).  Error control is the caller's job (double
    n_points and compare).
    """
    if n_points < 4:
        raise ValueError("n_points must be >= 4")
    if rng is not None:
        phase = float(rng.random())
    elif phase is None:
        phase = 0.0
    acc = 0.0
    for j in range(n_points):
        v = f((j + phase) / n_points)
        if not math.isfinite(v):
            raise ValueError(f"periodic integrand returned non-finite value at node {j}")
        acc += v
    return acc / n_points


def mc_torus(f: Callable[[np.ndarray], np.ndarray], dims: int, samples: int,
             seed: int, *, batch: int = 1 << 19, max_retries: int = 50) -> QuadResult:
    """Monte Carlo mean of f over the unit torus [0,1)^dims.

    ``f`` must be vectorized: it receives an (m, dims) array of points and
    returns m values.  Non-finite values are resampled (up to max_retries
    rounds) so measure-zero spikes of log|P| cannot poison the estimate.
    The result is reproducible for a fixed seed: batches are drawn and
    reduced in a fixed serial order from numpy's PCG64 stream.
    """
    if dims < 1:
        raise ValueError("dims must be >= 1")
    if samples < 1000:
        raise ValueError("samples must be >= 1000")
    rng = np.random.default_rng(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < samples:
        m = min(batch, samples - done)
        pts = rng.random((m, dims))
        vals = np.asarray(f(pts), dtype=float)
        if vals.shape != (m,):
            raise ValueError(f"mc_torus integrand returned shape {vals.shape}, wanted ({m},)")
        bad = ~np.isfinite(vals)
        retries = 0
        while bad.any():
            retries += 1
            if retries > max_retries:
                raise ValueError("mc_torus integrand kept returning non-finite values")
            repl = rng.random((int(bad.sum()), dims))
            vals[bad] = np.asarray(f(repl), dtype=float)
            bad = ~np.isfinite(vals)
        total += float(vals.sum())
        total_sq += float(np.square(vals).sum())
        done += m
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    stderr = math.sqrt(var / samples)
    return QuadResult(mean, stderr, samples, True)


def integrate_1d_value(f: Callable[[float], float], a: float, b: float,
                       abs_tol: float = 1e-12) -> float:
    """Shorthand: integrate and return the value, raising if not converged."""
    res = integrate_1d(f, a, b, Tolerance(abs_tol=abs_tol))
    if not res.converged:
        raise ValueError(f"quadrature failed to converge (err~{res.err_estimate:.2e})")
    return res.value


def double_quad(outer: tuple[float, float], inner_upper: Callable[[float], float],
                f: Callable[[float, float], float], abs_tol: float = 1e-9) -> float:
    """Two-level quadrature of f(theta, z) over a < theta < b, 0 < z < g(theta)."""
    a, b = outer

    def outer_integrand(theta: float) -> float:
        hi = inner_upper(theta)
        if hi <= 0.0:
            return 0.0
        return integrate_1d_value(lambda z: f(theta, z), 0.0, hi, abs_tol=abs_tol * 0.1)

    return integrate_1d_value(outer_integrand, a, b, abs_tol=abs_tol)
