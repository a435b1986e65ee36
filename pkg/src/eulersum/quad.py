"""Tanh-sinh (double-exponential) quadrature on finite intervals.

The change of variable x = a + (b - a) / (1 + exp(-pi sinh t)) pushes the
trapezoid nodes toward the endpoints at a doubly exponential rate, which
integrates endpoint singularities of log-power type to near machine
precision without any interval splitting. Levels halve the trapezoid step
(h = 2^-level, level = 1..12); previously evaluated nodes are reused, and
the error estimate is the difference between the last two levels.

Nodes are stored as the distance delta from the nearer endpoint together
with a weight, so positions stay meaningful down to delta ~ 1e-300; a node
whose floating-point position would collide with an endpoint is dropped on
that side only (integrands with endpoint singularities cannot be evaluated
there, and the skipped weights are negligible), while its mirror twin on
the other side keeps contributing.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = [
    "QuadratureResult",
    "QuadratureError",
    "integrate",
    "integrate2d",
    "MAX_LEVEL",
]

MAX_LEVEL = 12

# Nodes closer to an endpoint than this are never generated; their weights
# sit below the underflow threshold anyway.
_MIN_DELTA = 1e-300

_EPS = 2.0 ** -52


@dataclass
class QuadratureResult:
    """Outcome of one quadrature call.

    converged is the only trust signal: when it is False the value is the
    best available estimate and abs_error_estimate may be infinite.
    """

    value: float
    abs_error_estimate: float
    evaluations: int
    converged: bool
    message: str = ""


class QuadratureError(RuntimeError):
    """Raised by callers that need a converged value and did not get one."""

    def __init__(self, message: str, result: QuadratureResult):
        super().__init__(message)
        self.result = result


_TABLE_LOCK = threading.Lock()
_TABLES: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _level_table(level: int) -> tuple[np.ndarray, np.ndarray]:
    """(delta, weight) arrays for the nodes new at this level.

    Level 1 carries every node of the h = 1/2 mesh; higher levels carry the
    odd multiples of their step. delta is the unit-interval distance from
    either endpoint (the rule is symmetric); the weight is
    pi cosh(t) delta (1 - delta), with the center node t = 0 halved because
    the symmetric pair sum would count it twice.
    """
    if level in _TABLES:
        return _TABLES[level]
    with _TABLE_LOCK:
        if level in _TABLES:
            return _TABLES[level]
        h = 2.0**-level
        ks = range(0, 1_000_000) if level == 1 else range(1, 2_000_000, 2)
        deltas: list[float] = []
        weights: list[float] = []
        for k in ks:
            t = k * h
            y = math.pi * math.sinh(t)  # = 2 * (pi/2) sinh t
            delta = math.exp(-y) if y > 700.0 else 1.0 / (1.0 + math.exp(y))
            if delta < _MIN_DELTA:
                break
            w = math.pi * math.cosh(t) * delta * (1.0 - delta)
            if k == 0:
                w *= 0.5
            deltas.append(delta)
            weights.append(w)
        table = (np.asarray(deltas), np.asarray(weights))
        _TABLES[level] = table
        return table


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float,
    *,
    vectorized: bool = False,
    relative: bool = False,
    max_level: int = MAX_LEVEL,
) -> QuadratureResult:
    """Integrate f over (a, b) to absolute tolerance tol.

    f is never evaluated at a or b; singularities of log-power type at the
    endpoints are fine. With vectorized=True, f must accept a numpy array
    of abscissas and return the corresponding array of values (used by the
    2-D kernels, where per-point Python calls would dominate the runtime).
    relative=True switches the convergence test to tol * max(1, |value|);
    integrate2d uses it for inner integrals whose magnitude varies over
    hundreds of orders across the outer nodes.

    A non-finite integrand value at an interior node yields a failure
    result (converged False, infinite error estimate), never an exception.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if not a < b:
        raise ValueError(f"integration requires a < b, got ({a}, {b})")

    scale = b - a
    acc = 0.0
    evals = 0
    prev: float | None = None
    value = 0.0
    estimate = math.inf

    for level in range(1, max_level + 1):
        h = 2.0**-level
        deltas, weights = _level_table(level)
        x_lo = a + scale * deltas
        x_hi = b - scale * deltas
        # Collision guards apply per side: a node whose floating position
        # lands on an endpoint is dropped, but its mirror twin is kept (the
        # twin can carry real mass when the integrand is large near the
        # other end).
        keep_lo = x_lo > a
        keep_hi = x_hi < b
        x_lo, w_lo = x_lo[keep_lo], weights[keep_lo]
        x_hi, w_hi = x_hi[keep_hi], weights[keep_hi]
        if vectorized:
            f_lo = np.asarray(f(x_lo), dtype=float)
            f_hi = np.asarray(f(x_hi), dtype=float)
        else:
            f_lo = np.fromiter((f(x) for x in x_lo), dtype=float, count=len(x_lo))
            f_hi = np.fromiter((f(x) for x in x_hi), dtype=float, count=len(x_hi))
        evals += len(x_lo) + len(x_hi)
        block = float(np.sum(w_lo * f_lo) + np.sum(w_hi * f_hi))
        if not math.isfinite(block):
            return QuadratureResult(
                value=value,
                abs_error_estimate=math.inf,
                evaluations=evals,
                converged=False,
                message="non-finite integrand value at an interior node",
            )
        acc += block
        value = h * scale * acc
        if prev is not None:
            estimate = abs(value - prev)
            # Roundoff floor: a level difference of exactly zero does not
            # certify anything below one rounding of the result.
            reported = max(estimate, _EPS * (1.0 + abs(value)))
            threshold = tol * max(1.0, abs(value)) if relative else tol
            if reported < threshold:
                return QuadratureResult(
                    value=value,
                    abs_error_estimate=reported,
                    evaluations=evals,
                    converged=True,
                )
        prev = value

    return QuadratureResult(
        value=value,
        abs_error_estimate=estimate,
        evaluations=evals,
        converged=False,
        message=f"no convergence within {max_level} refinement levels",
    )


def integrate2d(
    f: Callable[[float, float], float],
    tol: float,
    *,
    vectorized_inner: bool = False,
    max_level: int = MAX_LEVEL,
) -> QuadratureResult:
    """Iterated tanh-sinh integral of f(t, u) over the open unit square.

    The outer rule runs over u with the inner integral over t resolved to
    tol/10 at every outer node (inner convergence is tested relative to the
    inner value, since the inner magnitude can grow like log^3 of the
    distance to the boundary). The reported error estimate adds the
    weighted sum of inner estimates to the outer level difference, and
    convergence is declared on that combined figure. Any inner failure
    makes the whole result non-converged.

    With vectorized_inner=True, f(t, u) must accept a numpy array for t.
    """
    if tol <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    inner_tol = tol / 10.0

    acc_val = 0.0
    acc_err = 0.0
    evals = 0
    prev: float | None = None
    value = 0.0
    estimate = math.inf

    def inner(u: float) -> QuadratureResult:
        return integrate(
            lambda t: f(t, u),
            0.0,
            1.0,
            inner_tol,
            vectorized=vectorized_inner,
            relative=True,
            max_level=max_level,
        )

    for level in range(1, max_level + 1):
        h = 2.0**-level
        deltas, weights = _level_table(level)
        for delta, w in zip(deltas.tolist(), weights.tolist()):
            for u in (delta, 1.0 - delta):
                if not 0.0 < u < 1.0:
                    continue  # endpoint collision guard
                r = inner(u)
                evals += r.evaluations
                if not r.converged:
                    return QuadratureResult(
                        value=value,
                        abs_error_estimate=math.inf,
                        evaluations=evals,
                        converged=False,
                        message=f"inner integral failed at u={u!r}: {r.message}",
                    )
                acc_val += w * r.value
                acc_err += w * r.abs_error_estimate
        value = h * acc_val
        inner_bound = h * acc_err
        if prev is not None:
            estimate = abs(value - prev) + inner_bound
            reported = max(estimate, _EPS * (1.0 + abs(value)))
            if reported < tol:
                return QuadratureResult(
                    value=value,
                    abs_error_estimate=reported,
                    evaluations=evals,
                    converged=True,
                )
        prev = value

    return QuadratureResult(
        value=value,
        abs_error_estimate=estimate,
        evaluations=evals,
        converged=False,
        message=f"no convergence within {max_level} outer refinement levels",
    )
