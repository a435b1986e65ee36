"""Integer-order polylogarithms on [-1, 1] and floating harmonic numbers.

Evaluation strategy for Li_s(x), s >= 2:

  * |x| <= 1/2          direct Taylor series (geometric convergence),
  * x in (1/2, 1)       expansion in powers of z = log x around x = 1,
  * x in (-1, -1/2)     square the argument: Li_s(x) = 2^(1-s) Li_s(x^2)
                        - Li_s(-x), which lands both calls in the branches
                        above,
  * x = 1, x = -1       zeta(s) and -(1 - 2^(1-s)) zeta(s).

The expansion around x = 1 is the workhorse: the integral representations
evaluate Li_s(1-t) with t approaching 0, where the raw series is uselessly
slow. It needs zeta at non-positive integers, which come from Bernoulli
numbers; its radius of convergence is |z| < 2 pi, so on (1/2, 1) each term
shrinks by better than a factor of 9.

polylog_one_minus(s, t) computes Li_s(1-t) directly from t, so callers
integrating toward t = 0 keep full accuracy even when 1-t is not
representable as a double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constants import euler_gamma, zeta
from .exactmath import bernoulli

__all__ = [
    "PolylogEval",
    "polylog",
    "polylog_eval",
    "polylog_one_minus",
    "dilog_neg_ratio",
    "harmonic_float",
    "POLYLOG_ABS_ERROR",
]

# Contractual accuracy of polylog on its whole domain; observed errors sit
# two orders of magnitude below this.
POLYLOG_ABS_ERROR = 1e-14

# Relative series cutoff, with an absolute floor against underflow loops.
_REL_CUTOFF = 1e-17
_ABS_FLOOR = 1e-308


@dataclass(frozen=True)
class PolylogEval:
    """One polylogarithm evaluation with its guaranteed error bound."""

    order: int
    argument: float
    value: float
    abs_error_bound: float


def _zeta_nonpositive(j: int) -> float:
    """zeta at an integer j <= 0 via Bernoulli numbers (exact, then rounded)."""
    if j == 0:
        return -0.5
    n = -j
    if n % 2 == 0:
        return 0.0
    m = (n + 1) // 2
    return float(-bernoulli(2 * m) / Fraction(2 * m))


def _zeta_any_integer(j: int) -> float:
    if j >= 2:
        return zeta(j)
    if j <= 0:
        return _zeta_nonpositive(j)
    raise ValueError("zeta(1) diverges")  # callers never request j = 1


def _taylor(s: int, x: float) -> float:
    """sum x^k / k^s for |x| <= 1/2 (about 57 terms for full precision)."""
    total = x
    k = 1
    while k < 300:
        k += 1
        term = x**k / float(k) ** s
        total += term
        if abs(term) < _REL_CUTOFF * abs(total) or abs(term) < _ABS_FLOOR:
            break
    return total


def _harmonic_small(n: int) -> float:
    return math.fsum(1.0 / k for k in range(1, n + 1))


def _log_expansion(s: int, z: float) -> float:
    """Li_s(e^z) for z < 0, |z| < log 2 + eps, integer s >= 2.

    Li_s(e^z) = sum_{k >= 0, k != s-1} zeta(s-k) z^k / k!
                + z^(s-1)/(s-1)! * (H_{s-1} - log(-z))

    Terms with s-k a negative even integer vanish identically, so the
    stopping rule requires two consecutive negligible terms.
    """
    total = z ** (s - 1) / math.factorial(s - 1) * (
        _harmonic_small(s - 1) - math.log(-z)
    )
    k = 0
    z_pow = 1.0  # z^k / k!
    small_run = 0
    while k <= 120:
        if k != s - 1:
            term = _zeta_any_integer(s - k) * z_pow
            total += term
            if k > s and abs(term) <= _REL_CUTOFF * abs(total):
                small_run += 1
                if small_run >= 2:
                    break
            else:
                small_run = 0
        k += 1
        z_pow *= z / k
    return total


def polylog(s: int, x: float) -> float:
    """Polylogarithm Li_s(x) = sum_{n>=1} x^n / n^s for s >= 0, x in [-1, 1].

    x = 1 requires s >= 2 (the series is zeta(s) there and diverges below).
    Closed forms are used for the two lowest orders: Li_0(x) = x/(1-x) and
    Li_1(x) = -log(1-x).
    """
    if not isinstance(s, int) or isinstance(s, bool):
        raise ValueError(f"polylog requires an integer order, got {s!r}")
    if s < 0:
        raise ValueError(f"polylog requires order s >= 0, got {s}")
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"polylog argument must lie in [-1, 1], got {x}")
    if x == 1.0:
        if s < 2:
            raise ValueError(f"polylog(s={s}, x=1) diverges")
        return zeta(s)
    if s == 0:
        return x / (1.0 - x)
    if s == 1:
        return -math.log1p(-x)
    if x == -1.0:
        return -(1.0 - 2.0 ** (1 - s)) * zeta(s)
    if abs(x) <= 0.5:
        return _taylor(s, x)
    if x > 0.0:
        return _log_expansion(s, math.log(x))
    # x in (-1, -1/2): argument-squaring identity.
    return 2.0 ** (1 - s) * polylog(s, x * x) - polylog(s, -x)


def polylog_eval(s: int, x: float) -> PolylogEval:
    """polylog() packaged with its contractual error bound."""
    return PolylogEval(order=s, argument=x, value=polylog(s, x),
                       abs_error_bound=POLYLOG_ABS_ERROR)


def polylog_one_minus(s: int, t: float) -> float:
    """Li_s(1 - t) for t in [0, 1], accurate uniformly in t.

    For t < 1/2 this goes straight into the x = 1 expansion with
    z = log1p(-t), so t = 1e-300 is as accurate as t = 0.3; for t >= 1/2
    the complement 1 - t is exact in floating point and the ordinary
    polylog branches take over.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"polylog_one_minus requires t in [0, 1], got {t}")
    if t >= 0.5:
        return polylog(s, 1.0 - t)
    if s == 1:
        if t == 0.0:
            raise ValueError("polylog_one_minus(1, 0) diverges")
        return -math.log(t)
    if s == 0:
        return (1.0 - t) / t
    if t == 0.0:
        return zeta(s)
    return _log_expansion(s, math.log1p(-t))


def dilog_neg_ratio(u: float) -> float:
    """Li_2(-(1-u)/u) for u in (0, 1], evaluated through the Landen form.

    The identity Li_2(-(1-u)/u) = -log(u)^2/2 - Li_2(1-u) trades an
    argument that runs off to -infinity as u -> 0 for quantities that stay
    tame on the whole interval; this function IS that right-hand side, so
    the identity itself is only testable against an independent Li_2 on
    the subdomain u >= 1/2 where -(1-u)/u lands back in [-1, 0].
    """
    if not 0.0 < u <= 1.0:
        raise ValueError(f"dilog_neg_ratio requires u in (0, 1], got {u}")
    if u == 1.0:
        return 0.0
    log_u = math.log(u)
    return -0.5 * log_u * log_u - polylog_one_minus(2, u)


def harmonic_float(n: int) -> float:
    """Floating-point harmonic number H_n.

    Compensated summation up to n = 10^6; beyond that the asymptotic
    expansion log n + gamma + 1/(2n) - 1/(12 n^2) + 1/(120 n^4) is already
    accurate to well below a rounding error.
    """
    if n < 1:
        raise ValueError(f"harmonic_float requires n >= 1, got {n}")
    if n <= 1_000_000:
        return math.fsum(1.0 / k for k in range(1, n + 1))
    x = float(n)
    return (
        math.log(x)
        + euler_gamma()
        + 0.5 / x
        - 1.0 / (12.0 * x * x)
        + 1.0 / (120.0 * x**4)
    )
