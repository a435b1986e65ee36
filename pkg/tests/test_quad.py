"""Quadrature engine: the reference battery has independently known values."""

import math

import numpy as np
import pytest

from eulersum.constants import zeta
from eulersum.quad import QuadratureError, QuadratureResult, integrate, integrate2d


def battery():
    """(name, integrand, exact value) with exact values from closed forms
    that do not involve the quadrature (monomials, log moments, zeta)."""
    cases = [("one", lambda t: 1.0, 1.0), ("log", lambda t: math.log(t), -1.0)]
    for k in range(1, 6):
        cases.append((f"t^{k}", lambda t, k=k: t**k, 1.0 / (k + 1)))
    cases.append(
        ("log^2/(1-t)", lambda t: math.log(t) ** 2 / (1.0 - t), 2.0 * zeta(3))
    )
    cases.append(
        ("log^3/(1-u)", lambda u: math.log(u) ** 3 / (1.0 - u), -6.0 * zeta(4))
    )
    return cases


class TestIntegrate:
    def test_constant(self):
        r = integrate(lambda t: 1.0, 0.0, 1.0, 1e-15)
        assert r.converged
        assert abs(r.value - 1.0) <= 1e-15
        assert r.evaluations >= 1

    def test_euler_reference_integral(self):
        r = integrate(lambda t: math.log(t) ** 2 / (1.0 - t), 0.0, 1.0, 1e-12)
        assert r.converged
        assert abs(r.value - 2.404113806319188) <= 1e-11

    def test_quartic_log_reference_integral(self):
        r = integrate(lambda u: math.log(u) ** 3 / (1.0 - u), 0.0, 1.0, 1e-12)
        assert r.converged
        assert abs(r.value - (-6.493939402266829)) <= 1e-11

    @pytest.mark.parametrize("name,f,exact", battery())
    def test_error_estimate_honesty(self, name, f, exact):
        r = integrate(f, 0.0, 1.0, 1e-12)
        assert r.converged, name
        assert abs(r.value - exact) <= 10.0 * r.abs_error_estimate, name

    def test_converged_estimate_below_tolerance(self):
        for tol in (1e-6, 1e-10, 1e-12):
            r = integrate(lambda t: math.log(t), 0.0, 1.0, tol)
            assert r.converged
            assert r.abs_error_estimate <= tol

    def test_refinement_shrinks_estimates(self):
        estimates = [
            integrate(lambda t: math.log(t), 0.0, 1.0, tol).abs_error_estimate
            for tol in (1e-4, 1e-8, 1e-13)
        ]
        assert estimates[0] > estimates[1] > estimates[2]

    def test_interval_additivity(self):
        f = lambda t: t**5
        whole = integrate(f, 0.0, 1.0, 1e-13)
        left = integrate(f, 0.0, 0.3, 1e-13)
        right = integrate(f, 0.3, 1.0, 1e-13)
        combined_err = (
            left.abs_error_estimate + right.abs_error_estimate
        )
        assert abs(whole.value - (left.value + right.value)) <= 2.0 * max(
            combined_err, whole.abs_error_estimate
        )

    def test_general_interval(self):
        r = integrate(math.sin, 0.0, math.pi, 1e-13)
        assert abs(r.value - 2.0) <= 1e-12

    def test_near_endpoint_pole(self):
        # 1/(t + u) with u tiny: pole just outside the interval; nodes must
        # keep resolving the hump at scale u near the left endpoint.
        u = 1e-12
        r = integrate(lambda t: math.log(t) / (t + u - t * u), 0.0, 1.0, 1e-9,
                      relative=True)
        lnu = math.log(u)
        exact = (-0.5 * lnu * lnu - zeta(2)) / (1.0 - u)  # leading closed form
        assert r.converged
        assert abs(r.value - exact) <= 1e-5 * abs(exact)

    def test_vectorized_matches_scalar(self):
        f_scalar = lambda t: math.log(t) ** 2 / (1.0 - t)
        f_vector = lambda t: np.log(t) ** 2 / (1.0 - t)
        a = integrate(f_scalar, 0.0, 1.0, 1e-12)
        b = integrate(f_vector, 0.0, 1.0, 1e-12, vectorized=True)
        assert a.value == b.value
        assert a.evaluations == b.evaluations

    def test_non_finite_interior_value_fails_cleanly(self):
        r = integrate(lambda t: float("inf") if 0.4 < t < 0.6 else 1.0, 0.0, 1.0, 1e-10)
        assert not r.converged
        assert math.isfinite(r.value)
        assert r.message != ""

    def test_nan_integrand_fails_cleanly(self):
        r = integrate(lambda t: float("nan"), 0.0, 1.0, 1e-10)
        assert not r.converged
        assert math.isfinite(r.value)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 0.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 0.0, 1.0, -1e-10)
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 1.0, 0.0, 1e-10)
        with pytest.raises(ValueError):
            integrate(lambda t: 1.0, 0.5, 0.5, 1e-10)

    def test_unreachable_tolerance_reports_non_convergence(self):
        r = integrate(lambda t: math.log(t), 0.0, 1.0, 1e-18)
        assert not r.converged
        assert "levels" in r.message


class TestIntegrate2d:
    def test_unit(self):
        r = integrate2d(lambda t, u: 1.0, 1e-10)
        assert r.converged
        assert abs(r.value - 1.0) <= 1e-10

    def test_separable_product(self):
        r = integrate2d(lambda t, u: t * u, 1e-10)
        assert r.converged
        assert abs(r.value - 0.25) <= 1e-10

    def test_vectorized_inner(self):
        r = integrate2d(lambda t, u: t * u, 1e-10, vectorized_inner=True)
        assert abs(r.value - 0.25) <= 1e-10

    def test_boundary_log_singularities(self):
        r = integrate2d(lambda t, u: np.log(t) * np.log(u), 1e-9,
                        vectorized_inner=True)
        assert r.converged
        assert abs(r.value - 1.0) <= 1e-9  # (int_0^1 log)^2 = 1

    def test_inner_failure_propagates(self):
        def bad(t, u):
            return float("nan") if 0.4 < u < 0.6 else t * u

        r = integrate2d(bad, 1e-9)
        assert not r.converged
        assert "inner" in r.message

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            integrate2d(lambda t, u: 1.0, 0.0)


class TestResultTypes:
    def test_result_is_plain_floats(self):
        r = integrate2d(lambda t, u: t * u, 1e-9)
        assert type(r.value) is float
        assert type(r.abs_error_estimate) is float

    def test_quadrature_error_carries_result(self):
        result = QuadratureResult(0.0, math.inf, 10, False, "died")
        err = QuadratureError("died", result)
        assert err.result is result
