import math

import pytest

from quartell import (
    AccuracyError,
    BracketError,
    DomainError,
    Tolerance,
    agm,
    integrate_adaptive,
    solve_monotone,
)


def agm_oracle(a, b, steps=12):
    """Plain mean iteration, written out independently of the library."""
    for _ in range(steps):
        a, b = (a + b) / 2.0, math.sqrt(a * b)
    return a


class TestTolerance:
    def test_defaults(self):
        tol = Tolerance()
        assert tol.abs == 1e-12 and tol.rel == 1e-12 and tol.max_iterations == 64

    def test_rejects_all_zero(self):
        with pytest.raises(DomainError):
            Tolerance(abs=0.0, rel=0.0)

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            Tolerance(abs=-1e-3)

    def test_rejects_zero_iterations(self):
        with pytest.raises(DomainError):
            Tolerance(max_iterations=0)


class TestAgm:
    def test_fixed_point(self):
        assert agm(1.0, 1.0) == 1.0

    def test_known_value(self):
        # sqrt(8)/3 companion; oracle value from the bare mean iteration
        expected = agm_oracle(1.0, 0.9428090416)
        assert agm(1.0, 0.9428090416) == pytest.approx(expected, abs=1e-13)
        assert expected == pytest.approx(0.9711940207070402, abs=1e-12)

    def test_symmetry(self):
        assert agm(2.0, 0.5) == pytest.approx(agm(0.5, 2.0), abs=1e-14)

    def test_result_between_inputs(self):
        for a, b in [(3.0, 1.0), (0.2, 5.0), (1.0, 1e-3)]:
            m = agm(a, b)
            assert min(a, b) <= m <= max(a, b)

    def test_iteration_monotonicity(self):
        a, b = 4.0, 0.25
        for _ in range(8):
            a1, b1 = 0.5 * (a + b), math.sqrt(a * b)
            assert a >= a1 >= b1 >= b
            a, b = a1, b1

    def test_nonpositive_input(self):
        with pytest.raises(DomainError):
            agm(-1.0, 2.0)
        with pytest.raises(DomainError):
            agm(1.0, 0.0)


class TestIntegrateAdaptive:
    def test_polynomial(self):
        assert integrate_adaptive(lambda x: x * x, 0.0, 1.0) == pytest.approx(
            1.0 / 3.0, abs=1e-12
        )

    def test_complete_integral_against_agm(self):
        # K(0.5) both by quadrature and by pi / (2 agm(1, sqrt(0.75)))
        val = integrate_adaptive(
            lambda t: 1.0 / math.sqrt(1.0 - 0.25 * math.sin(t) ** 2),
            0.0,
            0.5 * math.pi,
        )
        oracle = math.pi / (2.0 * agm_oracle(1.0, math.sqrt(0.75)))
        assert val == pytest.approx(oracle, abs=1e-10)
        assert val == pytest.approx(1.685750354812596, abs=1e-9)

    def test_half_period_integral_against_agm(self):
        # kappa = 0.6 half period omega = sqrt(1 + k^2) K(k), k = 1/3
        from quartell import f_quarter

        val = integrate_adaptive(
            lambda t: f_quarter(0.36 * math.sin(t) ** 2), 0.0, 0.5 * math.pi
        )
        k = 1.0 / 3.0
        oracle = math.sqrt(1.0 + k * k) * math.pi / (
            2.0 * agm_oracle(1.0, math.sqrt(1.0 - k * k))
        )
        assert val == pytest.approx(oracle, abs=1e-10)
        assert val == pytest.approx(1.70487531397, abs=1e-9)

    def test_additivity(self):
        f = lambda x: math.exp(-x) * math.cos(3 * x)
        tol = Tolerance(abs=1e-12, rel=1e-12, max_iterations=40)
        whole = integrate_adaptive(f, 0.0, 2.0, tol)
        split = integrate_adaptive(f, 0.0, 0.7, tol) + integrate_adaptive(
            f, 0.7, 2.0, tol
        )
        assert abs(whole - split) <= 2e-12

    def test_empty_interval(self):
        assert integrate_adaptive(math.sin, 1.0, 1.0) == 0.0

    def test_depth_exhaustion(self):
        shallow = Tolerance(abs=1e-14, rel=0.0, max_iterations=2)
        with pytest.raises(AccuracyError):
            integrate_adaptive(lambda x: math.sin(40.0 * x) ** 2, 0.0, 3.0, shallow)


class TestSolveMonotone:
    def test_exact_cubic_root(self):
        root = solve_monotone(
            lambda x: x**3 - 8.0, lambda x: 3.0 * x * x, (1.0, 3.0)
        )
        assert root == pytest.approx(2.0, abs=1e-10)

    def test_transcendental_root(self):
        # x = cos x fixed point, oracle by damped fixed-point iteration
        y = 0.5
        for _ in range(200):
            y = math.cos(y)
        root = solve_monotone(
            lambda x: x - math.cos(x), lambda x: 1.0 + math.sin(x), (0.0, 1.0)
        )
        assert root == pytest.approx(y, abs=1e-10)
        assert root == pytest.approx(0.7390851332151607, abs=1e-9)

    def test_identity(self):
        assert solve_monotone(lambda x: x, None, (-1.0, 1.0)) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_without_derivative(self):
        root = solve_monotone(lambda x: x**3 - 8.0, None, (0.0, 5.0))
        assert root == pytest.approx(2.0, abs=1e-9)

    def test_residual_bound(self):
        f = lambda x: math.tanh(x) - 0.3
        root = solve_monotone(f, None, (-2.0, 2.0))
        assert abs(f(root)) <= max(1e-12, 1e-12 * abs(f(2.0)))

    def test_bracket_error(self):
        with pytest.raises(BracketError):
            solve_monotone(lambda x: x * x + 1.0, None, (-1.0, 1.0))
