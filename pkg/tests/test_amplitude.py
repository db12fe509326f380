import math

import pytest

from quartell import (
    amplitude_point,
    derivatives_closed_form,
    phi_of_u,
    trio_real,
    u_of_phi,
)

from conftest import KAPPAS, ctx_for


def u_series_oracle(kappa, phi, terms=60):
    """Termwise integral of the hypergeometric series.

    u = sum_n a_n kappa^(2n) int_0^phi sin^(2n), with the sine-power
    integrals from the standard reduction formula.  Valid for |phi| <= pi/2.
    """
    total = 0.0
    coeff = 1.0  # (1/4)_n (3/4)_n / ((1/2)_n n!)
    w = phi  # int_0^phi sin^0
    s, c = math.sin(phi), math.cos(phi)
    spow = s  # sin^(2n+1) running power
    for n in range(terms):
        total += coeff * (kappa ** (2 * n)) * w
        m = 2 * (n + 1)
        w = ((m - 1) * w - spow * c) / m
        spow *= s * s
        coeff *= (0.25 + n) * (0.75 + n) / ((0.5 + n) * (1.0 + n))
    return total


class TestUOfPhi:
    def test_at_zero(self, ctx06):
        assert u_of_phi(ctx06, 0.0) == 0.0

    def test_against_series_oracle(self, ctx06):
        assert u_of_phi(ctx06, 0.3) == pytest.approx(
            u_series_oracle(0.6, 0.3), abs=1e-11
        )
        assert u_of_phi(ctx06, 0.3) == pytest.approx(0.301211, abs=1e-5)

    def test_half_period(self, ctx06):
        assert u_of_phi(ctx06, 0.5 * math.pi) == pytest.approx(
            ctx06.omega, abs=1e-9
        )

    def test_odd(self, ctx06):
        for phi in (0.2, 0.9, 1.4, 2.7):
            assert u_of_phi(ctx06, -phi) == pytest.approx(
                -u_of_phi(ctx06, phi), abs=1e-12
            )

    def test_strictly_increasing(self, ctx06):
        values = [u_of_phi(ctx06, -1.5 + 3.0 * i / 20) for i in range(21)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_full_period_additivity(self, ctx06):
        assert u_of_phi(ctx06, math.pi) == pytest.approx(
            2.0 * u_of_phi(ctx06, 0.5 * math.pi), abs=1e-11
        )


class TestPhiOfU:
    def test_fixed_point_at_origin(self, ctx06):
        assert phi_of_u(ctx06, 0.0) == pytest.approx(0.0, abs=1e-13)

    def test_half_period_maps_back(self, ctx06):
        assert phi_of_u(ctx06, ctx06.omega) == pytest.approx(
            0.5 * math.pi, abs=1e-10
        )

    def test_series_oracle_round_trip(self, ctx06):
        assert phi_of_u(ctx06, 0.301211) == pytest.approx(0.3, abs=1e-5)

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_round_trip(self, kappa):
        ctx = ctx_for(kappa)
        for i in range(21):
            phi = -1.4 + 2.8 * i / 20
            assert abs(phi_of_u(ctx, u_of_phi(ctx, phi)) - phi) <= 1e-10

    def test_strictly_increasing(self, ctx06):
        values = [phi_of_u(ctx06, -2.0 + 4.0 * i / 20) for i in range(21)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_far_from_origin(self, ctx06):
        # three full periods out
        u = 6.0 * ctx06.omega + 0.4
        assert phi_of_u(ctx06, u) == pytest.approx(
            3.0 * math.pi + phi_of_u(ctx06, 0.4), abs=1e-10
        )


class TestTrioReal:
    def test_origin(self, ctx06):
        assert trio_real(ctx06, 0.0) == pytest.approx((0.0, 1.0, 1.0), abs=1e-13)

    def test_half_period_values(self, ctx06):
        s, c, d = trio_real(ctx06, ctx06.omega)
        assert s == pytest.approx(1.0, abs=1e-10)
        assert c == pytest.approx(0.0, abs=1e-10)
        assert d == pytest.approx(0.8, abs=1e-10)

    def test_jacobian_identities(self):
        ctx = ctx_for(0.3)
        s, c, d = trio_real(ctx, 0.77)
        assert abs(s * s + c * c - 1.0) <= 1e-12
        assert abs(0.09 * s * s + d * d - 1.0) <= 1e-12

    def test_parities(self, ctx06):
        for u in (0.3, 0.8, 1.9):
            s1, c1, d1 = trio_real(ctx06, u)
            s2, c2, d2 = trio_real(ctx06, -u)
            assert s2 == pytest.approx(-s1, abs=1e-12)
            assert c2 == pytest.approx(c1, abs=1e-12)
            assert d2 == pytest.approx(d1, abs=1e-12)

    def test_real_period(self, ctx06):
        for u in (0.25, 1.1):
            d0 = trio_real(ctx06, u)[2]
            d1 = trio_real(ctx06, u + 2.0 * ctx06.omega)[2]
            assert abs(d1 - d0) <= 1e-9

    def test_companion_angle_relation(self, ctx06):
        pt = amplitude_point(ctx06, 0.6)
        assert abs(math.sin(pt.psi) - 0.6 * math.sin(pt.phi)) <= 1e-13
        assert -0.5 * math.pi < pt.psi < 0.5 * math.pi


class TestDerivativesClosedForm:
    def test_origin(self, ctx06):
        assert derivatives_closed_form(ctx06, 0.0) == pytest.approx(
            (1.0, 0.6, 0.0), abs=1e-12
        )

    def test_matches_finite_differences(self, ctx06):
        h = 1e-5
        u = 0.5
        _, _, d_prime = derivatives_closed_form(ctx06, u)
        fd = (trio_real(ctx06, u + h)[2] - trio_real(ctx06, u - h)[2]) / (2 * h)
        assert abs(d_prime - fd) <= 1e-8

    def test_ode(self, ctx06):
        _, _, d_prime = derivatives_closed_form(ctx06, 0.9)
        d = trio_real(ctx06, 0.9)[2]
        assert abs(d_prime**2 - 2.0 * (1.0 - d) * (d * d - 0.64)) <= 1e-10

    @pytest.mark.parametrize("kappa", KAPPAS)
    def test_ode_and_exercise_forms_on_grid(self, kappa):
        ctx = ctx_for(kappa)
        lam2 = ctx.lam**2
        for i in range(0, 101, 4):
            u = -ctx.omega + 0.01 + (2.0 * ctx.omega - 0.02) * i / 100
            phi_p, psi_p, d_p = derivatives_closed_form(ctx, u)
            d = trio_real(ctx, u)[2]
            assert abs(d_p**2 - 2.0 * (1.0 - d) * (d * d - lam2)) <= 1e-9
            assert abs(phi_p**2 - 2.0 * d * d / (d + 1.0)) <= 1e-9
            assert abs(psi_p**2 - 2.0 * (d * d - lam2) / (d + 1.0)) <= 1e-9
