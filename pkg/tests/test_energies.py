import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from casimir_reg import energies as en
from casimir_reg.config import SystemConfig
from casimir_reg.densities import DensityKind, as_structured
from casimir_reg.exceptions import InvalidArgument, UnsupportedSystem
from casimir_reg.regsum import cutoff_sum_finite_part, damped_power_sum
from casimir_reg.spectra import cos2_mode_integral, mode_frequency

PI = math.pi
lengths = st.floats(0.05, 50.0)


def test_mode_sum_energy():
    assert en.mode_sum_energy(1.0) == pytest.approx(-PI / 24, abs=1e-12)
    assert en.mode_sum_energy(1.0) == pytest.approx(-0.1308997, abs=1e-7)
    assert en.mode_sum_energy(2.0) == pytest.approx(-PI / 48, rel=1e-15)


def test_mode_sum_cutoff_cross_check():
    via_cutoff = PI / 2 * cutoff_sum_finite_part(1).finite_part
    assert via_cutoff == pytest.approx(en.mode_sum_energy(1.0), abs=1e-6)


def test_integrate_then_regularize_uE():
    assert en.integrate_then_regularize_uE(1.0) == pytest.approx(-PI / 48, abs=1e-12)
    e = en.integrate_then_regularize("E", 1.0)[0]
    b = en.integrate_then_regularize("B", 1.0)[0]
    assert e + b == pytest.approx(en.mode_sum_energy(1.0), abs=1e-15)


def test_per_mode_boundary_integral():
    # sin(2 omega_n L)/(2 omega_n) with omega_n L = n pi
    assert cos2_mode_integral(7, 1.0) == 0.0
    num, _ = quad(lambda z: math.cos(2 * mode_frequency(7, 1.0) * z), 0, 1, limit=200)
    assert abs(num) < 1e-12


def test_integrate_first_steps_record_zeta_orders():
    _, steps = en.integrate_then_regularize("E", 1.0)
    assert steps[0].zeta_orders == (1,)
    assert steps[1].value == 0.0


def test_integrate_first_unknown_part():
    with pytest.raises(InvalidArgument):
        en.integrate_then_regularize("X", 1.0)


def test_consistency_triangle():
    for L in np.linspace(0.3, 7.0, 10):
        assert abs(2 * en.integrate_then_regularize_uE(L) - en.mode_sum_energy(L)) < 1e-12


@given(lengths, st.floats(1.1, 20.0))
def test_scaling_laws(L, lam):
    assert en.mode_sum_energy(lam * L) == pytest.approx(en.mode_sum_energy(L) / lam, rel=1e-12)
    corr = lambda x: en.eh_total_energy(x, 1.0, 1.0) - en.mode_sum_energy(x)
    assert corr(lam * L) == pytest.approx(corr(L) / lam**3, rel=1e-12)
    em = lambda x: en.em_eh_total_energy(x, 1.0, 1.0) - en.em_eh_total_energy(x, 0.0, 1.0)
    assert em(lam * L) == pytest.approx(em(L) / lam**7, rel=1e-12)


def test_eh_total_energy():
    assert en.eh_total_energy(1.0, 0.0, 1.0) == pytest.approx(-PI / 24, abs=1e-15)
    assert en.eh_total_energy(1.0, 1.0, 1.0) == pytest.approx(-PI / 24 - PI**2 / 144, abs=1e-12)
    assert en.eh_total_energy(2.5, 0.0, 3.0) == pytest.approx(en.mode_sum_energy(2.5), rel=1e-15)


def test_eh_constant_term_bookkeeping():
    L, alpha, m = 1.7, 0.3, 2.0
    density = as_structured("eh_scalar_correction", L, alpha, m)
    const_times_L = density.scale * density.c_const * L
    assert const_times_L == pytest.approx(-alpha * PI**2 / (144 * m**2 * L**3), rel=1e-14)
    total, steps = en.eh_correction_reduction(L, alpha, m)
    assert total == pytest.approx(const_times_L, rel=1e-14)
    by_term = {s.term: s for s in steps}
    csc_piece = [s for s in steps if s.zeta_orders == (2,)][0]
    assert csc_piece.value == 0.0
    assert len(by_term) == 3


def test_eh_reduction_cc_term_against_brute_force():
    # integral over z of C(z)^2 for a truncated, damped C reproduces the diagonal rule
    L, N, eps = 1.0, 30, 0.2
    n = np.arange(1, N + 1)
    w = PI * n / L
    weights = w * np.exp(-eps * n)

    def c_sq(z):
        return (np.sum(weights * np.cos(2 * w * z)) / (2 * L)) ** 2

    num, _ = quad(c_sq, 0, L, limit=400)
    diag = np.sum(weights**2) * (L / 2) / (4 * L**2)
    assert num == pytest.approx(diag, rel=1e-10)


def test_em_eh_total_energy():
    assert en.EM_EH_DENOMINATOR == 3888000
    assert en.em_eh_total_energy(1.0, 0.0, 1.0) == pytest.approx(-PI**2 / 720, abs=1e-15)
    expected = -PI**2 / 720 - 11 * PI**4 / 3888000
    assert en.em_eh_total_energy(1.0, 1.0, 1.0) == pytest.approx(expected, abs=1e-12)


def test_em_mode_sum_energy():
    assert en.em_mode_sum_energy(1.0) == pytest.approx(-PI**2 / 720, rel=1e-14)


# --- regularize first ------------------------------------------------------

def test_regularize_then_integrate_total():
    report = en.regularize_then_integrate(as_structured("scalar_total", 2.0), 2.0)
    assert not report.divergent
    assert report.finite_if_convergent == pytest.approx(-PI / 48, rel=1e-14)


@pytest.mark.parametrize(
    "kind, exponent",
    [("scalar_E", -1), ("scalar_B", -1), ("em_E2", -3), ("em_B2", -3), ("eh_scalar_correction", -3)],
)
def test_regularize_then_integrate_divergent(kind, exponent):
    report = en.regularize_then_integrate(as_structured(kind, 1.0, 1.0, 1.0), 1.0)
    assert report.divergent
    assert report.leading_exponent == exponent
    assert report.finite_if_convergent is None
    assert abs(report.fitted_exponent - exponent) < 0.05


def test_leading_coefficients_match_cutoff_integrals():
    # per-plate: integral from delta of csc^2 ~ 1/delta, of csc^4 ~ 1/(3 delta^3)
    L = 1.0
    for kind in ("scalar_E", "eh_scalar_correction"):
        density = as_structured(kind, L, 1.0, 1.0)
        report = en.regularize_then_integrate(density, L, confirm=False)
        delta = 1e-3
        num, _ = quad(lambda t: density(t, guard=0.0), delta, PI / 2, limit=400, epsrel=1e-12)
        num *= L / PI
        leading = report.leading_coefficient * delta**report.leading_exponent
        assert num == pytest.approx(leading, rel=2e-3)


def test_divergence_report_invariants():
    with pytest.raises(InvalidArgument):
        en.DivergenceReport(True, 0, 1.0)
    with pytest.raises(InvalidArgument):
        en.DivergenceReport(False, 0, 1.0, None)
    with pytest.raises(InvalidArgument):
        en.DivergenceReport(True, -1, 1.0, 2.0)


def test_zero_coupling_correction_has_no_fit():
    report = en.regularize_then_integrate(as_structured("eh_scalar_correction", 1.0, 0.0, 1.0), 1.0)
    assert not report.divergent
    assert report.fitted_exponent is None
    assert report.finite_if_convergent == 0.0


# --- comparison ------------------------------------------------------------

def test_compare_free_total_commutes():
    report = en.compare_orders(SystemConfig("scalar_1d", L=1.0))
    assert report.commute is True
    assert report.integrate_then_regularize == pytest.approx(-PI / 24, rel=1e-14)
    assert report.regularize_then_integrate.finite_if_convergent == pytest.approx(-PI / 24, rel=1e-14)


@pytest.mark.parametrize("part", ["E", "B"])
def test_compare_halves_do_not_commute(part):
    report = en.compare_orders(SystemConfig("scalar_1d", L=1.0), part)
    assert report.commute is False
    assert report.integrate_then_regularize == pytest.approx(-PI / 48, rel=1e-14)
    assert report.regularize_then_integrate.leading_exponent == -1


def test_compare_quartic():
    report = en.compare_orders(SystemConfig("scalar_quartic", alpha=1.0, m=1.0))
    assert report.commute is False
    assert report.integrate_then_regularize == pytest.approx(-PI / 24 - PI**2 / 144, abs=1e-12)
    assert report.regularize_then_integrate.leading_exponent == -3
    assert en.compare_orders(SystemConfig("scalar_quartic", alpha=0.0)).commute is True


def test_compare_em_plates():
    report = en.compare_orders(SystemConfig("em_plates", L=2.0))
    assert report.commute is True
    assert report.integrate_then_regularize == pytest.approx(-PI**2 / (720 * 8), rel=1e-14)


@pytest.mark.parametrize("system", ["em_halfspace", "em_euler_heisenberg"])
def test_compare_unsupported(system):
    with pytest.raises(UnsupportedSystem):
        en.compare_orders(SystemConfig(system, alpha=0.1))


def test_integrate_first_energy_dispatch():
    assert en.integrate_first_energy(SystemConfig("em_euler_heisenberg", alpha=1.0)) == pytest.approx(
        en.em_eh_total_energy(1.0, 1.0, 1.0)
    )
    with pytest.raises(UnsupportedSystem):
        en.integrate_first_energy(SystemConfig("em_halfspace"))


# --- partial sums ----------------------------------------------------------

def test_partial_sum_diagnostics():
    rows = en.partial_sum_diagnostics(1.0, 10**5)
    assert [r[0] for r in rows] == [10, 100, 1000, 10000, 100000]
    assert rows[0][1] == pytest.approx(27.5 * PI, rel=1e-15)
    raws = [r[1] for r in rows]
    assert all(a < b for a, b in zip(raws, raws[1:]))
    errors = [abs(r[2] + PI / 24) for r in rows]
    assert all(a > b for a, b in zip(errors, errors[1:]))
    assert errors[-1] < 1e-7


def test_partial_sum_raw_formula():
    for n_top in (1, 7, 10):
        row = en.partial_sum_diagnostics(2.0, n_top)[-1]
        assert row[1] == pytest.approx(PI / (2 * 2.0) * sum(range(1, n_top + 1)), rel=1e-15)


def test_partial_sum_rejects():
    with pytest.raises(InvalidArgument):
        en.partial_sum_diagnostics(1.0, 10**6 + 1)


def test_damped_mode_energy():
    assert en.damped_mode_energy(1.0, 0.01) == pytest.approx(-PI / 24, abs=1e-5)
    # explicit summation agrees with the geometric closed form
    closed = PI / 2 * (float(damped_power_sum(1, 0.05)) - 1 / 0.05**2)
    assert en.damped_mode_energy(1.0, 0.05) == pytest.approx(closed, abs=1e-10)
