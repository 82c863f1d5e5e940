import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_reg import densities as d
from casimir_reg.exceptions import BoundarySingularityError, InvalidArgument

PI = math.pi
GRID = np.linspace(0.05, PI - 0.05, 50)
thetas = st.floats(0.01, PI - 0.01)
lengths = st.floats(0.1, 10.0)


# --- scalar densities ------------------------------------------------------

@pytest.mark.parametrize(
    "theta, L, expected",
    [
        (PI / 2, 1.0, PI / 24),
        (PI / 2, 2.0, PI / 96),
        (PI / 4, 1.0, 5 * PI / 48),
    ],
)
def test_scalar_uE_examples(theta, L, expected):
    assert d.scalar_uE(theta, L) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize(
    "theta, expected",
    [(PI / 2, -PI / 12), (PI / 6, -13 * PI / 48)],
)
def test_scalar_uB_examples(theta, expected):
    assert d.scalar_uB(theta, 1.0) == pytest.approx(expected, rel=1e-14)


@given(thetas, lengths)
def test_scalar_total_is_constant(theta, L):
    total = d.scalar_uE(theta, L) + d.scalar_uB(theta, L)
    assert total == pytest.approx(-PI / (24 * L**2), rel=1e-9)


def test_scalar_cancellation_grid():
    total = d.scalar_uE(GRID, 1.0) + d.scalar_uB(GRID, 1.0)
    assert np.ptp(total) / (PI / 24) < 1e-10
    assert np.max(np.abs(total + PI / 24)) < 1e-10


def test_uB_diverges_negative_near_plates():
    assert d.scalar_uB(1e-2, 1.0) < -100
    assert d.scalar_uE(1e-2, 1.0) > 100


def test_density_from_regularized_sums():
    for t in GRID:
        value, err = d.scalar_uE_from_sums(t, 1.0)
        assert abs(value - d.scalar_uE(t, 1.0)) < 1e-6
        assert abs(value - d.scalar_uE(t, 1.0)) <= max(err, 1e-14)


@pytest.mark.parametrize("func", [d.scalar_uE, d.scalar_uB, d.em_E2, d.em_B2])
def test_guard_band(func):
    with pytest.raises(BoundarySingularityError) as info:
        func(5e-4, 1.0)
    assert info.value.endpoint == 0
    with pytest.raises(BoundarySingularityError) as info:
        func(PI - 5e-4, 1.0)
    assert info.value.endpoint == 1


# --- F(theta) --------------------------------------------------------------

@pytest.mark.parametrize("theta, expected", [(PI / 2, 1.0), (PI / 4, 8.0)])
def test_F_examples(theta, expected):
    assert d.F_theta(theta) == pytest.approx(expected, rel=1e-14)


def test_F_symbolic_identity():
    x = sp.symbols("x")
    diff = -sp.Rational(1, 2) * sp.diff(sp.cot(x), x, 3) - (3 / sp.sin(x) ** 4 - 2 / sp.sin(x) ** 2)
    assert sp.simplify(diff) == 0


def test_F_finite_difference():
    grid = np.linspace(0.3, PI - 0.3, 50)
    rel = np.abs(d.F_theta_finite_difference(grid) / d.F_theta(grid) - 1)
    assert np.max(rel) < 1e-4


@given(thetas)
def test_F_mirror_symmetry(theta):
    assert d.F_theta(theta) == pytest.approx(d.F_theta(PI - theta), rel=1e-9)


# --- electromagnetic plates ------------------------------------------------

def test_em_examples():
    assert d.em_E2(PI / 2, 1.0) == pytest.approx(PI**2 / 16 * 44 / 45, rel=1e-14)
    assert d.em_B2(PI / 4, 1.0) == pytest.approx(-(PI**2) / 16 * (1 / 45 + 8), rel=1e-14)


def test_em_cancellation_moderate_grid():
    grid = np.linspace(0.3, PI - 0.3, 50)
    mean = 0.5 * (d.em_E2(grid, 1.0) + d.em_B2(grid, 1.0))
    assert np.max(np.abs(mean + PI**2 / 720)) < 1e-12


def test_em_cancellation_full_grid():
    mean = d.em_energy_density(GRID, 1.0)
    assert np.max(np.abs(mean + PI**2 / 720)) < 1e-10


@given(thetas, lengths)
def test_em_energy_density_constant(theta, L):
    scale = abs(d.em_E2(theta, L))
    assert abs(d.em_energy_density(theta, L) + PI**2 / (720 * L**4)) <= 1e-14 * scale + 1e-14


# --- half space ------------------------------------------------------------

def test_halfspace_values():
    h = d.halfspace_fluctuations(1.0)
    assert h.E2 == pytest.approx(3 / (16 * PI**2), rel=1e-15)
    assert h.E2 == pytest.approx(0.0189977, rel=1e-5)
    assert h.E2 + h.B2 == 0.0
    assert h.energy_density == 0.0
    assert d.halfspace_fluctuations(2.0).E2 == pytest.approx(h.E2 / 16, rel=1e-15)


def test_halfspace_rejects():
    with pytest.raises(InvalidArgument):
        d.halfspace_fluctuations(0.0)


@pytest.mark.parametrize("z_over_L", [0.001, 0.005, 0.009])
def test_plates_reduce_to_halfspace(z_over_L):
    L = 1.0
    z = z_over_L * L
    rel = d.em_E2(z * PI / L, L) / d.halfspace_fluctuations(z).E2 - 1
    assert abs(rel) < 1e-3


def test_large_separation_limit():
    z, L = 1.0, 1e4
    rel = d.em_E2(PI * z / L, L, guard=1e-6) / d.halfspace_fluctuations(z).E2 - 1
    assert abs(rel) < 1e-3


# --- interacting scalar ----------------------------------------------------

def test_eh_examples():
    assert d.eh_scalar_density(1.0, 2.0, 0.0, 1.0) == pytest.approx(-PI / 96, rel=1e-15)
    expected = -PI / 24 - PI**2 / 8 * (1 / 18 + 1)
    assert d.eh_scalar_density(PI / 2, 1.0, 1.0, 1.0) == pytest.approx(expected, rel=1e-14)


def test_wick_algebraic_identity():
    a, b, s = sp.symbols("a b s")
    form = 3 * a**2 - 2 * a * b + 3 * b**2
    reduced = sp.expand(form.subs({a: sp.Rational(1, 3) - s, b: sp.Rational(1, 3) + s}))
    assert reduced == sp.Rational(4, 9) + 8 * s**2


def test_wick_pairings_count():
    cov = {("E", "E"): 1.0, ("B", "B"): 1.0, ("E", "B"): 0.5, ("B", "E"): 0.5}
    # <E^4> = 3 <E^2>^2 ; <E E B B> = <E^2><B^2> + 2 <E B>^2
    assert d.wick_expectation("EEEE", cov) == 3.0
    assert d.wick_expectation("EEBB", cov) == pytest.approx(1.0 + 2 * 0.25)
    assert d.wick_expectation("EEEEEE", cov) == 15.0
    assert d.wick_expectation("EEB", cov) == 0.0


def test_wick_matches_closed_form_on_grid():
    for t in np.linspace(0.1, PI - 0.1, 20):
        direct = d.eh_scalar_density(t, 1.0, 1.0, 1.0)
        wick = d.wick_first_order_density(t, 1.0, 1.0, 1.0)
        assert abs(wick - direct) <= 1e-12 * max(1.0, abs(direct))


@given(thetas, lengths, st.floats(0.0, 2.0), st.floats(0.1, 10.0))
@settings(max_examples=80)
def test_wick_property(theta, L, alpha, m):
    direct = d.eh_scalar_density(theta, L, alpha, m)
    wick = d.wick_first_order_density(theta, L, alpha, m)
    assert wick == pytest.approx(direct, rel=1e-11, abs=1e-13)


def test_wick_free_limit():
    assert d.wick_first_order_density(0.8, 1.0, 0.0, 1.0) == pytest.approx(-PI / 24, rel=1e-15)


def test_mixed_correlator_vanishes_in_damped_sums():
    for t in (0.4, 1.3, 2.5):
        corr = d.damped_mode_correlators(t, 1.0, 0.01)
        assert abs(corr["EB"].real) < 1e-12
    # subtracting the common cutoff pole leaves the regularized two-point functions
    eps, L, t = 0.002, 1.3, 0.7
    corr = d.damped_mode_correlators(t, L, eps)
    pole = PI / (2 * L**2 * eps**2)
    assert corr["E2"] - pole == pytest.approx(2 * d.scalar_uE(t, L), abs=1e-5)
    assert corr["B2"] - pole == pytest.approx(2 * d.scalar_uB(t, L), abs=1e-5)


def test_coefficient_extraction_csc4():
    # fit the correction on (1, csc^4) and read off the csc^4 coefficient
    alpha, m, L = 0.7, 1.5, 1.2
    t = np.linspace(0.2, PI - 0.2, 40)
    corr = d.eh_scalar_correction(t, L, alpha, m)
    design = np.column_stack([np.ones_like(t), 1 / np.sin(t) ** 2, 1 / np.sin(t) ** 4])
    coef, *_ = np.linalg.lstsq(design, corr, rcond=None)
    scale = -alpha * PI**2 / (8 * m**2 * L**4)
    assert coef[2] == pytest.approx(scale, rel=1e-10)
    assert coef[0] == pytest.approx(scale / 18, rel=1e-8)
    assert abs(coef[1]) < 1e-8


def test_eh_rejects_bad_coupling():
    with pytest.raises(InvalidArgument):
        d.eh_scalar_density(1.0, 1.0, -0.1, 1.0)
    with pytest.raises(InvalidArgument):
        d.eh_scalar_density(1.0, 1.0, 0.1, 0.0)


# --- structured densities --------------------------------------------------

def test_structured_coefficients():
    L = 1.5
    e = d.as_structured("scalar_E", L)
    assert (e.scale, e.c_const, e.c_csc2, e.c_csc4) == pytest.approx((-PI / (16 * L**2), 1 / 3, -1, 0))
    tot = d.as_structured("scalar_total", L)
    assert (tot.scale, tot.c_const, tot.c_csc2, tot.c_csc4) == pytest.approx((-PI / (24 * L**2), 1, 0, 0))
    eh = d.as_structured("eh_scalar_correction", L, 0.5, 2.0)
    assert (eh.scale, eh.c_const, eh.c_csc2, eh.c_csc4) == pytest.approx(
        (-0.5 * PI**2 / (8 * 4.0 * L**4), 1 / 18, 0, 1)
    )
    assert d.as_structured("em_total", L).position_independent
    assert tot.position_independent


DIRECT = {
    "scalar_E": lambda t, L, a, m: d.scalar_uE(t, L),
    "scalar_B": lambda t, L, a, m: d.scalar_uB(t, L),
    "scalar_total": lambda t, L, a, m: d.scalar_uE(t, L) + d.scalar_uB(t, L),
    "em_E2": lambda t, L, a, m: d.em_E2(t, L),
    "em_B2": lambda t, L, a, m: d.em_B2(t, L),
    "em_total": lambda t, L, a, m: d.em_energy_density(t, L),
    "eh_scalar_correction": d.eh_scalar_correction,
    "eh_scalar_total": d.eh_scalar_density,
}


@pytest.mark.parametrize("kind", list(d.DensityKind))
def test_structured_matches_direct(kind):
    L, alpha, m = 1.3, 0.4, 1.7
    s = d.as_structured(kind, L, alpha, m)
    for t in np.linspace(0.2, PI - 0.2, 15):
        direct = DIRECT[kind.value](t, L, alpha, m)
        assert s(t) == pytest.approx(direct, rel=1e-12, abs=1e-12)


@given(st.sampled_from(list(d.DensityKind)), thetas)
def test_structured_mirror_symmetry(kind, theta):
    s = d.as_structured(kind, 1.0, 0.3, 1.0)
    assert s(theta) == pytest.approx(s(PI - theta), rel=1e-9)


def test_structured_total_has_no_csc_terms():
    for kind in ("scalar_total", "em_total"):
        s = d.as_structured(kind, 2.0)
        assert s.c_csc2 == 0 and s.c_csc4 == 0


def test_structured_guard():
    with pytest.raises(BoundarySingularityError):
        d.as_structured("scalar_E", 1.0)(1e-4)
    # constant profiles have nothing singular to guard
    assert d.as_structured("scalar_total", 1.0)(1e-4) == pytest.approx(-PI / 24)


def test_structured_unknown_tag():
    with pytest.raises(InvalidArgument):
        d.as_structured("scalar_X", 1.0)
