"""Total Casimir energies under both orders of integration and regularization.

*Integrate first*: the unregularized mode-sum density is integrated over
``[0, L]`` mode by mode, and only the resulting ``sum n**p`` series are
regularized (zeta continuation). Oscillatory pieces ``cos(2 omega_n z)``
integrate to exactly zero per mode, and products of them collapse to
diagonal ``sum n**2`` series by orthogonality.

*Regularize first*: the closed-form regularized density is integrated with
an inner cutoff ``delta`` at each plate. Any ``csc`` term makes this diverge,
so the result is a :class:`DivergenceReport` rather than a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .config import SystemConfig, SystemKind
from .densities import DensityKind, StructuredDensity, as_structured
from .exceptions import InvalidArgument, UnsupportedSystem
from .regsum import zeta_exact, zeta_negative_integer
from .spectra import cos2_mode_integral, cos2_product_integral

__all__ = [
    "DivergenceReport",
    "ReductionStep",
    "ComparisonReport",
    "EM_EH_DENOMINATOR",
    "mode_sum_energy",
    "em_mode_sum_energy",
    "integrate_then_regularize",
    "integrate_then_regularize_uE",
    "eh_correction_reduction",
    "regularize_then_integrate",
    "fit_boundary_exponent",
    "eh_total_energy",
    "em_eh_total_energy",
    "compare_orders",
    "integrate_first_energy",
    "damped_mode_energy",
    "partial_sum_diagnostics",
]

COMMUTE_RTOL = 1e-9
# inner cutoffs (in theta) used to confirm the divergence exponent numerically
BOUNDARY_DELTAS = tuple(np.geomspace(1e-2, 1e-4, 9))
EM_EH_DENOMINATOR = 2**7 * 3**5 * 5**3

# modes n in u(z) = (1/L) sum_n omega_n [flat + wave * cos(2 omega_n z)]
_FREE_MODE_FORM = {
    "E": (0.25, -0.25),
    "B": (0.25, 0.25),
    "total": (0.5, 0.0),
}


@dataclass(frozen=True)
class DivergenceReport:
    """Boundary behaviour of an integrated density.

    ``leading_exponent`` is the power of the inner cutoff ``delta`` in the
    leading term, ``leading_coefficient * delta**leading_exponent``, per
    plate. A convergent integral reports exponent 0 and carries its value in
    ``finite_if_convergent``. ``fitted_exponent`` is the numeric confirmation
    from shrinking-cutoff quadrature (None when the density vanishes).
    """

    divergent: bool
    leading_exponent: int
    leading_coefficient: float
    finite_if_convergent: float | None = None
    fitted_exponent: float | None = None

    def __post_init__(self):
        if self.divergent != (self.leading_exponent < 0):
            raise InvalidArgument("divergent must hold exactly when leading_exponent < 0")
        if self.divergent == (self.finite_if_convergent is not None):
            raise InvalidArgument("finite_if_convergent is present exactly when convergent")


@dataclass(frozen=True)
class ReductionStep:
    """One basis term of an integrate-first evaluation."""

    term: str
    rule: str
    zeta_orders: tuple[int, ...]
    value: float


@dataclass(frozen=True)
class ComparisonReport:
    config: SystemConfig
    part: str
    integrate_then_regularize: float
    regularize_then_integrate: DivergenceReport
    commute: bool


def _check_length(L):
    if not L > 0:
        raise InvalidArgument(f"length must be positive, got L={L!r}")


def _check_coupling(alpha, m):
    if not alpha >= 0:
        raise InvalidArgument(f"coupling must be nonnegative, got alpha={alpha!r}")
    if not m > 0:
        raise InvalidArgument(f"mass must be positive, got m={m!r}")


def mode_sum_energy(L):
    """Zeta-regularized ``(1/2) sum omega_n = (pi/2L) zeta(-1) = -pi/(24L)``."""
    _check_length(L)
    return math.pi / (2 * L) * zeta_negative_integer(1).finite_part


def em_mode_sum_energy(L):
    """Casimir energy per unit plate area, ``-(pi^2/6L^3) zeta(-3) = -pi^2/(720 L^3)``.

    The transverse momentum integral of each mode is continued to
    ``-omega_n**3/(6 pi)``; both polarizations are counted.
    """
    _check_length(L)
    return -math.pi**2 / (6 * L**3) * zeta_negative_integer(3).finite_part


def integrate_then_regularize(part, L):
    """Integrate a free scalar density over ``[0, L]`` mode by mode, then regularize.

    ``part`` is ``"E"``, ``"B"`` or ``"total"``. Returns ``(energy, steps)``.
    """
    _check_length(L)
    try:
        flat, wave = _FREE_MODE_FORM[part]
    except KeyError:
        raise InvalidArgument(f"part must be one of {sorted(_FREE_MODE_FORM)}, got {part!r}") from None
    # (1/L) sum_n (pi n / L) * flat * L
    flat_value = flat * math.pi / L * float(zeta_exact(1))
    # cos2_mode_integral(n, L) is exactly zero for every n, so no series survives
    wave_value = wave * math.pi / L**2 * cos2_mode_integral(1, L)
    steps = [
        ReductionStep("sum_n n", "integral of constant = L", (1,), flat_value),
        ReductionStep("sum_n n cos(2 w_n z)", "per-mode integral sin(2 pi n)/(2 w_n) = 0", (), wave_value),
    ]
    return flat_value + wave_value, steps


def integrate_then_regularize_uE(L):
    """Electric energy integrated before regularizing: ``-pi/(48 L)``."""
    return integrate_then_regularize("E", L)[0]


def eh_correction_reduction(L, alpha, m):
    """First-order quartic energy correction, integrated before regularizing.

    With ``A = (1/2L) sum omega_n`` and ``C(z) = (1/2L) sum omega_n cos(2 omega_n z)``
    the two-point functions are ``<E^2> = A - C`` and ``<B^2> = A + C``. The
    Wick-reduced combination ``3<E^2>^2 - 2<E^2><B^2> + 3<B^2>^2`` is the
    quadratic form ``4 A^2 + 8 C^2`` (no ``A C`` cross term). Integrating:

    * ``A^2`` is constant in z: ``L * A^2`` with ``A`` from ``zeta(-1)``;
    * ``A C`` would vanish per mode in any case;
    * ``C^2`` keeps only diagonal modes, ``(1/4L^2) sum omega_n^2 L/2``, a
      ``sum n^2`` series assigned ``zeta(-2) = 0``.

    Returns ``(energy, steps)``.
    """
    _check_length(L)
    _check_coupling(alpha, m)
    # <E^2> = A - C, <B^2> = A + C as (a_coeff, c_coeff) pairs
    e2, b2 = (1.0, -1.0), (1.0, 1.0)
    quad_form = _quadratic_form([(3.0, e2, e2), (-2.0, e2, b2), (3.0, b2, b2)])
    coupling = -alpha / m**2

    a_value = math.pi / (2 * L**2) * float(zeta_exact(1))
    aa = coupling * quad_form["AA"] * L * a_value**2
    # A * integral(C): zero per mode, independent of the form coefficient
    ac = coupling * quad_form["AC"] * a_value * cos2_mode_integral(1, L)
    # integral(C^2) = (1/4L^2) sum_n omega_n^2 * (L/2) -> (pi^2/8L^3) zeta(-2)
    diag = cos2_product_integral(1, 1, L) / L
    cc = coupling * quad_form["CC"] * (math.pi**2 / (4 * L**3)) * diag * float(zeta_exact(2))
    steps = [
        ReductionStep("(sum_n n)^2", "constant in z: integral = L", (1, 1), aa),
        ReductionStep("sum_n n * sum_m m cos(2 w_m z)", "per-mode integral = 0", (), ac),
        ReductionStep("sum_nm n m cos(2 w_n z) cos(2 w_m z)", "orthogonality: diagonal L/2", (2,), cc),
    ]
    return aa + ac + cc, steps


def _quadratic_form(products):
    """Expand ``sum w * (a1 A + c1 C)(a2 A + c2 C)`` into AA, AC, CC coefficients."""
    out = {"AA": 0.0, "AC": 0.0, "CC": 0.0}
    for weight, (a1, c1), (a2, c2) in products:
        out["AA"] += weight * a1 * a2
        out["AC"] += weight * (a1 * c2 + c1 * a2)
        out["CC"] += weight * c1 * c2
    return out


def eh_total_energy(L, alpha, m):
    """Interacting scalar energy: ``-pi/(24L) - alpha pi^2/(144 m^2 L^3)``."""
    return mode_sum_energy(L) + eh_correction_reduction(L, alpha, m)[0]


def em_eh_total_energy(L, alpha, m):
    """Electromagnetic Casimir energy with the Euler-Heisenberg correction.

    ``-pi^2/(720 L^3) - 11 alpha^2 pi^4 / (2^7 3^5 5^3 m^4 L^7)``, per unit area.
    Evaluated as a known closed form; only its limits and scaling are checked.
    """
    _check_length(L)
    _check_coupling(alpha, m)
    return -math.pi**2 / (720 * L**3) - 11 * alpha**2 * math.pi**4 / (EM_EH_DENOMINATOR * m**4 * L**7)


def fit_boundary_exponent(density, L, deltas=BOUNDARY_DELTAS):
    """Exponent ``p`` in ``I(delta) ~ I_0 + a delta**p`` from adaptive quadrature.

    ``I(delta)`` is the integral over ``z`` of ``density`` from the cutoff
    ``theta = delta`` inward. The increments between successive cutoffs
    cancel ``I_0`` and scale as ``delta**p``; ``p`` is the log-log slope.
    Returns None if the density vanishes identically.
    """
    deltas = np.asarray(deltas, dtype=float)
    pieces = []
    for hi, lo in zip(deltas, deltas[1:]):
        value, _ = quad(lambda t: density(t, guard=0.0), lo, hi, epsabs=0.0, epsrel=1e-12, limit=200)
        pieces.append(abs(value) * L / math.pi)
    pieces = np.array(pieces)
    if np.all(pieces == 0):
        return None
    slope, _ = np.polyfit(np.log(deltas[:-1]), np.log(pieces), 1)
    # increment ~ d(delta**p) ~ delta**p, so the slope is p itself
    return float(slope)


def regularize_then_integrate(density: StructuredDensity, L, confirm=True):
    """Integrate a regularized density over ``z in (0, L)`` and classify the result.

    Near a plate ``csc^2`` integrates to ``1/delta`` and ``csc^4`` to
    ``1/(3 delta^3)`` (``delta`` the cutoff in theta), so in ``z`` the leading
    per-plate coefficients are ``L scale c_csc2 / pi`` and ``L scale c_csc4 / (3 pi)``.
    """
    _check_length(L)
    fitted = fit_boundary_exponent(density, L) if confirm else None
    c4 = density.scale * density.c_csc4
    c2 = density.scale * density.c_csc2
    if c4 != 0:
        return DivergenceReport(True, -3, L * c4 / (3 * math.pi), None, fitted)
    if c2 != 0:
        return DivergenceReport(True, -1, L * c2 / math.pi, None, fitted)
    total = density.scale * density.c_const * L
    return DivergenceReport(False, 0, total, total, fitted)


def _orders_for(config, part):
    L = config.L
    if config.system is SystemKind.SCALAR_1D:
        kind = {"E": DensityKind.SCALAR_E, "B": DensityKind.SCALAR_B, "total": DensityKind.SCALAR_TOTAL}
        if part not in kind:
            raise InvalidArgument(f"part must be E, B or total for scalar_1d, got {part!r}")
        return integrate_then_regularize(part, L)[0], as_structured(kind[part], L)
    if part != "total":
        raise InvalidArgument(f"system {config.system.value} supports only part='total'")
    if config.system is SystemKind.SCALAR_QUARTIC:
        density = as_structured(DensityKind.EH_SCALAR_TOTAL, L, config.alpha, config.m)
        return eh_total_energy(L, config.alpha, config.m), density
    if config.system is SystemKind.EM_PLATES:
        return em_mode_sum_energy(L), as_structured(DensityKind.EM_TOTAL, L)
    if config.system is SystemKind.EM_HALFSPACE:
        raise UnsupportedSystem("a single plane has no finite total energy to compare")
    raise UnsupportedSystem(
        f"no regularized density profile is available for {config.system.value}; "
        "only its integrated energy can be evaluated"
    )


def integrate_first_energy(config):
    """Integrate-then-regularize energy for any system that has one."""
    if config.system is SystemKind.EM_EULER_HEISENBERG:
        return em_eh_total_energy(config.L, config.alpha, config.m)
    if config.system is SystemKind.EM_HALFSPACE:
        raise UnsupportedSystem("a single plane has no finite total energy to integrate")
    return _orders_for(config, "total")[0]


def compare_orders(config: SystemConfig, part="total"):
    """Evaluate both orders of operations and decide whether they commute."""
    itr, density = _orders_for(config, part)
    rti = regularize_then_integrate(density, config.L)
    commute = (not rti.divergent) and abs(rti.finite_if_convergent - itr) <= COMMUTE_RTOL * max(abs(itr), 1e-300)
    return ComparisonReport(config, part, itr, rti, commute)


def damped_mode_energy(L, eps, n_max=None):
    """``(pi/2L) [sum_{n<=N} n exp(-eps n) - 1/eps^2]`` by explicit summation."""
    _check_length(L)
    if not eps > 0:
        raise InvalidArgument(f"cutoff must be positive, got eps={eps!r}")
    if n_max is None:
        n_max = int(math.ceil(42.0 / eps))
    n = np.arange(1, n_max + 1, dtype=float)
    return math.pi / (2 * L) * (math.fsum(n * np.exp(-eps * n)) - 1.0 / eps**2)


def partial_sum_diagnostics(L, N):
    """Raw and cutoff-regularized partial mode sums up to ``N``.

    Rows are ``(N_k, raw, damped)`` for ``N_k = 10, 100, ...`` up to ``N``.
    ``raw`` is ``(pi/2L) sum_{n<=N_k} n = pi N_k (N_k+1)/(4L)``, which grows
    without bound; ``damped`` uses the cutoff ``eps = 40/N_k`` (so the modes
    beyond ``N_k`` are negligible) with the ``1/eps^2`` pole removed, and
    tends to ``-pi/(24L)``.
    """
    _check_length(L)
    if int(N) != N or not 1 <= N <= 10**6:
        raise InvalidArgument(f"N must be an integer in [1, 1e6], got {N!r}")
    ladder = [10**k for k in range(1, 7) if 10**k < N] + [int(N)]
    rows = []
    for n_k in ladder:
        raw = math.pi * n_k * (n_k + 1) / (4 * L)
        eps = 40.0 / n_k
        damped = damped_mode_energy(L, eps, n_k)
        rows.append((n_k, raw, damped))
    return rows

