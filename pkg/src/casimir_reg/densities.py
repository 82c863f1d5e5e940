"""Regularized vacuum energy densities between two plates.

Every profile here is a combination of ``1``, ``csc(theta)**2`` and
``csc(theta)**4`` in the scaled distance ``theta = z*pi/L``. That basis is
captured by :class:`StructuredDensity`, which the energies module integrates
term by term.

Scalar densities carry units 1/L**2 (1+1 dimensions); electromagnetic
fluctuations carry units 1/L**4.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import regsum
from .exceptions import InvalidArgument
from .regsum import DEFAULT_GUARD, check_guard
from .spectra import ModeSpectrum, z_from_theta

__all__ = [
    "DensityKind",
    "StructuredDensity",
    "HalfSpaceFluctuations",
    "scalar_uE",
    "scalar_uB",
    "scalar_u_total",
    "scalar_uE_from_sums",
    "F_theta",
    "F_theta_finite_difference",
    "em_E2",
    "em_B2",
    "em_energy_density",
    "halfspace_fluctuations",
    "eh_scalar_correction",
    "eh_scalar_density",
    "scalar_correlators",
    "damped_mode_correlators",
    "wick_expectation",
    "wick_first_order_density",
    "as_structured",
]

FD_STEP = 1e-3


class DensityKind(str, enum.Enum):
    SCALAR_E = "scalar_E"
    SCALAR_B = "scalar_B"
    SCALAR_TOTAL = "scalar_total"
    EM_E2 = "em_E2"
    EM_B2 = "em_B2"
    EM_TOTAL = "em_total"
    EH_SCALAR_CORRECTION = "eh_scalar_correction"
    EH_SCALAR_TOTAL = "eh_scalar_total"


@dataclass(frozen=True)
class StructuredDensity:
    """``scale * (c_const + c_csc2/sin(theta)**2 + c_csc4/sin(theta)**4)``."""

    system: DensityKind
    scale: float
    c_const: float
    c_csc2: float = 0.0
    c_csc4: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "system", DensityKind(self.system))

    @property
    def position_independent(self):
        return self.scale == 0 or (self.c_csc2 == 0 and self.c_csc4 == 0)

    def __call__(self, theta, guard=DEFAULT_GUARD):
        if not self.position_independent:
            check_guard(theta, guard)
        theta = np.asarray(theta, dtype=float)
        csc2 = 1.0 / np.sin(theta) ** 2 if not self.position_independent else 0.0
        value = self.scale * (self.c_const + self.c_csc2 * csc2 + self.c_csc4 * csc2 * csc2)
        value = value * np.ones_like(theta)
        return float(value) if value.ndim == 0 else value

    def terms(self):
        """Nonzero ``(basis_label, coefficient)`` pairs with the scale folded in."""
        pairs = [("const", self.c_const), ("csc2", self.c_csc2), ("csc4", self.c_csc4)]
        return [(label, self.scale * c) for label, c in pairs if c != 0 and self.scale != 0]


@dataclass(frozen=True)
class HalfSpaceFluctuations:
    """Field fluctuations at distance z outside a single conducting plane."""

    E2: float
    B2: float

    @property
    def energy_density(self):
        return 0.5 * (self.E2 + self.B2)


def _csc2(theta, guard):
    check_guard(theta, guard)
    return 1.0 / np.sin(theta) ** 2


def scalar_uE(theta, L, guard=DEFAULT_GUARD):
    """Electric part of the scalar density, ``-(pi/16L^2)(1/3 - csc^2 theta)``."""
    return -math.pi / (16 * L**2) * (1.0 / 3.0 - _csc2(theta, guard))


def scalar_uB(theta, L, guard=DEFAULT_GUARD):
    """Magnetic part of the scalar density, ``-(pi/16L^2)(1/3 + csc^2 theta)``."""
    return -math.pi / (16 * L**2) * (1.0 / 3.0 + _csc2(theta, guard))


def scalar_u_total(theta, L, guard=DEFAULT_GUARD):
    return scalar_uE(theta, L, guard) + scalar_uB(theta, L, guard)


def scalar_uE_from_sums(theta, L, guard=DEFAULT_GUARD):
    """Electric density assembled from the regularized mode sums.

    ``(pi/4L^2) * [sum n - sum n cos(2 theta n)]`` with the first sum from
    zeta continuation and the second from the damped oscillatory fit. Returns
    the value together with its propagated error estimate.
    """
    flat = regsum.zeta_negative_integer(1)
    wave = regsum.oscillatory_sum(theta, 1, guard=guard)
    prefactor = math.pi / (4 * L**2)
    value = prefactor * (flat.finite_part - wave.finite_part)
    return value, prefactor * (flat.estimated_error + wave.estimated_error)


def F_theta(theta, guard=DEFAULT_GUARD):
    """Position dependence of the plate fluctuations, ``3 csc^4 - 2 csc^2``."""
    csc2 = _csc2(theta, guard)
    return 3.0 * csc2 * csc2 - 2.0 * csc2


def F_theta_finite_difference(theta, h=FD_STEP):
    """``-(1/2) d^3/dtheta^3 cot(theta)`` from the central 4-point stencil.

    Truncation error relative to the exact value is roughly ``5 h**2 / theta**2``
    near the plates.
    """
    cot = lambda x: 1.0 / np.tan(x)
    third = (cot(theta + 2 * h) - 2 * cot(theta + h) + 2 * cot(theta - h) - cot(theta - 2 * h)) / (2 * h**3)
    return -0.5 * third


def em_E2(theta, L, guard=DEFAULT_GUARD):
    """Regularized <E^2> between plates, ``-(pi^2/16L^4)(1/45 - F)``."""
    return -math.pi**2 / (16 * L**4) * (1.0 / 45.0 - F_theta(theta, guard))


def em_B2(theta, L, guard=DEFAULT_GUARD):
    """Regularized <B^2> between plates, ``-(pi^2/16L^4)(1/45 + F)``."""
    return -math.pi**2 / (16 * L**4) * (1.0 / 45.0 + F_theta(theta, guard))


def em_energy_density(theta, L, guard=DEFAULT_GUARD):
    return 0.5 * (em_E2(theta, L, guard) + em_B2(theta, L, guard))


def halfspace_fluctuations(z):
    """<E^2> and <B^2> at distance z from a single plane: ``+-3/(16 pi^2 z^4)``."""
    if not z > 0:
        raise InvalidArgument(f"distance must be positive, got z={z!r}")
    e2 = 3.0 / (16 * math.pi**2 * z**4)
    return HalfSpaceFluctuations(E2=e2, B2=-e2)


def _check_coupling(alpha, m):
    if not alpha >= 0:
        raise InvalidArgument(f"coupling must be nonnegative, got alpha={alpha!r}")
    if not m > 0:
        raise InvalidArgument(f"mass must be positive, got m={m!r}")


def eh_scalar_correction(theta, L, alpha, m, guard=DEFAULT_GUARD):
    """First-order quartic correction ``-(alpha pi^2/8 m^2 L^4)(1/18 + csc^4)``."""
    _check_coupling(alpha, m)
    csc2 = _csc2(theta, guard)
    return -alpha * math.pi**2 / (8 * m**2 * L**4) * (1.0 / 18.0 + csc2 * csc2)


def eh_scalar_density(theta, L, alpha, m, guard=DEFAULT_GUARD):
    """Free scalar density plus the first-order quartic correction."""
    return -math.pi / (24 * L**2) + eh_scalar_correction(theta, L, alpha, m, guard)


def scalar_correlators(theta, L, guard=DEFAULT_GUARD):
    """Regularized two-point functions of ``E = d_t phi`` and ``B = d_z phi``.

    The mixed correlator is taken as zero: each stationary mode contributes a
    purely imaginary unsymmetrized <E B>, so the symmetrized value vanishes
    (see :func:`damped_mode_correlators`).
    """
    e2 = 2 * scalar_uE(theta, L, guard)
    b2 = 2 * scalar_uB(theta, L, guard)
    return {("E", "E"): e2, ("B", "B"): b2, ("E", "B"): 0.0, ("B", "E"): 0.0}


def damped_mode_correlators(theta, L, eps, n_max=None):
    """Brute-force mode sums of <E^2>, <B^2>, <E B> with damping ``exp(-eps n)``.

    ``<E B>`` is returned unsymmetrized (complex); its real part is the
    symmetrized correlator. The modes are truncated at ``n_max``, which
    defaults to where the damping drops below 1e-18.
    """
    if n_max is None:
        n_max = int(math.ceil(42.0 / eps)) + 1
    spec = ModeSpectrum(L, n_max)
    omega = spec.frequencies()
    z = z_from_theta(theta, L)
    phase = omega * z
    damp = np.exp(-eps * spec.indices)
    norm = 2.0 / L
    # phi = sum (2 w)^-1/2 phi_n (a e^{-iwt} + h.c.) -> <E E> = sum w/2 phi_n^2 etc.
    e2 = np.sum(0.5 * omega * norm * np.sin(phase) ** 2 * damp)
    b2 = np.sum(0.5 / omega * norm * omega**2 * np.cos(phase) ** 2 * damp)
    eb = np.sum(-0.5j * norm * np.sin(phase) * omega * np.cos(phase) * damp)
    return {"E2": float(e2), "B2": float(b2), "EB": complex(eb)}


def _pairings(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i in range(len(rest)):
        remaining = rest[:i] + rest[i + 1 :]
        for tail in _pairings(remaining):
            yield [(first, rest[i])] + tail


def wick_expectation(fields, covariance):
    """Gaussian vacuum expectation of a product of fields by summing all pairings.

    ``fields`` is a sequence of labels and ``covariance`` maps label pairs to
    two-point values.

    >>> wick_expectation("EEEE", {("E", "E"): 2.0})
    12.0
    """
    fields = list(fields)
    if len(fields) % 2:
        return 0.0
    total = 0.0
    for pairing in _pairings(fields):
        total += math.prod(covariance[pair] for pair in pairing)
    return total


def wick_first_order_density(theta, L, alpha, m, guard=DEFAULT_GUARD):
    """Interacting density from first-order perturbation theory.

    The energy shift is ``-<L_int>`` with ``L_int = (alpha/m^2) (E^2 - B^2)^2``,
    whose expectation is reduced to two-point functions by Wick's theorem.
    """
    _check_coupling(alpha, m)
    cov = scalar_correlators(theta, L, guard)
    quartic = (
        wick_expectation("EEEE", cov)
        - 2 * wick_expectation("EEBB", cov)
        + wick_expectation("BBBB", cov)
    )
    return -math.pi / (24 * L**2) - alpha / m**2 * quartic


def as_structured(system, L=1.0, alpha=0.0, m=1.0):
    """Exact coefficients of a density in the ``{1, csc^2, csc^4}`` basis."""
    try:
        kind = DensityKind(system)
    except ValueError:
        raise InvalidArgument(f"unknown density system {system!r}") from None
    if not L > 0:
        raise InvalidArgument(f"length must be positive, got L={L!r}")
    scalar = -math.pi / (16 * L**2)
    em = -math.pi**2 / (16 * L**4)
    if kind in (DensityKind.EH_SCALAR_CORRECTION, DensityKind.EH_SCALAR_TOTAL):
        _check_coupling(alpha, m)
    eh = -alpha * math.pi**2 / (8 * m**2 * L**4)
    if kind is DensityKind.SCALAR_E:
        return StructuredDensity(kind, scalar, 1.0 / 3.0, -1.0)
    if kind is DensityKind.SCALAR_B:
        return StructuredDensity(kind, scalar, 1.0 / 3.0, 1.0)
    if kind is DensityKind.SCALAR_TOTAL:
        return StructuredDensity(kind, -math.pi / (24 * L**2), 1.0)
    if kind is DensityKind.EM_E2:
        return StructuredDensity(kind, em, 1.0 / 45.0, 2.0, -3.0)
    if kind is DensityKind.EM_B2:
        return StructuredDensity(kind, em, 1.0 / 45.0, -2.0, 3.0)
    if kind is DensityKind.EM_TOTAL:
        return StructuredDensity(kind, -math.pi**2 / (720 * L**4), 1.0)
    if kind is DensityKind.EH_SCALAR_CORRECTION:
        return StructuredDensity(kind, eh, 1.0 / 18.0, 0.0, 1.0)
    # free constant folded into the constant slot, scale 1
    return StructuredDensity(kind, 1.0, -math.pi / (24 * L**2) + eh / 18.0, 0.0, eh)
