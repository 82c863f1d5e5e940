"""Regularized summation of divergent mode sums.

Three routes to a finite value for sums of the form ``sum_{n>=1} n**p * f(n)``:

* zeta continuation, ``sum n**p -> zeta(-p)``, exact from a Bernoulli table;
* an exponential (Abel) cutoff ``exp(-eps*n)`` whose closed form is expanded
  in ``eps`` by least squares, keeping the ``eps**0`` coefficient and
  recording the negative powers as the divergent part;
* oscillatory sums ``sum n**p cos(2 theta n)``, which the cutoff tames so
  that the ``eps -> 0`` limit exists.

Bernoulli convention: ``B_1 = +1/2``. With it ``zeta(-k) = -B_{k+1}/(k+1)``
holds for every ``k >= 0``, including ``zeta(0) = -1/2``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exceptions import BoundarySingularityError, FitFailure, InvalidArgument

__all__ = [
    "Scheme",
    "RegularizedValue",
    "CutoffGrid",
    "BERNOULLI",
    "bernoulli_number",
    "zeta_exact",
    "zeta_negative_integer",
    "power_sum_numerator",
    "damped_power_sum",
    "damped_oscillatory_sum",
    "extrapolate",
    "cutoff_sum_finite_part",
    "oscillatory_sum",
    "check_guard",
    "DEFAULT_GUARD",
    "MAX_CONDITION",
]

MAX_ZETA_ORDER = 20
MAX_CUTOFF_POWER = 4
MAX_CONDITION = 1e12
DEFAULT_GUARD = 1e-3
DEFAULT_EPSILONS = tuple(np.geomspace(0.2, 0.01, 12))
CUTOFF_TAIL_POWERS = (1, 2, 3, 4)
OSCILLATORY_FIT_POWERS = (0, 1, 2, 3, 4, 5, 6)

# relative rounding noise assumed for closed-form samples
_SAMPLE_NOISE = 8 * np.finfo(float).eps


class Scheme(str, enum.Enum):
    ZETA = "zeta"
    EXP_CUTOFF = "exp_cutoff"
    ABEL_OSCILLATORY = "abel_oscillatory"


@dataclass(frozen=True)
class RegularizedValue:
    """Finite part of a divergent sum and the divergent terms removed from it.

    ``divergent_terms`` holds ``(cutoff_power, coefficient)`` pairs, i.e. the
    pieces ``coefficient * eps**cutoff_power`` with negative ``cutoff_power``.
    """

    finite_part: float
    divergent_terms: tuple[tuple[int, float], ...] = ()
    scheme: Scheme = Scheme.ZETA
    estimated_error: float = 0.0

    def __post_init__(self):
        scheme = Scheme(self.scheme)
        object.__setattr__(self, "scheme", scheme)
        terms = tuple((int(k), float(c)) for k, c in self.divergent_terms)
        object.__setattr__(self, "divergent_terms", terms)
        powers = [k for k, _ in terms]
        if any(k >= 0 for k in powers):
            raise InvalidArgument(f"divergent cutoff powers must be negative: {powers}")
        if powers != sorted(set(powers)):
            raise InvalidArgument(f"divergent cutoff powers must be distinct and sorted: {powers}")
        if scheme is Scheme.ZETA and terms:
            raise InvalidArgument("zeta-regularized values carry no divergent terms")
        if not self.estimated_error >= 0:
            raise InvalidArgument(f"estimated_error must be nonnegative: {self.estimated_error}")

    def divergent_coefficient(self, power):
        """Coefficient of ``eps**power`` in the divergent part (0 when absent)."""
        return dict(self.divergent_terms).get(power, 0.0)

    def __float__(self):
        return float(self.finite_part)


@dataclass(frozen=True)
class CutoffGrid:
    """Cutoff parameters ``eps`` (damping ``exp(-eps*n)``) and the powers to fit."""

    epsilons: tuple[float, ...]
    fit_powers: tuple[int, ...]

    def __post_init__(self):
        eps = tuple(float(e) for e in self.epsilons)
        powers = tuple(sorted(int(k) for k in self.fit_powers))
        object.__setattr__(self, "epsilons", eps)
        object.__setattr__(self, "fit_powers", powers)
        if len(set(powers)) != len(powers):
            raise InvalidArgument(f"fit powers must be distinct: {powers}")
        if len(eps) < len(powers) + 2:
            raise InvalidArgument(
                f"need at least {len(powers) + 2} epsilons for {len(powers)} fit powers, got {len(eps)}"
            )
        if not all(0 < e < 1 for e in eps):
            raise InvalidArgument("all epsilons must lie in (0, 1)")
        if any(a <= b for a, b in zip(eps, eps[1:])):
            raise InvalidArgument("epsilons must be strictly decreasing")

    @classmethod
    def default(cls, p=1, epsilons=DEFAULT_EPSILONS):
        """Grid for ``sum n**p exp(-eps n)``: powers ``-(p+1)..0`` plus ``1..4``."""
        powers = tuple(range(-(p + 1), 1)) + CUTOFF_TAIL_POWERS
        return cls(tuple(epsilons), powers)

    @classmethod
    def oscillatory(cls, epsilons=DEFAULT_EPSILONS):
        return cls(tuple(epsilons), OSCILLATORY_FIT_POWERS)

    def scaled(self, factor):
        return CutoffGrid(tuple(e * factor for e in self.epsilons), self.fit_powers)


def _bernoulli_table(n):
    # B^+ recurrence: B_m = 1 - sum_{k<m} C(m,k) B_k / (m-k+1)
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = Fraction(1)
        for k in range(m):
            acc -= math.comb(m, k) * table[k] / (m - k + 1)
        table.append(acc)
    return tuple(table)


BERNOULLI = _bernoulli_table(MAX_ZETA_ORDER + 1)


def bernoulli_number(j):
    """Exact Bernoulli number ``B_j`` with ``B_1 = +1/2``."""
    if not 0 <= j < len(BERNOULLI):
        raise InvalidArgument(f"Bernoulli index must lie in [0, {len(BERNOULLI) - 1}], got {j}")
    return BERNOULLI[j]


def zeta_exact(k):
    """``zeta(-k)`` as an exact fraction."""
    if int(k) != k or k < 0:
        raise InvalidArgument(f"k must be a nonnegative integer, got {k!r}")
    if k > MAX_ZETA_ORDER:
        raise InvalidArgument(f"k={k} exceeds the exact table limit {MAX_ZETA_ORDER}")
    return -BERNOULLI[k + 1] / (k + 1)


def zeta_negative_integer(k):
    """Zeta-regularized value of ``sum_{n>=1} n**k``.

    >>> zeta_negative_integer(1).finite_part
    -0.08333333333333333
    """
    return RegularizedValue(float(zeta_exact(k)), (), Scheme.ZETA, 0.0)


def power_sum_numerator(p):
    """Integer polynomial ``N_p`` with ``sum n**p x**n = N_p(x) / (1-x)**(p+1)``.

    Built by applying ``x d/dx`` to ``x/(1-x)`` ``p`` times. Coefficients are
    listed in increasing degree.
    """
    if int(p) != p or p < 0:
        raise InvalidArgument(f"power must be a nonnegative integer, got {p!r}")
    num = [0, 1]
    for k in range(1, p + 1):
        # x d/dx [N/(1-x)^k] = [x N' (1-x) + k x N] / (1-x)^(k+1)
        deriv = [i * c for i, c in enumerate(num)][1:]
        x_deriv = [0] + deriv
        out = [0] * (len(num) + 1)
        for i, c in enumerate(x_deriv):
            out[i] += c
            out[i + 1] -= c
        for i, c in enumerate(num):
            out[i + 1] += k * c
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        num = out
    return tuple(num)


def _power_sum(p, x, one_minus_x):
    num = np.polynomial.polynomial.polyval(x, power_sum_numerator(p))
    return num / one_minus_x ** (p + 1)


def damped_power_sum(p, eps):
    """Closed form of ``sum_{n>=1} n**p exp(-eps n)``."""
    eps = np.asarray(eps, dtype=float)
    if np.any(eps <= 0):
        raise InvalidArgument("cutoff eps must be positive")
    return _power_sum(p, np.exp(-eps), -np.expm1(-eps))


def damped_oscillatory_sum(theta, p, eps):
    """Closed form of ``sum_{n>=1} n**p cos(2 theta n) exp(-eps n)``.

    Evaluated as the real part of the geometric ladder at ``q = exp(2i theta - eps)``.
    """
    eps = np.asarray(eps, dtype=float)
    if np.any(eps < 0):
        raise InvalidArgument("cutoff eps must be nonnegative")
    q = np.exp(2j * theta - eps)
    one_minus_q = -np.expm1(2j * theta - eps)
    return np.real(_power_sum(p, q, one_minus_q))


def _fit(eps, values, powers, relative=False):
    eps = np.asarray(eps, dtype=float)
    values = np.asarray(values, dtype=float)
    powers = list(powers)
    if len(eps) != len(values):
        raise InvalidArgument("eps and values differ in length")
    if len(eps) < len(powers) + 1:
        raise FitFailure(f"need at least {len(powers) + 1} samples for {len(powers)} powers, got {len(eps)}")
    if len(np.unique(eps)) != len(eps):
        raise FitFailure("sample abscissae must be distinct")
    e_max = np.max(np.abs(eps))
    t = eps / e_max
    design = np.column_stack([t**q for q in powers])
    weights = 1.0 / np.abs(values) if relative else np.ones_like(values)
    weighted = design * weights[:, None]
    norms = np.linalg.norm(weighted, axis=0)
    if np.any(norms == 0):
        raise FitFailure("design matrix has an empty column")
    normalized = weighted / norms
    sv = np.linalg.svd(normalized, compute_uv=False)
    cond = np.inf if sv[-1] == 0 else sv[0] / sv[-1]
    if sv[-1] <= sv[0] * len(eps) * np.finfo(float).eps:
        raise FitFailure("design matrix is rank deficient", condition=cond)
    if cond > MAX_CONDITION:
        raise FitFailure(f"condition number {cond:.3g} exceeds {MAX_CONDITION:.0e}", condition=cond)
    pinv = np.linalg.pinv(normalized)
    sol = pinv @ (values * weights)
    scale = norms * np.array([e_max**q for q in powers])
    coeffs = sol / scale
    misfit = (design @ (sol / norms) - values) * weights
    residual = float(np.sqrt(np.mean(misfit**2)))
    noise_per_row = _SAMPLE_NOISE if relative else _SAMPLE_NOISE * np.max(np.abs(values))
    sigma = noise_per_row * np.linalg.norm(pinv, axis=1) / scale
    return dict(zip(powers, coeffs)), residual, cond, dict(zip(powers, sigma))


def extrapolate(samples: Sequence[tuple[float, float]], powers: Sequence[int], relative=False):
    """Least-squares fit of ``value(eps) ~ sum_j c_j eps**j`` over ``powers``.

    Returns ``(coefficients, residual)`` where ``coefficients`` maps each power
    to its fitted coefficient and ``residual`` is the RMS misfit (relative to
    each sample when ``relative`` is set).

    >>> coeffs, res = extrapolate([(e, 3.0) for e in (0.1, 0.05)], [0])
    >>> round(float(coeffs[0]), 12), res < 1e-15
    (3.0, True)
    """
    samples = list(samples)
    eps = [s[0] for s in samples]
    values = [s[1] for s in samples]
    coeffs, residual, _, _ = _fit(eps, values, powers, relative=relative)
    return coeffs, residual


def _finite_part_with_error(eps, values, powers, extra_power, relative):
    coeffs, residual, cond, sigma = _fit(eps, values, powers, relative=relative)
    c0 = coeffs[0]
    # truncation: compare against the fit with the next power included
    try:
        wider, _, _, _ = _fit(eps, values, list(powers) + [extra_power], relative=relative)
        truncation = abs(wider[0] - c0)
    except FitFailure:
        truncation = 10 * sigma[0]
    return coeffs, residual, c0, 2.0 * (truncation + sigma[0])


def cutoff_sum_finite_part(p, grid=None):
    """Finite part of ``sum_{n>=1} n**p`` under an exponential cutoff.

    The damped sum is sampled in closed form on ``grid.epsilons``, fitted in
    powers of ``eps`` and split into the ``eps**0`` finite part and the
    negative-power divergent terms. The result agrees with
    :func:`zeta_negative_integer` within ``estimated_error``.
    """
    if int(p) != p or not 0 <= p <= MAX_CUTOFF_POWER:
        raise InvalidArgument(f"power must be an integer in [0, {MAX_CUTOFF_POWER}], got {p!r}")
    grid = CutoffGrid.default(p) if grid is None else grid
    if 0 not in grid.fit_powers:
        raise InvalidArgument("fit powers must include 0")
    eps = np.asarray(grid.epsilons)
    values = damped_power_sum(p, eps)
    extra = max(grid.fit_powers) + 1
    coeffs, _, c0, err = _finite_part_with_error(eps, values, grid.fit_powers, extra, relative=True)
    divergent = tuple((k, coeffs[k]) for k in grid.fit_powers if k < 0)
    return RegularizedValue(float(c0), divergent, Scheme.EXP_CUTOFF, float(err))


def check_guard(theta, guard=DEFAULT_GUARD):
    """Raise :class:`BoundarySingularityError` when theta is near 0 or pi."""
    theta_arr = np.asarray(theta, dtype=float)
    if np.any(np.isnan(theta_arr)):
        raise InvalidArgument("theta is NaN")
    low = theta_arr <= guard
    high = theta_arr >= math.pi - guard
    if np.any(low):
        raise BoundarySingularityError(float(theta_arr[low].flat[0]), guard, 0)
    if np.any(high):
        raise BoundarySingularityError(float(theta_arr[high].flat[0]), guard, 1)


def oscillatory_sum(theta, p=1, grid=None, guard=DEFAULT_GUARD):
    """Abel-regularized ``sum_{n>=1} n**p cos(2 theta n)``.

    For ``p=1`` the limit is ``-1/(4 sin(theta)**2)``; for ``p=2`` it is zero.
    The cutoff grid is shrunk by ``min(1, sin(theta)/2)`` so that every
    sample stays well inside the radius of convergence ``2 sin(theta)`` of the
    expansion in ``eps``.
    """
    if p not in (1, 2):
        raise InvalidArgument(f"oscillatory sums are supported for p in {{1, 2}}, got {p!r}")
    check_guard(theta, guard)
    grid = CutoffGrid.oscillatory() if grid is None else grid
    if min(grid.fit_powers) < 0 or 0 not in grid.fit_powers:
        raise InvalidArgument("oscillatory fits take nonnegative powers including 0")
    eps = np.asarray(grid.epsilons) * min(1.0, math.sin(theta) / 2)
    values = damped_oscillatory_sum(theta, p, eps)
    extra = max(grid.fit_powers) + 1
    _, _, c0, err = _finite_part_with_error(eps, values, grid.fit_powers, extra, relative=False)
    return RegularizedValue(float(c0), (), Scheme.ABEL_OSCILLATORY, float(err))
