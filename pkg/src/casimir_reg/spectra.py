"""Dirichlet eigenmodes of a massless scalar on the interval [0, L].

Natural units (hbar = c = 1) are used everywhere: frequencies carry units
1/L and mode amplitudes units L**-1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidArgument

__all__ = [
    "ModeSpectrum",
    "mode_frequency",
    "eigenmode",
    "mode_weights",
    "theta_from_z",
    "z_from_theta",
    "cos2_mode_integral",
    "cos2_product_integral",
]


def _check_mode(n, L):
    if int(n) != n or n < 1:
        raise InvalidArgument(f"mode index must be a positive integer, got n={n!r}")
    if not L > 0:
        raise InvalidArgument(f"length must be positive, got L={L!r}")


def _check_position(z, L):
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr < 0) or np.any(z_arr > L) or np.any(np.isnan(z_arr)):
        raise InvalidArgument(f"position must lie in [0, {L}], got z={z!r}")


def theta_from_z(z, L):
    """Scaled distance theta = z*pi/L from the left plate."""
    return z * math.pi / L


def z_from_theta(theta, L):
    """Inverse of :func:`theta_from_z`."""
    return theta * L / math.pi


def mode_frequency(n, L):
    """Angular frequency pi*n/L of the n-th Dirichlet mode."""
    _check_mode(n, L)
    return math.pi * n / L


def eigenmode(n, L, z):
    """Normalized mode function sqrt(2/L) * sin(omega_n z).

    The endpoints return an exact zero rather than sin(n*pi) rounding noise.
    """
    _check_mode(n, L)
    _check_position(z, L)
    omega = mode_frequency(n, L)
    z_arr = np.asarray(z, dtype=float)
    amp = math.sqrt(2.0 / L) * np.sin(omega * z_arr)
    amp = np.where((z_arr == 0) | (z_arr == L), 0.0, amp)
    return float(amp) if amp.ndim == 0 else amp


def mode_weights(n, L, z):
    """Electric and magnetic weights (sin^2, cos^2) of mode n at position z."""
    _check_mode(n, L)
    _check_position(z, L)
    phase = mode_frequency(n, L) * np.asarray(z, dtype=float)
    s2 = np.sin(phase) ** 2
    c2 = 1.0 - s2
    if s2.ndim == 0:
        return float(s2), float(c2)
    return s2, c2


def cos2_mode_integral(n, L):
    """Closed-form integral of cos(2 omega_n z) over [0, L].

    Equals sin(2 pi n) / (2 omega_n), which vanishes identically for integer n.
    Returned as an exact zero, not through a floating sine.
    """
    _check_mode(n, L)
    return 0.0


def cos2_product_integral(n, m, L):
    """Closed-form integral of cos(2 omega_n z) cos(2 omega_m z) over [0, L].

    Orthogonality gives L/2 on the diagonal and an exact zero off it.
    """
    _check_mode(n, L)
    _check_mode(m, L)
    return L / 2 if n == m else 0.0


@dataclass(frozen=True)
class ModeSpectrum:
    """Mode set for a given length.

    ``n_max`` only bounds numeric oracles (quadrature checks, partial sums);
    the closed-form evaluators never truncate.
    """

    L: float
    n_max: int = 50

    def __post_init__(self):
        if not self.L > 0:
            raise InvalidArgument(f"length must be positive, got L={self.L!r}")
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise InvalidArgument(f"n_max must be a positive integer, got {self.n_max!r}")

    @property
    def indices(self):
        return np.arange(1, self.n_max + 1)

    def frequencies(self):
        return math.pi * self.indices / self.L

    def frequency(self, n):
        return mode_frequency(n, self.L)

    def eigenmode(self, n, z):
        return eigenmode(n, self.L, z)

    def weights(self, n, z):
        return mode_weights(n, self.L, z)

    def gram_matrix(self, points=2001):
        """Simpson-rule inner products of the first ``n_max`` modes."""
        from scipy.integrate import simpson

        z = np.linspace(0.0, self.L, points)
        modes = math.sqrt(2.0 / self.L) * np.sin(np.outer(self.frequencies(), z))
        products = modes[:, None, :] * modes[None, :, :]
        return simpson(products, x=z, axis=-1)
