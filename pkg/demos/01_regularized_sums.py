"""Three ways to give a finite value to sum n**p.

Zeta continuation reads the value off a Bernoulli table. The exponential
cutoff keeps the eps**0 coefficient of sum n**p exp(-eps n) and files the
negative powers away as divergences. Both agree, which is the point.
"""

import math

import numpy as np

from casimir_reg.regsum import (
    CutoffGrid,
    cutoff_sum_finite_part,
    damped_oscillatory_sum,
    oscillatory_sum,
    zeta_exact,
)

print("p   zeta(-p)        cutoff finite part       est. error   leading pole")
for p in range(5):
    cut = cutoff_sum_finite_part(p)
    pole_power, pole_coeff = cut.divergent_terms[0]
    print(
        f"{p}   {str(zeta_exact(p)):<14}  {cut.finite_part: .15f}   {cut.estimated_error:.1e}     "
        f"{pole_coeff:.6f} eps^{pole_power}"
    )

# The fit uses only the closed form of the damped sum, sampled on a grid of eps.
grid = CutoffGrid.default(1)
print("\neps grid:", np.round(grid.epsilons, 4))
print("fit powers:", grid.fit_powers)

# Oscillating modes: the cutoff can be removed and the limit is finite.
print("\ntheta     Abel sum of n cos(2 theta n)    -1/(4 sin^2 theta)")
for theta in (0.1, math.pi / 6, math.pi / 4, math.pi / 2):
    value = oscillatory_sum(theta, 1).finite_part
    print(f"{theta:.4f}    {value: .12f}             {-1 / (4 * math.sin(theta) ** 2): .12f}")

# How the damped value approaches its limit as eps shrinks
theta = math.pi / 3
for eps in (0.5, 0.1, 0.02, 0.004):
    print(f"eps={eps:<6} damped sum={float(damped_oscillatory_sum(theta, 1, eps)): .10f}")
