"""Vacuum energy density between two plates.

Electric and magnetic halves each blow up at the plates like 1/sin^2, with
opposite signs, so their sum is flat. The same happens for the photon field,
where the divergence is 1/sin^4.
"""

import math

import numpy as np

from casimir_reg import densities as d

L = 1.0
thetas = np.array([0.02, 0.1, 0.3, math.pi / 4, math.pi / 2])

print("scalar field on [0, L]  (units 1/L^2)")
print("theta      u_E             u_B              u_E + u_B")
for t in thetas:
    ue, ub = d.scalar_uE(t, L), d.scalar_uB(t, L)
    print(f"{t:.4f}  {ue: .8e}  {ub: .8e}  {ue + ub: .12f}")
print(f"-pi/24 = {-math.pi / 24:.12f}")

print("\nphoton field between plates  (units 1/L^4)")
print("theta      F(theta)        <E^2>            <B^2>          (<E^2>+<B^2>)/2")
for t in thetas:
    print(
        f"{t:.4f}  {d.F_theta(t): .6e}  {d.em_E2(t, L): .6e}  {d.em_B2(t, L): .6e}  "
        f"{d.em_energy_density(t, L): .12f}"
    )
print(f"-pi^2/720 = {-math.pi**2 / 720:.12f}")

# Close to one plate the other plate stops mattering.
print("\nz/L      plate <E^2> / single-plane <E^2>")
for z in (0.1, 0.03, 0.01, 0.003):
    ratio = d.em_E2(math.pi * z / L, L) / d.halfspace_fluctuations(z).E2
    print(f"{z:<7}  {ratio:.10f}")

# Every profile is a combination of 1, csc^2, csc^4.
for kind in d.DensityKind:
    s = d.as_structured(kind, L, alpha=0.1, m=1.0)
    print(f"{kind.value:<22} scale={s.scale: .5f}  const={s.c_const: .5f}  csc2={s.c_csc2: .1f}  csc4={s.c_csc4: .1f}")
