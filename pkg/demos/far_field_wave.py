"""
Asymptotic continuum wave and its outgoing spherical part
=========================================================

Evaluate the far-field continuum wave psi(r) for the CH target along a
few rays, then fit the e^{+ikr}/r and e^{-ikr}/r components at pairs of
radii.  Subtracting the free (plane-wave) outgoing part from the fitted
coefficient recovers the scattering amplitude, which is how the angular
distribution hides inside psi.
"""

import cmath
import math

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from zrpscatter import (
    AngularBasis,
    Direction,
    asymptotic_psi,
    eval_Z,
    partial_amplitude_fixed,
    preset,
)

target = preset("CH")
k = 0.8
u_in = 1.0
basis = AngularBasis(k=k, R=target.R)

# psi along the forward ray.  This is the two-channel piece of the
# continuum wave, so its envelope falls off like 1/(k*r) while the phase
# advances at wavelength 2*pi/k.
print(f"psi along the forward ray, k = {k}")
print(f"{'r':>8} {'Re psi':>12} {'Im psi':>12} {'|psi|':>10}")
for r in (50.0, 100.0, 200.0, 400.0, 800.0):
    psi = asymptotic_psi(target, k, Direction(u_in), r, Direction(1.0))
    print(f"{r:8.1f} {psi.real:12.6f} {psi.imag:12.6f} {abs(psi):10.6f}")
print()


def outgoing_coefficient(u_out, r1):
    """Coefficient of e^{ikr}/r in psi, from a two-radius linear fit."""
    r2 = r1 + math.pi / (4.0 * k)
    psi1 = asymptotic_psi(target, k, Direction(u_in), r1, Direction(u_out))
    psi2 = asymptotic_psi(target, k, Direction(u_in), r2, Direction(u_out))
    matrix = np.array(
        [
            [cmath.exp(1j * k * r1) / r1, cmath.exp(-1j * k * r1) / r1],
            [cmath.exp(1j * k * r2) / r2, cmath.exp(-1j * k * r2) / r2],
        ]
    )
    c_out, _ = np.linalg.solve(matrix, np.array([psi1, psi2]))
    return c_out


# The outgoing coefficient minus the plane wave's own outgoing part is
# the scattering amplitude of the truncated angular expansion.
print("extracted amplitude vs partial_amplitude_fixed, r = 1000")
print(f"{'u_out':>6} {'extracted':>26} {'amplitude':>26} {'|diff|':>10}")
for u_out in (1.0, 0.5, 0.0, -0.5, -1.0):
    c_out = outgoing_coefficient(u_out, 1e3)
    free = sum(
        eval_Z(lam, basis, u_in) * eval_Z(lam, basis, u_out) for lam in (0, 1)
    ) * 4.0 * math.pi / (2j * k)
    f = partial_amplitude_fixed(target, k, Direction(u_in), Direction(u_out)).value
    got = c_out - free
    print(f"{u_out:6.2f} {got:26.10f} {f:26.10f} {abs(got - f):10.2e}")
print()

# Radial profile of |psi| on the forward ray, with the 1/(k*r) envelope
# the channel radial functions are bounded by.
r_grid = np.linspace(40.0, 140.0, 600)
psi_abs = [
    abs(asymptotic_psi(target, k, Direction(u_in), float(r), Direction(1.0)))
    for r in r_grid
]
weight = sum(eval_Z(lam, basis, u_in) ** 2 for lam in (0, 1))
envelope = [4.0 * math.pi * weight / (k * r) for r in r_grid]
fig, ax = plt.subplots(figsize=(7.0, 3.2))
ax.plot(r_grid, psi_abs, label=r"$|\psi|$")
ax.plot(r_grid, envelope, "k:", lw=0.8, label="channel envelope")
ax.set_xlabel("r (bohr)")
ax.set_ylabel(r"$|\psi|$ on the forward ray")
ax.legend()
fig.tight_layout()
fig.savefig("far_field_wave.png", dpi=150)
print("wrote far_field_wave.png")
