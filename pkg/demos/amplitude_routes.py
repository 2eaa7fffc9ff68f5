"""
Three constructions of the scattering amplitude
===============================================

The amplitude for scattering on two zero-range centers can be built
three ways:

* ``oracle_amplitude`` -- solve the 2x2 boundary system for the source
  strengths and read the amplitude off the outgoing spherical waves
  (closed form, no angular basis involved);
* ``partial_amplitude_exact`` -- eigenchannel sum with
  momentum-dependent channel dressing, equal to the oracle for every
  target;
* ``partial_amplitude_fixed`` -- the same sum with the fixed
  (+, -) symmetric/antisymmetric basis, exact when the two centers are
  identical and only approximate otherwise.

This script prints all three side by side and then scans for the worst
disagreement on each target.
"""

import numpy as np

from zrpscatter import (
    Direction,
    oracle_amplitude,
    oracle_solve,
    partial_amplitude_exact,
    partial_amplitude_fixed,
    preset,
)

targets = {
    "CH": preset("CH"),
    "C2": preset("C2", R=2.348),
}


def three_routes(target, k, u_in, u_out):
    sol = oracle_solve(target, k, Direction(u_in))
    a = oracle_amplitude(sol, Direction(u_out)).value
    b = partial_amplitude_exact(target, k, Direction(u_in), Direction(u_out)).value
    c = partial_amplitude_fixed(target, k, Direction(u_in), Direction(u_out)).value
    return a, b, c


print(f"{'target':>6} {'k':>5} {'u_in':>5} {'u_out':>5}"
      f" {'oracle':>24} {'exact':>24} {'fixed':>24}")
for name, target in targets.items():
    for k, u_in, u_out in ((0.3, 1.0, 1.0), (0.9, 0.4, -0.7), (2.0, -1.0, 0.2)):
        a, b, c = three_routes(target, k, u_in, u_out)
        print(f"{name:>6} {k:5.2f} {u_in:5.2f} {u_out:5.2f}"
              f" {a:24.6f} {b:24.6f} {c:24.6f}")
    print()

# Scan a direction/momentum grid for the worst deviation of each
# construction from the oracle.
u_grid = np.linspace(-1.0, 1.0, 9)
k_grid = (0.2, 0.6, 1.1, 1.9, 2.7)
for name, target in targets.items():
    worst_exact = 0.0
    worst_fixed = 0.0
    for k in k_grid:
        for u_in in u_grid:
            sol = oracle_solve(target, k, Direction(float(u_in)))
            for u_out in u_grid:
                a = oracle_amplitude(sol, Direction(float(u_out))).value
                b = partial_amplitude_exact(
                    target, k, Direction(float(u_in)), Direction(float(u_out))
                ).value
                c = partial_amplitude_fixed(
                    target, k, Direction(float(u_in)), Direction(float(u_out))
                ).value
                worst_exact = max(worst_exact, abs(b - a))
                worst_fixed = max(worst_fixed, abs(c - a))
    print(f"{name}: max |exact - oracle| = {worst_exact:.3e} bohr,"
          f" max |fixed - oracle| = {worst_fixed:.3e} bohr")

print()
print("The fixed symmetric/antisymmetric basis diagonalizes the boundary")
print("system only when the two centers are identical; for CH it misses the")
print("momentum-dependent channel mixing, hence the O(1) gap above, while")
print("for C2 it reproduces the oracle to rounding.")
