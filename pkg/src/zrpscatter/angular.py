"""Two-channel angular basis adapted to a pair of scattering centers.

The natural angular functions for two centers at +-R/2 on the symmetry
axis are the even and odd combinations of the spherical waves they emit:

    Z_0(u) = cos(z*u/2) / sqrt(2*pi*S_plus),   z = k*R,  u = cos(theta),
    Z_1(u) = sin(z*u/2) / sqrt(2*pi*S_minus),

with normalization factors S_plus = 1 + sin(z)/z and S_minus = 1 - sin(z)/z.
They are orthonormal on the unit sphere for every z and collapse to the
spherical harmonics Y_00 and Y_10 as z -> 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .numerics import QuadratureRule, gauss_legendre, integrate_axial, z_minus_sin

__all__ = [
    "AngularBasis",
    "s_factors",
    "eval_Z",
    "limit_Y",
    "orthonormality_matrix",
]


def s_factors(z: float) -> tuple[float, float]:
    """Normalization pair (S_plus, S_minus) at z = k*R > 0.

    The minus branch is evaluated through the series of z - sin(z) for
    small z, where the direct difference 1 - sin(z)/z cancels.
    """
    if z <= 0:
        raise ValueError("z = k*R must be > 0")
    return 1.0 + math.sin(z) / z, z_minus_sin(z) / z


@dataclass(frozen=True)
class AngularBasis:
    """Angular basis data at fixed momentum k and separation R."""

    k: float
    R: float
    s_plus: float = field(init=False)
    s_minus: float = field(init=False)

    def __post_init__(self):
        if self.k <= 0 or self.R <= 0:
            raise ValueError("k and R must be > 0")
        sp, sm = s_factors(self.k * self.R)
        object.__setattr__(self, "s_plus", sp)
        object.__setattr__(self, "s_minus", sm)


def eval_Z(lam: int, basis: AngularBasis, cos_theta: float) -> float:
    """Evaluate Z_lam at u = cos(theta) for lam in {0, 1}.

    Z_0 is even in u and bounded by 1/sqrt(2*pi*S_plus); Z_1 is odd and
    bounded by 1/sqrt(2*pi*S_minus).  Because S_minus comes from the
    small-z series, the ratio sin(z*u/2)/sqrt(S_minus) stays accurate all
    the way into the spherical-harmonic limit.
    """
    if lam not in (0, 1):
        raise ValueError(f"channel index must be 0 or 1, got {lam!r}")
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError(f"cos_theta must lie in [-1, 1], got {cos_theta!r}")
    half = 0.5 * basis.k * basis.R * cos_theta
    if lam == 0:
        return math.cos(half) / math.sqrt(2.0 * math.pi * basis.s_plus)
    return math.sin(half) / math.sqrt(2.0 * math.pi * basis.s_minus)


def limit_Y(lam: int, cos_theta: float) -> float:
    """Spherical-harmonic limit of Z_lam as z -> 0: Y_00 or Y_10."""
    if lam not in (0, 1):
        raise ValueError(f"channel index must be 0 or 1, got {lam!r}")
    if not -1.0 <= cos_theta <= 1.0:
        raise ValueError(f"cos_theta must lie in [-1, 1], got {cos_theta!r}")
    if lam == 0:
        return 1.0 / math.sqrt(4.0 * math.pi)
    return math.sqrt(3.0 / (4.0 * math.pi)) * cos_theta


def orthonormality_matrix(basis: AngularBasis, nodes: int = 64) -> "np.ndarray":
    """Gram matrix of (Z_0, Z_1) over the unit sphere by Gauss-Legendre.

    Returns a 2x2 array; it equals the identity up to quadrature error.
    64 nodes reach 1e-12 for z up to 8 (the integrands are band-limited
    trigonometric polynomials in u, so convergence is spectral).
    """
    import numpy as np

    if nodes < 16:
        raise ValueError("orthonormality check needs at least 16 nodes")
    rule: QuadratureRule = gauss_legendre(nodes)
    gram = np.empty((2, 2))
    for i in (0, 1):
        for j in (0, 1):
            gram[i, j] = integrate_axial(
                lambda u, i=i, j=j: eval_Z(i, basis, u) * eval_Z(j, basis, u), rule
            )
    return gram
