"""Eigenphase solver for scattering on two zero-range centers.

With z = k*R and the two single-center phases delta_1(k), delta_2(k),
the molecular eigenphase cotangents x = cot(eta) solve the quadratic

    alpha*x**2 + beta*x + gamma = 0,
    alpha = sin(z)**2 - z**2,
    beta  = sin(2*z) + z**2*(cot(delta_1) + cot(delta_2)),
    gamma = cos(z)**2 - z**2*cot(delta_1)*cot(delta_2).

Both roots are physical.  The branch whose phase vanishes linearly in k
as k -> 0 is labeled eta_0 and the cubic branch eta_1; at finite k the
labels follow the angular character of each channel: eta_0 belongs to the
root whose boundary eigenvector is dominated by the even angular function
Z_0, eta_1 to the odd-dominant root.  For identical centers this labeling
reproduces the closed forms of :func:`solve_phases_identical` exactly at
every k, and it is a pure function of (target, k), so sweeps over k can be
evaluated in any order.

For non-identical centers the two channel characters can trade places at
isolated momenta where the eigenvector mixing sweeps through 45 degrees;
the labels swap branches there while every label-independent quantity
(total cross section, amplitudes, residuals) stays smooth.  For the
bundled CH model the swaps sit near k = 2.14 and k = 2.62, above the
momentum range where the partial cross sections are usually plotted.

Numerical safeguards:

* roots come from the q-formula with a compensated (exactly rounded)
  discriminant, so neither root suffers subtractive cancellation;
* when either |sin delta_j| < 1e-6 the quadratic is multiplied through by
  sin(delta_1)*sin(delta_2), removing the cotangent poles; the scaled
  coefficients are flagged and the roots are unchanged;
* alpha is assembled from the series kernel of z - sin(z), keeping the
  small-z branch eta_1 ~ k**3 accurate;
* a root pushed to |cot| = infinity (a center exactly at a pole) is
  reported with the sentinel value and eta = 0.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .angular import s_factors
from .errors import (
    ConvergenceError,
    DiscriminantError,
    PhasePoleError,
    ResonanceWarning,
)
from .model import DEFAULT_SIN_FLOOR, TwoCenterTarget, eval_phase, kcot_delta
from .numerics import richardson_limit, z_minus_sin

__all__ = [
    "QuadraticCoeffs",
    "MolecularPhases",
    "quadratic_coeffs",
    "solve_phases",
    "solve_phases_identical",
    "determinant_residual",
    "scaled_determinant_residual",
    "scattering_length",
    "channel_weights",
    "sin_sq_from_cot",
    "exp_2i_eta",
]

# Relative clamp band for roundoff-negative discriminants.
DISCRIMINANT_CLAMP = 1e-12
# Switch to the pole-free scaled coefficient form below this |sin delta|.
SCALE_THRESHOLD = 1e-6
# Both |gamma| and |q| below this means the root pairing is degenerate.
RESONANCE_FLOOR = 1e-12
# Channel-dominance scores smaller than this are treated as a tie.
LABEL_TIE_SCORE = 1e-12
# Below this |sin delta_j| the stored residuals switch to the scaled form:
# the plain form's own rounding noise, amplified by the diverging cotangent,
# would exceed the certification tolerance even at a perfect root.
NEAR_POLE_SIN = 1e-3


@dataclass(frozen=True)
class QuadraticCoeffs:
    """Coefficients of the eigenphase quadratic at momentum k.

    When ``scaled`` is True the triple has been multiplied through by
    sin(delta_1)*sin(delta_2) to stay finite at a cotangent pole; the
    roots are identical either way.
    """

    z: float
    alpha: float
    beta: float
    gamma: float
    scaled: bool


@dataclass(frozen=True)
class MolecularPhases:
    """Labeled eigenphases at momentum k.

    Phases are principal values in (-pi/2, pi/2].  A cotangent held at
    +-infinity marks a channel whose phase sits exactly at 0 modulo pi.
    ``residual0``/``residual1`` are the boundary-determinant residuals at
    the returned roots (see :func:`determinant_residual`); they are
    evaluated in the pole-free scaled form when a center sits within
    |sin delta| < 1e-3 of a cotangent pole (see
    :func:`scaled_determinant_residual`).
    """

    k: float
    eta0: float
    eta1: float
    cot_eta0: float
    cot_eta1: float
    residual0: float
    residual1: float


def sin_sq_from_cot(x: float) -> float:
    """sin(eta)**2 for cot(eta) = x, overflow-safe, 0 at the sentinel."""
    if math.isinf(x):
        return 0.0
    if abs(x) >= 1e150:
        t = 1.0 / x
        return t * t / (1.0 + t * t)
    return 1.0 / (1.0 + x * x)


def exp_2i_eta(x: float) -> complex:
    """exp(2i*eta) for cot(eta) = x; equals (x + i)/(x - i)."""
    if math.isinf(x):
        return complex(1.0, 0.0)
    return (x + 1j) / (x - 1j)


def _alpha_unscaled(z: float) -> float:
    # sin(z)**2 - z**2 factored as -(z - sin z)(z + sin z); the first
    # factor cancels catastrophically near z = 0 if formed directly.
    return -z_minus_sin(z) * (z + math.sin(z))


def quadratic_coeffs(target: TwoCenterTarget, k: float) -> QuadraticCoeffs:
    """Assemble the eigenphase quadratic for a target at momentum k."""
    if k <= 0:
        raise ValueError("k must be > 0")
    d1 = eval_phase(target.center1, k)
    d2 = eval_phase(target.center2, k)
    z = k * target.R
    sd1 = math.sin(d1)
    sd2 = math.sin(d2)
    if min(abs(sd1), abs(sd2)) < SCALE_THRESHOLD:
        ss = sd1 * sd2
        alpha = _alpha_unscaled(z) * ss
        beta = math.sin(2.0 * z) * ss + z * z * math.sin(d1 + d2)
        gamma = math.cos(z) ** 2 * ss - z * z * math.cos(d1) * math.cos(d2)
        return QuadraticCoeffs(z, alpha, beta, gamma, True)
    cot1 = kcot_delta(target.center1, k) / k
    cot2 = kcot_delta(target.center2, k) / k
    alpha = _alpha_unscaled(z)
    beta = math.sin(2.0 * z) + z * z * (cot1 + cot2)
    gamma = math.cos(z) ** 2 - z * z * cot1 * cot2
    return QuadraticCoeffs(z, alpha, beta, gamma, False)


def _split(a: float) -> tuple[float, float]:
    t = 134217729.0 * a  # 2**27 + 1
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(x: float, y: float) -> tuple[float, float]:
    p = x * y
    xh, xl = _split(x)
    yh, yl = _split(y)
    e = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    return p, e


def _discriminant(a: float, b: float, c: float) -> float:
    # b*b - 4*a*c with the rounding errors of both products restored;
    # near a double root the naive form loses half the digits.
    p, pe = _two_prod(b, b)
    q, qe = _two_prod(4.0 * a, c)
    return (p - q) + (pe - qe)


def _stable_roots(a: float, b: float, c: float) -> tuple[float, float]:
    """Both roots of a*x**2 + b*x + c = 0, allowing infinite roots.

    Uses the q-formula so the small root never comes from a subtractive
    cancellation.  A vanishing leading coefficient (scaled form at an
    exact pole) degrades gracefully to a linear equation plus a root at
    infinity.
    """
    if a == 0.0:
        if b == 0.0:
            if c == 0.0:
                raise DiscriminantError("all quadratic coefficients vanish")
            return math.inf, math.inf
        return -c / b, math.inf
    d = _discriminant(a, b, c)
    if d < 0.0:
        band = DISCRIMINANT_CLAMP * (b * b + abs(4.0 * a * c))
        if d < -band:
            raise DiscriminantError(
                f"discriminant {d!r} negative beyond the roundoff band {band!r}"
            )
        d = 0.0
    root = math.sqrt(d)
    q = -0.5 * (b + math.copysign(root, b))
    if abs(q) < RESONANCE_FLOOR and abs(c) < RESONANCE_FLOOR:
        warnings.warn(
            "eigenphase roots are degenerate at this momentum (|gamma| and "
            "|q| both below the resonance floor); both channels sit at the "
            "unitarity limit",
            ResonanceWarning,
            stacklevel=3,
        )
    if q == 0.0:
        return 0.0, 0.0
    return q / a, c / q


def _eta_from_cot(x: float) -> float:
    """Principal value eta in (-pi/2, pi/2] with cot(eta) = x."""
    if math.isinf(x):
        return 0.0
    eta = math.atan2(1.0, x)
    if eta > 0.5 * math.pi:
        eta -= math.pi
    return eta


def channel_weights(target: TwoCenterTarget, k: float, eta: float) -> tuple[float, float]:
    """(Z_0, Z_1) components of the boundary eigenvector at a root eta.

    The boundary system at a root has null vector (D_1, D_2) over the two
    centers; its far field carries the even angular function with weight
    (D_1 + D_2)*sqrt(S_plus) and the odd one with (D_1 - D_2)*sqrt(S_minus).
    The vector is assembled in a cotangent-free form, so it is valid at
    single-center poles, and its overall sign and scale are arbitrary.
    """
    d1 = eval_phase(target.center1, k)
    d2 = eval_phase(target.center2, k)
    z = k * target.R
    a_coupling = math.sin(z + eta) / target.R
    u1 = (a_coupling * math.sin(d1), -k * math.sin(d1 - eta))
    u2 = (k * math.sin(d2 - eta), -a_coupling * math.sin(d2))
    u = u1 if math.hypot(*u1) >= math.hypot(*u2) else u2
    sp, sm = s_factors(z)
    w0 = (u[0] + u[1]) * math.sqrt(sp)
    w1 = (u[0] - u[1]) * math.sqrt(sm)
    return w0, w1


def _dominance_score(target: TwoCenterTarget, k: float, eta: float) -> float:
    w0, w1 = channel_weights(target, k, eta)
    norm = w0 * w0 + w1 * w1
    if norm == 0.0 or not math.isfinite(norm):
        return 0.0
    return (w0 * w0 - w1 * w1) / norm


def scaled_determinant_residual(target: TwoCenterTarget, k: float, eta: float) -> float:
    """Determinant residual times sin(delta_1)*sin(delta_2), pole-free.

        k^2 sin(delta_1 - eta) sin(delta_2 - eta)
            - sin^2(kR + eta) sin(delta_1) sin(delta_2) / R^2

    Algebraically equal to :func:`determinant_residual` scaled by
    sin(delta_1)*sin(delta_2), but every factor stays O(1) bounded, so it
    keeps full accuracy where a cotangent diverges.  Use it to certify
    roots whenever either |sin delta_j| is small; the plain form there
    carries rounding noise of order eps/|sin delta_j| however accurate
    the root is.
    """
    d1 = eval_phase(target.center1, k)
    d2 = eval_phase(target.center2, k)
    z = k * target.R
    scattered = k * k * math.sin(d1 - eta) * math.sin(d2 - eta)
    coupling = math.sin(z + eta) ** 2 * math.sin(d1) * math.sin(d2) / (target.R * target.R)
    return scattered - coupling


def _residual_at(target: TwoCenterTarget, k: float, eta: float) -> float:
    d1 = eval_phase(target.center1, k)
    d2 = eval_phase(target.center2, k)
    if min(abs(math.sin(d1)), abs(math.sin(d2))) < NEAR_POLE_SIN:
        return scaled_determinant_residual(target, k, eta)
    return determinant_residual(target, k, eta)


def solve_phases(target: TwoCenterTarget, k: float) -> MolecularPhases:
    """Solve and label both molecular eigenphases at momentum k."""
    coeffs = quadratic_coeffs(target, k)
    x_a, x_b = _stable_roots(coeffs.alpha, coeffs.beta, coeffs.gamma)
    eta_a = _eta_from_cot(x_a)
    eta_b = _eta_from_cot(x_b)
    score_a = _dominance_score(target, k, eta_a)
    score_b = _dominance_score(target, k, eta_b)
    if abs(score_a) < LABEL_TIE_SCORE and abs(score_b) < LABEL_TIE_SCORE:
        # Exactly half-mixed channels carry no angular label; fall back to
        # ordering by |cot eta| so eta_0 is the slower phase.
        first = abs(x_a) <= abs(x_b)
    else:
        first = score_a >= score_b
    if not first:
        x_a, x_b = x_b, x_a
        eta_a, eta_b = eta_b, eta_a
    return MolecularPhases(
        k=k,
        eta0=eta_a,
        eta1=eta_b,
        cot_eta0=x_a,
        cot_eta1=x_b,
        residual0=_residual_at(target, k, eta_a),
        residual1=_residual_at(target, k, eta_b),
    )


def solve_phases_identical(delta: float, R: float, k: float) -> MolecularPhases:
    """Closed-form eigenphases when both centers share the phase delta.

    cot(eta_0) = (z*cot(delta) - cos z) / (z + sin z)
    cot(eta_1) = (z*cot(delta) + cos z) / (z - sin z),      z = k*R,

    with the denominator of the odd branch evaluated through the series
    of z - sin(z) for small z.  eta_0 is the even (gerade-like) channel.
    """
    if k <= 0 or R <= 0:
        raise ValueError("k and R must be > 0")
    reduced = math.remainder(delta, math.pi)
    s = math.sin(reduced)
    if abs(s) < DEFAULT_SIN_FLOOR:
        raise PhasePoleError(k, delta, DEFAULT_SIN_FLOOR)
    cot_d = math.cos(reduced) / s
    z = k * R
    cot0 = (z * cot_d - math.cos(z)) / (z + math.sin(z))
    cot1 = (z * cot_d + math.cos(z)) / z_minus_sin(z)
    eta0 = _eta_from_cot(cot0)
    eta1 = _eta_from_cot(cot1)

    def residual(eta: float) -> float:
        a_coupling = math.sin(z + eta) / R
        b = k * math.cos(eta) - math.sin(eta) * k * cot_d
        return b * b - a_coupling * a_coupling

    return MolecularPhases(
        k=k,
        eta0=eta0,
        eta1=eta1,
        cot_eta0=cot0,
        cot_eta1=cot1,
        residual0=residual(eta0),
        residual1=residual(eta1),
    )


def determinant_residual(target: TwoCenterTarget, k: float, eta: float) -> float:
    """Boundary-determinant residual B1*B2 - A**2 at a trial phase eta.

    B_j = k*cos(eta) - sin(eta)*k*cot(delta_j) and A = sin(k*R + eta)/R.
    The residual vanishes exactly at the eigenphases, and changes sign
    across each simple root, so it doubles as a bisection oracle.
    Single-center cotangent poles propagate as :class:`PhasePoleError`.
    """
    kc1 = kcot_delta(target.center1, k)
    kc2 = kcot_delta(target.center2, k)
    a_coupling = math.sin(k * target.R + eta) / target.R
    b1 = k * math.cos(eta) - math.sin(eta) * kc1
    b2 = k * math.cos(eta) - math.sin(eta) * kc2
    return b1 * b2 - a_coupling * a_coupling


# Momenta used to extrapolate the zero-energy limit of -eta_0/k.
_LIMIT_MOMENTA = (1e-3, 1e-4, 1e-5)
_LIMIT_RELATIVE_TOL = 1e-4


def scattering_length(target: TwoCenterTarget) -> float:
    """Molecular scattering length L = lim_{k->0} -eta_0(k)/k.

    Extrapolated by Richardson from three small momenta.  Warns when the
    target sits near the zero-energy resonance 1 - R**2/(a_1*a_2) = 0,
    where L diverges; raises :class:`ConvergenceError` if the extrapolant
    has not settled to 1e-4 relative.
    """
    a1 = target.center1.scattering_length
    a2 = target.center2.scattering_length
    if a1 != 0.0 and a2 != 0.0:
        denom = 1.0 - target.R * target.R / (a1 * a2)
        if abs(denom) < 1e-6:
            warnings.warn(
                "target is within 1e-6 of the zero-energy resonance "
                "1 - R**2/(a1*a2) = 0; the molecular scattering length diverges",
                ResonanceWarning,
                stacklevel=2,
            )
    samples = [(k, -solve_phases(target, k).eta0 / k) for k in _LIMIT_MOMENTA]
    limit, err = richardson_limit(samples)
    scale = max(abs(limit), 1e-30)
    if err > _LIMIT_RELATIVE_TOL * scale:
        raise ConvergenceError(
            f"scattering-length extrapolation did not converge: estimate {limit!r} "
            f"with error {err!r}"
        )
    return limit
