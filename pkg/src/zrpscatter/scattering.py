"""Amplitudes, cross sections, and far-field waves for two-center targets.

Two independent constructions of the same physics live here:

* an exact closed-form *oracle*: the scattered wave is a plane wave plus
  one outgoing spherical s-wave per center, whose complex strengths
  (D1, D2) solve a 2x2 linear system fixed by the zero-range boundary
  conditions.  This route never touches the eigenphase solver.
* the *channel* route: eigenphases from :mod:`.phases` combined with the
  angular functions of :mod:`.angular`, either with the fixed basis
  (Z_0, Z_1) or with the orthogonally mixed eigenchannel functions.

The exact-channel amplitude must reproduce the oracle for every target;
the fixed-basis amplitude is guaranteed to agree only when both centers
carry the same phase, and the residual difference for unequal centers is
a quantity this package reports rather than hides (see the ``validate``
command).  Cross sections follow from the optical theorem on the oracle
side and from sin^2(eta) sums on the channel side, giving the end-to-end
consistency checks used by the test suite.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from .angular import AngularBasis, eval_Z
from .errors import DegenerateChannelsWarning, SingularOracleError
from .model import Direction, TwoCenterTarget, kcot_delta
from .numerics import gauss_legendre, integrate_axial
from .phases import (
    MolecularPhases,
    channel_weights,
    exp_2i_eta,
    sin_sq_from_cot,
    solve_phases,
)

__all__ = [
    "OracleSolution",
    "Amplitude",
    "EigenchannelDecomposition",
    "CrossSectionRow",
    "ChannelMeta",
    "oracle_solve",
    "oracle_residual",
    "oracle_amplitude",
    "partial_amplitude_fixed",
    "partial_amplitude_exact",
    "eigenchannels",
    "sigma_bar",
    "oracle_sigma_bar",
    "integrated_sigma",
    "asymptotic_radial",
    "psi_channel_radial",
    "asymptotic_psi",
]

# |det| below this fraction of the matrix scale marks a resonant momentum.
ORACLE_SINGULAR_RTOL = 1e-14
# Eigenphase gap (mod pi) below which the channels are reported degenerate.
DEGENERATE_PHASE_TOL = 1e-10


@dataclass(frozen=True)
class OracleSolution:
    """Closed-form scattered-wave strengths for one incident direction.

    The wave is  exp(i k.r) + D1*exp(i k r1)/r1 + D2*exp(i k r2)/r2  with
    r_j the distance to center j; D1, D2 (bohr) solve the boundary-value
    system assembled by :func:`oracle_solve`.  The target travels with the
    solution so downstream evaluations need no extra geometry arguments.
    """

    k: float
    incident: Direction
    D1: complex
    D2: complex
    target: TwoCenterTarget


@dataclass(frozen=True)
class Amplitude:
    """Scattering amplitude value (bohr) with its defining directions.

    Reciprocity for these axial targets reads F(in, out) = F(-out, -in):
    running the collision backwards swaps and reverses both directions.
    Only when the two centers are identical (or for the fixed-basis
    construction, which assumes unmixed channels) does the stronger plain
    exchange symmetry F(in, out) = F(out, in) hold as well -- backscatter
    off the two ends of an asymmetric target genuinely differs.
    """

    value: complex
    k: float
    incident: Direction
    outgoing: Direction


@dataclass(frozen=True)
class EigenchannelDecomposition:
    """Eigenphases plus the orthogonal mixing of (Z_0, Z_1).

    Row ``lam`` of ``mixing`` gives the standing-wave angular shape of
    eigenchannel lam, Zt_lam = mixing[lam][0]*Z_0 + mixing[lam][1]*Z_1.
    Rows are exactly orthonormal by construction and sign-fixed so that
    the diagonal is non-negative; identical centers therefore yield the
    identity matrix.  Because the odd channel's radial wave lags a quarter
    period, the traveling-wave shapes dress the Z_1 component with -+i
    (outgoing/incident); :func:`partial_amplitude_exact` applies that.
    """

    k: float
    eigenphases: tuple[float, float]
    mixing: tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class CrossSectionRow:
    """Partial and total elastic cross sections (bohr^2) at momentum k."""

    k: float
    sigma0: float
    sigma1: float
    sigma_total: float


@dataclass(frozen=True)
class ChannelMeta:
    """Channel index and its centrifugal-like phase index.

    For a two-center target the asymptotic radial wave of channel lam
    behaves like sin(k*r - omega*pi/2 + eta)/(k*r) with omega = lam, the
    same role the orbital angular momentum plays for a central potential.
    """

    lam: int
    omega: int = -1

    def __post_init__(self):
        if self.lam not in (0, 1):
            raise ValueError(f"channel index must be 0 or 1, got {self.lam!r}")
        if self.omega == -1:
            object.__setattr__(self, "omega", self.lam)
        elif self.omega != self.lam:
            raise ValueError("omega must equal the channel index for two centers")


def _solve_2x2(
    m11: complex,
    m12: complex,
    m21: complex,
    m22: complex,
    r1: complex,
    r2: complex,
    k: float,
) -> tuple[complex, complex]:
    """Cramer solve of a 2x2 complex system with a resonance guard."""
    det = m11 * m22 - m12 * m21
    scale = abs(m11 * m22) + abs(m12 * m21)
    if abs(det) <= ORACLE_SINGULAR_RTOL * scale:
        raise SingularOracleError(k)
    return (r1 * m22 - r2 * m12) / det, (m11 * r2 - m21 * r1) / det


def _oracle_matrix(target: TwoCenterTarget, k: float) -> tuple[complex, complex, complex]:
    a = cmath.exp(1j * k * target.R) / target.R
    m11 = complex(kcot_delta(target.center1, k), -k)
    m22 = complex(kcot_delta(target.center2, k), -k)
    return m11, m22, a


def oracle_solve(target: TwoCenterTarget, k: float, incident: Direction) -> OracleSolution:
    """Solve the closed-form boundary system for the strengths (D1, D2).

    Matching the 1/|r - R_j| singularity and the constant term of the
    full wave at each center gives

        (k*cot(delta_1) - i*k)*D1 - a*D2 = exp(+i*(z/2)*u0),
        -a*D1 + (k*cot(delta_2) - i*k)*D2 = exp(-i*(z/2)*u0),

    with a = exp(i*z)/R, z = k*R, and u0 the incident direction cosine.
    A determinant within 1e-14 (relative) of zero is reported as a
    resonance via :class:`~zrpscatter.errors.SingularOracleError`.
    """
    if k <= 0:
        raise ValueError("k must be > 0")
    m11, m22, a = _oracle_matrix(target, k)
    half = 0.5j * k * target.R * incident.cos_polar
    d1, d2 = _solve_2x2(m11, -a, -a, m22, cmath.exp(half), cmath.exp(-half), k)
    return OracleSolution(k=k, incident=incident, D1=d1, D2=d2, target=target)


def oracle_residual(sol: OracleSolution) -> float:
    """Largest relative residual of the two boundary equations at ``sol``.

    Useful as a self-test: a healthy solve sits at a few machine epsilon.
    """
    m11, m22, a = _oracle_matrix(sol.target, sol.k)
    half = 0.5j * sol.k * sol.target.R * sol.incident.cos_polar
    rhs1 = cmath.exp(half)
    rhs2 = cmath.exp(-half)
    res1 = m11 * sol.D1 - a * sol.D2 - rhs1
    res2 = -a * sol.D1 + m22 * sol.D2 - rhs2
    scale1 = max(abs(m11 * sol.D1), abs(a * sol.D2), abs(rhs1))
    scale2 = max(abs(a * sol.D1), abs(m22 * sol.D2), abs(rhs2))
    return max(abs(res1) / scale1, abs(res2) / scale2)


def _oracle_amplitude_value(sol: OracleSolution, cos_out: float) -> complex:
    half = 0.5j * sol.k * sol.target.R * cos_out
    return sol.D1 * cmath.exp(-half) + sol.D2 * cmath.exp(half)


def oracle_amplitude(sol: OracleSolution, outgoing: Direction) -> Amplitude:
    """Far-field amplitude of the oracle wave toward ``outgoing``.

    Each spherical wave contributes D_j*exp(-i k k_out.R_j); with both
    centers on the axis only the direction cosine enters, so the result
    is azimuth-independent.
    """
    value = _oracle_amplitude_value(sol, outgoing.cos_polar)
    return Amplitude(value=value, k=sol.k, incident=sol.incident, outgoing=outgoing)


def partial_amplitude_fixed(
    target: TwoCenterTarget, k: float, incident: Direction, outgoing: Direction
) -> Amplitude:
    """Channel amplitude built on the fixed angular basis (Z_0, Z_1).

        F = (2*pi/(i*k)) * sum_lam (e^{2i eta_lam} - 1) Z_lam(in) Z_lam(out)

    This assumes each eigenchannel radiates a pure Z_lam, which is exact
    for identical centers and an approximation otherwise; compare with
    :func:`partial_amplitude_exact` to quantify the difference.
    """
    ph = solve_phases(target, k)
    basis = AngularBasis(k=k, R=target.R)
    total = 0j
    for lam, cot in ((0, ph.cot_eta0), (1, ph.cot_eta1)):
        s_elem = exp_2i_eta(cot) - 1.0
        total += s_elem * eval_Z(lam, basis, incident.cos_polar) * eval_Z(
            lam, basis, outgoing.cos_polar
        )
    value = 2.0 * math.pi / (1j * k) * total
    return Amplitude(value=value, k=k, incident=incident, outgoing=outgoing)


def _mixing_rows(
    target: TwoCenterTarget, k: float, ph: MolecularPhases
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Orthonormal eigenvector rows in the (Z_0, Z_1) basis.

    Both boundary eigenvectors are analytically orthogonal, so a single
    rotation angle captures the pair; it is taken from whichever root has
    the better-conditioned (larger-norm) weight vector.  Rows are then
    sign-fixed to a non-negative diagonal.
    """
    w_a = channel_weights(target, k, ph.eta0)
    w_b = channel_weights(target, k, ph.eta1)
    if math.hypot(*w_a) >= math.hypot(*w_b):
        chi = math.atan2(w_a[1], w_a[0])
    else:
        chi = math.atan2(w_b[1], w_b[0]) - 0.5 * math.pi
    c = math.cos(chi)
    s = math.sin(chi)
    row0 = (c, s)
    row1 = (-s, c)
    if row0[0] < 0.0:
        row0 = (-row0[0], -row0[1])
    if row1[1] < 0.0:
        row1 = (-row1[0], -row1[1])
    return row0, row1


def eigenchannels(target: TwoCenterTarget, k: float) -> EigenchannelDecomposition:
    """Eigenphases and the orthogonal (Z_0, Z_1) mixing matrix at k.

    The mixing rows are the boundary-eigenvector directions expressed in
    the fixed angular basis; see :func:`~zrpscatter.phases.channel_weights`.
    Warns when the two eigenphases coincide modulo pi, where the mixing
    direction stops being observable.
    """
    ph = solve_phases(target, k)
    gap = abs(math.remainder(ph.eta0 - ph.eta1, math.pi))
    if gap < DEGENERATE_PHASE_TOL:
        warnings.warn(
            f"eigenphases coincide modulo pi at k={k!r} (gap {gap:.3e}); "
            "the channel mixing is arbitrary there",
            DegenerateChannelsWarning,
            stacklevel=2,
        )
    return EigenchannelDecomposition(
        k=k, eigenphases=(ph.eta0, ph.eta1), mixing=_mixing_rows(target, k, ph)
    )


def partial_amplitude_exact(
    target: TwoCenterTarget, k: float, incident: Direction, outgoing: Direction
) -> Amplitude:
    """Channel amplitude with eigenchannel-mixed angular functions.

        F = (2*pi/(i*k)) * sum_lam (e^{2i eta_lam} - 1) W_lam(out) conj(W_lam)(in)

    where W_lam(u) = mixing[lam][0]*Z_0(u) - i*mixing[lam][1]*Z_1(u) is the
    outgoing angular shape of eigenchannel lam.  The odd channel rides a
    radial wave a quarter period behind the even one, so its outgoing part
    carries an extra -i relative to the incident part; the conjugate pair
    encodes exactly that offset.  For identical centers the mixing is
    diagonal, (-i)(+i) = 1, and the fixed-basis formula is recovered.
    Agrees with :func:`oracle_amplitude` for every target.
    """
    ph = solve_phases(target, k)
    rows = _mixing_rows(target, k, ph)
    basis = AngularBasis(k=k, R=target.R)
    z_in = (eval_Z(0, basis, incident.cos_polar), eval_Z(1, basis, incident.cos_polar))
    z_out = (eval_Z(0, basis, outgoing.cos_polar), eval_Z(1, basis, outgoing.cos_polar))
    total = 0j
    for row, cot in zip(rows, (ph.cot_eta0, ph.cot_eta1)):
        w_in = row[0] * z_in[0] + 1j * row[1] * z_in[1]
        w_out = row[0] * z_out[0] - 1j * row[1] * z_out[1]
        total += (exp_2i_eta(cot) - 1.0) * w_in * w_out
    value = 2.0 * math.pi / (1j * k) * total
    return Amplitude(value=value, k=k, incident=incident, outgoing=outgoing)


def sigma_bar(target: TwoCenterTarget, k: float) -> CrossSectionRow:
    """Averaged partial and total cross sections from the eigenphases.

    sigma_lam = (4*pi/k**2)*sin(eta_lam)**2; the total is their sum and
    equals the solid-angle-integrated cross section averaged over incident
    directions (cross-checked against :func:`oracle_sigma_bar`).
    """
    ph = solve_phases(target, k)
    pref = 4.0 * math.pi / (k * k)
    sigma0 = pref * sin_sq_from_cot(ph.cot_eta0)
    sigma1 = pref * sin_sq_from_cot(ph.cot_eta1)
    return CrossSectionRow(k=k, sigma0=sigma0, sigma1=sigma1, sigma_total=sigma0 + sigma1)


def oracle_sigma_bar(target: TwoCenterTarget, k: float, nodes: int = 64) -> float:
    """Direction-averaged total cross section via the optical theorem.

    Averages (4*pi/k)*Im F(k_in, k_in) over incident directions with
    Gauss-Legendre quadrature in the direction cosine.  Entirely oracle-
    based, hence an independent check on :func:`sigma_bar`.
    """
    rule = gauss_legendre(nodes)

    def forward_sigma(u0: float) -> float:
        sol = oracle_solve(target, k, Direction(cos_polar=u0))
        return 4.0 * math.pi / k * _oracle_amplitude_value(sol, u0).imag

    return integrate_axial(forward_sigma, rule) / (4.0 * math.pi)


def integrated_sigma(
    target: TwoCenterTarget, k: float, incident: Direction, nodes: int = 64
) -> float:
    """Total cross section for one orientation: integral of |F|^2.

    Uses the oracle amplitude over outgoing directions (axisymmetric 1-D
    quadrature).  By the optical theorem the result equals
    (4*pi/k)*Im F(incident, incident).
    """
    sol = oracle_solve(target, k, incident)
    rule = gauss_legendre(nodes)
    return integrate_axial(lambda u: abs(_oracle_amplitude_value(sol, u)) ** 2, rule)


def asymptotic_radial(meta: ChannelMeta, k: float, r: float, eta: float) -> complex:
    """Asymptotic radial wave e^{i(eta - omega*pi/2)} sin(kr - omega*pi/2 + eta)/(kr).

    Valid for k*r >> k*R (no cutoff enforced).  The channel phase factor
    follows the lambda = 0, 1 closed forms; for the factor that makes the
    full wave's outgoing part carry the channel amplitude, see
    :func:`psi_channel_radial`, which differs by (-1)**omega.
    """
    if k <= 0 or r <= 0:
        raise ValueError("k and r must be > 0")
    shift = 0.5 * math.pi * meta.omega
    return cmath.exp(1j * (eta - shift)) * math.sin(k * r - shift + eta) / (k * r)


def psi_channel_radial(meta: ChannelMeta, k: float, r: float, eta: float) -> complex:
    """Radial wave i^omega * e^{i eta} * sin(kr - omega*pi/2 + eta)/(kr).

    Same standing wave as :func:`asymptotic_radial` but with the i^omega
    phase under which the eta = 0 limit of the channel sum reassembles
    the incident plane wave, so the outgoing excess of
    :func:`asymptotic_psi` is exactly the fixed-basis amplitude.
    """
    if k <= 0 or r <= 0:
        raise ValueError("k and r must be > 0")
    shift = 0.5 * math.pi * meta.omega
    return 1j**meta.omega * cmath.exp(1j * eta) * math.sin(k * r - shift + eta) / (k * r)


def asymptotic_psi(
    target: TwoCenterTarget,
    k: float,
    incident: Direction,
    r: float,
    outgoing_point: Direction,
) -> complex:
    """Far-field continuum wave at radius r toward ``outgoing_point``.

        psi = 4*pi * sum_lam R_lam(r) * Z_lam(r_hat) * Z_lam(k_hat)

    with R_lam from :func:`psi_channel_radial` (equivalently, the
    :func:`asymptotic_radial` forms with channel signs (+1, -1)).  The
    expansion is meaningful for r >> R; r > 20*R is a safe rule of thumb.
    Extracting the e^{ikr}/r coefficient and subtracting the eta = 0
    plane-wave part recovers :func:`partial_amplitude_fixed`.
    """
    ph = solve_phases(target, k)
    basis = AngularBasis(k=k, R=target.R)
    total = 0j
    for lam, eta in ((0, ph.eta0), (1, ph.eta1)):
        radial = psi_channel_radial(ChannelMeta(lam), k, r, eta)
        total += (
            radial
            * eval_Z(lam, basis, outgoing_point.cos_polar)
            * eval_Z(lam, basis, incident.cos_polar)
        )
    return 4.0 * math.pi * total
