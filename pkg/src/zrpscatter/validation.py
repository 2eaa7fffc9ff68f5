"""Cross-check suite wiring every route of the package against the others.

Each check computes a worst-case dimensionless residual over a grid and
compares it against either the caller's identity tolerance (for relations
that hold to machine precision: route equivalences, root certification,
unitarity, the optical theorem) or a fixed physics tolerance documented
per check (for extrapolated limits, which carry genuine truncation error).

One diagnostic is deliberately informational: the fixed-basis amplitude
assumes the two channels radiate the unmixed angular functions, which is
exact only for identical centers.  Its divergence from the closed-form
amplitude for an asymmetric target is a real, finite effect -- the suite
measures and reports it instead of asserting either construction wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .angular import AngularBasis, eval_Z, limit_Y, orthonormality_matrix
from .model import Direction, TwoCenterTarget, eval_phase, kcot_delta, preset
from .numerics import richardson_limit
from .phases import (
    NEAR_POLE_SIN,
    exp_2i_eta,
    scattering_length,
    solve_phases,
    solve_phases_identical,
)
from .scattering import (
    integrated_sigma,
    oracle_amplitude,
    oracle_residual,
    oracle_sigma_bar,
    oracle_solve,
    partial_amplitude_exact,
    partial_amplitude_fixed,
    sigma_bar,
)

__all__ = ["CheckResult", "run_checks", "relative_root_residual", "DEFAULT_C2_R"]

# Example internuclear distance for the two-carbon target.  The package
# ships no equilibrium distance for it; this is the value used in the
# command-line examples and can be overridden everywhere it appears.
DEFAULT_C2_R = 2.348

# Fixed physics tolerances (not scaled by the caller's --tol):
LIMIT_LAW_TOL = 1e-2          # Richardson error of eta0/k and eta1/k**3
SCATTERING_LENGTH_TOL = 1e-3  # |L - closed form|, bohr
SIGMA_LIMIT_TOL = 5e-3        # sigma_total(k->0) vs 4*pi*L**2, relative
HARMONIC_LIMIT_TOL = 1e-6     # max |Z_lam - Y_lam0| at z = 1e-4

_LIMIT_SAMPLES = (1e-3, 3e-4, 1e-4)
_AMP_MOMENTA = (0.1, 0.5, 1.0, 2.0)
_AMP_COSINES = (-1.0, -0.5, 0.0, 0.5, 1.0)
_GRAM_Z = (0.1, 1.0, math.pi, 5.0, 8.0)


@dataclass(frozen=True)
class CheckResult:
    """One row of the validation table.

    ``residual`` is the worst dimensionless deviation found, ``k`` the
    momentum (or basis parameter) where it occurred, and ``status`` one of
    PASS, FAIL, or INFO (measured diagnostic with no pass/fail meaning).
    """

    check: str
    target: str
    k: float
    residual: float
    tolerance: float
    status: str

    @property
    def failed(self) -> bool:
        return self.status == "FAIL"


def _result(check: str, target: str, k: float, residual: float, tol: float) -> CheckResult:
    status = "PASS" if residual <= tol else "FAIL"
    return CheckResult(check, target, k, residual, tol, status)


def _worst(pairs: Iterable[tuple[float, float]]) -> tuple[float, float]:
    """(k, value) with the largest value from an iterable of (k, value)."""
    best_k, best_v = 0.0, -math.inf
    for k, v in pairs:
        if v > best_v:
            best_k, best_v = k, v
    return best_k, best_v


def relative_root_residual(target: TwoCenterTarget, k: float) -> float:
    """Worst residual of both solved roots, relative to the term scale.

    Rebuilds the two terms whose difference is the residual and divides by
    the sum of their magnitudes, choosing the pole-free scaled form under
    the same |sin delta| < NEAR_POLE_SIN switch the solver itself uses.
    The scale carries an additive floor of k**2, the natural magnitude of
    the determinant terms: at a root that sits close to a single-center
    pole both terms shrink with |sin delta| while the evaluation noise of
    the form does not, so an unfloored ratio would fail on noise even for
    a perfectly placed root.  A genuinely misplaced root still perturbs
    the residual at the full k**2 scale and is caught.
    """
    ph = solve_phases(target, k)
    d1 = eval_phase(target.center1, k)
    d2 = eval_phase(target.center2, k)
    z = k * target.R
    near_pole = min(abs(math.sin(d1)), abs(math.sin(d2))) < NEAR_POLE_SIN
    worst = 0.0
    for eta, res in ((ph.eta0, ph.residual0), (ph.eta1, ph.residual1)):
        if near_pole:
            scattered = k * k * math.sin(d1 - eta) * math.sin(d2 - eta)
            coupling = (
                math.sin(z + eta) ** 2 * math.sin(d1) * math.sin(d2) / (target.R * target.R)
            )
            scale = abs(scattered) + abs(coupling) + k * k
        else:
            b1 = k * math.cos(eta) - math.sin(eta) * kcot_delta(target.center1, k)
            b2 = k * math.cos(eta) - math.sin(eta) * kcot_delta(target.center2, k)
            a_coupling = math.sin(z + eta) / target.R
            scale = abs(b1 * b2) + a_coupling * a_coupling + k * k
        worst = max(worst, abs(res) / scale)
    return worst


def _check_route_identity(c2: TwoCenterTarget, tol: float) -> CheckResult:
    """Quadratic-solver roots vs the identical-center closed forms."""
    delta_model = c2.center1

    def diff(k: float) -> float:
        general = solve_phases(c2, k)
        closed = solve_phases_identical(eval_phase(delta_model, k), c2.R, k)
        d0 = abs(general.cot_eta0 - closed.cot_eta0) / max(1.0, abs(closed.cot_eta0))
        d1 = abs(general.cot_eta1 - closed.cot_eta1) / max(1.0, abs(closed.cot_eta1))
        return max(d0, d1)

    grid = np.linspace(1e-3, 3.0, 1000)
    k, worst = _worst((float(k), diff(float(k))) for k in grid)
    return _result("route-identity", c2.name, k, worst, tol)


def _check_root_residual(target: TwoCenterTarget, tol: float) -> CheckResult:
    grid = np.linspace(1e-3, 3.0, 1000)
    k, worst = _worst((float(k), relative_root_residual(target, float(k))) for k in grid)
    return _result("root-residual", target.name, k, worst, tol)


def _check_unitarity(target: TwoCenterTarget, tol: float) -> CheckResult:
    def dev(k: float) -> float:
        ph = solve_phases(target, k)
        return max(
            abs(abs(exp_2i_eta(ph.cot_eta0)) - 1.0),
            abs(abs(exp_2i_eta(ph.cot_eta1)) - 1.0),
        )

    grid = np.linspace(1e-3, 3.0, 1000)
    k, worst = _worst((float(k), dev(float(k))) for k in grid)
    return _result("unitarity", target.name, k, worst, tol)


def _check_limit_laws(target: TwoCenterTarget) -> list[CheckResult]:
    """eta0 vanishing linearly and eta1 cubically as k -> 0.

    The residual is the Richardson error estimate of the extrapolated
    ratio, relative to the ratio itself; 1% is ample for a genuine power
    law and fails loudly for a wrong exponent.
    """
    rows = []
    for name, power, pick in (
        ("limit-law-eta0", 1, lambda ph: ph.eta0),
        ("limit-law-eta1", 3, lambda ph: ph.eta1),
    ):
        samples = [(k, pick(solve_phases(target, k)) / k**power) for k in _LIMIT_SAMPLES]
        limit, err = richardson_limit(samples)
        rel = err / max(abs(limit), 1e-300)
        rows.append(_result(name, target.name, _LIMIT_SAMPLES[-1], rel, LIMIT_LAW_TOL))
    return rows


def _closed_form_length(target: TwoCenterTarget) -> float:
    """Zero-energy limit of -eta0/k from the center scattering lengths."""
    a1 = target.center1.scattering_length
    a2 = target.center2.scattering_length
    R = target.R
    return (a1 + a2 - 2.0 * a1 * a2 / R) / (1.0 - a1 * a2 / (R * R))


def _check_scattering_length(target: TwoCenterTarget) -> CheckResult:
    L = scattering_length(target)
    closed = _closed_form_length(target)
    return _result("scattering-length", target.name, 0.0, abs(L - closed), SCATTERING_LENGTH_TOL)


def _check_sigma_zero_limit(target: TwoCenterTarget) -> CheckResult:
    """sigma_total at k = 1e-4 against the geometric limit 4*pi*L**2."""
    k = 1e-4
    L = scattering_length(target)
    geometric = 4.0 * math.pi * L * L
    total = sigma_bar(target, k).sigma_total
    return _result(
        "sigma-zero-limit", target.name, k, abs(total - geometric) / geometric, SIGMA_LIMIT_TOL
    )


def _check_gram(tol: float) -> list[CheckResult]:
    rows = []
    for z in _GRAM_Z:
        basis = AngularBasis(k=z, R=1.0)
        gram = orthonormality_matrix(basis, nodes=64)
        dev = float(np.abs(gram - np.eye(2)).max())
        rows.append(_result("gram-identity", "-", z, dev, tol))
    return rows


def _check_harmonic_limit() -> CheckResult:
    z = 1e-4
    basis = AngularBasis(k=z, R=1.0)
    worst = 0.0
    for u in np.linspace(-1.0, 1.0, 201):
        for lam in (0, 1):
            worst = max(worst, abs(eval_Z(lam, basis, float(u)) - limit_Y(lam, float(u))))
    return _result("harmonic-limit", "-", z, worst, HARMONIC_LIMIT_TOL)


def _check_optical_theorem(target: TwoCenterTarget, tol: float, nodes: int) -> CheckResult:
    def dev(k: float) -> float:
        worst = 0.0
        for u0 in _AMP_COSINES:
            incident = Direction(u0)
            integral = integrated_sigma(target, k, incident, nodes=nodes)
            sol = oracle_solve(target, k, incident)
            forward = 4.0 * math.pi / k * oracle_amplitude(sol, incident).value.imag
            worst = max(worst, abs(integral - forward) / max(integral, abs(forward)))
        return worst

    k, worst = _worst((k, dev(k)) for k in _AMP_MOMENTA)
    return _result("optical-theorem", target.name, k, worst, tol)


def _check_xsec_consistency(target: TwoCenterTarget, tol: float, nodes: int) -> CheckResult:
    def dev(k: float) -> float:
        total = sigma_bar(target, k).sigma_total
        averaged = oracle_sigma_bar(target, k, nodes=nodes)
        return abs(averaged - total) / total

    grid = np.linspace(0.01, 3.0, 101)
    k, worst = _worst((float(k), dev(float(k))) for k in grid)
    return _result("xsec-consistency", target.name, k, worst, tol)


def _amplitude_scan(
    target: TwoCenterTarget, metric: Callable[[float, float, float], float]
) -> tuple[float, float]:
    pairs = []
    for k in _AMP_MOMENTA:
        worst = max(metric(k, ui, uo) for ui in _AMP_COSINES for uo in _AMP_COSINES)
        pairs.append((k, worst))
    return _worst(pairs)


def _check_exact_amplitude(target: TwoCenterTarget, tol: float) -> CheckResult:
    def metric(k: float, ui: float, uo: float) -> float:
        fo = oracle_amplitude(oracle_solve(target, k, Direction(ui)), Direction(uo)).value
        fe = partial_amplitude_exact(target, k, Direction(ui), Direction(uo)).value
        return abs(fe - fo) / max(1.0, abs(fo))

    k, worst = _amplitude_scan(target, metric)
    return _result("exact-amplitude", target.name, k, worst, tol)


def _fixed_divergence_metric(target: TwoCenterTarget) -> Callable[[float, float, float], float]:
    def metric(k: float, ui: float, uo: float) -> float:
        fo = oracle_amplitude(oracle_solve(target, k, Direction(ui)), Direction(uo)).value
        ff = partial_amplitude_fixed(target, k, Direction(ui), Direction(uo)).value
        return abs(ff - fo) / max(1.0, abs(fo))

    return metric


def _check_fixed_amplitude(c2: TwoCenterTarget, tol: float) -> CheckResult:
    """Fixed-basis amplitude equals the closed form for identical centers."""
    k, worst = _amplitude_scan(c2, _fixed_divergence_metric(c2))
    return _result("fixed-amplitude", c2.name, k, worst, tol)


def _check_fixed_divergence(ch: TwoCenterTarget) -> CheckResult:
    """Measured fixed-basis vs closed-form divergence for unequal centers.

    Informational: the fixed basis ignores channel mixing, which is a real
    physical effect here, so a finite divergence is expected and its size
    is the interesting number.
    """
    k, worst = _amplitude_scan(ch, _fixed_divergence_metric(ch))
    return CheckResult("fixed-divergence", ch.name, k, worst, math.inf, "INFO")


def _check_reciprocity(target: TwoCenterTarget, tol: float) -> CheckResult:
    """Time-reversal symmetry F(in, out) = F(-out, -in) of the closed form."""

    def metric(k: float, ui: float, uo: float) -> float:
        fwd = oracle_amplitude(oracle_solve(target, k, Direction(ui)), Direction(uo)).value
        rev = oracle_amplitude(oracle_solve(target, k, Direction(-uo)), Direction(-ui)).value
        return abs(fwd - rev) / max(1.0, abs(fwd))

    k, worst = _amplitude_scan(target, metric)
    return _result("reciprocity", target.name, k, worst, tol)


def _check_exchange_symmetry(c2: TwoCenterTarget, tol: float) -> CheckResult:
    """Plain exchange symmetry F(in, out) = F(out, in), identical centers.

    For unequal centers this symmetry is genuinely broken (backscatter off
    the two ends differs), so it is only asserted for the symmetric target;
    see :class:`~zrpscatter.scattering.Amplitude`.
    """

    def metric(k: float, ui: float, uo: float) -> float:
        fwd = oracle_amplitude(oracle_solve(c2, k, Direction(ui)), Direction(uo)).value
        rev = oracle_amplitude(oracle_solve(c2, k, Direction(uo)), Direction(ui)).value
        return abs(fwd - rev) / max(1.0, abs(fwd))

    k, worst = _amplitude_scan(c2, metric)
    return _result("exchange-symmetry", c2.name, k, worst, tol)


def _check_oracle_residual(target: TwoCenterTarget, tol: float) -> CheckResult:
    def dev(k: float) -> float:
        return max(
            oracle_residual(oracle_solve(target, k, Direction(u0))) for u0 in _AMP_COSINES
        )

    k, worst = _worst((k, dev(k)) for k in _AMP_MOMENTA)
    return _result("oracle-residual", target.name, k, worst, tol)


def run_checks(tolerance: float = 1e-9, c2_R: float = DEFAULT_C2_R, nodes: int = 64) -> list[CheckResult]:
    """Run the full cross-check suite and return the table rows.

    ``tolerance`` applies to the identity-class checks; the extrapolation
    checks keep their fixed tolerances (see module constants).  ``c2_R``
    sets the internuclear distance of the symmetric two-carbon target.
    """
    if tolerance <= 0:
        raise ValueError("tolerance must be > 0")
    ch = preset("CH")
    c2 = preset("C2", R=c2_R)
    rows: list[CheckResult] = []
    rows.append(_check_route_identity(c2, tolerance))
    for target in (ch, c2):
        rows.append(_check_root_residual(target, tolerance))
    for target in (ch, c2):
        rows.append(_check_unitarity(target, tolerance))
    for target in (ch, c2):
        rows.extend(_check_limit_laws(target))
    for target in (ch, c2):
        rows.append(_check_scattering_length(target))
        rows.append(_check_sigma_zero_limit(target))
    rows.extend(_check_gram(tolerance))
    rows.append(_check_harmonic_limit())
    for target in (ch, c2):
        rows.append(_check_optical_theorem(target, tolerance, nodes))
        rows.append(_check_xsec_consistency(target, tolerance, nodes))
        rows.append(_check_oracle_residual(target, tolerance))
        rows.append(_check_exact_amplitude(target, tolerance))
        rows.append(_check_reciprocity(target, tolerance))
    rows.append(_check_fixed_amplitude(c2, tolerance))
    rows.append(_check_exchange_symmetry(c2, tolerance))
    rows.append(_check_fixed_divergence(ch))
    return rows
