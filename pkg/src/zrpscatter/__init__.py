"""Scattering of a slow particle on two zero-range centers.

Eigenphase shifts, elastic cross sections, scattering amplitudes, and
asymptotic continuum waves for a target of two (generally different)
zero-range potentials, every route cross-validated against a closed-form
two-spherical-wave solution.  Hartree atomic units throughout.

Quick start::

    from zrpscatter import preset, solve_phases, sigma_bar

    ch = preset("CH")
    print(solve_phases(ch, 0.5))
    print(sigma_bar(ch, 0.5))

The ``zrpscatter`` command line exposes the same functionality as CSV
emitters plus a self-validation suite; see ``zrpscatter --help``.
"""

from .angular import AngularBasis, eval_Z, limit_Y, orthonormality_matrix, s_factors
from .errors import (
    ConvergenceError,
    DegenerateChannelsWarning,
    DiscriminantError,
    IntegrandError,
    PhasePoleError,
    ResonanceWarning,
    SingularOracleError,
    TargetFormatError,
    UnknownPresetError,
    ZrpError,
)
from .model import (
    C_MODEL,
    CH_BOND_LENGTH,
    H_MODEL,
    Direction,
    SPhaseModel,
    TwoCenterTarget,
    eval_phase,
    kcot_delta,
    load_target,
    preset,
    target_from_json,
    target_to_json,
)
from .numerics import QuadratureRule, gauss_legendre, integrate_axial, richardson_limit
from .phases import (
    MolecularPhases,
    QuadraticCoeffs,
    channel_weights,
    determinant_residual,
    quadratic_coeffs,
    scaled_determinant_residual,
    scattering_length,
    solve_phases,
    solve_phases_identical,
)
from .scattering import (
    Amplitude,
    ChannelMeta,
    CrossSectionRow,
    EigenchannelDecomposition,
    OracleSolution,
    asymptotic_psi,
    asymptotic_radial,
    eigenchannels,
    integrated_sigma,
    oracle_amplitude,
    oracle_residual,
    oracle_sigma_bar,
    oracle_solve,
    partial_amplitude_exact,
    partial_amplitude_fixed,
    psi_channel_radial,
    sigma_bar,
)
from .validation import CheckResult, run_checks

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # model
    "SPhaseModel",
    "TwoCenterTarget",
    "Direction",
    "C_MODEL",
    "H_MODEL",
    "CH_BOND_LENGTH",
    "eval_phase",
    "kcot_delta",
    "preset",
    "load_target",
    "target_to_json",
    "target_from_json",
    # phases
    "QuadraticCoeffs",
    "MolecularPhases",
    "quadratic_coeffs",
    "solve_phases",
    "solve_phases_identical",
    "determinant_residual",
    "scaled_determinant_residual",
    "scattering_length",
    "channel_weights",
    # angular
    "AngularBasis",
    "s_factors",
    "eval_Z",
    "limit_Y",
    "orthonormality_matrix",
    # scattering
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
    # numerics
    "QuadratureRule",
    "gauss_legendre",
    "integrate_axial",
    "richardson_limit",
    # validation
    "CheckResult",
    "run_checks",
    # errors
    "ZrpError",
    "PhasePoleError",
    "DiscriminantError",
    "SingularOracleError",
    "ConvergenceError",
    "IntegrandError",
    "TargetFormatError",
    "UnknownPresetError",
    "ResonanceWarning",
    "DegenerateChannelsWarning",
]
