"""Exception and warning types shared across the package."""


class ZrpError(Exception):
    """Base class for numerical and domain errors raised by this package."""


class PhasePoleError(ZrpError):
    """A single-center phase sits at a cotangent pole (sin delta ~ 0)."""

    def __init__(self, k: float, delta: float, floor: float):
        super().__init__(
            f"cot(delta) singular at k={k!r}: delta={delta!r} rad is within "
            f"{floor:g} of a multiple of pi"
        )
        self.k = k
        self.delta = delta


class DiscriminantError(ZrpError):
    """Eigenphase quadratic produced a negative discriminant beyond roundoff."""


class SingularOracleError(ZrpError):
    """The closed-form boundary system is singular at this momentum."""

    def __init__(self, k: float):
        super().__init__(
            f"boundary-condition system singular at k={k!r} (scattering "
            "resonance); spherical-wave coefficients are not unique here"
        )
        self.k = k


class ConvergenceError(ZrpError):
    """An extrapolated limit failed to converge to the requested accuracy."""


class IntegrandError(ZrpError):
    """A quadrature integrand returned a non-finite value."""


class TargetFormatError(ZrpError, ValueError):
    """A target description (JSON text or preset arguments) is invalid."""


class UnknownPresetError(TargetFormatError):
    """Requested preset name is neither built in nor an existing file."""


class ResonanceWarning(UserWarning):
    """Near-degenerate root pairing or a zero-energy resonance condition."""


class DegenerateChannelsWarning(UserWarning):
    """The two eigenphases coincide to within the degeneracy tolerance."""
