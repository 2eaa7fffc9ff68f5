"""Domain model: single-center phase polynomials and two-center targets.

Hartree atomic units throughout: lengths in bohr, momenta in 1/bohr, phase
shifts in radians.  A zero-range center is fully characterized by its s-wave
phase shift delta(k).  A two-center target adds the internuclear distance R
and fixes the geometry convention used everywhere in this package: center 1
sits at +R/2 and center 2 at -R/2 on the symmetry axis, and directions are
measured by the cosine of the polar angle against that axis.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .errors import PhasePoleError, TargetFormatError, UnknownPresetError

__all__ = [
    "DEFAULT_SIN_FLOOR",
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
]

# Pole guard for cot(delta); configurable per call in kcot_delta.
DEFAULT_SIN_FLOOR = 1e-14


@dataclass(frozen=True)
class SPhaseModel:
    """Quadratic model of a single-center s-wave phase shift.

    delta(k) = offset_half_turns*pi + c1*k + c2*k**2   for k >= 0.

    ``offset_half_turns`` fixes delta(0) as a whole number of half turns,
    ``c1`` is the linear slope in radian*bohr (minus the scattering length
    of the isolated center), and ``c2`` the quadratic coefficient in
    radian*bohr**2.
    """

    offset_half_turns: int
    c1: float
    c2: float = 0.0

    def __post_init__(self):
        if not isinstance(self.offset_half_turns, int) or self.offset_half_turns < 0:
            raise ValueError("offset_half_turns must be a non-negative integer")

    @property
    def scattering_length(self) -> float:
        """Zero-energy scattering length -c1 of the isolated center."""
        return -self.c1


@dataclass(frozen=True)
class TwoCenterTarget:
    """Two zero-range centers a distance R apart on the symmetry axis.

    ``r_provenance`` records where the value of R came from (built-in
    preset, user flag, file).  It is metadata only: it is not serialized
    and does not participate in equality.
    """

    name: str
    center1: SPhaseModel
    center2: SPhaseModel
    R: float
    r_provenance: str = field(default="", compare=False)

    def __post_init__(self):
        if not (isinstance(self.R, (int, float)) and math.isfinite(self.R) and self.R > 0):
            raise ValueError(f"R must be a finite positive length, got {self.R!r}")

    @property
    def axis_position1(self) -> float:
        """Coordinate of center 1 along the symmetry axis (+R/2)."""
        return 0.5 * self.R

    @property
    def axis_position2(self) -> float:
        """Coordinate of center 2 along the symmetry axis (-R/2)."""
        return -0.5 * self.R


@dataclass(frozen=True)
class Direction:
    """Unit direction given by cos(polar angle) and azimuth in radians.

    Every observable in this package is axisymmetric, so kernels consume
    only ``cos_polar``; the azimuth is validated and carried for interface
    completeness.
    """

    cos_polar: float
    azimuth: float = 0.0

    def __post_init__(self):
        if not (-1.0 <= self.cos_polar <= 1.0):
            raise ValueError(f"cos_polar must lie in [-1, 1], got {self.cos_polar!r}")
        if not (0.0 <= self.azimuth < 2.0 * math.pi):
            raise ValueError(f"azimuth must lie in [0, 2*pi), got {self.azimuth!r}")

    @classmethod
    def from_degrees(cls, polar_deg: float, azimuth_deg: float = 0.0) -> "Direction":
        return cls(math.cos(math.radians(polar_deg)), math.radians(azimuth_deg) % (2.0 * math.pi))


# Built-in single-center models: a carbon atom center and an atomic
# hydrogen center (singlet electron pairing), both fit near threshold.
C_MODEL = SPhaseModel(offset_half_turns=2, c1=-1.912)
H_MODEL = SPhaseModel(offset_half_turns=1, c1=-5.72682, c2=3.62932)

# Equilibrium internuclear distance of the CH radical, bohr.
CH_BOND_LENGTH = 2.116


def eval_phase(model: SPhaseModel, k: float) -> float:
    """Evaluate delta(k) in radians for k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return model.offset_half_turns * math.pi + model.c1 * k + model.c2 * k * k


def kcot_delta(model: SPhaseModel, k: float, *, sin_floor: float = DEFAULT_SIN_FLOOR) -> float:
    """Return k*cot(delta(k)), the boundary-condition strength at momentum k.

    The phase is reduced modulo pi before the cotangent so large offsets do
    not lose precision.  Raises :class:`PhasePoleError` when |sin delta| is
    below ``sin_floor``.
    """
    if k <= 0:
        raise ValueError("k must be > 0")
    delta = eval_phase(model, k)
    reduced = math.remainder(delta, math.pi)
    s = math.sin(reduced)
    if abs(s) < sin_floor:
        raise PhasePoleError(k, delta, sin_floor)
    return k * math.cos(reduced) / s


def _model_to_dict(model: SPhaseModel) -> dict:
    return {
        "offset_half_turns": model.offset_half_turns,
        "c1": model.c1,
        "c2": model.c2,
    }


def _model_from_dict(data: object, where: str) -> SPhaseModel:
    if not isinstance(data, dict):
        raise TargetFormatError(f"{where} must be an object, got {type(data).__name__}")
    missing = {"offset_half_turns", "c1", "c2"} - set(data)
    if missing:
        raise TargetFormatError(f"{where} is missing fields: {sorted(missing)}")
    offset = data["offset_half_turns"]
    if isinstance(offset, bool) or not isinstance(offset, int):
        raise TargetFormatError(f"{where}.offset_half_turns must be an integer")
    for key in ("c1", "c2"):
        if isinstance(data[key], bool) or not isinstance(data[key], (int, float)):
            raise TargetFormatError(f"{where}.{key} must be a number")
    try:
        return SPhaseModel(offset, float(data["c1"]), float(data["c2"]))
    except ValueError as exc:
        raise TargetFormatError(f"{where}: {exc}") from exc


def target_to_json(target: TwoCenterTarget) -> str:
    """Serialize a target to its JSON description (round-trip exact)."""
    return json.dumps(
        {
            "name": target.name,
            "R": target.R,
            "center1": _model_to_dict(target.center1),
            "center2": _model_to_dict(target.center2),
        },
        indent=2,
    )


def target_from_json(text: str, *, provenance: str = "") -> TwoCenterTarget:
    """Parse a target from JSON text, validating every field."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TargetFormatError(
            f"malformed target JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise TargetFormatError("target JSON must be an object")
    missing = {"name", "R", "center1", "center2"} - set(data)
    if missing:
        raise TargetFormatError(f"target JSON is missing fields: {sorted(missing)}")
    if not isinstance(data["name"], str):
        raise TargetFormatError("target name must be a string")
    if isinstance(data["R"], bool) or not isinstance(data["R"], (int, float)):
        raise TargetFormatError("target R must be a number")
    center1 = _model_from_dict(data["center1"], "center1")
    center2 = _model_from_dict(data["center2"], "center2")
    try:
        return TwoCenterTarget(data["name"], center1, center2, float(data["R"]),
                               r_provenance=provenance)
    except ValueError as exc:
        raise TargetFormatError(str(exc)) from exc


def load_target(path: str | Path) -> TwoCenterTarget:
    """Load a target description from a JSON file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise TargetFormatError(f"cannot read target file {path}: {exc}") from exc
    return target_from_json(text, provenance=f"loaded from {path}")


def preset(name: str, *, R: float | None = None, r_provenance: str | None = None) -> TwoCenterTarget:
    """Build a named target, or load one from a JSON file path.

    ``"CH"`` pairs the carbon and hydrogen centers at the built-in bond
    length.  ``"C2"`` pairs two carbon centers and requires an explicit R;
    no reliable equilibrium distance ships with the package, so the caller
    must state one and its origin is recorded in ``r_provenance``.
    """
    if name == "CH":
        if R is not None:
            return TwoCenterTarget("CH", C_MODEL, H_MODEL, float(R),
                                   r_provenance=r_provenance or "user-supplied R")
        return TwoCenterTarget("CH", C_MODEL, H_MODEL, CH_BOND_LENGTH,
                               r_provenance="built-in preset (R = 2.116 bohr)")
    if name == "C2":
        if R is None:
            raise TargetFormatError(
                "preset 'C2' requires an explicit R (no built-in internuclear "
                "distance is provided for it)"
            )
        return TwoCenterTarget("C2", C_MODEL, C_MODEL, float(R),
                               r_provenance=r_provenance or "user-supplied R")
    path = Path(name)
    if path.exists():
        return load_target(path)
    raise UnknownPresetError(
        f"unknown target {name!r}: expected 'CH', 'C2', or a path to a target JSON file"
    )
