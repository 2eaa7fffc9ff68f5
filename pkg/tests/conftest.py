"""Shared fixtures: the two bench targets used throughout the suite."""

import pytest

from zrpscatter import preset
from zrpscatter.validation import DEFAULT_C2_R

try:
    from hypothesis import settings

    # Numerical kernels are microsecond-fast; disable the wall-clock
    # deadline so a loaded CI box cannot produce spurious flakiness.
    settings.register_profile("numerics", deadline=None)
    settings.load_profile("numerics")
except ImportError:  # pragma: no cover - hypothesis is a test extra
    pass


@pytest.fixture(scope="session")
def ch():
    """Carbon-hydrogen target at the built-in bond length."""
    return preset("CH")


@pytest.fixture(scope="session")
def c2():
    """Identical-center carbon pair at the documented example separation."""
    return preset("C2", R=DEFAULT_C2_R)
