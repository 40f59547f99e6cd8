from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from coxlang import parse_system

settings.register_profile(
    "exact", deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("exact")

GROUPS = Path(__file__).resolve().parent.parent / "groups"


def _system(fname):
    return parse_system((GROUPS / fname).read_text())


@pytest.fixture(scope="session")
def fig1():
    return _system("fig1.cox")


@pytest.fixture(scope="session")
def a3tilde():
    return _system("a3tilde.cox")


@pytest.fixture(scope="session")
def triangle():
    return _system("triangle_333.cox")


@pytest.fixture(scope="session")
def dinf():
    return _system("dihedral_inf.cox")


@pytest.fixture(scope="session")
def single():
    return _system("single.cox")


_BALLS: dict = {}


@pytest.fixture(scope="session")
def ball():
    """Memoized ball enumeration shared across the whole session."""
    def get(system, radius):
        key = (id(system), radius)
        if key not in _BALLS:
            _BALLS[key] = system.ball(radius)
        return _BALLS[key]
    return get
