"""
Shared test fixtures and configuration
"""
import sys
import os

import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.core.config import get_settings  # noqa: E402
from src.curvature.operator import make_operator  # noqa: E402


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Run every test against the default settings"""
    for name in ("DEFCONN_TOL", "DEFCONN_GRID", "DEFCONN_SEED"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    """Seeded generator"""
    return np.random.default_rng(42)


@pytest.fixture
def round_operator():
    """(I, 0, I): constant positive curvature"""
    return make_operator(np.eye(3), np.zeros((3, 3)), np.eye(3))


@pytest.fixture
def hyperbolic_operator():
    """(-I, 0, -I): constant negative curvature"""
    return make_operator(-np.eye(3), np.zeros((3, 3)), -np.eye(3))


@pytest.fixture
def witness_operator():
    """Extremal 2/5-pinched operator on the boundary of definiteness"""
    return make_operator(np.diag([1.5, 1.0, 0.0]), np.zeros((3, 3)), np.eye(3), relaxed=True)


@pytest.fixture
def tilted_operator():
    """(-I, diag(1/2, 0, 0), -I)"""
    return make_operator(-np.eye(3), np.diag([0.5, 0.0, 0.0]), -np.eye(3))


@pytest.fixture
def cone_operator():
    """A = diag(1, 1, -1), B = 0, C = I/3: D > 0 but <Av,v> vanishes on a cone"""
    return make_operator(np.diag([1.0, 1.0, -1.0]), np.zeros((3, 3)), np.eye(3) / 3.0)
