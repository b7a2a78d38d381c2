import pytest
from click.testing import CliRunner

from lahnet.config import settings
from lahnet.lah import lah_matrix
from lahnet.linalg import ExactMatrix
from lahnet.network import lah_network, unit_network


@pytest.fixture
def lm3() -> ExactMatrix:
    return lah_matrix(3).matrix


@pytest.fixture
def n2():
    return lah_network(2)


@pytest.fixture
def n3():
    return lah_network(3)


@pytest.fixture
def unit4():
    return unit_network(4)


@pytest.fixture
def swap_matrix() -> ExactMatrix:
    return ExactMatrix.from_rows([[0, 1], [1, 0]])


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def no_guard_override(monkeypatch):
    """Tests see the guards as configured, whatever the shell exported."""
    monkeypatch.setattr(settings, "GUARD_OVERRIDE", False)
