import pytest
from click.testing import CliRunner

from app.algebra.polyring import Ring, Variable
from app.config import get_settings, override_settings
from app.ledger import Ledger

X, Y, Z = Variable.x(1), Variable.x(2), Variable.x(3)


@pytest.fixture
def xyz():
    """Q[x, y, z] with x > y > z, spelled x_1, x_2, x_3"""
    ring = Ring([X, Y, Z])
    return ring, ring.var(X), ring.var(Y), ring.var(Z)


@pytest.fixture
def config(tmp_path):
    return override_settings(get_settings(), threads=1, ledger_path=str(tmp_path / "ledger.jsonl"))


@pytest.fixture
def ledger(tmp_path):
    return Ledger(str(tmp_path / "ledger.jsonl"))


@pytest.fixture
def runner():
    return CliRunner()
