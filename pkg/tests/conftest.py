import numpy as np
import pytest

from src.potentials.spec import PotentialSpec


@pytest.fixture
def free_spec():
    return PotentialSpec.constant(0.0)


@pytest.fixture
def almost_mathieu():
    """d_n = 2 cos(n), theta = 1 rad."""
    return PotentialSpec.almost_mathieu(theta=1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def write_config(tmp_path):
    def _write(text: str, name: str = "run.cfg") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
