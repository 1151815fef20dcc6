import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from risense.sensing import NoiseModel, SourceModel  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20240911)


def make_sources(k: int, p: float = 1.0, zeta: float = 1.0, p0: float | None = None):
    pv = np.full(k + 1, p)
    if p0 is not None:
        pv[0] = p0
    zv = np.full(k + 1, zeta)
    zv[0] = 1.0
    return SourceModel(p=pv, zeta=zv)


def make_noise(sigma1_sq: float = 0.01, sigma2_sq: float = 0.1) -> NoiseModel:
    return NoiseModel(sigma1_sq=sigma1_sq, sigma2_sq=sigma2_sq)
