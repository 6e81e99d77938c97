import numpy as np
import pytest
from hypothesis import settings

from ultramonad.core.ultra_core.ultrametric_space import FinUltrametricSpace, validate_ultrametric

settings.register_profile("ultramonad", deadline=None, max_examples=100)
settings.load_profile("ultramonad")


@pytest.fixture
def abc_space() -> FinUltrametricSpace:
    """a, b at distance 1; c at distance 2 from both."""
    return validate_ultrametric(["a", "b", "c"], [["0", "1", "2"], ["1", "0", "2"], ["2", "2", "0"]])


@pytest.fixture
def uv_space() -> FinUltrametricSpace:
    return validate_ultrametric(["u", "v"], [["0", "1"], ["1", "0"]])


@pytest.fixture
def point_space() -> FinUltrametricSpace:
    return validate_ultrametric(["o"], [["0"]])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240517)
