import sys
from pathlib import Path

import numpy as np
import pytest

# allow `import oracles` from any test module
sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_image(rng, height=16, width=16):
    return rng.uniform(0.0, 1.0, size=(height, width, 3))
