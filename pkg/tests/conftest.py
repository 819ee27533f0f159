import math

import pytest

from palinfrac.jacobi import JacobiMatrix


@pytest.fixture
def chain3() -> JacobiMatrix:
    """3-site mirror-symmetric chain with couplings 1/sqrt(2); spectrum {-1, 0, 1}."""
    b = math.sqrt(0.5)
    return JacobiMatrix((0.0, 0.0, 0.0), (b, b))
