import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from eulerporism.geometry import ORIGIN, Circle, Point  # noqa: E402


@pytest.fixture
def unit():
    return Circle(ORIGIN, 1.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20201019)


def euler_at(d, R=1.0, phi=0.0, center=ORIGIN):
    """Circle of radius R/2 centered at distance d*R from the circumcenter."""
    return Circle(center + Point(d * R * math.cos(phi), d * R * math.sin(phi)), R / 2)


D_GRID = [round(0.05 * k, 2) for k in range(30) if k != 10]
