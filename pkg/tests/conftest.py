import math

import numpy as np
import pytest

from src.physics import DEFAULT_CONSTANTS, Medium, PlaneWave


@pytest.fixture
def constants():
    return DEFAULT_CONSTANTS


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def make_plane_wave(n: float, E0: float = 1.0, wavelength: float = 1e-6) -> PlaneWave:
    return PlaneWave(
        E0=E0,
        omega=2.0 * math.pi * DEFAULT_CONSTANTS.c / wavelength,
        direction=np.array([1.0, 0.0, 0.0]),
        polarization=np.array([0.0, 1.0, 0.0]),
        medium=Medium.from_index(n),
    )


@pytest.fixture
def plane_wave():
    """Factory for x-propagating, y-polarized waves at 1 um vacuum wavelength"""
    return make_plane_wave


@pytest.fixture
def water_wave():
    return make_plane_wave(1.33)
