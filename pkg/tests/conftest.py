import numpy as np
import pytest

from wgqed import presets
from wgqed.core import QubitParams


@pytest.fixture
def qubit_ref() -> QubitParams:
    """Frequency-domain reference rates: (2.20, 0.31, 1.28) MHz."""
    return presets.qubit_fit_params()


@pytest.fixture
def qubit_td() -> QubitParams:
    """Time-domain reference rates: Gamma1 = 2.70, Gamma_phi = 1.38 MHz."""
    return presets.time_domain_params()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


def random_qubit(rng: np.random.Generator) -> QubitParams:
    """A random physically plausible transmon for property tests."""
    f01 = rng.uniform(3e9, 8e9)
    f12 = f01 - rng.uniform(0.05e9, 0.4e9)
    return QubitParams.from_mhz(
        f01, f12,
        gamma10_mhz=rng.uniform(0.1, 5.0),
        gamma_l_mhz=rng.uniform(0.0, 2.0),
        gamma_phi_mhz=rng.uniform(0.0, 3.0),
    )
