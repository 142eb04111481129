import pytest

from costgames import samples


@pytest.fixture
def reach_vs_average():
    return samples.reach_vs_average()


@pytest.fixture
def energy_threshold():
    return samples.energy_threshold()


@pytest.fixture
def oscillating_average():
    return samples.oscillating_average()
