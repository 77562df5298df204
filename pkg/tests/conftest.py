import random

import pytest

from lgperiod import backends


@pytest.fixture
def rng():
    return random.Random(20260810)


@pytest.fixture(params=backends.available_backends())
def kernel_backend(request):
    """Run the decorated test once per available kernel backend."""
    previous = backends.set_backend(request.param)
    yield request.param
    backends.set_backend(previous)
