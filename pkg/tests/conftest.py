import pytest

from quartell import context_from_kappa

KAPPAS = (0.1, 0.3, 0.5, 0.7, 0.9)

_CACHE = {}


def ctx_for(kappa):
    if kappa not in _CACHE:
        _CACHE[kappa] = context_from_kappa(kappa)
    return _CACHE[kappa]


@pytest.fixture
def ctx06():
    return ctx_for(0.6)
