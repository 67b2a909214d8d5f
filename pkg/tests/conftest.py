import numpy as np
import pytest

from qqbound.randstates import make_rng


@pytest.fixture
def rng():
    return make_rng(20240601)


def random_psd(rng, n, rank=None):
    rank = n if rank is None else rank
    g = rng.standard_normal((n, rank)) + 1j * rng.standard_normal((n, rank))
    return g @ g.conj().T


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return g + g.conj().T


@pytest.fixture
def helpers():
    class H:
        psd = staticmethod(random_psd)
        herm = staticmethod(random_hermitian)

    return H
