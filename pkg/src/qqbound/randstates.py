"""Seeded random states for property checks.

All generators take a ``numpy.random.Generator``; :func:`make_rng` builds
one on the PCG64 bit generator, whose output stream for a given integer
seed is stable across platforms and numpy releases.
"""
import numpy as np

from .states import DensityMatrix


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def ginibre(rng, rows, cols=None):
    cols = rows if cols is None else cols
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_density(rng, d):
    """Full-rank ``2d x 2d`` state ``G G^H / tr(G G^H)`` with Ginibre ``G``."""
    g = ginibre(rng, 2 * d)
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(d, rho / np.trace(rho).real)


def haar_ket(rng, dim):
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_pure_amplitudes(rng, d):
    """Haar-random ``2 x d`` amplitude array ``a[qubit, level]``."""
    return haar_ket(rng, 2 * d).reshape(2, d)


def random_separable(rng, d, terms=None):
    """Equal-weight mixture of ``terms`` (default ``2d``) random product states."""
    terms = 2 * d if terms is None else terms
    rho = np.zeros((2 * d, 2 * d), dtype=complex)
    for _ in range(terms):
        psi = np.kron(haar_ket(rng, 2), haar_ket(rng, d))
        rho += np.outer(psi, psi.conj())
    rho /= terms
    return DensityMatrix(d, 0.5 * (rho + rho.conj().T))


def haar_unitary(rng, n):
    q, r = np.linalg.qr(ginibre(rng, n))
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph
