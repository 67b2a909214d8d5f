"""Full-space spin-flip route for the qubit-qudit concurrence bound.

For each qudit level pair ``(i, j)`` a ``2d x 2d`` spin-flip matrix
``S_ij`` is built; the pair concurrence comes from the four largest
``lambda`` values, the square roots of the spectrum of
``rho S_ij rho* S_ij``. The pair values are combined in quadrature.
"""
import numpy as np

from . import matcore
from .entropy import eof_from_concurrence
from .exceptions import NotSorted
from .states import BlockPair, BoundReport, DensityMatrix, all_pairs, check_qudit_dim


def build_s_full(d, pair):
    """Spin-flip matrix for level pair ``(i, j)`` on the ``2d``-dim space.

    Nonzero entries: ``+1`` at ``(i, j+d)`` and ``(j+d, i)``, ``-1`` at
    ``(j, i+d)`` and ``(i+d, j)``.
    """
    d = check_qudit_dim(d)
    i, j = BlockPair(*pair).validate(d)
    s = np.zeros((2 * d, 2 * d))
    s[i, j + d] = s[j + d, i] = 1.0
    s[j, i + d] = s[i + d, j] = -1.0
    return s


def build_s_2q():
    """The two-qubit spin-flip matrix, antidiagonal ``(-1, 1, 1, -1)``."""
    return np.array(
        [
            [0.0, 0.0, 0.0, -1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [-1.0, 0.0, 0.0, 0.0],
        ]
    )


def lambda_spectrum(rho_like, s, tol=matcore.DEFAULT_TOL, *, rho_sqrt=None, backend=None):
    """Square roots of the four largest eigenvalues of ``rho S rho* S``.

    ``rho_like`` must be Hermitian PSD; unit trace is not required. The
    values are obtained as the singular values of ``R = sqrt(rho) S
    sqrt(rho)*``, since ``R R^H = sqrt(rho) S rho* S sqrt(rho)`` shares the
    nonzero spectrum of ``rho S rho* S``. ``rho_sqrt`` may be passed to
    reuse a square root across several ``S``.

    Returns a length-4 array, descending, zero-padded for dims below 4.
    """
    rho = matcore.as_matrix(rho_like)
    s = matcore.as_matrix(s)
    if s.shape != rho.shape:
        raise matcore.DimensionMismatch(f"S has shape {s.shape}, rho has {rho.shape}")
    root = matcore.psd_sqrt(rho, tol, backend) if rho_sqrt is None else rho_sqrt
    r = root @ s @ root.conj()
    sv = matcore.singular_values(r, backend)
    out = np.zeros(4)
    top = sv[:4]
    out[: len(top)] = top
    return out


def pair_concurrence(lambdas):
    """``max(0, l1 - l2 - l3 - l4)`` for a descending nonnegative 4-list."""
    lam = np.asarray(lambdas, dtype=float)
    if lam.shape != (4,):
        raise NotSorted(f"expected four lambda values, got shape {lam.shape}")
    if np.any(np.diff(lam) > 0):
        raise NotSorted(f"lambda values must be descending, got {lam.tolist()}")
    if lam[-1] < 0:
        raise NotSorted(f"lambda values must be nonnegative, got {lam.tolist()}")
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def c_db_full(rho, backend=None):
    """Concurrence lower bound from all ``S_ij`` on the full space."""
    if not isinstance(rho, DensityMatrix):
        raise TypeError("c_db_full expects a DensityMatrix")
    root = matcore.psd_sqrt(rho.mat, rho.tol, backend)
    per_pair = []
    for pair in all_pairs(rho.d):
        lam = lambda_spectrum(rho.mat, build_s_full(rho.d, pair), rho.tol, rho_sqrt=root, backend=backend)
        per_pair.append((pair, pair_concurrence(lam)))
    c_db = float(np.sqrt(sum(c * c for _, c in per_pair)))
    return BoundReport(tuple(per_pair), c_db, eof_from_concurrence(c_db), "full")
