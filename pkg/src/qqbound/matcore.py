"""Small dense complex linear algebra.

Matrices are plain ``numpy`` complex arrays. Everything here is a pure
function of its inputs; inputs are never modified.

Hermitian eigenproblems go through one of two backends:

``"jacobi"``
    Cyclic complex Jacobi rotations, implemented below. Stops when the
    off-diagonal Frobenius norm drops under ``1e-12 * ||m||_F``.
``"lapack"``
    ``numpy.linalg.eigh``.

The module default is ``"lapack"`` (see :data:`DEFAULT_BACKEND`); both
backends are cross-checked in the test-suite.
"""
import numpy as np

from .exceptions import (
    DimensionMismatch,
    IndexOutOfRange,
    InputError,
    NoConvergence,
    NotHermitian,
    NotPositiveSemidefinite,
)

DEFAULT_TOL = 1e-9
DEFAULT_BACKEND = "lapack"
JACOBI_MAX_SWEEPS = 100
JACOBI_RTOL = 1e-12

_EPS = np.finfo(float).eps

# psd_sqrt clamp counter; read with clamp_count(), zero with reset_diagnostics()
_diagnostics = {"psd_clamps": 0}


def clamp_count():
    """Number of eigenvalues in ``[-tol, 0)`` clamped to zero by :func:`psd_sqrt`."""
    return _diagnostics["psd_clamps"]


def reset_diagnostics():
    _diagnostics["psd_clamps"] = 0


def as_matrix(a):
    """Coerce ``a`` to a 2-D complex array with finite entries."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or 0 in m.shape:
        raise InputError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InputError("matrix has non-finite entries")
    return m


def _square(m, what="matrix"):
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"{what} must be square, got {m.shape}")


def multiply(a, b):
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def conjugate(a):
    """Entrywise complex conjugate (no transpose)."""
    return np.conj(as_matrix(a))


def adjoint(a):
    return np.conj(as_matrix(a)).T


def trace(a):
    m = as_matrix(a)
    _square(m)
    return complex(np.trace(m))


def hermiticity_defect(m):
    """Max-norm of ``m - m^dagger``."""
    m = as_matrix(m)
    _square(m)
    return float(np.max(np.abs(m - m.conj().T)))


def check_hermitian(m, tol=DEFAULT_TOL):
    m = as_matrix(m)
    _square(m)
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NotHermitian(f"matrix is not Hermitian: max|m - m^H| = {defect:.3g} > {tol:g}")
    return m


def principal_submatrix(m, indices):
    """Rows and columns ``indices`` of square ``m``, in the order given."""
    m = as_matrix(m)
    _square(m)
    idx = [int(k) for k in indices]
    if not idx:
        raise InputError("empty index list")
    bad = [k for k in idx if k < 0 or k >= m.shape[0]]
    if bad:
        raise IndexOutOfRange(f"indices {bad} out of range for a {m.shape[0]}x{m.shape[0]} matrix")
    return m[np.ix_(idx, idx)].copy()


def jacobi_eigh(m, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Only the upper triangle's Hermitian part is meaningful; the input is
    symmetrised first.

    Returns
    -------
    values : ndarray, ascending
    vectors : ndarray, columns are the matching orthonormal eigenvectors

    Raises
    ------
    NoConvergence
        If the off-diagonal norm is still above threshold after
        ``max_sweeps`` full sweeps.
    """
    a = as_matrix(m)
    _square(a)
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0 or n == 1:
        return np.real(np.diag(a)).copy(), v

    target = JACOBI_RTOL * scale
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps + 1):
        off = np.sqrt(2.0) * np.linalg.norm(a[iu])
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r == 0.0:
                    continue
                phase_c = np.conj(apq) / r
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                rot = np.array([[c, s], [-s * phase_c, c * phase_c]])
                pq = [p, q]
                a[:, pq] = a[:, pq] @ rot
                a[pq, :] = rot.conj().T @ a[pq, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                v[:, pq] = v[:, pq] @ rot
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {off:.3g})")

    w = np.real(np.diag(a))
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigh(m, tol=DEFAULT_TOL, backend=None):
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix."""
    m = check_hermitian(m, tol)
    backend = backend or DEFAULT_BACKEND
    if backend == "jacobi":
        return jacobi_eigh(m)
    if backend == "lapack":
        h = 0.5 * (m + m.conj().T)
        try:
            w, v = np.linalg.eigh(h)
        except np.linalg.LinAlgError as exc:
            raise NoConvergence(str(exc)) from exc
        return w, v
    raise InputError(f"unknown eigen backend {backend!r}")


def hermitian_eigenvalues(m, tol=DEFAULT_TOL, backend=None):
    """Real eigenvalues of Hermitian ``m``, ascending, with multiplicity."""
    return hermitian_eigh(m, tol, backend)[0]


def _noise_floor(w, n):
    return n * _EPS * float(np.max(np.abs(w), initial=0.0))


def psd_sqrt(m, tol=DEFAULT_TOL, backend=None):
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are clamped to zero (and counted, see
    :func:`clamp_count`). Eigenvalues whose magnitude is below the
    rounding floor ``n * eps * max|w|`` are treated as exact zeros so that
    rank-deficient inputs keep their exact rank.

    Raises
    ------
    NotPositiveSemidefinite
        If any eigenvalue is below ``-tol``.
    """
    w, v = hermitian_eigh(m, tol, backend)
    if w.size and w[0] < -tol:
        raise NotPositiveSemidefinite(f"eigenvalue {w[0]:.3g} < -{tol:g}")
    n_neg = int(np.count_nonzero(w < 0))
    if n_neg:
        _diagnostics["psd_clamps"] += n_neg
    w = np.where(w <= _noise_floor(w, len(w)), 0.0, w)
    root = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def singular_values(m, backend=None):
    """Singular values of ``m`` in descending order.

    Computed as the top eigenvalues of the Hermitian dilation
    ``[[0, m], [m^H, 0]]``, which keeps absolute accuracy near zero
    (no square roots of rounding-level eigenvalues).
    """
    m = as_matrix(m)
    rows, cols = m.shape
    dil = np.zeros((rows + cols, rows + cols), dtype=complex)
    dil[:rows, rows:] = m
    dil[rows:, :rows] = m.conj().T
    w = hermitian_eigenvalues(dil, tol=np.inf, backend=backend)
    top = w[::-1][: min(rows, cols)]
    return np.maximum(top, 0.0)
