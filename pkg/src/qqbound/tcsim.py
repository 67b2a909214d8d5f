"""Two-atom Tavis-Cummings example states.

Two resonant two-level atoms A, B share one cavity mode C, starting from
``(alpha|0_A 0_B> + beta|1_A 1_B>)|n_C>`` (``|1>`` is the excited level).
The excitation number is conserved, so the evolved state has six
amplitudes ``c1..c6`` on the basis patterns

====  ==================  ===========
amp   atoms               cavity Fock
====  ==================  ===========
c1    |0_A 0_B>           n + 2
c2    |+>                 n + 1
c3    |1_A 1_B>           n
c4    |0_A 0_B>           n
c5    |+>                 n - 1
c6    |1_A 1_B>           n - 2
====  ==================  ===========

with ``|+> = (|1_A 0_B> + |0_A 1_B>)/sqrt(2)``. Tracing out atom B leaves
a qubit (A) times qudit (C) state, ``d = 3, 4, 5`` for ``n = 0, 1, >= 2``.
Units have ``hbar = 1``; time enters only as ``gt = g * t``.
"""
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InputError, UnsupportedTauConvention
from .states import DensityMatrix

NORM_TOL = 1e-12


@dataclass(frozen=True)
class TCParams:
    alpha: complex
    beta: complex
    n: int
    gt: float

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise InputError(f"Fock number n must be a nonnegative integer, got {self.n!r}")
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise InputError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")
        if not math.isfinite(self.gt):
            raise InputError("gt must be finite")
        object.__setattr__(self, "n", int(self.n))


@dataclass(frozen=True)
class TCAmplitudes:
    c1: complex
    c2: complex
    c3: complex
    c4: complex
    c5: complex
    c6: complex

    def as_array(self):
        return np.array([self.c1, self.c2, self.c3, self.c4, self.c5, self.c6], dtype=complex)


@dataclass(frozen=True)
class ReducedState:
    d: int
    rho_ac: DensityMatrix
    level_offset: int


def cavity_dim(n):
    return {0: 3, 1: 4}.get(n, 5)


def level_offset(n):
    return max(n - 2, 0)


def amplitudes(p):
    """Closed-form amplitudes ``c1..c6`` at ``gt``.

    For ``n = 0`` the ``alpha`` branch does not evolve (``c4 = alpha``,
    ``c5 = c6 = 0``); the general expressions are singular there.
    """
    alpha, beta, n, gt = complex(p.alpha), complex(p.beta), p.n, p.gt

    w_up = math.sqrt(2 * (2 * n + 3)) * gt
    k_up = 1.0 - math.cos(w_up)
    c1 = -beta * math.sqrt((n + 1) * (n + 2)) / (2 * n + 3) * k_up
    c2 = -1j * beta * math.sqrt(n + 1) / math.sqrt(2 * n + 3) * math.sin(w_up)
    c3 = beta * (1.0 - (n + 1) / (2 * n + 3) * k_up)

    if n == 0:
        c4, c5, c6 = alpha, 0j, 0j
    else:
        w_dn = math.sqrt(2 * (2 * n - 1)) * gt
        k_dn = 1.0 - math.cos(w_dn)
        c4 = alpha * (1.0 - n / (2 * n - 1) * k_dn)
        c5 = -1j * alpha * math.sqrt(n) / math.sqrt(2 * n - 1) * math.sin(w_dn)
        c6 = -alpha * math.sqrt(n * (n - 1)) / (2 * n - 1) * k_dn
    return TCAmplitudes(c1, c2, complex(c3), complex(c4), complex(c5), complex(c6))


def state_index(a, b, fock, n):
    """Index of ``|a_A, b_B, fock_C>`` in the A (x) B (x) C vector, or None."""
    d = cavity_dim(n)
    k = fock - level_offset(n)
    if not 0 <= k < d:
        return None
    return (2 * a + b) * d + k


def build_state(a, n):
    """Pure A (x) B (x) C state vector of length ``4 d``."""
    d = cavity_dim(n)
    psi = np.zeros(4 * d, dtype=complex)
    h = 1.0 / math.sqrt(2.0)
    terms = [
        (a.c1, 0, 0, n + 2),
        (a.c2 * h, 1, 0, n + 1),
        (a.c2 * h, 0, 1, n + 1),
        (a.c3, 1, 1, n),
        (a.c4, 0, 0, n),
        (a.c5 * h, 1, 0, n - 1),
        (a.c5 * h, 0, 1, n - 1),
        (a.c6, 1, 1, n - 2),
    ]
    for amp, qa, qb, fock in terms:
        idx = state_index(qa, qb, fock, n)
        if idx is not None:
            psi[idx] += amp
    return psi


def reduce_over_b(psi, n):
    """``rho_AC = sum_b <b_B|psi><psi|b_B>`` in the basis ``a*d + k``."""
    d = cavity_dim(n)
    t = np.asarray(psi, dtype=complex).reshape(2, 2, d)
    rho = np.einsum("abk,cbl->akcl", t, t.conj()).reshape(2 * d, 2 * d)
    return ReducedState(d, DensityMatrix(d, rho), level_offset(n))


def reduced_state(p):
    return reduce_over_b(build_state(amplitudes(p), p.n), p.n)


def c_ac_qutrit_closed(a):
    """``sqrt(2 [|c1 c2|^2 + (|c2 c4| - |c2 c3|)^2])`` for the ``n = 0`` case."""
    m = np.abs(a.as_array())
    c1, c2, c3, c4 = m[:4]
    return math.sqrt(2.0 * ((c1 * c2) ** 2 + (c2 * c4 - c2 * c3) ** 2))


def c_b5_closed(a):
    """Closed-form bound for the ``d = 5`` (``n >= 2``) case, moduli throughout."""
    c1, c2, c3, c4, c5, c6 = np.abs(a.as_array())
    s = (
        (c2 * c3 - c2 * c4) ** 2
        + (c3 * c5 - c4 * c5) ** 2
        + (c1 * c2) ** 2
        + (c1 * c5) ** 2
        + (c2 * c6) ** 2
        + (c5 * c6) ** 2
    )
    return math.sqrt(2.0) * math.sqrt(s)


def tau_to_gt(tau, n):
    """Dimensionless plotting time to ``g t``.

    ``n = 0``: ``tau = sqrt(6) gt / (2 pi)``; ``n = 2``: ``tau = sqrt(14) gt / (6 pi)``.
    """
    if n == 0:
        return 2.0 * math.pi * tau / math.sqrt(6.0)
    if n == 2:
        return 6.0 * math.pi * tau / math.sqrt(14.0)
    raise UnsupportedTauConvention(f"no tau convention for n={n}; give gt directly")


def gt_to_tau(gt, n):
    if n == 0:
        return math.sqrt(6.0) * gt / (2.0 * math.pi)
    if n == 2:
        return math.sqrt(14.0) * gt / (6.0 * math.pi)
    raise UnsupportedTauConvention(f"no tau convention for n={n}")


def hamiltonian(n):
    """``H/g = (s_A + s_B) a^dag + h.c.`` on atoms (x) Fock levels ``0..n+2``.

    Built from ladder operators, independent of the closed-form amplitudes.
    The truncation is exact for states with at most ``n + 2`` excitations.
    """
    nf = n + 3
    lower = np.array([[0.0, 1.0], [0.0, 0.0]])  # |0><1|
    eye2 = np.eye(2)
    a = np.diag(np.sqrt(np.arange(1, nf)), k=1)
    sa = np.kron(np.kron(lower, eye2), np.eye(nf))
    sb = np.kron(np.kron(eye2, lower), np.eye(nf))
    ad = np.kron(np.eye(4), a.T)
    h = (sa + sb) @ ad
    return h + h.T


def rk4_amplitudes(alpha, beta, n, gt_grid, substeps=100):
    """Amplitudes ``c1..c6`` by classical RK4 on ``i dpsi/dt = H psi``.

    ``gt_grid`` must be ascending from 0; each interval is split into
    ``substeps`` equal steps. Returns an array of shape ``(len(grid), 6)``.
    """
    h = hamiltonian(n)
    nf = n + 3

    def idx(qa, qb, fock):
        return (2 * qa + qb) * nf + fock

    psi = np.zeros(4 * nf, dtype=complex)
    psi[idx(0, 0, n)] = alpha
    psi[idx(1, 1, n)] = beta

    def f(v):
        return -1j * (h @ v)

    r = 1.0 / math.sqrt(2.0)
    out = []
    t = 0.0
    for target in gt_grid:
        if target < t:
            raise InputError("gt grid must be ascending from 0")
        if target > t:
            dt = (target - t) / substeps
            for _ in range(substeps):
                k1 = f(psi)
                k2 = f(psi + 0.5 * dt * k1)
                k3 = f(psi + 0.5 * dt * k2)
                k4 = f(psi + dt * k3)
                psi = psi + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
            t = target
        row = [
            psi[idx(0, 0, n + 2)],
            r * (psi[idx(1, 0, n + 1)] + psi[idx(0, 1, n + 1)]),
            psi[idx(1, 1, n)],
            psi[idx(0, 0, n)],
            r * (psi[idx(1, 0, n - 1)] + psi[idx(0, 1, n - 1)]) if n >= 1 else 0.0,
            psi[idx(1, 1, n - 2)] if n >= 2 else 0.0,
        ]
        out.append(row)
    return np.array(out, dtype=complex)
