"""Value types shared by the two bound routes."""
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import matcore
from .exceptions import InputError, InvalidDensityMatrix, InvalidPair, NotHermitian

STATE_TOL = 1e-9


def check_qudit_dim(d):
    if isinstance(d, bool) or int(d) != d or d < 2:
        raise InputError(f"qudit dimension must be an integer >= 2, got {d!r}")
    return int(d)


class BlockPair(NamedTuple):
    """Qudit levels ``i < j`` naming one embedded two-qubit subsystem."""

    i: int
    j: int

    def validate(self, d):
        if not (0 <= self.i < self.j <= d - 1):
            raise InvalidPair(f"pair ({self.i},{self.j}) invalid for d={d}: need 0 <= i < j <= {d - 1}")
        return self

    @property
    def label(self):
        return f"C_{self.i}_{self.j}"


def all_pairs(d):
    """All ``d(d-1)/2`` level pairs in lexicographic order."""
    d = check_qudit_dim(d)
    return [BlockPair(i, j) for i, j in combinations(range(d), 2)]


def parse_pair(text):
    try:
        i, j = (int(x) for x in str(text).split(","))
    except ValueError:
        raise InvalidPair(f"cannot parse pair {text!r}; expected 'i,j'") from None
    return BlockPair(i, j)


@dataclass(frozen=True)
class DensityMatrix:
    """A validated ``2d x 2d`` qubit-qudit density matrix.

    Basis index ``a*d + k`` is ``|a_qubit, k_qudit>``. Construction checks
    Hermiticity, unit trace and positivity, each within ``tol``.
    """

    d: int
    mat: np.ndarray
    tol: float = STATE_TOL

    def __post_init__(self):
        d = check_qudit_dim(self.d)
        try:
            m = matcore.as_matrix(self.mat)
        except InputError as exc:
            raise InvalidDensityMatrix(str(exc)) from None
        if m.shape != (2 * d, 2 * d):
            raise InvalidDensityMatrix(f"matrix shape {m.shape} does not match 2d x 2d = {2 * d}x{2 * d}")
        try:
            m = matcore.check_hermitian(m, self.tol)
        except NotHermitian as exc:
            raise InvalidDensityMatrix(f"Hermitian invariant violated: {exc}") from None
        tr = np.trace(m).real
        if abs(tr - 1.0) > self.tol:
            raise InvalidDensityMatrix(f"trace invariant violated: trace = {tr:.12g}, expected 1")
        lowest = matcore.hermitian_eigenvalues(m, self.tol)[0]
        if lowest < -self.tol:
            raise InvalidDensityMatrix(f"positive semidefinite invariant violated: eigenvalue {lowest:.3g}")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "mat", m)

    @classmethod
    def from_pure(cls, psi, d):
        psi = np.asarray(psi, dtype=complex).reshape(-1)
        psi = psi / np.linalg.norm(psi)
        return cls(d, np.outer(psi, psi.conj()))

    def qubit_reduction(self):
        """Partial trace over the qudit: the 2x2 qubit state."""
        return np.einsum("akbk->ab", self.mat.reshape(2, self.d, 2, self.d))


@dataclass(frozen=True)
class BoundReport:
    """Per-pair concurrences, their root-sum-square ``c_db`` and its EOF."""

    per_pair: tuple
    c_db: float
    eof: float
    route: str

    def concurrences(self):
        return {pair: c for pair, c in self.per_pair}

    def as_dict(self):
        return {
            "route": self.route,
            "c_db": self.c_db,
            "eof": self.eof,
            "per_pair": [{"i": p.i, "j": p.j, "concurrence": c} for p, c in self.per_pair],
        }
