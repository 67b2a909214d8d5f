"""Self-verification suites behind ``qqbound verify``.

Each suite returns a :class:`SuiteResult` carrying the largest deviation it
observed and the tolerance it was held to. Randomised suites draw from a
PCG64 stream keyed on ``(seed, suite number)``, so results do not depend on
which other suites ran.
"""
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import tcsim
from .partition import block_concurrence, c_db_partition, extract_block, is_x_form, xform_concurrence
from .randstates import make_rng, random_density, random_pure_amplitudes, random_separable
from .spinflip import c_db_full
from .states import DensityMatrix, all_pairs

ROUTE_PAIR_TOL = 1e-8
ROUTE_CDB_TOL = 1e-10
PURE_TOL = 1e-8
SEPARABLE_TOL = 1e-7
XFORM_TOL = 1e-9
PROPAGATOR_TOL = 1e-6
BLOCK_TOL = 1e-12
CLOSED_FORM_TOL = 1e-9

SQRT2 = math.sqrt(2.0)


@dataclass
class SuiteResult:
    name: str
    max_dev: float
    tol: float
    checked: int
    timings: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.max_dev < self.tol

    def line(self, timing=False):
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name:<20} max_dev={self.max_dev:.3e} tol={self.tol:.0e} checked={self.checked}"
        if timing and self.timings:
            text += " " + " ".join(f"{k}={v:.3f}s" for k, v in sorted(self.timings.items()))
        return text


def expected_tc_blocks(a, n):
    """Two-qubit blocks of the reduced TC state, written out from the amplitudes.

    Hand-derived entry patterns for ``n = 0`` (three blocks) and
    ``n >= 2`` (ten blocks); keys are level pairs.
    """
    c1, c2, c3, c4, c5, c6 = a.as_array()
    cc = np.conj
    r = SQRT2
    z = 0.0
    if n == 0:
        return {
            (0, 1): [
                [c4 * cc(c4), z, z, c4 * cc(c2) / r],
                [z, c2 * cc(c2) / 2, c2 * cc(c3) / r, z],
                [z, c3 * cc(c2) / r, c3 * cc(c3), z],
                [c2 * cc(c4) / r, z, z, c2 * cc(c2) / 2],
            ],
            (0, 2): [
                [c4 * cc(c4), c4 * cc(c1), z, z],
                [c1 * cc(c4), c1 * cc(c1), z, z],
                [z, z, c3 * cc(c3), z],
                [z, z, z, z],
            ],
            (1, 2): [
                [c2 * cc(c2) / 2, z, z, z],
                [z, c1 * cc(c1), c1 * cc(c2) / r, z],
                [z, c2 * cc(c1) / r, c2 * cc(c2) / 2, z],
                [z, z, z, z],
            ],
        }
    if n < 2:
        raise ValueError("no written-out blocks for n = 1")
    return {
        (0, 1): [
            [z, z, z, z],
            [z, c5 * cc(c5) / 2, c5 * cc(c6) / r, z],
            [z, c6 * cc(c5) / r, c6 * cc(c6), z],
            [z, z, z, c5 * cc(c5) / 2],
        ],
        (0, 2): [
            [z, z, z, z],
            [z, c4 * cc(c4), z, z],
            [z, z, c6 * cc(c6), c6 * cc(c3)],
            [z, z, c3 * cc(c6), c3 * cc(c3)],
        ],
        (0, 3): [
            [z, z, z, z],
            [z, c2 * cc(c2) / 2, c2 * cc(c6) / r, z],
            [z, c6 * cc(c2) / r, c6 * cc(c6), z],
            [z, z, z, c2 * cc(c2) / 2],
        ],
        (0, 4): [
            [z, z, z, z],
            [z, c1 * cc(c1), z, z],
            [z, z, c6 * cc(c6), z],
            [z, z, z, z],
        ],
        (1, 2): [
            [c5 * cc(c5) / 2, z, z, c5 * cc(c3) / r],
            [z, c4 * cc(c4), c4 * cc(c5) / r, z],
            [z, c5 * cc(c4) / r, c5 * cc(c5) / 2, z],
            [c3 * cc(c5) / r, z, z, c3 * cc(c3)],
        ],
        (1, 3): [
            [c5 * cc(c5) / 2, c5 * cc(c2) / 2, z, z],
            [c2 * cc(c5) / 2, c2 * cc(c2) / 2, z, z],
            [z, z, c5 * cc(c5) / 2, c5 * cc(c2) / 2],
            [z, z, c2 * cc(c5) / 2, c2 * cc(c2) / 2],
        ],
        (1, 4): [
            [c5 * cc(c5) / 2, z, z, z],
            [z, c1 * cc(c1), c1 * cc(c5) / r, z],
            [z, c5 * cc(c1) / r, c5 * cc(c5) / 2, z],
            [z, z, z, z],
        ],
        (2, 3): [
            [c4 * cc(c4), z, z, c4 * cc(c2) / r],
            [z, c2 * cc(c2) / 2, c2 * cc(c3) / r, z],
            [z, c3 * cc(c2) / r, c3 * cc(c3), z],
            [c2 * cc(c4) / r, z, z, c2 * cc(c2) / 2],
        ],
        (2, 4): [
            [c4 * cc(c4), c4 * cc(c1), z, z],
            [c1 * cc(c4), c1 * cc(c1), z, z],
            [z, z, c3 * cc(c3), z],
            [z, z, z, z],
        ],
        (3, 4): [
            [c2 * cc(c2) / 2, z, z, z],
            [z, c1 * cc(c1), c1 * cc(c2) / r, z],
            [z, c2 * cc(c1) / r, c2 * cc(c2) / 2, z],
            [z, z, z, z],
        ],
    }


def curve_grid(n, points=201):
    """Default 201-point tau grid of the entanglement curve for ``n`` (0 or 2)."""
    tau_max = {0: 2.0, 2: 1.0}[n]
    return np.linspace(0.0, tau_max, points)


def route_equivalence(seed, trials, d_list):
    rng = make_rng((seed, 1))
    worst_pair = worst_db = 0.0
    timings = {"full": 0.0, "partition": 0.0}
    checked = 0
    for d in d_list:
        for _ in range(trials):
            rho = random_density(rng, d)
            t0 = time.perf_counter()
            full = c_db_full(rho)
            t1 = time.perf_counter()
            part = c_db_partition(rho)
            t2 = time.perf_counter()
            timings["full"] += t1 - t0
            timings["partition"] += t2 - t1
            for (p, cf), (q, cp) in zip(full.per_pair, part.per_pair):
                assert p == q
                worst_pair = max(worst_pair, abs(cf - cp))
            worst_db = max(worst_db, abs(full.c_db - part.c_db))
            checked += 1
    return [
        SuiteResult("route_pairs", worst_pair, ROUTE_PAIR_TOL, checked, timings),
        SuiteResult("route_c_db", worst_db, ROUTE_CDB_TOL, checked),
    ]


def pure_saturation(seed, trials, d_list):
    rng = make_rng((seed, 2))
    worst = 0.0
    checked = 0
    for d in d_list:
        for _ in range(trials):
            amp = random_pure_amplitudes(rng, d)
            rho_a = amp @ amp.conj().T
            purity = float(np.real(np.trace(rho_a @ rho_a)))
            oracle = math.sqrt(max(0.0, 2.0 * (1.0 - purity)))
            rho = DensityMatrix.from_pure(amp.reshape(-1), d)
            worst = max(worst, abs(c_db_full(rho).c_db - oracle), abs(c_db_partition(rho).c_db - oracle))
            checked += 1
    return SuiteResult("pure_saturation", worst, PURE_TOL, checked)


def separable_zero(seed, trials, d_list):
    rng = make_rng((seed, 3))
    worst = 0.0
    checked = 0
    for d in d_list:
        for _ in range(trials):
            rho = random_separable(rng, d)
            worst = max(worst, c_db_full(rho).c_db, c_db_partition(rho).c_db)
            checked += 1
    return SuiteResult("separable_zero", worst, SEPARABLE_TOL, checked)


def tc_states(n, points):
    a = b = 1.0 / SQRT2
    for tau in curve_grid(n, points):
        p = tcsim.TCParams(a, b, n, tcsim.tau_to_gt(tau, n))
        amps = tcsim.amplitudes(p)
        yield amps, tcsim.reduce_over_b(tcsim.build_state(amps, n), n)


def xform_consistency(seed, trials, points=201):
    worst = 0.0
    checked = 0
    for n in (0, 2):
        for _, red in tc_states(n, points):
            for block in (extract_block(red.rho_ac, p) for p in all_pairs(red.d)):
                if is_x_form(block):
                    worst = max(worst, abs(xform_concurrence(block) - block_concurrence(block)))
                    checked += 1
    rng = make_rng((seed, 4))
    mask = np.eye(4, dtype=bool) | np.fliplr(np.eye(4, dtype=bool))
    for _ in range(trials):
        # masking a random two-qubit state to the X pattern keeps it a valid state
        x = np.where(mask, random_density(rng, 2).mat, 0.0)
        worst = max(worst, abs(xform_concurrence(x) - block_concurrence(x)))
        checked += 1
    return SuiteResult("xform_consistency", worst, XFORM_TOL, checked)


def propagator_oracle(ns=(0, 1, 2, 3), gt_max=10.0, samples=101):
    grid = np.linspace(0.0, gt_max, samples)
    a = b = 1.0 / SQRT2
    worst = 0.0
    for n in ns:
        numeric = tcsim.rk4_amplitudes(a, b, n, grid)
        closed = np.array([tcsim.amplitudes(tcsim.TCParams(a, b, n, g)).as_array() for g in grid])
        worst = max(worst, float(np.max(np.abs(numeric - closed))))
    return SuiteResult("propagator_oracle", worst, PROPAGATOR_TOL, len(ns) * samples)


def block_reproduction(points=21):
    worst = 0.0
    checked = 0
    a = b = 1.0 / SQRT2
    for n, gt_max in ((0, tcsim.tau_to_gt(2.0, 0)), (2, tcsim.tau_to_gt(1.0, 2))):
        for gt in np.linspace(0.0, gt_max, points):
            amps = tcsim.amplitudes(tcsim.TCParams(a, b, n, gt))
            red = tcsim.reduce_over_b(tcsim.build_state(amps, n), n)
            for pair, expected in expected_tc_blocks(amps, n).items():
                got = extract_block(red.rho_ac, pair).mat
                worst = max(worst, float(np.max(np.abs(got - np.array(expected, dtype=complex)))))
                checked += 1
    return SuiteResult("block_reproduction", worst, BLOCK_TOL, checked)


def closed_form_agreement(points=201):
    worst = 0.0
    checked = 0
    for n, closed in ((0, tcsim.c_ac_qutrit_closed), (2, tcsim.c_b5_closed)):
        for amps, red in tc_states(n, points):
            worst = max(worst, abs(c_db_partition(red.rho_ac, cross_check=True).c_db - closed(amps)))
            checked += 1
    return SuiteResult("closed_form", worst, CLOSED_FORM_TOL, checked)


def run_all(trials=100, d_list=(3, 4, 5), seed=42):
    return [
        *route_equivalence(seed, trials, d_list),
        pure_saturation(seed, trials, d_list),
        separable_zero(seed, trials, d_list),
        xform_consistency(seed, trials),
        propagator_oracle(),
        block_reproduction(),
        closed_form_agreement(),
    ]
