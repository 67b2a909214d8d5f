"""Acceptance criteria, one test each, at the pinned tolerances.

A summary line per criterion is printed at the end of the module run.
"""
import math
import time

import numpy as np
import pytest

from qqbound import tcsim
from qqbound.partition import (
    block_concurrence,
    c_db_partition,
    extract_block,
    is_x_form,
    xform_concurrence,
)
from qqbound.randstates import make_rng, random_density, random_pure_amplitudes, random_separable
from qqbound.spinflip import build_s_2q, build_s_full, c_db_full
from qqbound.states import DensityMatrix, all_pairs

HALF = 1 / math.sqrt(2)
R2 = math.sqrt(2)
SEED = 42

_summary = []


def record(number, name, passed, detail):
    _summary.append((number, name, passed, detail))
    return passed


@pytest.fixture(scope="module", autouse=True)
def print_summary(request):
    yield
    tr = request.config.pluginmanager.get_plugin("terminalreporter")
    lines = ["", "acceptance summary:"]
    for number, name, passed, detail in sorted(_summary):
        lines.append(f"  [{'PASS' if passed else 'FAIL'}] {number}. {name}: {detail}")
    lines.append("  [N/A ] 9. alternative comparison bound: not reproduced (no formula available)")
    text = "\n".join(lines)
    if tr is not None:
        tr.write_line(text)
    else:
        print(text)


def test_1_route_equivalence():
    rng = make_rng(SEED)
    worst_pair = worst_db = 0.0
    t0 = time.perf_counter()
    for d in (3, 4, 5, 6):
        for _ in range(200):
            rho = random_density(rng, d)
            full, part = c_db_full(rho), c_db_partition(rho)
            worst_pair = max(worst_pair, max(abs(a - b) for (_, a), (_, b) in zip(full.per_pair, part.per_pair)))
            worst_db = max(worst_db, abs(full.c_db - part.c_db))
    elapsed = time.perf_counter() - t0
    ok = worst_pair < 1e-8 and worst_db < 1e-10 and elapsed < 30
    assert record(1, "route equivalence", ok, f"pair {worst_pair:.2e} < 1e-8, C_db {worst_db:.2e} < 1e-10, {elapsed:.1f}s < 30s")


S_X = [[0, 0, 0, 0, 1, 0], [0, 0, 0, -1, 0, 0], [0, 0, 0, 0, 0, 0], [0, -1, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 0]]
S_Y = [[0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 0, 0], [0, 0, 0, -1, 0, 0], [0, 0, -1, 0, 0, 0], [0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0]]
S_Z = [[0, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1], [0, 0, 0, 0, -1, 0], [0, 0, 0, 0, 0, 0], [0, 0, -1, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
S_2Q = [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]]


def test_2_s_matrix_fidelity():
    checks = [
        np.array_equal(build_s_full(3, (0, 1)), S_X),
        np.array_equal(build_s_full(3, (0, 2)), S_Y),
        np.array_equal(build_s_full(3, (1, 2)), S_Z),
        np.array_equal(build_s_full(2, (0, 1)), -np.array(S_2Q)),
        np.array_equal(build_s_2q(), S_2Q),
    ]
    assert record(2, "S-matrix fidelity", all(checks), f"{sum(checks)}/5 exact integer matches")


def test_3_pure_state_saturation():
    rng = make_rng(SEED + 1)
    worst = 0.0
    for d in (3, 4, 5):
        for _ in range(100):
            a = random_pure_amplitudes(rng, d)
            # qubit reduction straight from the amplitudes
            r00 = np.vdot(a[0], a[0]).real
            r11 = np.vdot(a[1], a[1]).real
            r01 = np.vdot(a[1], a[0])
            purity = r00**2 + r11**2 + 2 * abs(r01) ** 2
            oracle = math.sqrt(2 * (1 - purity))
            c = c_db_full(DensityMatrix.from_pure(a.reshape(-1), d)).c_db
            worst = max(worst, abs(c - oracle))
    assert record(3, "pure-state saturation", worst < 1e-8, f"max |C_db - oracle| = {worst:.2e} < 1e-8")


def test_4_separable_zero():
    rng = make_rng(SEED + 2)
    worst = 0.0
    for d in (3, 4, 5):
        for _ in range(100):
            rho = random_separable(rng, d)
            worst = max(worst, c_db_full(rho).c_db, c_db_partition(rho).c_db)
    assert record(4, "separable zero", worst < 1e-7, f"max C_db = {worst:.2e} < 1e-7")


# Reference block entries as (row, col, k, l, factor) meaning factor * c_k * conj(c_l);
# lower-triangle partners follow from Hermiticity.
S = 1 / R2
REFERENCE_BLOCKS = {
    0: {
        (0, 1): [(0, 0, 4, 4, 1), (1, 1, 2, 2, 0.5), (2, 2, 3, 3, 1), (3, 3, 2, 2, 0.5), (0, 3, 4, 2, S), (1, 2, 2, 3, S)],
        (0, 2): [(0, 0, 4, 4, 1), (0, 1, 4, 1, 1), (1, 1, 1, 1, 1), (2, 2, 3, 3, 1)],
        (1, 2): [(0, 0, 2, 2, 0.5), (1, 1, 1, 1, 1), (1, 2, 1, 2, S), (2, 2, 2, 2, 0.5)],
    },
    2: {
        (0, 1): [(1, 1, 5, 5, 0.5), (1, 2, 5, 6, S), (2, 2, 6, 6, 1), (3, 3, 5, 5, 0.5)],
        (0, 2): [(1, 1, 4, 4, 1), (2, 2, 6, 6, 1), (2, 3, 6, 3, 1), (3, 3, 3, 3, 1)],
        (0, 3): [(1, 1, 2, 2, 0.5), (1, 2, 2, 6, S), (2, 2, 6, 6, 1), (3, 3, 2, 2, 0.5)],
        (0, 4): [(1, 1, 1, 1, 1), (2, 2, 6, 6, 1)],
        (1, 2): [(0, 0, 5, 5, 0.5), (0, 3, 5, 3, S), (1, 1, 4, 4, 1), (1, 2, 4, 5, S), (2, 2, 5, 5, 0.5), (3, 3, 3, 3, 1)],
        (1, 3): [(0, 0, 5, 5, 0.5), (0, 1, 5, 2, 0.5), (1, 1, 2, 2, 0.5), (2, 2, 5, 5, 0.5), (2, 3, 5, 2, 0.5), (3, 3, 2, 2, 0.5)],
        (1, 4): [(0, 0, 5, 5, 0.5), (1, 1, 1, 1, 1), (1, 2, 1, 5, S), (2, 2, 5, 5, 0.5)],
        (2, 3): [(0, 0, 4, 4, 1), (0, 3, 4, 2, S), (1, 1, 2, 2, 0.5), (1, 2, 2, 3, S), (2, 2, 3, 3, 1), (3, 3, 2, 2, 0.5)],
        (2, 4): [(0, 0, 4, 4, 1), (0, 1, 4, 1, 1), (1, 1, 1, 1, 1), (2, 2, 3, 3, 1)],
        (3, 4): [(0, 0, 2, 2, 0.5), (1, 1, 1, 1, 1), (1, 2, 1, 2, S), (2, 2, 2, 2, 0.5)],
    },
}


def reference_block(entries, c):
    m = np.zeros((4, 4), dtype=complex)
    for r, col, k, l, f in entries:
        m[r, col] = f * c[k - 1] * np.conj(c[l - 1])
        m[col, r] = np.conj(m[r, col])
    return m


def gt_range(n):
    return tcsim.tau_to_gt(2.0, 0) if n == 0 else tcsim.tau_to_gt(1.0, 2)


def test_5_tc_block_reproduction():
    worst = 0.0
    count = 0
    for n, blocks in REFERENCE_BLOCKS.items():
        for gt in np.linspace(0, gt_range(n), 21):
            amps = tcsim.amplitudes(tcsim.TCParams(HALF, HALF, n, gt))
            rho = tcsim.reduce_over_b(tcsim.build_state(amps, n), n).rho_ac
            assert rho.d == (3 if n == 0 else 5)
            c = amps.as_array()
            for pair, entries in blocks.items():
                got = extract_block(rho, pair).mat
                worst = max(worst, float(np.max(np.abs(got - reference_block(entries, c)))))
                count += 1
    assert record(5, "TC block reproduction", worst < 1e-12, f"{count} blocks, max entry error {worst:.2e} < 1e-12")


def curve_states(n):
    tau_max = 2.0 if n == 0 else 1.0
    for tau in np.linspace(0, tau_max, 201):
        amps = tcsim.amplitudes(tcsim.TCParams(HALF, HALF, n, tcsim.tau_to_gt(tau, n)))
        yield tau, amps, tcsim.reduce_over_b(tcsim.build_state(amps, n), n).rho_ac


def test_6_closed_form_agreement():
    worst = 0.0
    eof_at_zero = []
    for n, closed in ((0, tcsim.c_ac_qutrit_closed), (2, tcsim.c_b5_closed)):
        for tau, amps, rho in curve_states(n):
            rep = c_db_partition(rho)
            worst = max(worst, abs(rep.c_db - closed(amps)))
            if tau == 0:
                eof_at_zero.append(rep.eof)
    ok = worst < 1e-9 and eof_at_zero == [0.0, 0.0]
    assert record(6, "closed-form agreement", ok, f"max |pipeline - closed| = {worst:.2e} < 1e-9, E_AC(0) = {eof_at_zero}")


def test_7_propagator_oracle():
    grid = np.linspace(0, 10, 101)
    worst = 0.0
    t0 = time.perf_counter()
    for n in (0, 1, 2, 3):
        numeric = tcsim.rk4_amplitudes(HALF, HALF, n, grid)
        closed = np.array([tcsim.amplitudes(tcsim.TCParams(HALF, HALF, n, g)).as_array() for g in grid])
        worst = max(worst, float(np.max(np.abs(numeric - closed))))
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-6 and elapsed < 10
    assert record(7, "propagator oracle", ok, f"max amplitude error {worst:.2e} < 1e-6, {elapsed:.2f}s < 10s")


def test_8_xform_path():
    worst = 0.0
    count = 0
    sources = []
    for n in (0, 2):
        for gt in np.linspace(0, gt_range(n), 21):
            amps = tcsim.amplitudes(tcsim.TCParams(HALF, HALF, n, gt))
            sources.append((n, amps, tcsim.reduce_over_b(tcsim.build_state(amps, n), n).rho_ac))
        sources.extend((n, amps, rho) for _, amps, rho in curve_states(n))
    readout = 0.0
    for n, amps, rho in sources:
        for pair in all_pairs(rho.d):
            block = extract_block(rho, pair)
            if is_x_form(block):
                worst = max(worst, abs(xform_concurrence(block) - block_concurrence(block)))
                count += 1
        if n == 0:
            c1, c2, c3, c4 = np.abs(amps.as_array())[:4]
            readout = max(
                readout,
                abs(xform_concurrence(extract_block(rho, (0, 1))) - R2 * abs(c2 * c4 - c2 * c3)),
                abs(xform_concurrence(extract_block(rho, (1, 2))) - R2 * c1 * c2),
            )
    ok = worst < 1e-9 and readout < 1e-9 and count > 0
    assert record(8, "X-form path", ok, f"{count} X blocks, closed vs eigen {worst:.2e}, C_01/C_12 readout {readout:.2e} < 1e-9")
