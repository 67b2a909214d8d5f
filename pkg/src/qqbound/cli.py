"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid input or
configuration, 3 numerical failure.
"""
import argparse
import csv
import json
import math
import sys
import time

import numpy as np

from . import tcsim, verify
from .exceptions import InputError, InvalidDensityMatrix, NumericalError
from .partition import c_db_partition
from .spinflip import build_s_full, c_db_full
from .states import DensityMatrix, all_pairs, check_qudit_dim, parse_pair

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3

ALPHA_BETA_TOL = 1e-9
DEFAULT_TAU_MAX = {0: 2.0, 2: 1.0}
DEFAULT_STEPS = 201


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _fmt(x):
    """Shortest round-trip decimal; '.' separator regardless of locale."""
    return repr(float(x))


def load_density(path):
    """Read ``{"d": int, "matrix": [[[re, im], ...], ...]}``."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidDensityMatrix(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict) or "d" not in doc or "matrix" not in doc:
        raise InvalidDensityMatrix(f"{path}: expected an object with keys 'd' and 'matrix'")
    d = doc["d"]
    if not isinstance(d, int) or isinstance(d, bool):
        raise InvalidDensityMatrix(f"{path}: 'd' must be an integer")
    check_qudit_dim(d)
    rows = doc["matrix"]
    size = 2 * d
    if not isinstance(rows, list) or len(rows) != size:
        raise InvalidDensityMatrix(f"{path}: 'matrix' must have 2d = {size} rows")
    mat = np.empty((size, size), dtype=complex)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            raise InvalidDensityMatrix(f"{path}: row {r} must have 2d = {size} entries")
        for c, entry in enumerate(row):
            ok = (
                isinstance(entry, list)
                and len(entry) == 2
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
            )
            if not ok:
                raise InvalidDensityMatrix(f"{path}: entry [{r}][{c}] must be a [re, im] pair of numbers")
            mat[r, c] = complex(entry[0], entry[1])
    return DensityMatrix(d, mat)


def density_document(rho):
    m = np.asarray(rho.mat if isinstance(rho, DensityMatrix) else rho)
    d = m.shape[0] // 2
    return {"d": d, "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m]}


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_bound(args):
    rho = load_density(args.input)
    full = c_db_full(rho)
    part = c_db_partition(rho)
    delta = max(
        [abs(a - b) for (_, a), (_, b) in zip(full.per_pair, part.per_pair)] + [abs(full.c_db - part.c_db)]
    )
    report = {
        "d": rho.d,
        "pairs": [
            {"i": p.i, "j": p.j, "C_full": cf, "C_partition": cp}
            for (p, cf), (_, cp) in zip(full.per_pair, part.per_pair)
        ],
        "C_db": part.c_db,
        "C_db_full": full.c_db,
        "C_db_partition": part.c_db,
        "EOF": part.eof,
        "route_delta": delta,
    }
    out, close = _open_out(args.output)
    try:
        json.dump(report, out, indent=2)
        out.write("\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def parse_complex(text):
    parts = str(text).split(",")
    if len(parts) not in (1, 2):
        raise InputError(f"cannot parse complex amplitude {text!r}; expected re[,im]")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise InputError(f"cannot parse complex amplitude {text!r}; expected re[,im]") from None
    if not all(math.isfinite(v) for v in vals):
        raise InputError(f"amplitude {text!r} is not finite")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def tc_rows(alpha, beta, n, tau_max=None, steps=DEFAULT_STEPS, gt_max=None):
    """Header and rows of the TC evolution table (partition route)."""
    if steps < 1:
        raise InputError("--steps must be >= 1")
    if tau_max is not None and gt_max is not None:
        raise InputError("give either --tau-max or --gt-max, not both")
    if gt_max is None:
        if n not in DEFAULT_TAU_MAX:
            # raises UnsupportedTauConvention
            tcsim.tau_to_gt(0.0 if tau_max is None else tau_max, n)
        tau_max = DEFAULT_TAU_MAX[n] if tau_max is None else tau_max
        if tau_max < 0:
            raise InputError("--tau-max must be >= 0")
        taus = np.linspace(0.0, tau_max, steps)
        grid = [(t, tcsim.tau_to_gt(t, n)) for t in taus]
    else:
        if gt_max < 0:
            raise InputError("--gt-max must be >= 0")
        tau_of = (lambda g: tcsim.gt_to_tau(g, n)) if n in DEFAULT_TAU_MAX else (lambda g: None)
        grid = [(tau_of(g), g) for g in np.linspace(0.0, gt_max, steps)]

    d = tcsim.cavity_dim(n)
    pairs = all_pairs(d)
    closed = None
    if n == 0:
        closed = ("C_AC_closed", tcsim.c_ac_qutrit_closed)
    elif n >= 2:
        closed = ("C_b5_closed", tcsim.c_b5_closed)
    header = ["tau", "gt", "C_db", "EOF"] + [p.label for p in pairs]
    if closed:
        header.append(closed[0])

    rows = []
    for tau, gt in grid:
        amps = tcsim.amplitudes(tcsim.TCParams(alpha, beta, n, float(gt)))
        red = tcsim.reduce_over_b(tcsim.build_state(amps, n), n)
        rep = c_db_partition(red.rho_ac)
        row = ["" if tau is None else _fmt(tau), _fmt(gt), _fmt(rep.c_db), _fmt(rep.eof)]
        row += [_fmt(c) for _, c in rep.per_pair]
        if closed:
            row.append(_fmt(closed[1](amps)))
        rows.append(row)
    return header, rows


def cmd_tc(args):
    alpha = parse_complex(args.alpha)
    beta = parse_complex(args.beta)
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > ALPHA_BETA_TOL:
        raise InputError(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1 within {ALPHA_BETA_TOL:g}")
    scale = 1.0 / math.sqrt(norm)
    if args.n < 0:
        raise InputError("--n must be >= 0")
    header, rows = tc_rows(alpha * scale, beta * scale, args.n, args.tau_max, args.steps, args.gt_max)
    out, close = _open_out(args.output)
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    finally:
        if close:
            out.close()
    return EXIT_OK


def format_s_matrix(s):
    return "\n".join(" ".join(f"{int(v):2d}" for v in row) for row in s)


def cmd_sflip(args):
    d = check_qudit_dim(args.d)
    pairs = [parse_pair(args.pair).validate(d)] if args.pair else all_pairs(d)
    blocks = [f"# S_{p.i}_{p.j} (d={d})\n{format_s_matrix(build_s_full(d, p))}" for p in pairs]
    sys.stdout.write("\n\n".join(blocks) + "\n")
    return EXIT_OK


def cmd_verify(args):
    if args.trials <= 0:
        raise InputError("--trials must be positive")
    try:
        d_list = [check_qudit_dim(int(x)) for x in args.d_list.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"cannot parse --d-list {args.d_list!r}") from None
    if not d_list:
        raise InputError("--d-list is empty")
    t0 = time.perf_counter()
    results = verify.run_all(args.trials, d_list, args.seed)
    for r in results:
        print(r.line(timing=args.timing))
    if args.timing:
        print(f"# total {time.perf_counter() - t0:.3f}s")
    failed = [r.name for r in results if not r.passed]
    print(f"{'FAIL' if failed else 'PASS'} all ({len(results) - len(failed)}/{len(results)} suites)")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def build_parser():
    parser = _Parser(prog="qqbound", description="Concurrence and EOF lower bounds for qubit-qudit states.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", help="bound report for a density-matrix JSON file")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("tc", help="Tavis-Cummings entanglement curve as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default=repr(1 / math.sqrt(2)))
    p.add_argument("--beta", default=repr(1 / math.sqrt(2)))
    p.add_argument("--tau-max", type=float)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--gt-max", type=float)
    p.add_argument("--output")
    p.set_defaults(func=cmd_tc)

    p = sub.add_parser("sflip", help="print spin-flip matrices")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pair")
    p.set_defaults(func=cmd_sflip)

    p = sub.add_parser("verify", help="run the self-verification suites")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--d-list", default="3,4,5")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--timing", action="store_true", help="append wall-clock times (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except Exception as exc:  # noqa: BLE001
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
