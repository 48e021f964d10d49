"""Command-line front end.

    zetawz compute --max-l 5 --format csv
    zetawz crosscheck --max-l 50
    zetawz verify-wz
    zetawz verify-lemmas --which 4 --n-max 30
    zetawz verify-decomposition
    zetawz verify-identity --max-l 50

Exit status is 0 when every requested check passes, 1 when any fails and 2
on usage errors. Reports go to stdout; ``--out PATH`` also writes them to a
file.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import analysis_lab as lab
from . import wz_engine as wz
from . import zeta_core as zc
from .exact_arith import MAX_PI_DIGITS
from .report import VerificationReport

SUBCOMMANDS = (
    "compute",
    "crosscheck",
    "verify-wz",
    "verify-lemmas",
    "verify-decomposition",
    "verify-identity",
)
FORMATS = ("text", "json", "csv")
DEFAULT_MAX_L = 20
DEFAULT_PRECISION = 30
DEFAULT_SEED = lab.DEFAULT_SEED


@dataclass
class RunConfig:
    subcommand: str
    max_l: int = DEFAULT_MAX_L
    precision: int = DEFAULT_PRECISION
    format: str = "text"
    seed: int = DEFAULT_SEED
    tolerances: dict[str, float] = field(default_factory=dict)


@dataclass
class CoefficientTable:
    route: str
    rows: list[tuple[int, Fraction, str]]


# --- formatting ---------------------------------------------------------------


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


def _json(obj) -> str:
    # floats at 17 significant digits; non-finite floats become strings
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        return fmt_float(obj) if math.isfinite(obj) else json.dumps(fmt_float(obj))
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Fraction):
        return json.dumps(f"{obj.numerator}/{obj.denominator}")
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _inputs_text(inputs: dict) -> str:
    return _json(inputs)


def _table(header: Sequence[str], rows: list[Sequence[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def emit_report(items, fmt: str, notes: Sequence[str] = ()) -> str:
    """Serialize verification reports or a coefficient table.

    ``items`` is either a :class:`CoefficientTable` or a list of
    :class:`VerificationReport`. ``notes`` are extra summary lines that only
    the text format shows.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(items, CoefficientTable):
        return _emit_table(items, fmt)
    reports = list(items)
    if fmt == "json":
        return "[" + ",\n ".join(_json(r.to_dict()) for r in reports) + "]\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "case", "inputs", "residual", "tolerance", "pass"])
        for r in reports:
            for i, c in enumerate(r.cases):
                w.writerow(
                    [r.name, i, _inputs_text(c.inputs), fmt_float(c.residual), fmt_float(r.tolerance), str(c.residual <= r.tolerance).lower()]
                )
        return buf.getvalue()
    rows = [
        [r.name, str(len(r.cases)), fmt_float(r.max_residual), fmt_float(r.tolerance), "PASS" if r.passed else "FAIL"]
        for r in reports
    ]
    out = _table(["check", "cases", "max_residual", "tolerance", "verdict"], rows)
    for r in reports:
        for d in r.diagnostics:
            out += f"{r.name}: {d}\n"
    for line in notes:
        out += line + "\n"
    return out


def _emit_table(table: CoefficientTable, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "name": "zeta_even",
            "route": table.route,
            "rows": [{"l": l, "q": _rat(q), "decimal": d} for l, q, d in table.rows],  # noqa: E741
        }
        return _json(doc) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "q", "decimal"])
        for l, q, d in table.rows:  # noqa: E741
            w.writerow([l, _rat(q), d])
        return buf.getvalue()
    return _table(["l", "q", "zeta(2l)"], [[str(l), _rat(q), d] for l, q, d in table.rows])  # noqa: E741


# --- argument parsing -----------------------------------------------------------


def _ranged_int(lo: int, hi: int | None = None):
    def parse(text: str) -> int:
        try:
            v = int(text, 0)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        if v < lo or (hi is not None and v > hi):
            bound = f"[{lo}, {hi}]" if hi is not None else f">= {lo}"
            raise argparse.ArgumentTypeError(f"{v} out of range {bound}")
        return v

    return parse


def _nonneg_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (v >= 0 and math.isfinite(v)):
        raise argparse.ArgumentTypeError(f"tolerance must be finite and >= 0, got {text}")
    return v


def _pos_float(text: str) -> float:
    v = _nonneg_float(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-l", type=_ranged_int(1, 500), default=DEFAULT_MAX_L, help="largest l (default %(default)s)")
    common.add_argument(
        "--precision", type=_ranged_int(1, zc.MAX_RENDER_PRECISION), default=DEFAULT_PRECISION,
        help="fractional digits for decimals (default %(default)s)",
    )
    common.add_argument("--format", choices=FORMATS, default="text", help="output format (default %(default)s)")
    common.add_argument("--seed", type=_ranged_int(0, 2**64 - 1), default=DEFAULT_SEED, help="sampling seed (default 0x5EED)")
    common.add_argument("--out", metavar="PATH", help="also write the report to PATH")

    parser = argparse.ArgumentParser(prog="zetawz", description="Exact even zeta values and WZ-pair verification.")
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND", required=True)

    p = sub.add_parser("compute", parents=[common], help="tabulate zeta(2l) = q pi^(2l)")
    p.add_argument("--route", choices=sorted(zc.ROUTES), default="theorem", help="route used (default %(default)s)")

    sub.add_parser("crosscheck", parents=[common], help="exact agreement of the four routes")

    p = sub.add_parser("verify-wz", parents=[common], help="WZ equation and telescoping checks")
    p.add_argument("--pair", action="append", choices=[q.id for q in wz.catalog()], help="restrict to a pair (repeatable)")
    p.add_argument("--k-max", type=_ranged_int(1, 1000), default=12, help="largest k on the grid (default %(default)s)")
    p.add_argument("--grid-points", type=_ranged_int(2, 10000), default=wz.GRID_POINTS, help="x-grid size (default %(default)s)")
    p.add_argument("--h", type=_pos_float, default=wz.DEFAULT_FD_STEP, help="finite-difference step (default %(default)s)")
    p.add_argument("--tol-analytic", type=_nonneg_float, default=1e-12, help="scaled analytic tolerance (default %(default)s)")
    p.add_argument("--tol-fd", type=_nonneg_float, default=1e-7, help="finite-difference tolerance (default %(default)s)")
    p.add_argument("--quad-tol", type=_pos_float, default=1e-10, help="quadrature tolerance for telescoping (default %(default)s)")

    p = sub.add_parser("verify-lemmas", parents=[common], help="Dirichlet-kernel and repeated-integral lemmas")
    p.add_argument(
        "--which", choices=["2", "3", "4", "5", "all"], default="all",
        help="2: repeated integration, 3: cosine-sum closed form, 4: kernel integral equals pi, "
        "5: weighted kernel bound (default %(default)s)",
    )
    p.add_argument("--n-max", type=_ranged_int(1, 10000), help="largest n (cosine sum default 200, kernel integral default 30)")
    p.add_argument("--samples", type=_ranged_int(1, 100000), default=64, help="cosine-sum sample points (default %(default)s)")
    p.add_argument(
        "--tol", type=_nonneg_float,
        help="override tolerance (defaults: 2 -> 1e-9, 3 -> 1e-11 per unit n, 4 -> 1e-8, 5 -> 1e-8)",
    )

    p = sub.add_parser("verify-decomposition", parents=[common], help="telescoped identities and the I_j decomposition")
    p.add_argument("--tol", type=_nonneg_float, help="override tolerance (default 1e-6; linearity 1e-9)")

    p = sub.add_parser("verify-identity", parents=[common], help="B_2k(1/2) = (2^(1-2k) - 1) B_2k for k = 1..max-l")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    """Parse ``argv`` into a :class:`RunConfig`; exits with status 2 on usage errors."""
    args = build_parser().parse_args(argv)
    tolerances = {
        k: v
        for k, v in vars(args).items()
        if (k == "tol" or k.startswith("tol_") or k == "quad_tol") and v is not None
    }
    return RunConfig(args.subcommand, args.max_l, args.precision, args.format, args.seed, tolerances)


# --- subcommands ----------------------------------------------------------------


def _compute(args) -> tuple[object, list[str], bool]:
    coeffs = zc.zeta_table(args.max_l, args.route)
    rows = [(c.l, c.q, str(zc.render_zeta(c, args.precision))) for c in coeffs]
    return CoefficientTable(args.route, rows), [], True


def _crosscheck(args):
    tables = {name: zc.zeta_table(args.max_l, name) for name in zc.ROUTES}
    ref = tables["theorem"]
    cases = []
    for i, c in enumerate(ref):
        agree = all(tables[name][i].q == c.q for name in zc.ROUTES)
        cases.append(({"l": c.l, "q": _rat(c.q), "agree": agree}, 0.0 if agree else math.inf))
    agreement = VerificationReport.build("route_agreement", cases, 0.0)

    shape = []
    for i, c in enumerate(ref):
        ok = c.q > 0 and (i == 0 or ref[i - 1].q > c.q)
        shape.append(({"l": c.l}, 0.0 if ok else math.inf))
    ordering = VerificationReport.build("positive_decreasing", shape, 0.0)

    n = len(zc.ROUTES)
    if agreement.passed:
        note = f"{n} routes agree for l=1..{args.max_l}"
    else:
        bad = [c.inputs["l"] for c in agreement.cases if c.residual > 0]
        note = f"routes disagree at l={bad}"
    return [agreement, ordering], [note], agreement.passed and ordering.passed


def _verify_wz(args):
    pairs = [wz.get_pair(p) for p in args.pair] if args.pair else wz.catalog()
    reports = []
    for pair in pairs:
        reports.append(wz.wz_grid_report(pair, "analytic", args.k_max, args.grid_points, tolerance=args.tol_analytic))
        reports.append(
            wz.wz_grid_report(pair, "finite_difference", args.k_max, args.grid_points, args.h, tolerance=args.tol_fd)
        )
        cases, diags = [], []
        tol = 10 * args.quad_tol
        for x, m, n in ((0.0, 1, 5), (1.0, 1, 10), (math.pi, 1, 3), (2.5, 3, 12)):
            r = wz.lemma1_check(pair, x, 0.0, m, n, args.quad_tol)
            # residual scaled by (1 + |left side|) so one tolerance covers all cases
            scale = r.tolerance / tol
            cases.extend((c.inputs, c.residual / scale) for c in r.cases)
            diags.extend(r.diagnostics)
        reports.append(VerificationReport.build(f"lemma1[{pair.id}]", cases, tol, diags))
    return reports, [], all(r.passed for r in reports)


def _tol(args, default):
    return default if args.tol is None else args.tol


def _verify_lemmas(args):
    which = ["2", "3", "4", "5"] if args.which == "all" else [args.which]
    reports = []
    for w in which:
        if w == "2":
            reports.append(lab.cauchy_report(tol=_tol(args, 1e-9)))
        elif w == "3":
            reports.append(
                lab.lemma3_report(args.n_max or 200, args.samples, args.seed, rel_tol=_tol(args, 1e-11))
            )
        elif w == "4":
            reports.append(lab.lemma4_report(args.n_max if args.n_max is not None else 30, tol=_tol(args, 1e-8)))
        else:
            reports.append(lab.lemma5_report(tol=_tol(args, 1e-8)))
    return reports, [], all(r.passed for r in reports)


def _verify_decomposition(args):
    tol = _tol(args, 1e-6)
    lin_tol = 1e-10 if args.tol is None else lab.quad_tol_for(args.tol)
    zetas = zc.zeta_table(2, "theorem")
    reports = [
        lab.telescoping_report(tol=tol),
        lab.decomposition_report(tol=tol),
    ]
    reports.extend(lab.linearity_check(j, x, lin_tol) for j in (1, 2, 3) for x in (0.0, 1.0, math.pi))
    reports.append(lab.alternating_report(zetas, pi_prec=min(MAX_PI_DIGITS, max(args.precision, 20))))
    return reports, [], all(r.passed for r in reports)


def _verify_identity(args):
    r = zc.verify_half_identity(args.max_l)
    return [r], [], r.passed


_DISPATCH = {
    "compute": _compute,
    "crosscheck": _crosscheck,
    "verify-wz": _verify_wz,
    "verify-lemmas": _verify_lemmas,
    "verify-decomposition": _verify_decomposition,
    "verify-identity": _verify_identity,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    items, notes, ok = _DISPATCH[args.subcommand](args)
    if isinstance(items, list) and not items:
        print("no checks requested", file=stderr)
        return 2
    text = emit_report(items, args.format, notes)
    stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
