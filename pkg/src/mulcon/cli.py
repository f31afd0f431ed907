"""Command-line front end.

Exit codes: 0 when every certificate/check passes, 2 when any is
inconclusive or fails, 64 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .certify import generic_rank_certificate
from .cohomology import cohomology_matrix, h0_h1_routed, make_curve, random_h_coeffs
from .exceptions import DomainError
from .fields import QQ, FieldDescriptor
from .forms import build_mulcon_matrix, grid_curve_form, random_biform, smoothness_certificate
from .grid import Grid, construct_Z, verify_Z
from .reduction import classify, is_admissible

EXIT_OK = 0
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

CSV_COLUMNS = ["a", "b", "r", "t", "prime", "seed", "rank", "target", "verdict", "ms"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> range:
    """``"3"`` or inclusive ``"2:5"``; ``"5:2"`` is empty."""
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None


def cell_seed(cell: tuple[int, ...], base_seed: int) -> int:
    """Stable 64-bit seed for a parameter cell."""
    key = json.dumps([list(cell), base_seed]).encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cells_to_csv(cells: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, CSV_COLUMNS, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for c in cells:
        w.writerow({k: ("" if c.get(k) is None else c.get(k)) for k in CSV_COLUMNS})
    return buf.getvalue()


def _field(args) -> FieldDescriptor:
    if getattr(args, "rational", False):
        return QQ
    if args.prime is not None:
        return FieldDescriptor.prime(args.prime)
    return FieldDescriptor.default()


def _emit(args, report: dict, cells_for_csv: list[dict] | None = None) -> None:
    if args.format == "csv":
        text = cells_to_csv(cells_for_csv if cells_for_csv is not None else report["cells"])
    else:
        text = dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _meta(command: str, config: dict, wall: float | None) -> dict:
    return {"version": __version__, "command": command, "config": config, "wall_time": wall}


@dataclass(frozen=True)
class _CellJob:
    a: int
    b: int
    r: int
    t: int
    m: int
    n: int
    p: int | None
    trials: int
    seed: int
    timing: bool


def _run_cell(job: _CellJob) -> dict:
    start = time.perf_counter()
    out = {
        "a": job.a, "b": job.b, "r": job.r, "t": job.t, "m": job.m, "n": job.n,
        "prime": job.p, "seed": job.seed,
    }
    try:
        cert = generic_rank_certificate(
            job.a, job.b, job.r, job.t, job.m, job.n,
            field=FieldDescriptor(job.p), max_trials=job.trials, base_seed=job.seed,
        )
        out.update(
            prime=cert.field.p,
            rank=cert.achieved_rank,
            target=cert.target_rank,
            verdict=cert.verdict,
            witness_seed=cert.witness_seed,
            seeds_tried=list(cert.seeds_tried),
            escalated=cert.escalated,
        )
    except Exception as exc:  # recorded per cell, never aborts a scan
        out.update(rank=None, target=None, verdict="error", error=f"{type(exc).__name__}: {exc}")
    out["ms"] = round((time.perf_counter() - start) * 1000, 3) if job.timing else None
    return out


def run_scan(
    a_range, b_range, r_range, t_range=None, t_offset=None, m=1, n=1,
    field: FieldDescriptor | None = None, trials=3, base_seed=0, jobs=1, timing=False,
) -> dict:
    """Certify every cell of the grid of parameters; returns the report dict.

    ``t_offset`` gives t relative to b; otherwise ``t_range`` is absolute.
    Cells with t < b are skipped.
    """
    field = field or FieldDescriptor.default()
    start = time.perf_counter()
    work = []
    for a in a_range:
        for b in b_range:
            ts = range(b + t_offset.start, b + t_offset.stop) if t_offset is not None else t_range
            for r in r_range:
                for t in ts:
                    if t < b or r < 0:
                        continue
                    seed = cell_seed((a, b, r, t, m, n), base_seed)
                    work.append(_CellJob(a, b, r, t, m, n, field.p, trials, seed, timing))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_run_cell, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        cells = [_run_cell(w) for w in work]
    cells.sort(key=lambda c: (c["a"], c["b"], c["r"], c["t"], c["m"], c["n"]))
    config = {
        "a": [a_range.start, a_range.stop - 1],
        "b": [b_range.start, b_range.stop - 1],
        "r": [r_range.start, r_range.stop - 1],
        "t": None if t_range is None else [t_range.start, t_range.stop - 1],
        "t_offset": None if t_offset is None else [t_offset.start, t_offset.stop - 1],
        "m": m, "n": n, "field": field.to_json(), "trials": trials, "base_seed": base_seed,
    }
    wall = round(time.perf_counter() - start, 3) if timing else None
    return {"meta": _meta("scan", config, wall), "cells": cells}


def _exit_for(cells: list[dict]) -> int:
    return EXIT_OK if all(c.get("verdict") == "certified" for c in cells) else EXIT_INCONCLUSIVE


def cmd_certify(args) -> int:
    field = _field(args)
    if args.t < args.b:
        raise UsageError(f"t = {args.t} must be >= b = {args.b}")
    if args.r < 0:
        raise UsageError("r must be >= 0")
    start = time.perf_counter()
    cert = generic_rank_certificate(
        args.a, args.b, args.r, args.t, args.m, args.n,
        field=field, max_trials=args.trials, base_seed=args.seed,
    )
    cell = cert.to_json()
    cell.update(prime=cert.field.p, seed=args.seed, rank=cert.achieved_rank,
                target=cert.target_rank)
    cell["ms"] = round((time.perf_counter() - start) * 1000, 3) if args.timing else None
    if args.export_matrix:
        seed = cert.witness_seed if cert.witness_seed is not None else cert.seeds_tried[-1]
        sigma = random_biform(args.a, args.b, cert.field, seed, (args.m, args.n))
        build_mulcon_matrix(sigma, args.r, args.t).write_matrix_market(args.export_matrix)
    config = {k: getattr(args, k) for k in ("a", "b", "r", "t", "m", "n", "trials", "seed")}
    config["field"] = field.to_json()
    _emit(args, {"meta": _meta("certify", config, None), "cells": [cell]})
    return _exit_for([cell])


def cmd_scan(args) -> int:
    if args.t is None and args.t_offset is None:
        raise UsageError("scan needs --t or --t-offset")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    report = run_scan(
        args.a, args.b, args.r, args.t, args.t_offset, args.m, args.n,
        _field(args), args.trials, args.seed, args.jobs, args.timing,
    )
    _emit(args, report)
    return _exit_for(report["cells"])


def cmd_cohomology(args) -> int:
    field = _field(args)
    F = make_curve(args.curve, args.a, args.b, field, args.seed)
    res = h0_h1_routed(F, args.h, args.k)
    red = classify(args.a, args.b, args.h, args.k)
    cell = {
        "a": args.a, "b": args.b, "h": args.h, "k": args.k, "curve": args.curve,
        "seed": args.seed, "field": field.to_json(), **res.to_json(),
        "theorem_holds": res.h0 * res.h1 == 0, "classification": red.to_json(),
    }
    if args.export_matrix:
        if is_admissible(args.a, args.b, args.h, args.k):
            mat = cohomology_matrix(F, args.h, args.k)
        else:
            mat = cohomology_matrix(F.swap(), args.k, args.h)
        mat.write_matrix_market(args.export_matrix)
    config = {k: getattr(args, k) for k in ("a", "b", "h", "k", "curve", "seed")}
    config["field"] = field.to_json()
    _emit(args, {"meta": _meta("cohomology", config, None), "cells": [cell]})
    return EXIT_OK if res.euler_check else EXIT_INCONCLUSIVE


def cmd_reduce(args) -> int:
    red = classify(args.a, args.b, args.h, args.k)
    cell = red.to_json()
    report = {"meta": _meta("reduce", {k: getattr(args, k) for k in "abhk"}, None), "cells": [cell]}
    _emit(args, report)
    return EXIT_OK


def cmd_grid_curve(args) -> int:
    field = _field(args)
    a, b = args.a, args.b
    lam = args.lam or list(range(1, a + 1))
    mu = args.mu or list(range(1, b + 1))
    hs = args.hcoeffs or random_h_coeffs(a, field, args.seed)
    F = grid_curve_form(a, b, lam, mu, hs, field)
    grid = Grid(a, b, tuple(lam), tuple(mu), field)
    vanishes = all(F.evaluate(p) == 0 for p in grid.points)
    cell = {
        "a": a, "b": b, "lambda": [str(v) for v in grid.lam], "mu": [str(v) for v in grid.mu],
        "h_coeffs": [str(field(c)) for c in hs], "field": field.to_json(),
        "terms": {str(mono): str(c) for mono, c in sorted(F.terms.items(), reverse=True)},
        "vanishes_on_grid": vanishes,
        "smooth_on_chart_certified": smoothness_certificate(a, b, lam, mu, hs, field),
    }
    config = {"a": a, "b": b, "seed": args.seed, "field": field.to_json()}
    _emit(args, {"meta": _meta("grid-curve", config, None), "cells": [cell]})
    return EXIT_OK if vanishes else EXIT_INCONCLUSIVE


def cmd_verify_z(args) -> int:
    field = _field(args) if (args.prime is not None or args.rational) else QQ
    grid = Grid.make(args.a, args.b, field, args.seed if field.p is not None else None)
    z = construct_Z(grid, args.alpha, args.beta)
    ok = verify_Z(z)
    cell = {
        "a": args.a, "b": args.b, "alpha": args.alpha, "beta": args.beta,
        "alpha_hat": z.alpha_hat, "beta_hat": z.beta_hat, "size": len(z),
        "indices": sorted([list(ij) for ij in z.indices]), "verified": ok,
    }
    config = {"a": args.a, "b": args.b, "alpha": args.alpha, "beta": args.beta,
              "field": field.to_json()}
    _emit(args, {"meta": _meta("verify-z", config, None), "cells": [cell]})
    return EXIT_OK if ok else EXIT_INCONCLUSIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mulcon", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, seed_default=0):
        p.add_argument("--prime", type=int, default=None,
                       help="prime field characteristic (default $MULCON_PRIME or 65537)")
        p.add_argument("--rational", action="store_true", help="work over QQ")
        p.add_argument("--seed", type=int, default=seed_default)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("certify", help="certify generic maximal rank for one cell")
    for name in ("a", "b", "r", "t"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--export-matrix", default=None)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="certify every cell of a parameter box")
    for name in ("a", "b", "r"):
        p.add_argument(f"--{name}", type=parse_range, required=True)
    p.add_argument("--t", type=parse_range, default=None)
    p.add_argument("--t-offset", type=parse_range, default=None, help="t - b range")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true")
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("cohomology", help="h0 and h1 of O_C(h, k)")
    for name in ("a", "b", "h", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--curve", choices=("random", "grid", "line-degenerate"), default="random")
    p.add_argument("--export-matrix", default=None)
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("reduce", help="classify (a, b, h, k) into case A / case B")
    for name in ("a", "b", "h", "k"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("grid-curve", help="build and check a curve through the grid")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--lam", type=int, nargs="+", default=None)
    p.add_argument("--mu", type=int, nargs="+", default=None)
    p.add_argument("--hcoeffs", type=int, nargs="+", default=None,
                   help="coefficients of h(u), constant term first")
    common(p)
    p.set_defaults(func=cmd_grid_curve)

    p = sub.add_parser("verify-z", help="construct and verify the subset Z of the grid")
    for name in ("a", "b", "alpha", "beta"):
        p.add_argument(f"--{name}", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify_z)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"mulcon {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
