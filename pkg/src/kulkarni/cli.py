"""Command line interface: classify, census, slice, verify."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .census import CensusConfig, run_census
from .hermitian import DEFAULT_TOL, f_value, herm_norm
from .limit_set import classify
from .matrix_io import write_matrix_csv
from .projective import parse_point
from .raster import SliceSpec, render_slice
from .verify import verify_suite


def _point(text: str, n: int, flag: str):
    z = parse_point(text)
    if z.shape != (n + 1,):
        raise ValueError(f"{flag} needs n+1 = {n + 1} coordinates, got {z.shape[0]}")
    return z


def cmd_classify(args) -> int:
    z = _point(args.point, args.n, "--point")
    label = classify(z, args.m, args.tol)
    print(label.value)
    print(f"f = {float(f_value(z))!r}")
    print(f"<z,z> = {float(herm_norm(z))!r}")
    return 0


def cmd_census(args) -> int:
    cfg = CensusConfig(
        m=args.m,
        n=args.n,
        samples=args.samples,
        edge_candidates=args.edges,
        segment_steps=args.steps,
        seed=args.seed,
        tol=args.tol,
    )
    report = run_census(cfg)
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n")
    print(
        f"components={report.component_count} sizes={report.component_sizes[:8]} "
        f"cross_label_edges={report.cross_label_edges} nodes={report.nodes}"
    )
    if not args.out:
        print(text)
    return 0


def cmd_slice(args) -> int:
    spec = SliceSpec(
        m=args.m,
        n=args.n,
        center=_point(args.center, args.n, "--center"),
        dir_u=_point(args.dir_u, args.n, "--dir-u"),
        dir_v=_point(args.dir_v, args.n, "--dir-v"),
        half_width=args.half_width,
        resolution=args.res,
        out=args.out,
        fmt=args.format,
        tol=args.tol,
    )
    result = render_slice(spec)
    print(f"wrote {args.res}x{args.res} {args.format} slice to {args.out}")
    return 0 if result.codes.size else 1


def cmd_verify(args) -> int:
    report = verify_suite(args.trials, args.seed, args.tol)
    print(report.to_text())
    if args.out:
        Path(args.out).write_text(report.to_json() + "\n")
    if args.dump_dir:
        out = Path(args.dump_dir)
        out.mkdir(parents=True, exist_ok=True)
        for r in report.results:
            if r.witness is not None:
                write_matrix_csv(out / f"{r.name}.csv", r.witness)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kulkarni",
        description="Kulkarni limit set of SO+(m,1) acting on complex projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def dims(p, default_m=None):
        p.add_argument("--m", type=int, required=default_m is None, default=default_m)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = sub.add_parser("classify", help="label a single point")
    dims(p)
    p.add_argument("--point", required=True, help='JSON [[re, im], ...] with n+1 entries')
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="Monte Carlo component census of Omega")
    dims(p)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--edges", type=int, default=20000, help="edge candidates")
    p.add_argument("--steps", type=int, default=64, help="classification steps per segment")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("slice", help="rasterize a real 2-plane slice")
    dims(p)
    p.add_argument("--center", required=True)
    p.add_argument("--dir-u", required=True)
    p.add_argument("--dir-v", required=True)
    p.add_argument("--half-width", type=float, default=1.0)
    p.add_argument("--res", type=int, default=64)
    p.add_argument("--format", choices=("ppm", "csv"), default="ppm")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_slice)

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--dump-dir", help="write worst-case matrices as CSV files here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
