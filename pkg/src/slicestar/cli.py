"""Command-line interface.

Verbs:

    eval       evaluate a function descriptor at a quaternion
    log        build a *-logarithm branch, emit samples + round-trip residuals
    root       build an n-th *-root, emit samples + power-back residuals
    bch        admissibility report (and solution) for exp_*(f)*exp_*(g)
    dexp       slice derivative of exp_*(f) at a point, with oracle residual
    lift       lift a sampled path through the covering exponential
    monodromy  monodromy index of a sampled loop
    verify     run seeded property suites, emit a JSON report

Exit codes: 0 all good (verify: all properties pass), 2 malformed
configuration or input files, 3 evaluation outside the declared domain,
1 any other library failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import bch as bchmod
from .covering import lift_path, lifted_exp_preimage, loop_monodromy
from .descriptors import (cq_to_json, lift_point_from_json, lift_point_to_json,
                          load_function, path_from_json, quaternion_from_json,
                          quaternion_to_json)
from .errors import OutOfDomain, SliceStarError
from .slicefn import SliceFunction
from .starlog import LogBranch, star_exp, star_log, star_root
from .suites import SuiteConfig, run_suite

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_DOMAIN = 3


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=1, help="random seed")
    parser.add_argument("--samples", type=int, default=200,
                        help="sample count for grids and suites")
    parser.add_argument("--tol", action="append", default=[],
                        metavar="KEY=VAL", help="tolerance override (repeatable)")
    parser.add_argument("--out", default=None, help="write output to this path")
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json",
                     default="json", help="JSON output (default)")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv",
                     help="CSV output for sample grids")


def _parse_tols(pairs: list[str]) -> dict:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise ValueError(f"--tol expects KEY=VAL, got {item!r}")
        key, _, val = item.partition("=")
        out[key] = float(val)
    return out


def _parse_complex(text: str) -> complex:
    re_s, _, im_s = text.partition(",")
    return complex(float(re_s), float(im_s or 0.0))


def _emit(args, payload, csv_rows=None) -> None:
    if args.fmt == "csv" and csv_rows is not None:
        header, rows = csv_rows
        lines = [",".join(header)]
        lines += [",".join(repr(c) for c in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _function_samples(f: SliceFunction, seed: int, n: int):
    rng = np.random.default_rng(seed)
    return f.domain.sample_points(rng, n)


def cmd_eval(args) -> int:
    f = load_function(args.fn)
    q = quaternion_from_json(json.loads(args.at))
    value = f(q)
    _emit(args, {"fn": args.fn, "at": quaternion_to_json(q),
                 "value": quaternion_to_json(value)})
    return EXIT_OK


def cmd_log(args) -> int:
    f = load_function(args.fn)
    branch = LogBranch(args.h1, args.h2, _parse_complex(args.basepoint))
    g = star_log(f, branch)
    eg = star_exp(g)
    pts = _function_samples(f, args.seed, args.samples)
    samples, rows, residuals = [], [], []
    for z in pts:
        gz = g.stem_at(z)
        r = (eg.stem_at(z) - f.stem_at(z)).norm()
        residuals.append(r)
        samples.append({"z": [z.real, z.imag], "value": cq_to_json(gz),
                        "residual": r})
        rows.append([z.real, z.imag] + [x for c in gz.components()
                                        for x in (c.real, c.imag)] + [r])
    payload = {"branch": {"h1": args.h1, "h2": args.h2,
                          "basepoint": [branch.basepoint.real, branch.basepoint.imag]},
               "samples": samples,
               "roundtrip": {"max": max(residuals), "mean": sum(residuals) / len(residuals)}}
    header = ["z_re", "z_im"] + [f"g{k}_{p}" for k in range(4) for p in ("re", "im")] \
        + ["residual"]
    _emit(args, payload, (header, rows))
    return EXIT_OK


def cmd_root(args) -> int:
    f = load_function(args.fn)
    branch = LogBranch(args.h1, args.h2, _parse_complex(args.basepoint))
    r = star_root(f, args.n, branch)
    back = r.star_pow(args.n)
    pts = _function_samples(f, args.seed, args.samples)
    samples, rows, residuals = [], [], []
    for z in pts:
        rz = r.stem_at(z)
        res = (back.stem_at(z) - f.stem_at(z)).norm()
        residuals.append(res)
        samples.append({"z": [z.real, z.imag], "value": cq_to_json(rz),
                        "residual": res})
        rows.append([z.real, z.imag] + [x for c in rz.components()
                                        for x in (c.real, c.imag)] + [res])
    payload = {"n": args.n,
               "branch": {"h1": args.h1, "h2": args.h2,
                          "basepoint": [branch.basepoint.real, branch.basepoint.imag]},
               "samples": samples,
               "power_back": {"max": max(residuals),
                              "mean": sum(residuals) / len(residuals)}}
    header = ["z_re", "z_im"] + [f"r{k}_{p}" for k in range(4) for p in ("re", "im")] \
        + ["residual"]
    _emit(args, payload, (header, rows))
    return EXIT_OK


def cmd_bch(args) -> int:
    f = load_function(args.f)
    g = load_function(args.g)
    tols = _parse_tols(args.tol)
    report = bchmod.bch_condition(f, g, tol=tols.get("bch", bchmod.TAU_BCH))
    payload = {"admissible": report.admissible, "commuting": report.commuting,
               "lattice_ok": report.lattice_ok, "min_abs": report.min_abs,
               "tol": report.tol,
               "condition": [{"z": [z.real, z.imag], "value": [v.real, v.imag]}
                             for z, v in zip(report.points, report.values)]}
    if report.admissible or report.commuting:
        h = bchmod.bch_combine(f, g, report=report)
        pts = _function_samples(f, args.seed, min(args.samples, 32))
        ef, eg, eh = star_exp(f), star_exp(g), star_exp(h)
        residual = 0.0
        hs = []
        from .cquaternion import cq_mul
        for z in pts:
            hs.append({"z": [z.real, z.imag], "value": cq_to_json(h.stem_at(z))})
            residual = max(residual, (cq_mul(ef.stem_at(z), eg.stem_at(z))
                                      - eh.stem_at(z)).norm())
        payload["h_samples"] = hs
        payload["residual"] = residual
    _emit(args, payload)
    return EXIT_OK


def cmd_dexp(args) -> int:
    f = load_function(args.f)
    q = quaternion_from_json(json.loads(args.at))
    value = bchmod.star_exp_derivative(f, q)
    z = f.slice_point(q)
    oracle = star_exp(f).stem_derivative_at(z)
    residual = (bchmod.star_exp_derivative_stem(f, z) - oracle).norm()
    _emit(args, {"f": args.f, "at": quaternion_to_json(q),
                 "value": quaternion_to_json(value),
                 "oracle_residual": residual})
    return EXIT_OK


def cmd_lift(args) -> int:
    with open(args.path) as fh:
        path = path_from_json(json.load(fh))
    if args.start:
        with open(args.start) as fh:
            start = lift_point_from_json(json.load(fh))
    else:
        first = path.start()
        start = lifted_exp_preimage(first.w0, first.w1, first.s)
    lifted = lift_path(path, start)
    _emit(args, {"samples": [dict(t=s.t, **lift_point_to_json(p))
                             for s, p in zip(path.samples, lifted)]})
    return EXIT_OK


def cmd_monodromy(args) -> int:
    with open(args.path) as fh:
        path = path_from_json(json.load(fh))
    if args.start:
        with open(args.start) as fh:
            start = lift_point_from_json(json.load(fh))
    else:
        first = path.start()
        start = lifted_exp_preimage(first.w0, first.w1, first.s)
    h = loop_monodromy(path, start)
    _emit(args, {"h1": h.h1, "h2": h.h2})
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = SuiteConfig(seed=args.seed, samples=args.samples,
                      tolerances=_parse_tols(args.tol), suite=args.suite)
    report = run_suite(cfg)
    _emit(args, report)
    return EXIT_OK if report["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicestar",
        description="quaternionic slice-regular calculus: *-logs, roots, "
                    "exponential products, derivatives, covering maps")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("eval", help="evaluate a function at a quaternion")
    p.add_argument("--fn", required=True, help="function JSON file")
    p.add_argument("--at", required=True, help="quaternion as JSON [q0,q1,q2,q3]")
    _common(p)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("log", help="*-logarithm branch with residual statistics")
    p.add_argument("--fn", required=True)
    p.add_argument("--h1", type=int, required=True)
    p.add_argument("--h2", type=int, required=True)
    p.add_argument("--basepoint", required=True, metavar="RE,IM")
    _common(p)
    p.set_defaults(run=cmd_log)

    p = sub.add_parser("root", help="n-th *-root with power-back residuals")
    p.add_argument("--fn", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--h1", type=int, default=0)
    p.add_argument("--h2", type=int, default=0)
    p.add_argument("--basepoint", required=True, metavar="RE,IM")
    _common(p)
    p.set_defaults(run=cmd_root)

    p = sub.add_parser("bch", help="exponential-product report and solution")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    _common(p)
    p.set_defaults(run=cmd_bch)

    p = sub.add_parser("dexp", help="derivative of exp_*(f) at a point")
    p.add_argument("--f", required=True)
    p.add_argument("--at", required=True)
    _common(p)
    p.set_defaults(run=cmd_dexp)

    p = sub.add_parser("lift", help="lift a sampled path through the covering")
    p.add_argument("--path", required=True)
    p.add_argument("--start", default=None)
    _common(p)
    p.set_defaults(run=cmd_lift)

    p = sub.add_parser("monodromy", help="monodromy index of a sampled loop")
    p.add_argument("--path", required=True)
    p.add_argument("--start", default=None)
    _common(p)
    p.set_defaults(run=cmd_monodromy)

    p = sub.add_parser("verify", help="run seeded property suites")
    p.add_argument("--suite", default="all",
                   choices=("algebra", "covering", "log", "bch", "derivative", "all"))
    _common(p)
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except OutOfDomain as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SliceStarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
