"""``staircase`` command line.

Exit codes: 0 success, 1 mismatch or domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

from . import bijections as bj
from . import formulas as fm
from . import oracle as orc
from . import render as rd
from . import search as sr
from . import verify as vf
from .path_core import LatticePath, Point, parse_binary, parse_path

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_range(text: str) -> list[int]:
    """``3`` | ``1..4`` | ``1,2,5``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N, A..B or a comma list, got {text!r}") from None


def _assignments(items: list[str], what: str) -> dict[str, int]:
    out = {}
    for item in items:
        for part in item.split(","):
            key, sep, val = part.partition("=")
            if not sep:
                raise UsageError(f"{what}: expected key=value, got {part!r}")
            try:
                out[key.strip()] = int(val)
            except ValueError:
                raise UsageError(f"{what}: {key} must be an integer, got {val!r}") from None
    return out


# ---------------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    fn, names = fm.FORMULAS[args.formula]
    params = _assignments(args.params, "count")
    missing = [n for n in names if n not in params]
    extra = sorted(set(params) - set(names))
    if missing or extra:
        raise UsageError(f"{args.formula} takes {' '.join(names)}; missing {missing}, unexpected {extra}")
    print(fn(**{n: params[n] for n in names}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

GRID_PARAMS = sorted({p for s in vf.SUITES.values() for p in s.ranges})


def cmd_verify(args) -> int:
    suite = vf.SUITES[args.suite]
    overrides = {}
    for p in GRID_PARAMS:
        val = getattr(args, p)
        top = getattr(args, f"max_{p}")
        if p not in suite.ranges:
            if val is not None or top is not None:
                raise UsageError(f"suite {args.suite} has no parameter {p}")
            continue
        if val is not None:
            overrides[p] = val
        elif top is not None:
            overrides[p] = range(min(suite.ranges[p]), top + 1)
    include = [_assignments([inc], "--include") for inc in args.include]
    try:
        points = vf.grid(args.suite, overrides, include)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = vf.verify(args.suite, points, jobs=args.jobs)
    for r in reports:
        if args.format == "jsonl":
            print(r.to_json())
        else:
            print(_text_row(r))
    ok, gaps, bad = vf.summarize(reports, args.allow_known_gaps)
    if args.format == "text":
        print(f"# {args.suite}: {len(reports)} reports, {ok} match, {gaps} known gap, {bad} mismatch")
    if args.plot:
        rd.plot_reports(reports, args.plot, fmt="png" if args.plot.endswith(".png") else "svg")
    return EXIT_OK if bad == 0 else EXIT_FAIL


def _text_row(r: vf.VerificationReport) -> str:
    params = " ".join(f"{k}={v}" for k, v in r.params.items())
    status = "OK" if r.match else ("GAP" if r.known_gap else "MISMATCH")
    return f"{status:8} {r.suite:18} {params:28} {r.formula_value!s:>12} {r.oracle_value!s:>12}  {r.note}"


# ---------------------------------------------------------------------------
# biject


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--map {args.map} needs --{n}")
    return [getattr(args, n) for n in names]


def _one_path(args) -> LatticePath:
    if len(args.inputs) != 1:
        raise UsageError(f"--map {args.map} takes one path literal")
    return parse_path(args.inputs[0])


def _biject_interchange(args):
    s, t, n = _need(args, "s", "t", "n")
    pi = _one_path(args)
    out = bj.interchange(pi, s, t, n, args.part)
    back = lambda: bj.interchange_inverse(out, s, t, n, part=args.part)  # noqa: E731
    return str(out), back, pi


def _biject_interchange_inv(args):
    s, t, n = _need(args, "s", "t", "n")
    pp = _one_path(args)
    out = bj.interchange_inverse(pp, s, t, n, args.j, args.part)
    return str(out), lambda: bj.interchange(out, s, t, n, args.part), pp


def _biject_encode(args):
    s, t, n = _need(args, "s", "t", "n")
    pp = _one_path(args)
    alpha, beta = bj.encode_alpha_beta(pp, s, t, n, args.j, args.part)
    j = args.j if args.j is not None else bj._infer_j(pp, t, args.part)
    return f"{alpha} {beta}", lambda: bj.decode_alpha_beta(alpha, beta, s, t, n, j, args.part), pp


def _biject_decode(args):
    s, t, n, j = _need(args, "s", "t", "n", "j")
    if len(args.inputs) != 2:
        raise UsageError("--map decode takes two binary literals: alpha beta")
    alpha, beta = (parse_binary(x) for x in args.inputs)
    out = bj.decode_alpha_beta(alpha, beta, s, t, n, j, args.part)
    return str(out), lambda: bj.encode_alpha_beta(out, s, t, n, j, args.part), (alpha, beta)


def _biject_raney(variant):
    def run(args):
        if variant is bj.RaneyVariant.BINARY:
            s, n = _need(args, "s", "n")
            t = None
            if len(args.inputs) != 1:
                raise UsageError("--map raney-bin takes one binary literal")
            obj = parse_binary(args.inputs[0])
        else:
            s, t, n = _need(args, "s", "t", "n")
            obj = _one_path(args)
        idx, shifted = bj.raney_unique_shift(obj, variant, s, t, n)
        return f"shift {idx}, {shifted}", None, None
    return run


def _biject_trisect(args):
    (k,) = _need(args, "k")
    tri = bj.trisect(_one_path(args), k)
    if tri is None:
        return "failure (trailing east run of length >= k+1)", None, None
    return f"a={tri.a} middle={tri.middle} b={tri.b}", None, None


def _biject_phi(args):
    k, n = _need(args, "k", "n")
    p = _one_path(args)
    out = bj.phi(p, k, n)
    return str(out), lambda: bj.phi_inverse(out, k, n), p


def _biject_phi_inv(args):
    k, n = _need(args, "k", "n")
    q = _one_path(args)
    out = bj.phi_inverse(q, k, n)
    return str(out), lambda: bj.phi(out, k, n), q


def _biject_move_norths(args):
    p = _one_path(args)
    if p.start == Point(0, 0) and not args.inputs[0].startswith("@"):
        p = LatticePath(Point(1, 0), p.steps)  # bare literal means the (1,0) start
    out = bj.move_norths_to_end(p)
    return str(out), lambda: bj.move_norths_to_front(out), p


MAPS: dict[str, Callable] = {
    "interchange": _biject_interchange,
    "interchange-inv": _biject_interchange_inv,
    "encode": _biject_encode,
    "decode": _biject_decode,
    "raney-s1": _biject_raney(bj.RaneyVariant.S1),
    "raney-s2": _biject_raney(bj.RaneyVariant.S2),
    "raney-bin": _biject_raney(bj.RaneyVariant.BINARY),
    "trisect": _biject_trisect,
    "phi": _biject_phi,
    "phi-inv": _biject_phi_inv,
    "move-norths": _biject_move_norths,
}


def cmd_biject(args) -> int:
    text, back, original = MAPS[args.map](args)
    print(text)
    if args.check:
        if back is None:
            print("round-trip: not applicable")
        else:
            again = back()
            if again != original:
                print(f"round-trip FAILED: got {again}")
                return EXIT_FAIL
            print("round-trip OK")
    return EXIT_OK


# ---------------------------------------------------------------------------
# render, search


def cmd_render(args) -> int:
    path = parse_path(args.path)
    boundary = rd.parse_boundary(args.boundary) if args.boundary else None
    if args.format == "ascii":
        art = rd.render_ascii(path, boundary, args.k)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(art)
        else:
            sys.stdout.write(art)
        return EXIT_OK
    if not args.out:
        raise UsageError(f"--format {args.format} needs --out")
    rd.render_figure(path, args.out, boundary, args.k, args.format)
    print(args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        x, y = (int(v) for v in args.origin.split(","))
        pattern = sr.BoundaryPattern(Point(x, y), args.period)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    sys.stdout.write(sr.format_result(sr.search(pattern, args.max_n, args.coef_bound)))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="staircase", description="Exact counts and bijections for lattice "
                                 "paths avoiding periodic staircase boundaries.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="evaluate a closed-form count")
    c.add_argument("--formula", required=True, choices=sorted(fm.FORMULAS))
    c.add_argument("params", nargs="*", metavar="key=value")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="compare formulas and bijections against the oracle")
    v.add_argument("--suite", required=True, choices=list(vf.SUITES))
    for p in GRID_PARAMS:
        v.add_argument(f"--{p}", type=_int_range, metavar="RANGE", help=f"values of {p}: N, A..B or A,B,...")
        v.add_argument(f"--max-{p}", type=int, metavar="N", help=f"upper bound for {p}")
    v.add_argument("--include", action="append", default=[], metavar="k=v,...",
                   help="run this extra grid point (alone unless ranges are also given)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("text", "jsonl"), default="text")
    v.add_argument("--allow-known-gaps", action="store_true")
    v.add_argument("--plot", metavar="FILE", help="also write a formula-vs-oracle figure (.svg or .png)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("biject", help="apply one of the constructive maps")
    b.add_argument("--map", required=True, choices=list(MAPS))
    for p in ("s", "t", "n", "j", "k"):
        b.add_argument(f"--{p}", type=int)
    b.add_argument("--part", type=int, default=1, choices=(1, 2))
    b.add_argument("--check", action="store_true", help="apply the inverse and confirm the round trip")
    b.add_argument("inputs", nargs="+", metavar="LITERAL")
    b.set_defaults(func=cmd_biject)

    r = sub.add_parser("render", help="draw a path over a boundary")
    r.add_argument("path", metavar="PATH", help='path literal, e.g. "@1,0:ENNE" or "" for the empty path')
    r.add_argument("--boundary", help="A:s,t | B:s | line:k | generic:x,y:PERIOD")
    r.add_argument("--format", choices=rd.FORMATS, default="ascii")
    r.add_argument("--out")
    r.add_argument("--k", type=int, help="mark waypoints on x = ky + 1")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("search", help="fit counts for a generic periodic boundary")
    s.add_argument("--origin", required=True, metavar="x,y")
    s.add_argument("--period", required=True)
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--coef-bound", type=int, default=10)
    s.set_defaults(func=cmd_search)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, fm.PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (bj.DomainError, bj.RaneyViolation, orc.GuardExceeded, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:  # malformed literals
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
