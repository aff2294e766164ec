"""Command-line surface: evaluate, check, compose, run the theorem suite, render.

Exit codes are uniform across subcommands: 0 for success or membership, 1 for
a semantic negative (membership fails, a theorem check fails), 2 for any
validation error, with a diagnostic naming the violated precondition.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from .conditions import LimitCondition
from .errors import SiglimError
from .files import (
    format_time,
    model_from_doc,
    model_to_doc,
    parse_time,
    read_model_file,
    read_signal_file,
    write_model_file,
    write_signal_file,
)
from .inertial import AicParams, aic_contains
from .props import GenConfig, describe, run_theorem, theorem_ids
from .signals import Signal, Time, breakpoints, first_one_time, signal_leq


def _read_inputs(paths: list[str]) -> tuple[Signal, ...]:
    return tuple(read_signal_file(p) for p in paths)


def _numbered(path: str, index: int) -> str:
    stem, ext = os.path.splitext(path)
    return f"{stem}-{index + 1}{ext or '.json'}"


# --- eval ----------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    model = read_model_file(args.model)
    u = _read_inputs(args.inputs)
    if args.witness is not None:
        if args.witness < 1:
            print("ValidationError: --witness needs a positive count", file=sys.stderr)
            return 2
        found: list[Signal] = []
        for round_ in range(5):
            for x in model.sample(u, args.witness, args.seed + round_):
                if x not in found:
                    found.append(x)
            if len(found) >= args.witness:
                break
        found = found[: args.witness]
        for k, x in enumerate(found):
            path = args.out if args.witness == 1 else _numbered(args.out, k)
            write_signal_file(path, x)
            print(path)
        return 0
    if not model.meta.get("deterministic"):
        print(
            "NondeterministicModel: this model admits several outputs per input; "
            "pass --witness n to sample members",
            file=sys.stderr,
        )
        return 2
    x = model.sample(u, 1, args.seed)[0]
    write_signal_file(args.out, x)
    print(args.out)
    return 0


# --- check ---------------------------------------------------------------------

def _envelope_violation_time(model: LimitCondition, u, x: Signal) -> Time | None:
    env = model.meta.get("envelopes")
    if env is None:
        return None
    lo, hi = env(u)
    viol = (lo & ~x) | (x & ~hi)
    return first_one_time(viol)


def _dwell_violation_time(x: Signal, a: AicParams) -> Time | None:
    ts = [t for t, _ in x.transitions]
    for (t1, v1), t2 in zip(x.transitions, ts[1:]):
        need = a.delta_r if v1 == 1 else a.delta_f
        if t2 - t1 <= need:
            return t2
    return None


def cmd_check(args: argparse.Namespace) -> int:
    x = read_signal_file(args.candidate)
    if args.model is None and args.aic is None:
        print("ValidationError: nothing to check; give --model and/or --aic",
              file=sys.stderr)
        return 2
    if args.model is not None:
        model = read_model_file(args.model)
        u = _read_inputs(args.inputs)
        if model.contains(u, x) != 1:
            t = _envelope_violation_time(model, u, x)
            if t is None and "aic" in model.meta:
                t = _dwell_violation_time(x, model.meta["aic"])
            if t is None:
                pts = breakpoints(*(list(u) + [x]))
                t = (pts[-1] + 1) if pts else Fraction(0)
            print(f"violation at t={format_time(t)}")
            return 1
    if args.aic is not None:
        a = AicParams(parse_time(args.aic[0]), parse_time(args.aic[1]))
        if aic_contains(x, a) != 1:
            t = _dwell_violation_time(x, a)
            assert t is not None
            print(f"violation at t={format_time(t)}")
            return 1
    print("ok")
    return 0


# --- compose -------------------------------------------------------------------

def cmd_compose(args: argparse.Namespace) -> int:
    outer = read_model_file(args.outer)
    inners = [read_model_file(p) for p in args.inners]
    if len(inners) != outer.input_arity:
        print(
            f"ArityMismatch: outer model has arity {outer.input_arity} "
            f"but {len(inners)} inner models were given",
            file=sys.stderr,
        )
        return 2
    kinds = {j.kind for j in inners}
    if kinds != {outer.kind} or outer.kind not in ("flc", "blc", "bailc"):
        print(
            f"KindMismatch: no closed form composes outer kind {outer.kind!r} "
            f"with inner kinds {sorted(kinds)}",
            file=sys.stderr,
        )
        return 2
    if outer.kind == "flc":
        delays = {j.meta["delay"] for j in inners}
        if len(delays) != 1:
            print("KindMismatch: inner fixed delays differ; no closed form",
                  file=sys.stderr)
            return 2
        from .boolfn import fn_compose
        from .inertial import flc

        composed = flc(fn_compose(outer.meta["fn"], [j.meta["fn"] for j in inners]),
                       outer.meta["delay"] + delays.pop())
    elif outer.kind == "blc":
        params = {j.meta["params"] for j in inners}
        if len(params) != 1:
            print("KindMismatch: inner window parameters differ; no closed form",
                  file=sys.stderr)
            return 2
        from .bounded import blc_compose

        composed = blc_compose(outer.f, outer.g, outer.meta["params"],
                               [(j.f, j.g) for j in inners], params.pop())
    else:
        params = {j.meta["params"] for j in inners}
        aics = {j.meta["aic"] for j in inners}
        if len(params) != 1 or len(aics) != 1:
            print("KindMismatch: inner parameters differ; no closed form",
                  file=sys.stderr)
            return 2
        from .inertial import bailc_compose

        composed = bailc_compose(outer.f, outer.g, outer.meta["params"],
                                 outer.meta["aic"], [(j.f, j.g) for j in inners],
                                 params.pop(), aics.pop())
    write_model_file(args.out, composed)
    print(args.out)
    return 0


# --- props ---------------------------------------------------------------------

def cmd_props(args: argparse.Namespace) -> int:
    cfg = GenConfig(seed=args.seed, cases=args.cases)
    ids = [args.only] if args.only else list(theorem_ids())
    if args.only:
        describe(args.only)
    failed = False
    for tid in ids:
        report = run_theorem(tid, cfg)
        print(f"{tid} {report.cases_run} {report.status}")
        if report.failures:
            failed = True
            path = f"props-{tid.replace('.', '_')}-counterexample.json"
            with open(path, "w") as fh:
                json.dump(
                    {
                        "theorem": tid,
                        "description": describe(tid),
                        "seed": cfg.seed,
                        "cases": cfg.cases,
                        "failures": report.failures[:10],
                    },
                    fh, indent=2,
                )
                fh.write("\n")
            print(f"  counterexample written to {path}")
    return 1 if failed else 0


# --- render --------------------------------------------------------------------

def _render_ascii(names: list[str], xs: list[Signal], lo: Fraction, hi: Fraction) -> str:
    cols = [lo] + [t for t in breakpoints(*xs) if lo < t <= hi]
    width = max(len(n) for n in names + ["time"])
    cells = [format_time(t) for t in cols]
    lines = ["  ".join([f"{'time':<{width}}"] + cells)]
    for name, x in zip(names, xs):
        row = [f"{x.value_at(t)!s:>{len(c)}}" for t, c in zip(cols, cells)]
        lines.append("  ".join([f"{name:<{width}}"] + row))
    return "\n".join(lines)


def _render_vcd(names: list[str], xs: list[Signal], lo: Fraction, hi: Fraction) -> str:
    times = sorted({t for x in xs for t in (p for p, _ in x.transitions) if lo <= t <= hi})
    scale = 1
    for t in times:
        scale = scale * t.denominator // math.gcd(scale, t.denominator)
    ticks = [t * scale for t in times]
    offset = -min([tk for tk in ticks if tk < 0], default=0)
    out = []
    if scale == 1:
        out.append("$timescale 1 s $end")
    else:
        out.append("$timescale 1 ns $end")
        out.append(f"$comment one tick is 1/{scale} s $end")
    if offset:
        out.append(f"$comment ticks shifted by +{offset} $end")
    out.append("$scope module signals $end")
    idents = [chr(33 + k) for k in range(len(xs))]
    for name, ident in zip(names, idents):
        out.append(f"$var wire 1 {ident} {name} $end")
    out += ["$upscope $end", "$enddefinitions $end", "$dumpvars"]
    for x, ident in zip(xs, idents):
        out.append(f"{x.value_at(lo)}{ident}")
    out.append("$end")
    for t in times:
        out.append(f"#{t * scale + offset}")
        for x, ident in zip(xs, idents):
            if t in dict(x.transitions):
                out.append(f"{dict(x.transitions)[t]}{ident}")
    return "\n".join(out) + "\n"


def cmd_render(args: argparse.Namespace) -> int:
    xs = list(_read_inputs(args.inputs))
    lo, hi = parse_time(args.frm), parse_time(args.to)
    if not lo < hi:
        print("EmptyRange: --from must be strictly below --to", file=sys.stderr)
        return 2
    names = [os.path.splitext(os.path.basename(p))[0] for p in args.inputs]
    print(_render_ascii(names, xs, lo, hi))
    if args.vcd:
        with open(args.vcd, "w") as fh:
            fh.write(_render_vcd(names, xs, lo, hi))
        print(f"vcd written to {args.vcd}")
    return 0


# --- dispatch ------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="siglim",
        description="evaluate, check and compose switching-time models "
                    "over exact rational time",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="run a model on inputs and write its output")
    p.add_argument("model", help="model file")
    p.add_argument("inputs", nargs="+", help="one signal file per model input")
    p.add_argument("--out", required=True, help="output signal file")
    p.add_argument("--witness", type=int, default=None, metavar="N",
                   help="sample N admissible outputs instead of requiring determinism")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", help="decide membership of a candidate output")
    p.add_argument("--model", default=None, help="model file")
    p.add_argument("--input", dest="inputs", action="append", default=[],
                   help="signal file, one per model input (repeatable)")
    p.add_argument("--candidate", required=True, help="candidate output signal file")
    p.add_argument("--aic", nargs=2, default=None, metavar=("DR", "DF"),
                   help="additionally require dwell times after rises and falls")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("compose", help="closed-form serial composition")
    p.add_argument("outer", help="outer model file")
    p.add_argument("inners", nargs="+", help="one inner model file per outer input")
    p.add_argument("--out", required=True, help="composed model file")
    p.set_defaults(run=cmd_compose)

    p = sub.add_parser("props", help="run the theorem suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=int, default=500)
    p.add_argument("--only", default=None, metavar="ID", help="run a single check")
    p.set_defaults(run=cmd_props)

    p = sub.add_parser("render", help="ASCII waveform table, optionally a VCD dump")
    p.add_argument("inputs", nargs="+", help="signal files")
    p.add_argument("--from", dest="frm", required=True, help="start time, p or p/q")
    p.add_argument("--to", required=True, help="end time, p or p/q")
    p.add_argument("--vcd", default=None, metavar="PATH", help="also write a VCD file")
    p.set_defaults(run=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.run(args)
    except SiglimError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"FileError: {e}", file=sys.stderr)
        return 2


def entrypoint() -> None:  # pragma: no cover
    sys.exit(main())
