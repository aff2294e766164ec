#!/usr/bin/env python3
"""Run the theorem suite and print one line per check.

Exits 1 if any check reports failures.  Counterexamples replay with
--replay ID CASE, which reruns a single case and prints its message.
"""
import argparse
import sys
from dataclasses import replace

from siglim import GenConfig, replay_case, run_all, run_theorem, theorem_ids


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--cases", type=int, default=500)
    ap.add_argument("--only", default=None, metavar="ID",
                    help="run a single check (e.g. 4.8)")
    ap.add_argument("--replay", nargs=2, default=None, metavar=("ID", "CASE"),
                    help="rerun one case of one check and print its message")
    ap.add_argument("--max-failures", type=int, default=5,
                    help="counterexample lines to print per check")
    args = ap.parse_args(argv)

    cfg = replace(GenConfig(), seed=args.seed, cases=args.cases)
    if args.replay is not None:
        tid, case = args.replay[0], int(args.replay[1])
        msg = replay_case(tid, cfg, case)
        print(f"{tid} case {case}: {'pass' if msg is None else msg}")
        return 0 if msg is None else 1

    if args.only is not None:
        reports = [run_theorem(args.only, cfg)]
    else:
        reports = run_all(cfg)

    width = max(len(t) for t in theorem_ids())
    bad = 0
    for r in reports:
        print(f"{r.theorem_id:<{width}}  {r.cases_run:4d} cases  {r.status}")
        for msg in r.failures[: args.max_failures]:
            print(f"    {msg}")
        bad += len(r.failures)
    if bad:
        print(f"{bad} failing case(s)")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
