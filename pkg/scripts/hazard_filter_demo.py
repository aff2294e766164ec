#!/usr/bin/env python3
"""Glitch filtering demo: a pure gate model propagates a decoder hazard,
a dwell-constrained model of the same gate rejects it.

An AND gate is fed a rising step and the step's delayed inverse.  The inputs
overlap at 1 for one time unit, so the ideal gate emits a one-unit glitch.
A window-bounded model with dwell times longer than the glitch cannot emit
it: the all-zero output and a stretched pulse are both admissible, the raw
glitch is not.  Everything runs through the command line tools on files in
a scratch directory.
"""
import sys
import tempfile
from fractions import Fraction as F
from pathlib import Path

from siglim import (
    aic_params,
    and_fn,
    apply_fn,
    bailc,
    flc,
    make_signal,
    params,
    pulse,
)
from siglim.cli import main as cli
from siglim.files import write_model_file, write_signal_file


def run(argv: list[str]) -> int:
    print("$ siglim " + " ".join(argv))
    code = cli(argv)
    print(f"  -> exit {code}")
    return code


def main() -> int:
    d = Path(tempfile.mkdtemp(prefix="hazard-demo-"))
    print(f"scratch directory: {d}\n")

    a = make_signal(0, [(0, 1)])                 # rising step
    nb = make_signal(1, [(1, 0)])                # its inverse, one unit late
    write_signal_file(str(d / "a.json"), a)
    write_signal_file(str(d / "nb.json"), nb)

    glitch = apply_fn(and_fn(2), (a, nb))
    print(f"instantaneous AND of the inputs: {glitch!r}")
    print("the one-unit overlap is the hazard\n")

    pure = flc(and_fn(2), F(1, 2))
    write_model_file(str(d / "pure.json"), pure)
    print("pure gate model (fixed delay 1/2) propagates the glitch:")
    run(["eval", str(d / "pure.json"), str(d / "a.json"), str(d / "nb.json"),
         "--out", str(d / "pure-out.json")])
    run(["render", str(d / "a.json"), str(d / "nb.json"),
         str(d / "pure-out.json"), "--from", "-1", "--to", "4"])
    print()

    guarded = bailc(and_fn(2), and_fn(2), params(1, F(3, 2), 1, F(3, 2)),
                    aic_params(1, 1))
    write_model_file(str(d / "guarded.json"), guarded)
    print("dwell-constrained gate model (windows 1 wide, dwell 1):")

    print("the propagated glitch is not an admissible output:")
    bad = run(["check", "--model", str(d / "guarded.json"),
               "--input", str(d / "a.json"), "--input", str(d / "nb.json"),
               "--candidate", str(d / "pure-out.json")])

    write_signal_file(str(d / "quiet.json"), make_signal(0, []))
    print("staying at 0 (the filtered interpretation) is admissible:")
    ok1 = run(["check", "--model", str(d / "guarded.json"),
               "--input", str(d / "a.json"), "--input", str(d / "nb.json"),
               "--candidate", str(d / "quiet.json")])

    write_signal_file(str(d / "stretched.json"), pulse(F(1, 2), F(5, 2)))
    print("so is stretching the pulse past the dwell time:")
    ok2 = run(["check", "--model", str(d / "guarded.json"),
               "--input", str(d / "a.json"), "--input", str(d / "nb.json"),
               "--candidate", str(d / "stretched.json")])

    print("\nwaveforms of the three candidates:")
    run(["render", str(d / "pure-out.json"), str(d / "quiet.json"),
         str(d / "stretched.json"), "--from", "-1", "--to", "4",
         "--vcd", str(d / "waves.vcd")])
    print(f"\nVCD dump written to {d / 'waves.vcd'}")

    return 0 if (bad == 1 and ok1 == 0 and ok2 == 0) else 1


if __name__ == "__main__":
    sys.exit(main())
