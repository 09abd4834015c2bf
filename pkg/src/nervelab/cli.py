"""Command-line entry point.

Subcommands: build, verify, homology, counterexample, selftest.  All but
selftest take a scenario file; build/verify/homology/counterexample restrict
the run to jobs of the matching kind (plus always-on construction checks for
``build``).
"""

from __future__ import annotations

import argparse
import sys

from . import runner, scenario
from .sset import serialize

SELFTEST = """\
# built-in smoke scenario
trunc 4
monoid Z2: builtin cyclic 2
monoid Z3: builtin cyclic 3
monoid S3: builtin symmetric3
monoid M0: builtin zero-monoid
space C: circle
space N2: nerve Z2
job verify N2
job verify wedgeofnerve M0
job homology N2 upto 3
job homology product C C upto 2
job pi0 N2 expect 1
job counterexample partial-monoid M0 sub 1 0 p 3
job comparison Z2 upto 3
job suspension C upto 3
job cyclicbar-pi0 S3 expect 3
job shear Z3 expect bijective
job shear M0 expect witness
job loopgroup C samples 200
job regression corrupt N2
"""


def build_parser():
    # SUPPRESS keeps the subparser from overwriting flags given before it
    shared = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    shared.add_argument("--format", choices=("text", "records"))
    shared.add_argument("--trunc", type=int, help="override scenario truncation")
    shared.add_argument("--seed", type=int, help="override scenario seed")
    shared.add_argument("--cap", type=int, help="override simplex-count cap")
    shared.add_argument("--timings", action="store_true",
                        help="include timings (text format only)")
    shared.add_argument("--parallel", type=int, metavar="N",
                        help="run independent jobs in N worker processes")
    p = argparse.ArgumentParser(
        prog="nervelab", parents=[shared],
        description="exact bar-construction engine with homological checks")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_text in (
            ("build", "construct the spaces of the scenario and report sizes"),
            ("verify", "run verification jobs"),
            ("homology", "run homology jobs"),
            ("counterexample", "run counterexample jobs"),
    ):
        sp = sub.add_parser(name, help=help_text, parents=[shared])
        sp.add_argument("scenario", help="scenario file")
        if name == "build":
            sp.add_argument("--emit-sset", action="store_true",
                            help="also print each space in the sset text format")
    sub.add_parser("selftest", help="run the built-in scenario", parents=[shared])
    return p


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def main(argv=None):
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "text")
    timings = getattr(args, "timings", False)
    try:
        if args.command == "selftest":
            sc = scenario.parse_scenario(SELFTEST)
        else:
            import os
            sc = scenario.parse_scenario(_load(args.scenario),
                                         base_dir=os.path.dirname(
                                             os.path.abspath(args.scenario)))
    except scenario.ScenarioError as exc:
        print(f"scenario error: {exc}", file=sys.stderr)
        return 2
    sc.trunc = getattr(args, "trunc", sc.trunc)
    sc.seed = getattr(args, "seed", sc.seed)
    sc.cap = getattr(args, "cap", sc.cap)

    if args.command == "build":
        builder = runner.SpaceBuilder(sc)
        sc.jobs = [j for j in sc.jobs]  # build constructs named spaces directly
        out_lines = []
        code = 0
        for name, toks in sc.space_exprs.items():
            try:
                X = builder.build([name])
            except Exception as exc:  # flagged, not a crash
                out_lines.append(f"[flagged] {name}: {exc}")
                continue
            out_lines.append(f"[ok] {name}: nondegenerate {X.nondegenerate_counts()}"
                             f" euler {X.euler_characteristic()}")
            if args.emit_sset:
                out_lines.append(serialize(X).rstrip("\n"))
        print("\n".join(out_lines))
        return code

    wanted = {"verify": ("verify", "regression", "comparison", "pi0",
                         "suspension", "cyclicbar-pi0", "shear", "loopgroup"),
              "homology": ("homology", "suspension"),
              "counterexample": ("counterexample",),
              "selftest": None}[args.command]
    if wanted is not None:
        sc.jobs = [j for j in sc.jobs if j.kind in wanted]
    report = runner.run(sc, parallel=getattr(args, "parallel", 0))
    sys.stdout.write(runner.emit(report, fmt=fmt, timings=timings))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
