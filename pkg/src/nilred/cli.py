"""``nilred`` command line: list checks, run one, run a suite, print an ideal."""

from __future__ import annotations

import argparse
import sys

from . import harness
from .fieldpoly import FieldSpec
from .groebner import orbit_closure_ideal
from .orbits import Partition
from .schemes import (
    Chart,
    NilpotentSchemeSpec,
    invariance_only_chart_ideal,
    invariant_chart_ideal,
    nilpotent_scheme_ideal,
    shuffle_chart_ideal,
    vee_scheme_ideal,
)

CHECK_OPTIONS = ["n", "N", "e", "a", "b", "seed", "trials", "order", "degree", "prime"]


def _partition(text: str) -> list[int]:
    return list(Partition.parse(text))


def _index_set(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.strip("[]() ").split(",") if x.strip())


def build_ideal(args):
    F = FieldSpec.parse(args.field)
    name = args.scheme
    if name == "nilpotent":
        return nilpotent_scheme_ideal(NilpotentSchemeSpec(args.n, args.e), F)
    if name == "orbit-closure":
        return orbit_closure_ideal(args.type, F, timeout=args.timeout_secs)
    if name == "vee":
        return vee_scheme_ideal(NilpotentSchemeSpec(args.n, args.e), (args.e,) * args.n, F)
    T = Partition(args.type)
    S = args.chart or tuple(range(1, args.n + 1))
    chart = Chart(T.size, args.n, S)
    build = {"chart-invariant": invariant_chart_ideal,
             "chart-shuffle": shuffle_chart_ideal,
             "chart-invariance-only": invariance_only_chart_ideal}[name]
    return build(T, chart, F)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilred", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list registered checks and suites")

    run = sub.add_parser("run", help="run one check")
    run.add_argument("check")
    for opt in CHECK_OPTIONS:
        run.add_argument(f"--{opt}", type=int)
    run.add_argument("--type", type=_partition, help="Jordan type, e.g. 2,2")
    run.add_argument("--field", help="Q or Fp:P")
    run.add_argument("--timeout-secs", type=float)
    run.add_argument("--out", help="write the JSON report here")

    suite = sub.add_parser("suite", help="run a named suite")
    suite.add_argument("name", choices=list(harness.SUITES) + ["all"])
    suite.add_argument("--out", help="write the JSON report here")

    ideal = sub.add_parser("ideal", help="print a scheme's defining ideal in the ideal file format")
    ideal.add_argument("scheme", choices=["nilpotent", "orbit-closure", "vee", "chart-invariant",
                                          "chart-shuffle", "chart-invariance-only"])
    ideal.add_argument("--n", type=int)
    ideal.add_argument("--e", type=int)
    ideal.add_argument("--type", type=_partition)
    ideal.add_argument("--chart", type=_index_set, help="pivot rows, e.g. 1,3")
    ideal.add_argument("--field", default="Q")
    ideal.add_argument("--timeout-secs", type=float, default=600)
    ideal.add_argument("--out")
    return parser


def _summary(report: harness.Report) -> str:
    return f"{report.status.upper():<12} {report.check} {report.params}  ({report.elapsed_ms:.0f} ms)  {report.witness}"


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    if args.command == "list":
        for name in sorted(harness.REGISTRY):
            print(f"{name:<22} {harness.describe(name)}")
        print("suites: " + ", ".join(list(harness.SUITES) + ["all"]))
        return 0
    if args.command == "ideal":
        try:
            ideal = build_ideal(args)
        except (TypeError, ValueError) as exc:
            print(f"nilred ideal: {exc}", file=sys.stderr)
            return 2
        text = ideal.to_text(f"{args.scheme} ideal")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if args.command == "run":
        params = {k: getattr(args, k) for k in CHECK_OPTIONS + ["type", "field", "timeout_secs"]
                  if getattr(args, k) is not None}
        try:
            reports = [harness.run_check(harness.CheckSpec(args.check, params))]
        except (KeyError, ValueError) as exc:
            print(f"nilred run: {exc}", file=sys.stderr)
            return 2
        print(_summary(reports[0]))
    else:
        reports = harness.run_suite(args.name, progress=lambda r: print(_summary(r), flush=True))
        counts = {s: sum(r.status == s for r in reports) for s in harness.STATUSES}
        print(", ".join(f"{v} {k}" for k, v in counts.items()))
    if args.out:
        harness.emit_report(reports, args.out)
    return 1 if any(r.status == "fail" for r in reports) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
