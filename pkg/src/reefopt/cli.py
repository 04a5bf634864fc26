"""Command-line entry points: run, list-objectives, eval."""

import argparse
import json
import os
import sys

import numpy as np

from . import benchmarks, windfarm
from .harness import ExperimentConfig, VARIANT_MODES, export_traces, run_experiment


def build_parser():
    parser = argparse.ArgumentParser(
        prog="reefopt",
        description="Multi-method ensemble optimization experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a configured experiment")
    run_p.add_argument("--config", required=True, help="JSON experiment config")
    run_p.add_argument("--seed", type=int, help="override base_seed")
    run_p.add_argument("--reps", type=int, help="override repetitions")
    run_p.add_argument("--out", default="results", help="output directory")
    run_p.add_argument("--variant", choices=sorted(VARIANT_MODES),
                       help="override ensemble variant")

    sub.add_parser("list-objectives", help="list the available objectives")

    eval_p = sub.add_parser("eval", help="evaluate one objective at one point")
    eval_p.add_argument("--objective", required=True,
                        help="benchmark id (F1..F15), 'windfarm', or a scenario file")
    eval_p.add_argument("--point", required=True,
                        help="comma-separated components")
    return parser


def _cmd_run(args):
    with open(args.config) as f:
        doc = json.load(f)
    if args.seed is not None:
        doc["base_seed"] = args.seed
    if args.reps is not None:
        doc["repetitions"] = args.reps
    if args.variant is not None:
        doc["variant"] = args.variant
    config = ExperimentConfig.from_dict(doc)
    summary, records = run_experiment(config)
    paths = export_traces(records, args.out, summary)
    print("objective=%s variant=%s best=%r mean=%r std=%r"
          % (summary.objective, summary.variant, summary.best, summary.mean,
             summary.std))
    print("wrote %d files to %s" % (len(paths), args.out))
    return 0


def _cmd_list(_args):
    for name in benchmarks.benchmark_names():
        _, label = benchmarks.BENCHMARKS[name]
        print("%-4s %s (default dim %d, box [%g, %g])"
              % (name, label, benchmarks.DEFAULT_DIM, benchmarks.DEFAULT_LOWER,
                 benchmarks.DEFAULT_UPPER))
    print("windfarm  penalized -AEP over a turbine-layout scenario "
          "(point length 2*n_turbines); pass a scenario JSON path to use "
          "custom site data")
    return 0


def _cmd_eval(args):
    point = np.array([float(v) for v in args.point.replace(",", " ").split()])
    name = args.objective
    if name in benchmarks.BENCHMARKS:
        objective = benchmarks.make_benchmark(name, dim=point.size)
    else:
        if name == "windfarm":
            scenario = windfarm.default_scenario()
        elif os.path.exists(name):
            scenario = windfarm.load_scenario(name)
        else:
            print("unknown objective %r" % name, file=sys.stderr)
            return 2
        objective = windfarm.windfarm_objective(scenario)
    print(repr(objective.evaluate(point)))
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "run":
        return _cmd_run(args)
    if args.command == "list-objectives":
        return _cmd_list(args)
    return _cmd_eval(args)


if __name__ == "__main__":
    sys.exit(main())
