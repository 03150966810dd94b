"""Command-line front end.

Usage:
    twin guarantees|tables|twinbound|lcs-tail|blockclaims
         [--config FILE] [--seed N] [--out DIR] [--jobs K] [--replay CASE_ID]
    twin replay --report FILE --case CASE_ID

Without --config a suite runs its built-in default grid. Reports are
printed as a summary and, when an output directory is set (--out or the
TWIN_OUT_DIR environment variable), written as JSON and CSV. The exit
code is nonzero iff an assertion-class case fails; statistical probes
only report.
"""

from __future__ import annotations

import argparse
import os
import sys

from .harness import (
    ENV_OUT_DIR,
    SUITE_NAMES,
    ConfigError,
    SuiteConfig,
    default_config,
    replay_case,
    run_suite,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twin", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for suite in SUITE_NAMES:
        p = sub.add_parser(suite, help=f"run the {suite} suite")
        p.add_argument("--config", help="JSON SuiteConfig file")
        p.add_argument("--seed", type=int, help="master seed override")
        p.add_argument("--out", help="output directory for reports and witnesses")
        p.add_argument("--jobs", type=int, help="worker pool size")
        p.add_argument("--replay", metavar="CASE_ID", help="run a single case by id")
    rep = sub.add_parser("replay", help="re-run one case from a written report")
    rep.add_argument("--report", required=True, help="path to a *_report.json file")
    rep.add_argument("--case", required=True, help="case id to re-run")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "replay":
            record = replay_case(args.report, args.case)
            status = {True: "PASS", False: "FAIL", None: record.kind}[record.passed]
            print(f"{record.case_id}: {status} value={record.value} bound={record.bound} "
                  f"seed={record.seed} params={record.params}")
            if record.detail:
                print(f"  detail: {record.detail}")
            return 0 if record.passed is not False else 1
        if args.config:
            config = SuiteConfig.from_json_file(args.config)
            if config.suite != args.command:
                raise ConfigError("suite", f"config is for {config.suite!r}, not {args.command!r}")
        else:
            config = default_config(args.command)
        if args.seed is not None:
            config.seed = args.seed
        if args.jobs is not None:
            config.jobs = args.jobs
        if args.out is not None:
            config.out_dir = args.out
        elif config.out_dir is None:
            config.out_dir = os.environ.get(ENV_OUT_DIR) or None
        report = run_suite(config, only_case=args.replay)
        print(report.summary_text())
        if config.out_dir:
            print(f"reports written to {config.out_dir}")
        return 0 if report.ok else 1
    except ConfigError as exc:
        print(f"configuration error - {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
