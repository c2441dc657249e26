"""Command line front end: run session files, check the bundled corpus.

Exit codes: 0 all tasks or checks succeeded, 1 a task errored or a
check failed, 2 the input could not be used at all.

The resource caps honor the REESLAB_BUDGET environment variable: either
a bare integer (cap on the basis size) or comma-separated pairs such as
`basis=8000,pairs=500000,truncation=60,saturation=80`.  Command line
flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import run_corpus
from .errors import ParseError, PreconditionError
from .groebner import BUDGET
from .runner import run_session
from .session import Task, parse_session

_BUDGET_KEYS = {
    "basis": "max_basis",
    "pairs": "max_pairs",
    "truncation": "truncation_cap",
    "saturation": "saturation_cap",
}


def _apply_budget_env(text):
    text = text.strip()
    if not text:
        return
    if text.isdigit():
        BUDGET.max_basis = int(text)
        return
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in _BUDGET_KEYS or not value.strip().isdigit():
            raise ValueError(
                f"bad REESLAB_BUDGET entry {part!r}; use "
                "basis=N,pairs=N,truncation=N,saturation=N or a bare integer"
            )
        setattr(BUDGET, _BUDGET_KEYS[key], int(value))


def _override_nmax(session, nmax):
    from .session import _TASK_OPTIONS

    tasks = []
    for task in session.tasks:
        if "nmax" in _TASK_OPTIONS[task.kind]:
            options = dict(task.options)
            options["nmax"] = nmax
            task = Task(task.kind, task.args, options)
        tasks.append(task)
    session.tasks = tuple(tasks)


def _task_line(record):
    label = " ".join([record["kind"], *record.get("args", [])])
    if record["status"] == "ok":
        return f"[ok] {label} ({record['elapsed_ms']} ms)"
    err = record["error"]
    return f"[error] {label}: {err['type']}: {err['message']}"


def _cmd_run(args):
    try:
        with open(args.session, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"cannot read {args.session}: {exc}", file=sys.stderr)
        return 2
    try:
        session = parse_session(text)
    except ParseError as exc:
        print(f"{args.session}: {exc}", file=sys.stderr)
        return 2
    if args.nmax is not None:
        _override_nmax(session, args.nmax)
    report = run_session(session, jobs=args.jobs)
    for record in report["tasks"]:
        print(_task_line(record))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(report, handle, indent=2)
            handle.write("\n")
        print(f"report written to {args.json}")
    else:
        print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def _cmd_verify(args):
    try:
        result = run_corpus(args.filter)
    except PreconditionError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for check in result["checks"]:
        if check["status"] == "PASS":
            print(f"PASS {check['name']} ({check['session']})")
        else:
            print(
                f"FAIL {check['name']} ({check['session']}): "
                f"expected {check['expected']!r}, got {check['got']!r}"
            )
    total = result["passed"] + result["failed"]
    print(f"{result['passed']}/{total} checks passed")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(result, handle, indent=2)
            handle.write("\n")
    return 0 if result["failed"] == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="reeslab",
        description="reduction, multiplicity, and filtration toolkit "
        "for polynomial ideals",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    run_p = sub.add_parser("run", help="run a session file")
    run_p.add_argument("session", help="path to the session file")
    run_p.add_argument("--json", metavar="OUT", help="write the report here")
    run_p.add_argument(
        "--jobs", type=int, default=1, help="run tasks concurrently"
    )
    run_p.add_argument(
        "--budget-gb-size",
        type=int,
        metavar="N",
        help="cap the number of basis elements per Groebner run",
    )
    run_p.add_argument(
        "--nmax",
        type=int,
        metavar="N",
        help="override the nmax option on every task that takes one",
    )
    run_p.set_defaults(func=_cmd_run)
    ver_p = sub.add_parser(
        "verify-paper", help="run the bundled corpus checks"
    )
    ver_p.add_argument("--filter", metavar="TAG", help="keep one tag only")
    ver_p.add_argument("--json", metavar="OUT", help="write results here")
    ver_p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    env = os.environ.get("REESLAB_BUDGET")
    if env:
        try:
            _apply_budget_env(env)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
    if getattr(args, "budget_gb_size", None):
        BUDGET.max_basis = args.budget_gb_size
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
