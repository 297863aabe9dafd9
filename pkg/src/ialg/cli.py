"""Command-line entry point.

Usage::

    ialg run SCRIPT.ial [--pretty]
    ialg -e "STATEMENT; STATEMENT" [--pretty]

Output is a stream of one JSON object per command (newline-delimited);
``--pretty`` switches to a single indented JSON array.  Diagnostics go to
stderr with their line numbers.  Exit codes: 0 ok, 1 command error, 2 parse
error.  The environment variable IALG_MAX_ORDER (default 10**6) caps the
order of any structure a script may build.
"""

from __future__ import annotations

import argparse
import sys

from .engine import execute
from .errors import ParseError
from .dsl import parse_script


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ialg",
        description="script-driven finite-algebra workbench",
    )
    parser.add_argument(
        "-e",
        "--execute",
        metavar="STATEMENTS",
        help="run ';'-separated statements instead of a script file",
    )
    parser.add_argument(
        "--pretty",
        action="store_true",
        help="emit one indented JSON array instead of NDJSON",
    )
    sub = parser.add_subparsers(dest="command")
    run_p = sub.add_parser("run", help="run a script file")
    run_p.add_argument("script", metavar="SCRIPT.ial", help="script path")
    run_p.add_argument(
        "--pretty",
        action="store_true",
        help="emit one indented JSON array instead of NDJSON",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.command == "run":
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            print(f"ialg: cannot read {args.script}: {e}", file=sys.stderr)
            return 1
    elif args.execute is not None:
        text = args.execute.replace(";", "\n")
    else:
        parser.print_usage(sys.stderr)
        print("ialg: nothing to do: pass `run SCRIPT.ial` or -e", file=sys.stderr)
        return 2

    try:
        script = parse_script(text)
    except ParseError as e:
        print(f"ialg: parse error: {e}", file=sys.stderr)
        return 2

    result = execute(script)
    out = result.to_json_array() if args.pretty else result.to_ndjson()
    sys.stdout.write(out)
    for diag in result.diagnostics:
        print(
            f"ialg: line {diag['line']}: {diag['error']}: {diag['message']}",
            file=sys.stderr,
        )
    return result.status


if __name__ == "__main__":
    raise SystemExit(main())
