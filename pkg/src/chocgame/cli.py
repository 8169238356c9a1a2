"""Command-line front end.

Subcommands: value, table, analyze, best-move, verify, serve.  Output on
stdout is byte-identical across identical invocations; timings go to
stderr.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from chocgame import verify as verify_mod
from chocgame.chocolate import NotationError, parse_bar, value, value_table
from chocgame.engine import Player, set_node_budget
from chocgame.solver import (
    best_move,
    evaluate_moves,
    parse_sum,
    sum_outcome,
    sum_value,
)

USAGE_EXIT = 2
FAIL_EXIT = 1


def _parse_player(text: str) -> Player:
    lowered = text.strip().lower()
    if lowered in ("l", "left"):
        return Player.LEFT
    if lowered in ("r", "right"):
        return Player.RIGHT
    raise NotationError(text, 0, "expected left/L or right/R")


def _format_move(move) -> str:
    return f"component {move.component}: {move.cut.axis.value}, keep {move.cut.keep}"


def cmd_value(args) -> int:
    bar = parse_bar(args.notation)
    v = value(bar)
    if args.json:
        print(json.dumps({"bar": str(bar), "value": str(v)}, sort_keys=True))
    else:
        print(v)
    return 0


def cmd_table(args) -> int:
    grid = value_table(args.max_n, args.max_m)
    if args.json:
        rows = [[str(cell) for cell in row] for row in grid]
        print(json.dumps({"max_n": args.max_n, "max_m": args.max_m, "rows": rows}, sort_keys=True))
        return 0
    separator = "," if args.csv else ", "
    for row in reversed(grid):  # top row first, like the published table
        print(separator.join(str(cell) for cell in row))
    return 0


def cmd_analyze(args) -> int:
    game = parse_sum(args.sum)
    mover = _parse_player(args.mover)
    total = sum_value(game)
    outcome = sum_outcome(game)
    move = best_move(game, mover)
    resulting = None
    if move is not None:
        for ev in evaluate_moves(game, mover):
            if ev.move == move:
                resulting = ev.resulting
                break
    if args.json:
        payload = {
            "sum": str(game),
            "value": str(total),
            "outcome": outcome.value,
            "mover": mover.value,
            "best_move": None
            if move is None
            else {
                "component": move.component,
                "axis": move.cut.axis.value,
                "keep": move.cut.keep,
                "resulting_value": str(resulting),
            },
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"value: {total}")
    print(f"outcome: {outcome.value}")
    if move is None:
        print(f"best move ({mover.name.lower()}): none")
    else:
        print(f"best move ({mover.name.lower()}): {_format_move(move)}")
        print(f"resulting value: {resulting}")
    return 0


def cmd_best_move(args) -> int:
    game = parse_sum(args.sum)
    mover = _parse_player(args.mover)
    move = best_move(game, mover)
    if args.json:
        payload = None if move is None else {
            "component": move.component,
            "axis": move.cut.axis.value,
            "keep": move.cut.keep,
        }
        print(json.dumps({"best_move": payload}, sort_keys=True))
        return 0
    print("none" if move is None else _format_move(move))
    return 0


def cmd_verify(args) -> int:
    if args.node_budget:
        set_node_budget(args.node_budget)
    if args.suite == "all":
        reports = verify_mod.verify_all(args.bound)
    else:
        runner = verify_mod.SUITES[args.suite]
        bound = args.bound if args.bound is not None else verify_mod.DEFAULT_BOUNDS[args.suite]
        reports = [runner(bound)]
    failed = False
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        line = f"[{status}] {report.name} bound={report.bound} checks={report.checks}"
        if report.note:
            line += f" ({report.note})"
        if report.counterexample:
            line += f" counterexample: {report.counterexample}"
        if args.json:
            print(json.dumps({
                "suite": report.name,
                "bound": report.bound,
                "passed": report.passed,
                "checks": report.checks,
                "note": report.note,
                "counterexample": report.counterexample,
            }, sort_keys=True))
        else:
            print(line)
        print(f"{report.name}: {report.elapsed:.3f}s", file=sys.stderr)
        failed = failed or not report.passed
    return FAIL_EXIT if failed else 0


def cmd_serve(args) -> int:
    import uvicorn

    from chocgame.service import create_app

    app = create_app(args.journal, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chocgame",
        description="Exact values and optimal play for the partisan chocolate game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_value = sub.add_parser("value", help="value of a single bar, e.g. '+(2,3)'")
    p_value.add_argument("notation")
    p_value.add_argument("--json", action="store_true")
    p_value.set_defaults(func=cmd_value)

    p_table = sub.add_parser("table", help="grid of values up to (max_n, max_m)")
    p_table.add_argument("max_n", type=int)
    p_table.add_argument("max_m", type=int)
    p_table.add_argument("--csv", action="store_true", help="comma-only cells")
    p_table.add_argument("--json", action="store_true")
    p_table.set_defaults(func=cmd_table)

    p_analyze = sub.add_parser("analyze", help="value, outcome and best move of a sum")
    p_analyze.add_argument("sum", help="e.g. '-(2,4) -(1,3) +(2,3) +(2,0)'")
    p_analyze.add_argument("mover", help="left or right")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(func=cmd_analyze)

    p_best = sub.add_parser("best-move", help="just the selected move for a sum")
    p_best.add_argument("sum")
    p_best.add_argument("mover")
    p_best.add_argument("--json", action="store_true")
    p_best.set_defaults(func=cmd_best_move)

    p_verify = sub.add_parser("verify", help="run exhaustive verification sweeps")
    p_verify.add_argument("suite", choices=sorted(verify_mod.SUITES) + ["all"])
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.add_argument("--node-budget", type=int, default=None)
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_serve = sub.add_parser("serve", help="run the HTTP game service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--journal", default="chocgame-journal.jsonl")
    p_serve.add_argument("--ui", default=None, help="directory of built web UI to serve at /")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)
    # notation starting with "-(" is a positional, never a flag
    for index, token in enumerate(argv):
        if token == "--":
            break
        if token.startswith("-("):
            argv.insert(index, "--")
            break
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
