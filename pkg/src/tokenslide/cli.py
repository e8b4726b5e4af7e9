"""Command-line surface: decide, oracle, crosscheck, gen, fixtures.

Instances are single JSON files: {"graph": "<edge list>", "I": [...],
"J": [...], "model": "TS"|"TJ"}.  The shipped fixtures are addressable by
name wherever an instance path is expected.  Exit codes: 0 YES, 1 NO,
2 REJECTED or inconclusive, 3 input error.  All JSON output is
newline-terminated UTF-8 on stdout.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import fixtures
from .decider import NO, REJECTED, YES, decide
from .graph import ParseError, parse_graph
from .model import (
    MODELS,
    NotIndependentError,
    ReconfigSequence,
    make_independent_set,
    validate_sequence,
)
from .oracle import CapExceeded, oracle_reachable

EXIT_YES = 0
EXIT_NO = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


def _load_instance(spec: str, model_flag: str | None):
    path = Path(spec)
    if path.is_file():
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"cannot read instance {spec!r}: {e}") from e
    else:
        try:
            raw = fixtures.load(spec)
        except KeyError:
            raise InputError(f"{spec!r} is neither a file nor a fixture name") from None
    for key in ("graph", "I", "J"):
        if key not in raw:
            raise InputError(f"instance is missing the {key!r} field")
    model = model_flag or raw.get("model", "TS")
    if model not in MODELS:
        raise InputError(f"unknown model {model!r}")
    try:
        g = parse_graph(raw["graph"])
    except ParseError as e:
        raise InputError(f"bad graph: {e}") from e
    try:
        iv = [g.vertex(str(x)) for x in raw["I"]]
        jv = [g.vertex(str(x)) for x in raw["J"]]
    except KeyError as e:
        raise InputError(str(e)) from e
    try:
        i = make_independent_set(g, iv)
        j = make_independent_set(g, jv)
    except NotIndependentError as e:
        raise InputError(f"input set is not independent: {e}") from e
    return g, i, j, model


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _answer_exit(answer: str) -> int:
    return {YES: EXIT_YES, NO: EXIT_NO, REJECTED: EXIT_INCONCLUSIVE}[answer]


def cmd_decide(args: argparse.Namespace) -> int:
    g, i, j, model = _load_instance(args.instance, args.model)
    decision = decide(g, i, j, model, force_oracle=args.force_oracle, oracle_cap=args.cap)
    payload = decision.to_json()
    _emit(payload)
    if args.emit_certificate and payload["certificate"] is not None:
        Path(args.emit_certificate).write_text(
            json.dumps(payload["certificate"], indent=2) + "\n", encoding="utf-8"
        )
    return _answer_exit(decision.answer)


def cmd_oracle(args: argparse.Namespace) -> int:
    g, i, j, model = _load_instance(args.instance, args.model)
    if len(i) != len(j):
        _emit({"answer": NO, "model": model, "reason": "size-mismatch", "certificate": None})
        return EXIT_NO
    try:
        seq = oracle_reachable(g, i, j, model, cap=args.cap)
    except CapExceeded as e:
        _emit({"answer": REJECTED, "model": model, "reason": f"inconclusive: {e}", "certificate": None})
        return EXIT_INCONCLUSIVE
    if seq is None:
        _emit({"answer": NO, "model": model, "reason": "exhausted", "certificate": None})
        return EXIT_NO
    _emit({"answer": YES, "model": model, "reason": None,
           "certificate": {"kind": "sequence", **seq.to_json()}})
    return EXIT_YES


def cmd_crosscheck(args: argparse.Namespace) -> int:
    from .fuzz import random_connected_instance

    rng = random.Random(args.seed)
    agree = {m: 0 for m in MODELS}
    corollary_ok = 0
    failures = []
    for idx in range(args.count):
        g, i, j = random_connected_instance(rng, args.max_n)
        answers = {}
        for model in MODELS:
            decision = decide(g, i, j, model)
            try:
                reach = oracle_reachable(g, i, j, model, cap=args.cap)
                oracle_answer = YES if reach is not None else NO
            except CapExceeded:
                oracle_answer = None
            answers[model] = decision.answer
            if oracle_answer is None or decision.answer == oracle_answer:
                agree[model] += 1
            else:
                failures.append((idx, model, g, i, j, decision.answer, oracle_answer))
            if decision.answer == YES:
                validate_sequence(g, decision.certificate)
        if answers["TS"] == answers["TJ"]:
            corollary_ok += 1

    print(f"instances: {args.count}")
    for model in MODELS:
        print(f"{model} agreement: {agree[model]}/{args.count}")
    print(f"TS/TJ answers agree: {corollary_ok}/{args.count}")
    if failures:
        idx, model, g, i, j, got, want = failures[0]
        repro = {
            "graph": g.to_edge_list(),
            "I": i.labels(),
            "J": j.labels(),
            "model": model,
            "decide": got,
            "oracle": want,
        }
        out = Path(args.out)
        out.write_text(json.dumps(repro, indent=2) + "\n", encoding="utf-8")
        print(f"DISAGREEMENT on instance {idx} ({model}); reproducer written to {out}")
        return 1
    print("OK")
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    from .graph import gen_claw_free

    g = gen_claw_free(args.n, args.density, args.seed)
    sys.stdout.write(g.to_edge_list())
    return 0


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.name:
        try:
            raw = fixtures.load(args.name)
        except KeyError as e:
            raise InputError(str(e)) from e
        _emit(raw)
    else:
        for name in fixtures.names():
            print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tokenslide",
        description="Independent set reconfiguration in claw-free graphs (token sliding and jumping).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="run the polynomial decision procedure")
    p.add_argument("instance", help="instance JSON path or fixture name")
    p.add_argument("--model", choices=MODELS, default=None, help="override the instance model")
    p.add_argument("--force-oracle", action="store_true", help="fall back to the oracle on non-claw-free input")
    p.add_argument("--cap", type=int, default=10**6, help="oracle state cap for --force-oracle")
    p.add_argument("--emit-certificate", metavar="PATH", default=None, help="write the certificate JSON to PATH")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="answer by exhaustive solution-graph BFS")
    p.add_argument("instance", help="instance JSON path or fixture name")
    p.add_argument("--model", choices=MODELS, default=None)
    p.add_argument("--cap", type=int, default=10**6, help="state cap; exceeding it exits 2")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("crosscheck", help="fuzz decide against the oracle")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--cap", type=int, default=10**6)
    p.add_argument("--out", default="crosscheck_failure.json", help="reproducer path on disagreement")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("gen", help="emit a random claw-free graph as an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fixtures", help="list shipped fixtures or dump one")
    p.add_argument("name", nargs="?", default=None)
    p.set_defaults(func=cmd_fixtures)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def console_main() -> None:  # pragma: no cover
    sys.exit(main())
