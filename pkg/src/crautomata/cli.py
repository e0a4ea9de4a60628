"""Command line interface.

States are numbered from 1 on the command line and in DOT output, and from 0
in automaton files and JSON reports.

Exit codes: 0 completed (SUCCESS for ``decide``), 1 usage error, 2 invalid
input, 3 FAILURE verdict or an oracle mismatch found by ``verify``, 4 resource
limit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import families
from .core import full_image
from .enumeration import MAX_STATES_ENV, default_max_states
from .errors import (
    CrautomataError,
    EmptyTarget,
    InvalidAutomaton,
    InvalidParameters,
    ParseError,
    ResourceLimit,
)
from .gamma import PROOF_DERIVED, decide
from .io import dumps_automaton, dumps_report, emit_dot, parse_automaton
from .oracle import MAX_ORACLE_STATES, reachable_family
from .synthesis import reach_word

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_FAILURE = 3
EXIT_RESOURCE = 4

VERIFY_WITNESS_STATES = 10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_set(text: str, n: int) -> frozenset:
    try:
        labels = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidParameters(f"--set expects comma-separated state numbers, got {text!r}")
    if not labels:
        raise EmptyTarget("--set is empty")
    for x in labels:
        if not 1 <= x <= n:
            raise InvalidParameters(f"state {x} outside 1..{n}")
    return frozenset(x - 1 for x in labels)


def _label(states) -> str:
    return "{" + ",".join(str(q + 1) for q in sorted(states)) + "}"


def _spell(dfa, word) -> str:
    return " ".join(dfa.spell(word)) if word else "ε"


def cmd_decide(args) -> int:
    dfa = parse_automaton(args.file)
    verdict = decide(dfa, max_states=args.max_states)
    print(f"{verdict.status.value} k={verdict.k}")
    if not verdict.success:
        for w in verdict.witnesses:
            print(f"witness {_label(w.states)} ({w.provenance})")
    if args.report:
        Path(args.report).write_text(dumps_report(verdict, dfa), encoding="utf-8")
    if args.dot_dir:
        out = Path(args.dot_dir)
        out.mkdir(parents=True, exist_ok=True)
        for j in range(1, verdict.graph.level + 1):
            (out / f"gamma_{j}.dot").write_text(emit_dot(verdict.graph, j, dfa), encoding="utf-8")
    return EXIT_OK if verdict.success else EXIT_FAILURE


def cmd_reach(args) -> int:
    dfa = parse_automaton(args.file)
    target = _parse_set(args.set, dfa.n)
    verdict = decide(dfa, max_states=args.max_states)
    if not verdict.success:
        print(f"not completely reachable (FAILURE at k={verdict.k})", file=sys.stderr)
        return EXIT_FAILURE
    plan = reach_word(dfa, verdict, target)
    print(_spell(dfa, plan.total))
    if args.factors:
        for f in plan.factors:
            print(f"  level {f.level} edge {_label(f.source)}->{f.target + 1}: {_spell(dfa, f.word)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    dfa = parse_automaton(args.file)
    table = reachable_family(dfa)
    total = (1 << dfa.n) - 1
    print(f"reachable {table.count}/{total}")
    print("completely reachable" if table.count == total else "not completely reachable")
    if args.list_unreachable:
        for s in sorted(table.unreachable(), key=lambda s: (len(s), sorted(s))):
            print(_label(s))
    return EXIT_OK


def cmd_gen(args) -> int:
    kind = args.family
    if kind == "e3":
        dfa = families.e3()
    elif kind == "e5":
        dfa = families.e5(corrected=not args.verbatim)
    elif kind in ("enk", "enk-prime"):
        if args.n is None or args.k is None:
            raise InvalidParameters(f"{kind} needs --n and --k")
        dfa = families.e_nk(args.n, args.k, prime=kind == "enk-prime")
    elif kind == "cerny":
        if args.n is None:
            raise InvalidParameters("cerny needs --n")
        dfa = families.cerny(args.n)
    else:
        if args.n is None or args.m is None:
            raise InvalidParameters("random needs --n and --m")
        dfa = families.random(args.n, args.m, args.kind, args.seed)
    text = dumps_automaton(dfa)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    dfa = parse_automaton(args.file)
    if dfa.n > MAX_ORACLE_STATES:
        raise ResourceLimit(f"{dfa.n} states exceeds the oracle bound of {MAX_ORACLE_STATES}")
    verdict = decide(dfa, max_states=args.max_states)
    table = reachable_family(dfa)
    complete = table.count == (1 << dfa.n) - 1
    problems = []
    if complete != verdict.success:
        problems.append(f"verdict {verdict.status.value} but oracle says "
                        f"{'complete' if complete else 'incomplete'}")
    if verdict.success and complete and dfa.n <= VERIFY_WITNESS_STATES:
        for mask in range(1, 1 << dfa.n):
            target = frozenset(q for q in range(dfa.n) if mask >> q & 1)
            plan = reach_word(dfa, verdict, target)
            if full_image(dfa, plan.total) != target:
                problems.append(f"witness for {_label(target)} is wrong")
    if not verdict.success:
        for w in verdict.witnesses:
            reachable = w.states in table
            tag = "reachable" if reachable else "unreachable"
            print(f"witness {_label(w.states)} ({w.provenance}): {tag}")
            if reachable and w.provenance == PROOF_DERIVED:
                problems.append(f"proof-derived witness {_label(w.states)} is reachable")
        if not any(len(s) >= dfa.n - verdict.k for s in table.unreachable()):
            problems.append(f"no unreachable subset of size >= {dfa.n - verdict.k}")
    print(f"{verdict.status.value} k={verdict.k}; oracle {table.count}/{(1 << dfa.n) - 1}")
    for p in problems:
        print(f"MISMATCH: {p}")
    return EXIT_FAILURE if problems else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crautomata", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--max-states", type=int, default=None,
        help=f"enumeration state bound (default {default_max_states()}, env {MAX_STATES_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decide", help="decide complete reachability")
    p.add_argument("file")
    p.add_argument("--report", help="write a JSON verdict report")
    p.add_argument("--dot-dir", help="write gamma_<k>.dot for every level")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reach", help="print a word reaching a subset")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="1-based states, e.g. 1,3")
    p.add_argument("--factors", action="store_true", help="also list the factors")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("oracle", help="brute-force subset reachability")
    p.add_argument("file")
    p.add_argument("--list-unreachable", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate an automaton file")
    p.add_argument("family", choices=["e3", "e5", "enk", "enk-prime", "cerny", "random"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--kind", choices=[families.ARBITRARY, families.PERMUTATION],
                   default=families.ARBITRARY)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--verbatim", action="store_true", help="e5 with the printed a_[2] entry")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="cross-check the verdict against the oracle")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ParseError, InvalidAutomaton, InvalidParameters, EmptyTarget) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CrautomataError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
