"""Command-line front end.

Exit codes: 0 success / claim passed, 1 claim failed, 2 usage error,
3 game-state cap exceeded.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .analysis import (Report, dedekind, sc_enumerate, verify_bounded_bound,
                       verify_chain_bound, verify_core_properties,
                       verify_dyck, verify_exact_k, verify_lower_bound,
                       verify_periodicity)
from .automata import Dfa, Nfa, determinize, minimize
from .formats import ParseError, parse_with_report, serialize, to_dot
from .gadgets import (build_gadget, chain_dfa, dyck_dfa, exact_k_dfa,
                      exact_k_symbolic_wdfa)
from .oracle import TargetSet, oracle_winning_set
from .winning import DEFAULT_MAX_GAME_STATES, GameStateLimit, winning_dfa

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


class UsageError(Exception):
    pass


def _config_echo(args):
    skip = {"func", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def emit_reports(reports, args, out=None):
    out = out if out is not None else sys.stdout
    cfg = json.dumps(_config_echo(args), sort_keys=True, default=str)
    fmt = args.format
    if fmt == "json":
        for r in reports:
            record = {"claim": r.claim, "params": r.params,
                      "measured": r.measured, "expected": r.expected,
                      "pass": r.passed, "millis": r.millis,
                      "details": r.details, "version": __version__,
                      "seed": args.seed, "config": json.loads(cfg)}
            out.write(json.dumps(record, sort_keys=True, default=str) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["claim", "params", "measured", "expected", "pass",
                         "millis", "version", "seed", "config"])
        for r in reports:
            writer.writerow(r.row() + [__version__, str(args.seed), cfg])
        out.write(buf.getvalue())
    else:
        for r in reports:
            out.write("%s %s: measured=%s expected=%s [%s] (%d ms)\n" % (
                "PASS" if r.passed else "FAIL", r.claim,
                json.dumps(r.measured, sort_keys=True, default=str),
                json.dumps(r.expected, sort_keys=True, default=str),
                json.dumps(r.params, sort_keys=True, default=str), r.millis))
        out.write("# version=%s seed=%s config=%s\n"
                  % (__version__, args.seed, cfg))
    return all(r.passed for r in reports)


def _read_automaton(path):
    with open(path) as handle:
        text = handle.read()
    automaton, completed = parse_with_report(text)
    if completed:
        sys.stderr.write("note: input automaton was incomplete; "
                         "added a rejecting sink state\n")
    return automaton


def _emit_automaton(automaton, args, ports=None):
    out = serialize(automaton)
    if ports:
        lines = ["# port %s %d" % (name, q)
                 for name, q in sorted(ports.items())]
        out = "\n".join(lines) + "\n" + out
    sys.stdout.write(out)
    if args.dot_out:
        with open(args.dot_out, "w") as handle:
            handle.write(to_dot(automaton))


def cmd_build(args):
    automaton = _read_automaton(args.file)
    if isinstance(automaton, Nfa):
        automaton = determinize(automaton)
    if automaton.alphabet != "01":
        raise UsageError("build expects a binary-alphabet automaton")
    w = winning_dfa(automaton, args.max_game_states)
    _emit_automaton(w, args)
    sys.stderr.write("# base states: %d, winning-set states: %d\n"
                     % (automaton.state_count, w.state_count))
    return EXIT_OK


def cmd_oracle(args):
    if args.inline is not None:
        words = args.inline.split()
        length = len(words[0]) if words else 0
        target = TargetSet(length, words)
    elif args.language is not None:
        if args.len is None:
            raise UsageError("--language requires --len")
        automaton = _read_automaton(args.language)
        if isinstance(automaton, Nfa):
            automaton = determinize(automaton)
        target = TargetSet.from_language(automaton, args.len)
    elif args.file is not None:
        with open(args.file) as handle:
            words = [line.strip() for line in handle
                     if line.strip() and not line.startswith("#")]
        length = len(words[0]) if words else 0
        target = TargetSet(length, words)
    else:
        raise UsageError("oracle needs a target file, --inline or --language")
    for w in sorted(oracle_winning_set(target)):
        sys.stdout.write(w + "\n")
    return EXIT_OK


def cmd_gadget(args):
    g = build_gadget(args.kind, args.n)
    _emit_automaton(g.dfa, args, ports=g.ports)
    for key, value in sorted(g.meta.items()):
        sys.stderr.write("# %s: %s\n" % (key, value))
    return EXIT_OK


def cmd_chain(args):
    finals = set()
    if args.finals:
        finals = {int(x) for x in args.finals.split(",") if x != ""}
    d = chain_dfa(args.m, args.p, finals, one_bounded=args.one_bounded)
    _emit_automaton(d, args)
    return EXIT_OK


def cmd_exactk(args):
    d = exact_k_symbolic_wdfa(args.n) if args.symbolic else exact_k_dfa(args.n)
    _emit_automaton(d, args)
    return EXIT_OK


def cmd_dyck(args):
    _emit_automaton(dyck_dfa(args.max_balance), args)
    return EXIT_OK


def cmd_dedekind(args):
    sys.stdout.write("%d\n" % dedekind(args.n))
    return EXIT_OK


def cmd_dot(args):
    automaton = _read_automaton(args.file)
    text = to_dot(automaton)
    if args.dot_out:
        with open(args.dot_out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_enumerate(args):
    if args.n >= 4 and not args.heavy:
        raise UsageError("enumerate %d is long-running; pass --heavy"
                         % args.n)

    def progress(tables_done, best):
        sys.stderr.write("progress: tables=%d best=%d\n" % (tables_done, best))
        sys.stderr.flush()

    report = sc_enumerate(args.n, jobs=args.jobs,
                          max_game_states=args.max_game_states,
                          progress=progress if args.heavy else None,
                          progress_every=200000)
    if args.format == "text":
        sys.stdout.write("%d\n" % report.measured)
        sys.stderr.write("# witness index %s, %d ms\n"
                         % (report.details.get("witness_index"),
                            report.millis))
        return EXIT_OK if report.passed else EXIT_CLAIM_FAILED
    ok = emit_reports([report], args)
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def cmd_verify(args):
    claim = args.claim
    cap = args.max_game_states
    if claim == "core":
        if args.seeded:
            reports = [verify_core_properties(
                kind="seeded", seed=args.seed, count=args.count or 100,
                min_states=4, max_states=6, max_game_states=cap)]
        else:
            n = args.n if args.n is not None else 2
            if n > 3:
                raise UsageError("exhaustive core corpus is capped at n = 3")
            reports = [verify_core_properties(kind="exhaustive", n=n,
                                              seed=args.seed,
                                              max_game_states=cap)]
    elif claim == "exactk":
        n = args.n if args.n is not None else 4
        reports = [verify_exact_k(n, max_game_states=cap)]
    elif claim == "dyck":
        reports = [verify_dyck(args.n if args.n is not None else 14,
                               max_game_states=cap)]
    elif claim == "lower-bound":
        n = args.n if args.n is not None else 1
        if n >= 2 and not args.heavy:
            raise UsageError("lower-bound 2 is long-running; pass --heavy")
        reports = [verify_lower_bound(n, max_game_states=cap)]
    elif claim == "chain-bound":
        reports = [verify_chain_bound(args.n if args.n is not None else 12,
                                      seed=args.seed, max_game_states=cap)]
    elif claim == "bounded-bound":
        reports = [verify_bounded_bound(seed=args.seed,
                                        count=args.count or 200,
                                        max_game_states=cap)]
    elif claim == "periodicity":
        reports = [verify_periodicity(seed=args.seed,
                                      count=args.count or 200,
                                      max_game_states=cap)]
    else:
        raise UsageError("unknown claim %r" % claim)
    ok = emit_reports(reports, args)
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def make_parser():
    parser = argparse.ArgumentParser(
        prog="winset",
        description="Winning sets of two-player word-construction games "
                    "on regular languages")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--max-game-states", type=int,
                        default=DEFAULT_MAX_GAME_STATES,
                        help="cap on explored game states")
    parser.add_argument("--heavy", action="store_true",
                        help="allow long-running computations")
    parser.add_argument("--seed", type=int, default=42,
                        help="seed for randomized corpora")
    parser.add_argument("--jobs", type=int, default=1,
                        help="worker processes for enumeration")
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="text")
    parser.add_argument("--dot-out", metavar="PATH",
                        help="also write a DOT rendering here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="winning-set DFA of an automaton file")
    p.add_argument("file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("oracle", help="brute-force winning set of a target")
    p.add_argument("file", nargs="?")
    p.add_argument("--inline", help="space-separated target words")
    p.add_argument("--language", metavar="FILE",
                   help="take the target from this automaton's language")
    p.add_argument("--len", type=int, help="slice length for --language")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gadget", help="emit a gadget automaton with ports")
    p.add_argument("kind", choices=("subset", "state_factory", "testing",
                                    "lower_bound"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gadget)

    p = sub.add_parser("chain", help="chain automaton")
    p.add_argument("m", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--finals", help="comma-separated final states")
    p.add_argument("--one-bounded", action="store_true")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("exactk", help="exact-number-of-ones automaton")
    p.add_argument("n", type=int)
    p.add_argument("--symbolic", action="store_true",
                   help="emit the symbolic winning-set DFA instead")
    p.set_defaults(func=cmd_exactk)

    p = sub.add_parser("dyck", help="balanced-parentheses automaton")
    p.add_argument("max_balance", type=int)
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("enumerate",
                       help="max winning-set size over all n-state DFAs")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dedekind", help="antichain count of an n-set")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("dot", help="DOT rendering of an automaton file")
    p.add_argument("file")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("verify", help="check one of the quantitative claims")
    p.add_argument("claim", choices=("core", "exactk", "dyck", "lower-bound",
                                     "chain-bound", "bounded-bound",
                                     "periodicity"))
    p.add_argument("n", type=int, nargs="?",
                   help="size parameter, where the claim takes one")
    p.add_argument("--seeded", action="store_true",
                   help="use the seeded corpus (core claim)")
    p.add_argument("--count", type=int, help="corpus size override")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GameStateLimit as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_CAP
    except (UsageError, ParseError, ValueError, OSError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
