"""Command-line entry point: ``thompson-tsp {witness,check,oracle,export}``.

Exit codes: 0 success, 1 verification failure, 2 invalid input or a cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .checks import DEFAULT_SAMPLES, DEFAULT_SEED, run_check_suite
from .oracle import (
    DEFAULT_TOUR_CAP,
    CapExceeded,
    DistanceNotFound,
    exact_tour,
    instance_from_json,
    metric_axioms,
    tau,
    tour_instance,
)
from .witness import (
    LemmaFailure,
    VerificationError,
    WitnessError,
    build_generic_witness,
    build_witness,
    grid_graph_dot,
    grid_words,
    lemma1_witness,
    pair_for_alphabet,
    parse_ratio,
)
from .words import GroupWord, WordError, load_alphabet_file, preset

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


def _alphabet_and_pair(name: str):
    if name.startswith("@"):
        alphabet, doc = load_alphabet_file(name[1:])
        return alphabet, pair_for_alphabet(alphabet, doc)
    alphabet = preset(name)
    return alphabet, pair_for_alphabet(alphabet)


def _emit(doc, out: Optional[str]) -> None:
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_witness(args) -> int:
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = parse_ratio(args.lam)
    alphabet, pair = _alphabet_and_pair(args.alphabet)
    xi = GroupWord.parse(args.xi, alphabet)
    try:
        report = build_witness(xi, lam, pair, n=args.n, n_max=args.n_max)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    _emit(report.to_json(), args.out)
    ok = all(report.verdicts.values()) and report.ratio < lam
    return EXIT_OK if ok else EXIT_FAILED


def cmd_check(args, generators=None) -> int:
    summary = run_check_suite(args.samples, args.seed, generators)
    _emit(summary.to_json(), args.out)
    if not summary.ok:
        bad = summary.first_failure()
        print(f"check failed in {bad.name}: {json.dumps(bad.counterexample)}", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_oracle(args) -> int:
    alphabet, pair = _alphabet_and_pair(args.alphabet)
    if args.instance:
        doc = json.loads(Path(args.instance).read_text())
        if len(doc.get("points", [])) > args.max_tour:
            raise CapExceeded("tour size", args.max_tour, len(doc["points"]))
        inst = instance_from_json(doc, alphabet, args.max_radius)
        order, length = exact_tour(inst, args.max_tour)
        _emit({
            "card": len(inst),
            "tour_length": length,
            "tau_exact": _q(tau(length, len(inst))),
            "order": order,
            "metric_axioms": metric_axioms(inst.metric),
        }, args.out)
        return EXIT_OK

    xi = GroupWord.parse(args.xi, alphabet)
    n = 2 if args.n is None else args.n
    report, grid = build_generic_witness(xi, n, pair)
    if grid.card > args.max_tour:
        raise CapExceeded("tour size", args.max_tour, grid.card)
    lw = lemma1_witness(xi, pair)
    names = grid_words(lw, pair, n)
    word_of = {}
    for key in sorted(names):
        layer = grid.base if key[2] == 0 else grid.shifted
        word_of.setdefault(layer[key[:2]], names[key])
    words = [word_of[g] for g in grid.elements]
    inst = tour_instance(grid.elements, alphabet, args.max_radius, words)
    order, length = exact_tour(inst, args.max_tour)
    doc = report.to_json()
    doc["oracle"] = {
        "tour_length": length,
        "tau_exact": _q(tau(length, len(inst))),
        "order": order,
        "points": [str(w) for w in words],
        "metric_axioms": metric_axioms(inst.metric),
    }
    _emit(doc, args.out)
    ok = all(report.verdicts.values()) and all(doc["oracle"]["metric_axioms"].values())
    return EXIT_OK if ok and length <= report.path_length else EXIT_FAILED


def cmd_export(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    if args.n < 2 or args.n % 2:
        raise UsageError(f"--n must be an even number >= 2, got {args.n}")
    alphabet, pair = _alphabet_and_pair(args.alphabet)
    xi = GroupWord.parse(args.xi, alphabet)
    if args.format == "dot":
        _emit(grid_graph_dot(args.n), args.out)
        return EXIT_OK
    lw = lemma1_witness(xi, pair)
    names = grid_words(lw, pair, args.n)
    _emit({
        "xi": str(xi),
        "alphabet": alphabet.name,
        "epsilon": lw.epsilon,
        "n": args.n,
        "vertices": {f"{'bt'[k[2]]}_{k[0]}_{k[1]}": str(w) for k, w in sorted(names.items())},
    }, args.out)
    return EXIT_OK


def _q(q) -> str:
    return f"{q.numerator}/{q.denominator}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompson-tsp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alphabet", default="std2", help="std2 | x012 | mirror3 | @file.json")
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("witness", help="build and verify a witness set and tour")
    common(p)
    p.add_argument("--xi", default="", help="element as a compact word, e.g. abAA")
    p.add_argument("--lambda", dest="lam", help="target ratio as p/q")
    p.add_argument("--n", type=int, help="override the grid size")
    p.add_argument("--n-max", type=int, default=201, help="largest odd n tried in the abelian branch")

    p = sub.add_parser("check", help="run the relation, lemma and mixed-identity suites")
    common(p)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("oracle", help="exact shortest tour of a small witness set")
    common(p)
    p.add_argument("--xi", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--instance", help="tour instance JSON instead of a witness set")
    p.add_argument("--max-radius", type=int, default=24, help="largest distance searched")
    p.add_argument("--max-tour", type=int, default=DEFAULT_TOUR_CAP, help="largest exact tour")

    p = sub.add_parser("export", help="write the grid graph as DOT or its vertex words as JSON")
    common(p)
    p.add_argument("--xi", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    return parser


def main(argv: Optional[Sequence[str]] = None, generators=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        if args.command == "witness":
            return cmd_witness(args)
        if args.command == "check":
            return cmd_check(args, generators)
        if args.command == "oracle":
            return cmd_oracle(args)
        return cmd_export(args)
    except (UsageError, WitnessError, WordError, CapExceeded, DistanceNotFound, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (LemmaFailure, VerificationError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
