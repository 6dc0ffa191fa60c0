"""Command line interface.

Subcommands:

    generate    build a maximum-length cycle and print it
    verify      check a word list against the cycle axioms
    lambda      print the closed-form maximum, optionally cross-checked
    examples    rebuild the frozen reference cycles and diff them

Exit codes: 0 success, 1 a semantic check failed, 2 bad parameters or
unparseable input, 3 instance too large, 4 oracle inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator, TextIO

from . import golden
from .constructions import (
    Case,
    build_even,
    build_nonbinary,
    build_odd_pair,
    classify,
    complement_pair,
    max_cycle_length,
    max_gray_cycle,
)
from .reflected import gamma_base_term, reflected_term, rho_base_term
from .verify import (
    DEFAULT_BUDGET,
    DEFAULT_VERTEX_LIMIT,
    OracleInconclusive,
    brute_force_max_cycle,
    verify_gray_cycle,
)
from .words import (
    Alphabet,
    CapacityError,
    GrayCycleError,
    GraySequence,
    ParameterError,
    Word,
    check_capacity,
    ones_parity,
    parity_class,
    all_words,
)

__all__ = ["entrypoint", "main"]

# Ground sets are materialized; past this many words the check would not
# finish in reasonable memory anyway.
GROUND_SET_LIMIT = 1 << 22


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleInconclusive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GrayCycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graycycles",
        description="Maximum-length Gray cycles under the k-character substitution relation.",
    )
    sub = parser.add_subparsers(required=True, metavar="command")

    gen = sub.add_parser("generate", help="build a maximum-length cycle and print it")
    gen.add_argument("-p", "--alphabet-size", dest="p", type=int, default=2)
    gen.add_argument("-n", "--word-length", dest="n", type=int, required=True)
    gen.add_argument("-k", "--substitution-size", dest="k", type=int, required=True)
    gen.add_argument(
        "--parity",
        choices=["even", "odd"],
        help="parity class to cover (binary even-k cycles only; default even)",
    )
    gen.add_argument(
        "--base-variant",
        choices=["gamma", "rho"],
        help="which of the coupled pair to emit (binary odd-k cycles only; default gamma)",
    )
    gen.add_argument(
        "--seed-word",
        help="starting word for the two-term n=k cycle (default all zeros)",
    )
    gen.add_argument("--format", choices=["plain", "json", "delta"], default="plain")
    gen.add_argument(
        "--stream",
        action="store_true",
        help="write terms as they are produced; distance-1 cycles avoid materialization",
    )
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check a word list against the cycle axioms")
    ver.add_argument("-k", "--substitution-size", dest="k", type=int, required=True)
    ver.add_argument(
        "-p",
        "--alphabet-size",
        dest="p",
        type=int,
        help="alphabet size (default: smallest alphabet containing the input digits)",
    )
    ver.add_argument(
        "--ground-set",
        choices=["none", "full", "parity"],
        default="none",
        help="coverage target: all words, the first word's parity class, or skip",
    )
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.add_argument(
        "input",
        nargs="?",
        default="-",
        help="file of words, one per line ('-' for stdin)",
    )
    ver.set_defaults(func=cmd_verify)

    lam = sub.add_parser("lambda", help="print the closed-form maximum cycle length")
    lam.add_argument("-p", "--alphabet-size", dest="p", type=int, default=2)
    lam.add_argument("-n", "--word-length", dest="n", type=int, required=True)
    lam.add_argument("-k", "--substitution-size", dest="k", type=int, required=True)
    lam.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check against the brute-force search (tiny instances only)",
    )
    lam.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    lam.add_argument("--vertex-limit", type=int, default=DEFAULT_VERTEX_LIMIT)
    lam.set_defaults(func=cmd_lambda)

    exa = sub.add_parser("examples", help="rebuild the frozen reference cycles and diff them")
    exa.set_defaults(func=cmd_examples)

    return parser


def cmd_generate(args: argparse.Namespace) -> int:
    p, n, k = args.p, args.n, args.k
    tag = classify(p, n, k, args.parity)
    if args.base_variant is not None and tag.case is not Case.BINARY_ODD:
        raise ParameterError(
            "--base-variant only applies to binary odd-distance cycles"
            f" (regime iii), not regime {tag.case.value}"
        )
    if args.seed_word is not None and tag.case is not Case.BINARY_COMPLEMENT:
        raise ParameterError(
            "--seed-word only applies to the two-term n=k cycle"
            f" (regime ii), not regime {tag.case.value}"
        )
    count = check_capacity(p, n)

    if args.format == "json":
        seq = _build(args, tag)
        payload = {"p": p, "n": n, "k": k, "case": tag.case.value}
        if tag.parity_class is not None:
            payload["parity"] = tag.parity_class.value
        payload["length"] = len(seq)
        payload["terms"] = seq.as_texts()
        print(json.dumps(payload))
        return 0

    if args.stream and k == 1 and tag.case in (Case.NONBINARY, Case.BINARY_ODD):
        # distance-1 cycles have a per-index closed form, so stream without
        # building the whole sequence
        if tag.case is Case.NONBINARY:
            terms: Iterator[Word] = (reflected_term(p, n, i) for i in range(count))
        elif args.base_variant == "rho":
            terms = (rho_base_term(n, i) for i in range(count))
        else:
            terms = (gamma_base_term(n, i) for i in range(count))
    else:
        terms = iter(_build(args, tag))

    if args.format == "plain":
        for w in terms:
            print(w.to_text())
    else:
        _write_delta(terms, k, sys.stdout)
    return 0


def _build(args: argparse.Namespace, tag) -> GraySequence:
    if tag.case is Case.BINARY_ODD and args.base_variant == "rho":
        return build_odd_pair(args.n, args.k).rho
    if tag.case is Case.BINARY_COMPLEMENT and args.seed_word is not None:
        seed = Word.from_text(args.seed_word, Alphabet(2))
        if len(seed) != args.n:
            raise ParameterError(
                f"--seed-word must have length n={args.n}, got {len(seed)}"
            )
        return complement_pair(seed)
    return max_gray_cycle(args.p, args.n, args.k, args.parity)


def _write_delta(terms: Iterable[Word], k: int, out: TextIO) -> None:
    """First word in full, then one line per step: the 1-indexed changed
    positions with their new characters, ascending, 'pos:char' each."""
    prev: Word | None = None
    for w in terms:
        if prev is None:
            out.write(w.to_text() + "\n")
        else:
            changes = [
                f"{pos}:{c}"
                for pos, (b, c) in enumerate(zip(prev.chars, w.chars), start=1)
                if b != c
            ]
            out.write(" ".join(changes) + "\n")
        prev = w


def cmd_verify(args: argparse.Namespace) -> int:
    if args.input == "-":
        raw = sys.stdin.read()
    else:
        with open(args.input, encoding="ascii") as handle:
            raw = handle.read()

    rows: list[tuple[int, str]] = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        text = line.strip()
        if text:
            rows.append((lineno, text))
    if not rows:
        print("error: no words in the input", file=sys.stderr)
        return 2

    if args.p is not None:
        if not 2 <= args.p <= 10:
            raise ParameterError(
                f"the text format covers alphabet sizes 2..10, got {args.p}"
            )
        alphabet = Alphabet(args.p)
    else:
        top = max((int(c) for _, text in rows for c in text if c.isdigit()), default=1)
        alphabet = Alphabet(max(top + 1, 2))

    words: list[Word] = []
    length: int | None = None
    for lineno, text in rows:
        try:
            w = Word.from_text(text, alphabet)
        except GrayCycleError as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2
        if length is None:
            length = len(w)
        elif len(w) != length:
            print(
                f"error: line {lineno}: expected a word of length {length},"
                f" got length {len(w)}",
                file=sys.stderr,
            )
            return 2
        words.append(w)

    assert length is not None
    seq = GraySequence(alphabet.size, length, args.k, tuple(words))

    if args.ground_set == "full":
        if alphabet.size**length > GROUND_SET_LIMIT:
            raise CapacityError(
                f"a full ground set of {alphabet.size}**{length} words is too"
                " large to materialize"
            )
        ground: Iterable[Word] | None = all_words(alphabet, length)
    elif args.ground_set == "parity":
        if alphabet.size != 2:
            raise ParameterError(
                "--ground-set parity only applies to binary alphabets"
            )
        ground = parity_class(length, ones_parity(words[0]))
    else:
        ground = None

    report = verify_gray_cycle(seq, ground)

    if args.format == "json":
        print(json.dumps(report.as_dict()))
    else:
        skipped = ground is None
        print(f"G1 coverage: {_verdict(report.g1_pass, skipped)}"
              + ("" if skipped else f" (ground set: {report.ground_set_size} words)"))
        print(f"G2 adjacency: {_verdict(report.g2_pass)} (k = {args.k})")
        print(f"G3 distinctness: {_verdict(report.g3_pass)}")
        for note in report.notes:
            print(f"note: {note}")
        if report.passed:
            print("result: PASS")
        else:
            tag, where = report.first_violation
            print(f"result: FAIL (first violation: {tag} at {where})")
    return 0 if report.passed else 1


def _verdict(ok: bool, skipped: bool = False) -> str:
    if skipped:
        return "skipped"
    return "pass" if ok else "FAIL"


def cmd_lambda(args: argparse.Namespace) -> int:
    tag = classify(args.p, args.n, args.k)
    value = max_cycle_length(args.p, args.n, args.k)
    line = f"case {tag.case.value}, lambda = {value}"
    if not args.oracle:
        print(line)
        return 0
    result = brute_force_max_cycle(
        args.p, args.n, args.k, budget=args.budget, vertex_limit=args.vertex_limit
    )
    verdict = "MATCH" if result.length == value else "MISMATCH"
    print(f"{line}, oracle = {result.length}, {verdict}")
    return 0 if verdict == "MATCH" else 1


def cmd_examples(args: argparse.Namespace) -> int:
    failures = 0
    for case in golden.CASES:
        produced = case.build().as_texts()
        expected = list(case.expected)
        if produced == expected:
            print(f"{case.label}: ok ({len(produced)} terms)")
            continue
        failures += 1
        limit = min(len(produced), len(expected))
        index = next(
            (i for i in range(limit) if produced[i] != expected[i]), limit
        )
        got = produced[index] if index < len(produced) else "<missing>"
        want = expected[index] if index < len(expected) else "<missing>"
        print(f"{case.label}: FAIL at index {index}: got {got}, expected {want}")
    return 1 if failures else 0


if __name__ == "__main__":
    entrypoint()
