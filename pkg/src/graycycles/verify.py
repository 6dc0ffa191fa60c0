"""Independent checks for claimed Gray cycles.

verify_gray_cycle tests the three cycle axioms directly from definitions:

    G1  coverage      the terms are exactly the ground set
    G2  adjacency     every step, wraparound included, is related
    G3  distinctness  no term repeats

The checks share nothing with the builders, so they double as an oracle for
them.  For tiny instances brute_force_max_cycle goes further and finds the
true maximum cycle length by exhaustive search, independent of any closed
form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable, Sequence

from .words import (
    Alphabet,
    CapacityError,
    GrayCycleError,
    GraySequence,
    ParameterError,
    Parity,
    Word,
    all_words,
    hamming_distance,
    ones_parity,
)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_VERTEX_LIMIT",
    "OracleInconclusive",
    "OracleResult",
    "VerificationReport",
    "brute_force_max_cycle",
    "check_parity_class",
    "neighbor_count",
    "verify_gray_cycle",
]

Relation = Callable[[Word, Word], bool]

# (condition tag, failing index or index pair); a G1 miss where the sequence
# skips ground-set words has no term index, which the None stands for.
Violation = tuple[str, "int | tuple[int, int] | None"]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verify_gray_cycle run."""

    g1_pass: bool
    g2_pass: bool
    g3_pass: bool
    ground_set_size: int
    first_violation: Violation | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return self.g1_pass and self.g2_pass and self.g3_pass

    def as_dict(self) -> dict:
        """JSON-friendly rendering, used by the CLI."""
        if self.first_violation is None:
            violation = None
        else:
            tag, where = self.first_violation
            violation = {"condition": tag, "where": list(where) if isinstance(where, tuple) else where}
        return {
            "passed": self.passed,
            "g1_pass": self.g1_pass,
            "g2_pass": self.g2_pass,
            "g3_pass": self.g3_pass,
            "ground_set_size": self.ground_set_size,
            "first_violation": violation,
            "notes": list(self.notes),
        }


def verify_gray_cycle(
    seq: GraySequence | Sequence[Word],
    ground_set: Iterable[Word] | None = None,
    *,
    k: int | None = None,
    relation: Relation | None = None,
) -> VerificationReport:
    """Check the three cycle axioms and report, never raise, on violations.

    `seq` is either a GraySequence (which supplies k) or any sequence of
    words plus an explicit k.  With no ground set the coverage check is
    vacuous.  A custom relation replaces the distance-k step check, which
    also lifts the uniform-length requirement; that is how cycles under
    other word relations can be checked with the same machinery.

    The terms are scanned in order; when several conditions fail, the
    reported first violation prefers G3 over G2 over G1, since a duplicate
    term usually explains the rest.
    """
    terms = list(seq)
    if not terms:
        raise ParameterError("cannot verify an empty sequence")
    if k is None and isinstance(seq, GraySequence):
        k = seq.k
    notes: list[str] = []

    g3_pass, g3_where = _check_distinct(terms)

    g2_pass, g2_where = True, None
    if relation is None:
        shape_problem = _first_shape_mismatch(terms)
        if shape_problem is not None:
            index, why = shape_problem
            g2_pass, g2_where = False, index
            notes.append(
                f"term {index} {why}; the distance-k relation only compares"
                " words of one length over one alphabet"
            )
        elif k is None:
            raise ParameterError(
                "k is required to verify a plain word sequence against the"
                " distance relation"
            )
        elif not 1 <= k <= len(terms[0]):
            raise ParameterError(
                f"substitution size k={k} must satisfy 1 <= k <= {len(terms[0])}"
            )
        else:
            want = k
            relation = lambda u, v: hamming_distance(u, v) == want
    if g2_pass and relation is not None:
        for i in range(1, len(terms)):
            if not relation(terms[i - 1], terms[i]):
                g2_pass, g2_where = False, i
                break
        if g2_pass and not relation(terms[-1], terms[0]):
            # the wraparound step is pinned on index 0
            g2_pass, g2_where = False, 0

    term_set = set(terms)
    if ground_set is None:
        g1_pass, g1_where = True, None
        ground_size = len(term_set)
        notes.append("no ground set supplied; the coverage check is vacuous")
    else:
        ground = set(ground_set)
        ground_size = len(ground)
        g1_pass, g1_where = True, None
        for i, w in enumerate(terms):
            if w not in ground:
                g1_pass, g1_where = False, i
                notes.append(f"term {i} ({w!r}) lies outside the ground set")
                break
        if g1_pass and term_set != ground:
            missing = min(ground - term_set, key=lambda w: w.chars)
            g1_pass, g1_where = False, None
            notes.append(
                f"{len(ground - term_set)} ground-set words never appear"
                f" (first missing: {missing!r})"
            )

    first_violation: Violation | None = None
    if not g3_pass:
        first_violation = ("G3", g3_where)
    elif not g2_pass:
        first_violation = ("G2", g2_where)
    elif not g1_pass:
        first_violation = ("G1", g1_where)

    return VerificationReport(
        g1_pass=g1_pass,
        g2_pass=g2_pass,
        g3_pass=g3_pass,
        ground_set_size=ground_size,
        first_violation=first_violation,
        notes=tuple(notes),
    )


def _check_distinct(terms: list[Word]) -> tuple[bool, tuple[int, int] | None]:
    seen: dict[Word, int] = {}
    for i, w in enumerate(terms):
        if w in seen:
            return False, (seen[w], i)
        seen[w] = i
    return True, None


def _first_shape_mismatch(terms: list[Word]) -> tuple[int, str] | None:
    first = terms[0]
    for i, w in enumerate(terms[1:], start=1):
        if len(w) != len(first):
            return i, f"has length {len(w)} while term 0 has length {len(first)}"
        if w.alphabet != first.alphabet:
            return i, (
                f"uses alphabet size {w.alphabet.size} while term 0 uses"
                f" size {first.alphabet.size}"
            )
    return None


def check_parity_class(seq: GraySequence | Sequence[Word]) -> str:
    """Common ones-parity of all terms: 'even', 'odd', or 'mixed'."""
    terms = list(seq)
    if not terms:
        raise ParameterError("cannot classify an empty sequence")
    classes = {ones_parity(w) for w in terms}
    if len(classes) > 1:
        return "mixed"
    return classes.pop().value


def neighbor_count(p: int, n: int, k: int) -> int:
    """How many words lie at distance exactly k from any fixed length-n word."""
    Alphabet(p)
    if not 1 <= k <= n:
        raise ParameterError(f"substitution size k={k} must satisfy 1 <= k <= n={n}")
    return comb(n, k) * (p - 1) ** k


DEFAULT_BUDGET = 5_000_000
DEFAULT_VERTEX_LIMIT = 32


class OracleInconclusive(GrayCycleError):
    """The search budget ran out before the instance was settled."""


@dataclass(frozen=True)
class OracleResult:
    """Exact maximum found by brute force, with one witness cycle."""

    length: int
    witness: GraySequence
    nodes: int


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise OracleInconclusive(
                f"search budget exhausted after {self.limit} nodes;"
                " raise the budget for a conclusive answer"
            )


def brute_force_max_cycle(
    p: int,
    n: int,
    k: int,
    *,
    budget: int = DEFAULT_BUDGET,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> OracleResult:
    """Exact maximum cycle length by exhaustive longest-cycle search.

    Considers every word length m from k to n: a cycle's support is uniform
    in length, so the overall maximum over words of length up to n is the
    best single-length maximum.  Two distinct words joined by one edge count
    as a length-2 cycle, since the wraparound step may reuse the edge.

    The search is a depth-first enumeration of simple paths, canonicalized
    so each cycle is explored only from its smallest vertex.  For binary
    alphabets and even k, distance-k steps preserve ones-parity, so the
    graph splits into two parity classes with no edges between them;
    complementing one fixed position is a distance-preserving bijection of
    the classes onto each other, so searching the even class settles both.

    Instances are capped by vertex_limit (words per length) and budget
    (search nodes).  Exhausting the budget raises OracleInconclusive rather
    than returning a truncated answer.
    """
    Alphabet(p)
    if not 1 <= k <= n:
        raise ParameterError(f"substitution size k={k} must satisfy 1 <= k <= n={n}")
    if p**n > vertex_limit:
        raise CapacityError(
            f"{p}**{n} = {p**n} words exceed the oracle's vertex limit of {vertex_limit}"
        )
    alphabet = Alphabet(p)
    counter = _Budget(budget)
    best_length = 0
    best_cycle: list[Word] | None = None
    best_m = k
    for m in range(k, n + 1):
        if p == 2 and k % 2 == 0:
            vertices = [
                w for w in all_words(alphabet, m) if ones_parity(w) is Parity.EVEN
            ]
        else:
            vertices = list(all_words(alphabet, m))
        neighbors = [
            tuple(
                j
                for j, v in enumerate(vertices)
                if j != i and hamming_distance(u, v) == k
            )
            for i, u in enumerate(vertices)
        ]
        length, cycle = _longest_cycle(neighbors, counter)
        if length > best_length:
            best_length = length
            best_cycle = [vertices[i] for i in cycle]
            best_m = m
    assert best_cycle is not None  # every m >= k admits at least one edge
    witness = GraySequence(p, best_m, k, tuple(best_cycle))
    return OracleResult(length=best_length, witness=witness, nodes=counter.used)


def _longest_cycle(neighbors: list[tuple[int, ...]], counter: _Budget) -> tuple[int, list[int]]:
    """Longest simple cycle in an undirected graph given as adjacency lists.

    Every cycle is found from its smallest vertex, visiting only larger
    vertices, so no cycle is enumerated twice.  Length 2 means one edge
    traversed both ways.
    """
    count = len(neighbors)
    neighbor_sets = [frozenset(ns) for ns in neighbors]
    best_length = 0
    best_cycle: list[int] = []
    path: list[int] = []
    on_path = [False] * count

    for start in range(count):
        # only start and larger vertices are usable, so later starts see
        # strictly smaller vertex pools
        if count - start <= best_length:
            break
        path.append(start)
        on_path[start] = True

        def extend(v: int) -> None:
            nonlocal best_length, best_cycle
            counter.spend()
            if len(path) >= 2 and start in neighbor_sets[v] and len(path) > best_length:
                best_length = len(path)
                best_cycle = path.copy()
            for w in neighbors[v]:
                if w > start and not on_path[w]:
                    path.append(w)
                    on_path[w] = True
                    extend(w)
                    path.pop()
                    on_path[w] = False

        extend(start)
        path.pop()
        on_path[start] = False
        if best_length == count:
            break
    return best_length, best_cycle
