"""Builders for maximum-length distance-k cycles, one per parameter regime.

A triple (p, n, k) with p >= 2 and n >= k >= 1 falls in exactly one regime,
and the maximum number of length-n words a distance-k cycle can visit is
known in closed form for each:

    i    p >= 3                     p**n      (all words)
    ii   p = 2, n = k               2         (a word and its complement)
    iii  p = 2, n > k, k odd        2**n      (all words)
    iv   p = 2, n > k, k even       2**(n-1)  (one ones-parity class)

The builders share one mechanism.  Start from a distance-1 seed cycle over
shorter words and repeatedly prepend characters that drift around the
alphabet cycle, one place per step.  The drift adds one changed position to
every step of the inner cycle, wraparound included, so each pass raises the
step distance by the number of prepended positions.  Regimes i and iv
prepend one character per pass; regime iii prepends two at a time to a
coupled pair of cycles whose endpoints interlock.  Induction runs
iteratively bottom-up, so no pass recurses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .reflected import gamma_base, p_ary_reflected, rho_base
from .words import (
    BINARY,
    Alphabet,
    GraySequence,
    ParameterError,
    Parity,
    Word,
    check_capacity,
    cycle_word,
)

__all__ = [
    "Case",
    "CaseTag",
    "OddPair",
    "build_even",
    "build_nonbinary",
    "build_odd_pair",
    "classify",
    "complement_pair",
    "max_cycle_length",
    "max_gray_cycle",
    "odd_pair_levels",
]


class Case(Enum):
    """The four parameter regimes; values are the tags used in CLI output."""

    NONBINARY = "i"
    BINARY_COMPLEMENT = "ii"
    BINARY_ODD = "iii"
    BINARY_EVEN = "iv"


@dataclass(frozen=True)
class CaseTag:
    """Which regime applies, plus the target parity class in regime iv."""

    case: Case
    parity_class: Parity | None = None


def _validate_triple(p: int, n: int, k: int) -> None:
    Alphabet(p)  # rejects p < 2
    if k < 1:
        raise ParameterError(f"substitution size k={k} must be at least 1")
    if n < k:
        raise ParameterError(
            f"words of length n={n} are too short to change k={k} positions per step"
        )


def classify(p: int, n: int, k: int, parity: Parity | str | None = None) -> CaseTag:
    """The unique regime for (p, n, k).

    A parity class may only be requested in regime iv, where it defaults to
    even; anywhere else an explicit parity is a parameter error.
    """
    _validate_triple(p, n, k)
    if parity is not None:
        parity = Parity(parity)
    if p >= 3:
        tag = CaseTag(Case.NONBINARY)
    elif n == k:
        tag = CaseTag(Case.BINARY_COMPLEMENT)
    elif k % 2 == 1:
        tag = CaseTag(Case.BINARY_ODD)
    else:
        return CaseTag(Case.BINARY_EVEN, parity if parity is not None else Parity.EVEN)
    if parity is not None:
        raise ParameterError(
            "a parity class only applies to binary even-distance cycles"
            f" (regime iv), not regime {tag.case.value}"
        )
    return tag


def max_cycle_length(p: int, n: int, k: int) -> int:
    """Closed-form maximum number of words a distance-k cycle can visit."""
    tag = classify(p, n, k)
    count = check_capacity(p, n)
    if tag.case is Case.NONBINARY:
        return count
    if tag.case is Case.BINARY_COMPLEMENT:
        return 2
    if tag.case is Case.BINARY_ODD:
        return count
    return count // 2


def build_nonbinary(p: int, n: int, k: int) -> GraySequence:
    """Distance-k cycle over all p**n words, for alphabets of size 3 or more.

    Each pass prepends to term q*count+r the character (q+r) mod p.  Within
    a block of fixed q the prefix drifts one place per step; across block
    seams and at the wraparound it jumps two places, which still changes the
    position because the alphabet has at least three characters.  That is
    the one spot the binary alphabet cannot support, hence the p >= 3
    precondition.
    """
    if p < 3:
        raise ParameterError(
            "this construction needs an alphabet of size at least 3;"
            " binary alphabets use the odd/even builders"
        )
    _validate_triple(p, n, k)
    check_capacity(p, n)
    alphabet = Alphabet(p)
    seq = p_ary_reflected(p, n - k + 1)
    for distance in range(2, k + 1):
        prev = seq.terms
        terms = tuple(
            Word(alphabet, ((q + r) % p, *body.chars))
            for q in range(p)
            for r, body in enumerate(prev)
        )
        seq = GraySequence(p, seq.n + 1, distance, terms)
    return seq


class OddPair(NamedTuple):
    """The coupled cycles produced by the binary odd-distance builder."""

    gamma: GraySequence
    rho: GraySequence


# Two-character prefixes per quarter, before the per-step drift is applied.
# Both output cycles read their quarters' bodies in the same order:
# gamma, rho, gamma, rho.
_GAMMA_PREFIXES = ((0, 0), (0, 1), (1, 1), (1, 0))
_RHO_PREFIXES = ((1, 0), (1, 1), (0, 1), (0, 0))


def odd_pair_levels(n: int, k: int) -> Iterator[OddPair]:
    """Yield the coupled pair at every induction level, seed pair first.

    Level j holds two distance-(2j+1) cycles over words of length
    n-k+1+2j; the final yield is the (n, k) pair itself.  At every level
    each cycle's first word sits at distance one-more-than-the-level's-step
    from the other cycle's last word, which is exactly the interlock the
    next level's quarter seams need.
    """
    _validate_triple(2, n, k)
    if k % 2 == 0:
        raise ParameterError(f"this builder needs an odd substitution size, got k={k}")
    if n < k + 1:
        raise ParameterError(
            f"words of length n={n} leave no room for the coupled pair at k={k};"
            " n >= k+1 is required"
        )
    check_capacity(2, n)
    seed_length = n - k + 1
    gamma, rho = gamma_base(seed_length), rho_base(seed_length)
    yield OddPair(gamma, rho)
    for distance in range(3, k + 1, 2):
        length = gamma.n + 2
        bodies = (gamma.terms, rho.terms, gamma.terms, rho.terms)
        new_gamma = []
        new_rho = []
        for q in range(4):
            g_hi, g_lo = _GAMMA_PREFIXES[q]
            r_hi, r_lo = _RHO_PREFIXES[q]
            for r, body in enumerate(bodies[q]):
                flip = r & 1
                new_gamma.append(Word(BINARY, (g_hi ^ flip, g_lo ^ flip, *body.chars)))
                new_rho.append(Word(BINARY, (r_hi ^ flip, r_lo ^ flip, *body.chars)))
        gamma = GraySequence(2, length, distance, tuple(new_gamma))
        rho = GraySequence(2, length, distance, tuple(new_rho))
        yield OddPair(gamma, rho)


def build_odd_pair(n: int, k: int) -> OddPair:
    """The coupled distance-k cycle pair over all 2**n binary words (k odd).

    Either component alone is a full-coverage cycle; the pair exists because
    the induction consumes both.
    """
    pair = None
    for pair in odd_pair_levels(n, k):
        pass
    assert pair is not None
    return pair


def build_even(n: int, k: int, parity: Parity | str = Parity.EVEN) -> GraySequence:
    """Distance-k cycle over one ones-parity class of binary words (k even).

    Even-distance steps preserve ones-parity, so no cycle can leave its
    class; covering a whole class is therefore the maximum.  Prepending an
    alternating bit to the distance-(k-1) cycle one length down lands every
    term in the requested class and turns its steps into distance-k steps.
    """
    parity = Parity(parity)
    _validate_triple(2, n, k)
    if k % 2 == 1:
        raise ParameterError(f"this builder needs an even substitution size, got k={k}")
    if n < k + 1:
        raise ParameterError(
            f"words of length n={n} cannot host an even-distance cycle at k={k};"
            " n >= k+1 is required"
        )
    check_capacity(2, n)
    body = build_odd_pair(n - 1, k - 1).gamma
    anchor = 0 if parity is Parity.EVEN else 1
    terms = tuple(
        Word(BINARY, (anchor ^ (i & 1), *w.chars)) for i, w in enumerate(body.terms)
    )
    return GraySequence(2, n, k, terms)


def complement_pair(x: Word) -> GraySequence:
    """The two-term cycle holding a binary word and its complement.

    When n = k every step must change every position, so a cycle can visit
    at most two words.
    """
    if x.alphabet.size != 2:
        raise ParameterError(
            f"the complement pair is a binary construction, got alphabet size {x.alphabet.size}"
        )
    if len(x) == 0:
        raise ParameterError("the seed word must be non-empty")
    return GraySequence(2, len(x), len(x), (x, cycle_word(x)))


def max_gray_cycle(
    p: int, n: int, k: int, parity: Parity | str | None = None
) -> GraySequence:
    """A maximum-length distance-k cycle for (p, n, k).

    Dispatches on classify(p, n, k).  Regime iii returns the gamma component
    of the coupled pair; regime ii seeds with the all-zeros word; regime iv
    honours the requested parity class (default even).
    """
    tag = classify(p, n, k, parity)
    check_capacity(p, n)
    if tag.case is Case.NONBINARY:
        return build_nonbinary(p, n, k)
    if tag.case is Case.BINARY_COMPLEMENT:
        return complement_pair(Word(BINARY, (0,) * n))
    if tag.case is Case.BINARY_ODD:
        return build_odd_pair(n, k).gamma
    assert tag.parity_class is not None
    return build_even(n, k, tag.parity_class)
