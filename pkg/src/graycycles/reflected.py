"""Reflected Gray cycles over p characters, plus two derived base cycles.

Everything here steps by distance 1.  The cycles come from a closed digit
formula: write the index i in base p as digits a_1..a_n (most significant
first, with a_0 = 0); the word at index i then has character
(a_j - a_{j-1}) mod p at position j.  Consecutive words, wraparound
included, differ in exactly one position, and the changed character always
advances one place around the alphabet's cycle.  The formula is O(n) per
term, so any single term can be produced without materializing the cycle;
the test suite checks it against the greedy maximum-position construction.

The two base cycles are binary rearrangements used as induction seeds by
the builders in `constructions`.  They come in a coupled pair, labeled
gamma (index reversal, starts at the all-zeros word) and rho (index shift,
starts at 10...0).
"""

from __future__ import annotations

from .words import Alphabet, GraySequence, ParameterError, Word, check_capacity

__all__ = [
    "binary_reflected",
    "gamma_base",
    "gamma_base_term",
    "p_ary_reflected",
    "reflected_term",
    "rho_base",
    "rho_base_term",
]


def _checked_count(p: int, n: int) -> int:
    Alphabet(p)  # rejects p < 2
    if n < 1:
        raise ParameterError(f"word length n={n} must be at least 1")
    return check_capacity(p, n)


def reflected_term(p: int, n: int, index: int) -> Word:
    """The index-th word of the p-ary reflected cycle, by the digit formula."""
    count = _checked_count(p, n)
    if not 0 <= index < count:
        raise ParameterError(f"index {index} is outside 0..{count - 1}")
    digits = [0] * n
    rest = index
    for j in range(n - 1, -1, -1):
        rest, digits[j] = divmod(rest, p)
    chars = []
    prev = 0
    for d in digits:
        chars.append((d - prev) % p)
        prev = d
    return Word(Alphabet(p), tuple(chars))


def p_ary_reflected(p: int, n: int) -> GraySequence:
    """The full reflected cycle over all p**n words of length n."""
    count = _checked_count(p, n)
    terms = tuple(reflected_term(p, n, i) for i in range(count))
    return GraySequence(p, n, 1, terms)


def binary_reflected(n: int) -> GraySequence:
    """The classical reflected binary Gray cycle over all 2**n words."""
    return p_ary_reflected(2, n)


def gamma_base_term(n: int, index: int) -> Word:
    """Term of gamma_base(n) without materializing the cycle.

    gamma is the binary reflected cycle traversed backwards from its first
    word, which keeps it a distance-1 cycle while moving the wraparound
    seam.
    """
    count = _checked_count(2, n)
    if not 0 <= index < count:
        raise ParameterError(f"index {index} is outside 0..{count - 1}")
    return reflected_term(2, n, (count - index) % count)


def rho_base_term(n: int, index: int) -> Word:
    """Term of rho_base(n) without materializing the cycle.

    rho is the binary reflected cycle rotated one place, so it starts at the
    reflected cycle's last word, 10...0.
    """
    count = _checked_count(2, n)
    if not 0 <= index < count:
        raise ParameterError(f"index {index} is outside 0..{count - 1}")
    return reflected_term(2, n, (index - 1) % count)


def gamma_base(n: int) -> GraySequence:
    """The reversal-derived base cycle; starts at 0...0, ends at 0...01.

    Together with rho_base(n) it forms the coupled seed pair for the binary
    odd-distance builder: each cycle's first word sits at distance 2 from
    the other cycle's last word.
    """
    count = _checked_count(2, n)
    terms = tuple(gamma_base_term(n, i) for i in range(count))
    return GraySequence(2, n, 1, terms)


def rho_base(n: int) -> GraySequence:
    """The shift-derived base cycle; starts at 10...0, ends at 10...01 (n >= 2)."""
    count = _checked_count(2, n)
    terms = tuple(rho_base_term(n, i) for i in range(count))
    return GraySequence(2, n, 1, terms)
