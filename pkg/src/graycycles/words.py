"""Alphabets, fixed-length words, and claimed Gray sequences.

Characters are plain integers 0..p-1 over an alphabet of size p.  Words are
immutable and hashable.  Positions are 1-indexed in documentation and error
messages; internal storage is the usual 0-indexed tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterator

__all__ = [
    "Alphabet",
    "BINARY",
    "CapacityError",
    "DimensionError",
    "DomainError",
    "GrayCycleError",
    "GraySequence",
    "MAX_COUNT",
    "ParameterError",
    "Parity",
    "Word",
    "all_words",
    "check_capacity",
    "cycle_char",
    "cycle_word",
    "hamming_distance",
    "ones_parity",
    "parity_class",
    "substitution_related",
    "xor_words",
]


class GrayCycleError(Exception):
    """Base class for every error this package raises on purpose."""


class ParameterError(GrayCycleError, ValueError):
    """A parameter combination violates an operation's precondition."""


class DimensionError(GrayCycleError, ValueError):
    """Two words that must share length and alphabet do not."""


class DomainError(GrayCycleError, ValueError):
    """A character lies outside its alphabet."""


class CapacityError(GrayCycleError, OverflowError):
    """The requested instance exceeds the 64-bit sequence-count guard."""


# Sequence lengths and indices must stay below 2**63 so that they remain
# exact in any 64-bit consumer of the CLI output.
MAX_COUNT = 2**63 - 1


def check_capacity(p: int, n: int) -> int:
    """Return p**n, or raise CapacityError when it exceeds the 64-bit guard."""
    count = p**n
    if count > MAX_COUNT:
        raise CapacityError(f"{p}**{n} = {count} does not fit in a 64-bit count")
    return count


class Parity(str, Enum):
    """Parity of the number of 1 characters in a binary word."""

    EVEN = "even"
    ODD = "odd"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Alphabet:
    """An ordered alphabet whose characters are the integers 0..size-1."""

    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 2:
            raise ParameterError(
                f"an alphabet needs an integer size of at least 2, got {self.size!r}"
            )

    def check_char(self, c: int) -> int:
        if not 0 <= c < self.size:
            raise DomainError(
                f"character {c!r} is outside the alphabet 0..{self.size - 1}"
            )
        return c

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def __repr__(self) -> str:
        return f"Alphabet({self.size})"


@dataclass(frozen=True)
class Word:
    """A fixed-length word; position i (1-indexed) holds chars[i-1]."""

    alphabet: Alphabet
    chars: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "chars", tuple(self.chars))
        p = self.alphabet.size
        for c in self.chars:
            if not 0 <= c < p:
                raise DomainError(f"character {c!r} is outside the alphabet 0..{p - 1}")

    @classmethod
    def from_text(cls, text: str, alphabet: Alphabet | None = None) -> "Word":
        """Parse the digit rendering of a word, one decimal digit per character.

        The text format covers alphabet sizes up to 10.  When no alphabet is
        given, the smallest one containing every digit is used (at least
        binary).
        """
        if not all(ch.isascii() and ch.isdigit() for ch in text):
            raise ParameterError(
                f"cannot parse word {text!r}: only the digits 0-9 are allowed"
            )
        chars = tuple(int(ch) for ch in text)
        if alphabet is None:
            alphabet = Alphabet(max(max(chars, default=1) + 1, 2))
        if alphabet.size > 10:
            raise ParameterError(
                "the digit text format only covers alphabet sizes up to 10"
            )
        return cls(alphabet, chars)

    def to_text(self) -> str:
        if self.alphabet.size > 10:
            raise ParameterError(
                "the digit text format only covers alphabet sizes up to 10"
            )
        return "".join(str(c) for c in self.chars)

    def char_at(self, position: int) -> int:
        """Character at a 1-indexed position."""
        if not 1 <= position <= len(self.chars):
            raise ParameterError(
                f"position {position} is outside 1..{len(self.chars)}"
            )
        return self.chars[position - 1]

    def __len__(self) -> int:
        return len(self.chars)

    def __iter__(self) -> Iterator[int]:
        return iter(self.chars)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        if self.alphabet.size <= 10:
            return f"Word({self.to_text()!r}, p={self.alphabet.size})"
        return f"Word({self.chars!r}, p={self.alphabet.size})"


BINARY = Alphabet(2)


def _same_shape(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise DimensionError(
            f"alphabet mismatch: size {u.alphabet.size} vs size {v.alphabet.size}"
        )
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")


def hamming_distance(u: Word, v: Word) -> int:
    """Number of positions at which u and v differ."""
    _same_shape(u, v)
    return sum(a != b for a, b in zip(u.chars, v.chars))


def substitution_related(u: Word, v: Word, k: int) -> bool:
    """Whether v arises from u by changing exactly k positions.

    This is the k-character substitution relation: symmetric, irreflexive,
    and only defined between words of the same length.
    """
    _same_shape(u, v)
    if not 1 <= k <= len(u):
        raise ParameterError(
            f"substitution size k={k} must satisfy 1 <= k <= {len(u)}"
        )
    return hamming_distance(u, v) == k


def cycle_char(c: int, alphabet: Alphabet, steps: int = 1) -> int:
    """Advance a character some number of places around the alphabet's cycle.

    One step sends c to c+1 and wraps size-1 back to 0.  Negative and
    oversized step counts reduce mod the alphabet size, so steps=-2 is the
    same as steps=size-2.
    """
    alphabet.check_char(c)
    return (c + steps) % alphabet.size


def cycle_word(w: Word, steps: int = 1) -> Word:
    """Apply cycle_char with the same step count at every position.

    On the binary alphabet one step is complementation.  The empty word is
    fixed.
    """
    p = w.alphabet.size
    return Word(w.alphabet, tuple((c + steps) % p for c in w.chars))


def ones_parity(w: Word) -> Parity:
    """Parity of the number of 1 characters; binary alphabets only."""
    _require_binary(w.alphabet)
    return Parity.EVEN if w.chars.count(1) % 2 == 0 else Parity.ODD


def xor_words(u: Word, v: Word) -> Word:
    """Positionwise sum mod 2; xor_words(u, u) is the all-zero word."""
    _require_binary(u.alphabet)
    _same_shape(u, v)
    return Word(u.alphabet, tuple(a ^ b for a, b in zip(u.chars, v.chars)))


def _require_binary(alphabet: Alphabet) -> None:
    if alphabet.size != 2:
        raise ParameterError(
            f"this operation is defined on the binary alphabet only, got size {alphabet.size}"
        )


def all_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """All words of the given length, in lexicographic order."""
    if length < 0:
        raise ParameterError(f"word length {length} must be non-negative")
    for chars in product(range(alphabet.size), repeat=length):
        yield Word(alphabet, chars)


def parity_class(length: int, parity: Parity | str) -> Iterator[Word]:
    """All binary words of the given length with the given ones-parity."""
    parity = Parity(parity)
    for w in all_words(BINARY, length):
        if ones_parity(w) is parity:
            yield w


@dataclass(frozen=True)
class GraySequence:
    """An indexed cycle of equal-length words claimed to step by distance k.

    Construction checks only the structural invariants: the parameters are in
    range and every term is a length-n word over the size-p alphabet.
    Whether the distance claim holds is the verifier's business, so duplicate
    terms are deliberately representable.
    """

    p: int
    n: int
    k: int
    terms: tuple[Word, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        if not isinstance(self.p, int) or self.p < 2:
            raise ParameterError(f"alphabet size p={self.p!r} must be an integer >= 2")
        if self.n < 1:
            raise ParameterError(f"word length n={self.n} must be at least 1")
        if not 1 <= self.k <= self.n:
            raise ParameterError(
                f"substitution size k={self.k} must satisfy 1 <= k <= n={self.n}"
            )
        if not self.terms:
            raise ParameterError("a Gray sequence holds at least one term")
        for w in self.terms:
            if w.alphabet.size != self.p:
                raise DimensionError(
                    f"term {w!r} uses alphabet size {w.alphabet.size}, sequence says {self.p}"
                )
            if len(w) != self.n:
                raise DimensionError(
                    f"term {w!r} has length {len(w)}, sequence says {self.n}"
                )

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.terms)

    def __getitem__(self, index):
        return self.terms[index]

    def as_texts(self) -> list[str]:
        """The terms in the digit text format, in order."""
        return [w.to_text() for w in self.terms]

    def __repr__(self) -> str:
        return (
            f"GraySequence(p={self.p}, n={self.n}, k={self.k},"
            f" {len(self.terms)} terms)"
        )
