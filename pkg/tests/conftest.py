"""Shared helpers: terse word builders and the slow reference oracles."""

from __future__ import annotations

from graycycles import Alphabet, GraySequence, Word, cycle_char


def w(text: str, p: int | None = None) -> Word:
    """Word from digit text; alphabet inferred unless p is given."""
    return Word.from_text(text, None if p is None else Alphabet(p))


def texts(seq) -> list[str]:
    return [str(word) for word in seq]


def greedy_reflected(p: int, n: int) -> list[Word]:
    """Reference construction for the reflected cycle, by the greedy rule.

    Start at the all-zeros word.  Each step advances exactly one character
    one place around the alphabet cycle, choosing the greatest position that
    yields an unseen word.  Deliberately independent of the digit formula.
    """
    alphabet = Alphabet(p)
    current = Word(alphabet, (0,) * n)
    seen = {current}
    out = [current]
    for _ in range(p**n - 1):
        for position in range(n - 1, -1, -1):
            chars = list(current.chars)
            chars[position] = cycle_char(chars[position], alphabet)
            candidate = Word(alphabet, tuple(chars))
            if candidate not in seen:
                break
        else:
            raise AssertionError("greedy construction got stuck")
        seen.add(candidate)
        out.append(candidate)
        current = candidate
    return out


def grid_triples(max_count: int = 4096) -> list[tuple[int, int, int]]:
    """Every (p, n, k) with p in {2, 3, 4}, 1 <= k <= n, p**n <= max_count."""
    out = []
    for p in (2, 3, 4):
        n = 1
        while p**n <= max_count:
            for k in range(1, n + 1):
                out.append((p, n, k))
            n += 1
    return out


def reconstruct_from_delta(lines: list[str], p: int) -> list[str]:
    """Inverse of the CLI delta format, used to check round trips."""
    first = Word.from_text(lines[0], Alphabet(p))
    words = [first]
    for line in lines[1:]:
        chars = list(words[-1].chars)
        for item in line.split():
            pos, _, char = item.partition(":")
            chars[int(pos) - 1] = int(char)
        words.append(Word(Alphabet(p), tuple(chars)))
    return [str(word) for word in words]


def sequence_of(texts_list: list[str], p: int, k: int) -> GraySequence:
    terms = tuple(Word.from_text(t, Alphabet(p)) for t in texts_list)
    return GraySequence(p, len(terms[0]), k, terms)
