"""
One cycle from each parameter regime
====================================

Builds a maximum cycle for one (p, n, k) in each of the four regimes,
verifies the three cycle conditions against the proper ground set, and
shows how the closed-form length comes out.
"""

from graycycles import (
    BINARY,
    Alphabet,
    Case,
    Parity,
    Word,
    all_words,
    classify,
    cycle_word,
    max_cycle_length,
    max_gray_cycle,
    parity_class,
    verify_gray_cycle,
)

SAMPLES = [
    (3, 3, 2),   # alphabet size 3 or more: every word joins in
    (2, 4, 4),   # binary, k = n: just a word and its complement
    (2, 5, 3),   # binary, odd k < n: still every word
    (2, 5, 2),   # binary, even k < n: one ones-parity class only
]

for p, n, k in SAMPLES:
    tag = classify(p, n, k)
    seq = max_gray_cycle(p, n, k)

    if tag.case is Case.BINARY_COMPLEMENT:
        zero = Word(BINARY, (0,) * n)
        ground = [zero, cycle_word(zero)]
        ground_name = "a word and its complement"
    elif tag.case is Case.BINARY_EVEN:
        ground = parity_class(n, Parity.EVEN)
        ground_name = "the even ones-parity class"
    else:
        ground = all_words(Alphabet(p), n)
        ground_name = f"all words of length {n}"

    report = verify_gray_cycle(seq, ground)
    head = " ".join(str(word) for word in seq.terms[:6])
    tail = "" if len(seq.terms) <= 6 else " ..."
    print(f"p={p} n={n} k={k}  regime {tag.case.value}")
    print(f"  ground set: {ground_name}")
    print(f"  length {len(seq.terms)} (closed form {max_cycle_length(p, n, k)}),"
          f" verified: {report.passed}")
    print(f"  {head}{tail}\n")
