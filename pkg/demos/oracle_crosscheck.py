"""
Brute force against the closed form
===================================

At desk scale the maximum cycle length can be found by exhaustive
search.  This runs the exact longest-cycle search on every triple small
enough to finish instantly and compares it with the formula, then shows
what happens when the search is cut off early.
"""

from graycycles import (
    OracleInconclusive,
    brute_force_max_cycle,
    max_cycle_length,
)

print(f"{'p':>2} {'n':>2} {'k':>2} {'formula':>8} {'search':>7}  witness")
for p, n, k in [
    (2, 2, 1), (2, 3, 1), (2, 3, 2), (2, 3, 3),
    (2, 4, 2), (2, 4, 4), (3, 2, 1), (3, 2, 2),
]:
    closed = max_cycle_length(p, n, k)
    result = brute_force_max_cycle(p, n, k)
    verdict = "MATCH" if result.length == closed else "MISMATCH"
    head = " ".join(str(word) for word in result.witness[:4])
    tail = "" if len(result.witness) <= 4 else " ..."
    print(f"{p:>2} {n:>2} {k:>2} {closed:>8} {result.length:>7}  {head}{tail}  {verdict}")

# The search spends a node budget; when it runs out, the answer so far
# is a lower bound and the oracle refuses to call it a maximum.
print("\nwith a 10-node budget on (2, 4, 1):")
try:
    brute_force_max_cycle(2, 4, 1, budget=10)
except OracleInconclusive as exc:
    print(f"  inconclusive, as it should be: {exc}")
