"""
A walk through the reflected cycles
===================================

Prints the classical binary cycle with its changed position, the ternary
generalization, and the fixed endpoint words that the larger builders
rely on when they stitch levels together.
"""

from graycycles import binary_reflected, gamma_base, p_ary_reflected, rho_base

# The binary cycle changes exactly one position per step, wraparound
# included.  Mark the changed position with a caret.
cycle = binary_reflected(3)
print("binary, n=3:")
prev = cycle.terms[-1]
for word in cycle.terms:
    changed = next(i for i in range(3) if word.chars[i] != prev.chars[i])
    print(f"  {word}   {' ' * changed}^")
    prev = word

# Same rule over a ternary alphabet, except the changed character moves
# one place around the alphabet cycle (2 steps back to 0) instead of
# flipping.
print("\nternary, n=2:")
print(" ", " ".join(str(word) for word in p_ary_reflected(3, 2)))

# The first and last terms follow a fixed pattern at every length.  The
# coupled variants pin different corners: gamma starts at the all-zeros
# word, rho ends two character changes away from gamma's start.
print("\nendpoints:")
for n in (2, 4, 6, 8):
    g = binary_reflected(n)
    print(f"  n={n}: first {g[0]}, second {g[1]}, last {g[-1]}, next-to-last {g[-2]}")

print("\ncoupled variants at n=3:")
gamma, rho = gamma_base(3), rho_base(3)
print("  gamma:", " ".join(str(word) for word in gamma))
print("  rho:  ", " ".join(str(word) for word in rho))
