"""
Weak order covers and Tamari rotations
======================================

Each right weak cover pi < pi s_i either collapses under phi (the swapped
pair is independent) or moves phi(pi) by exactly one rotation.
"""

from collections import Counter

from operadlab.combinatorics import format_word, right_cover_pairs
from operadlab.verify import classify_cover, run_checks, render_text, swap_rewrite_witness

for pi, rho, i in right_cover_pairs(3):
    c = classify_cover(pi, rho)
    print(f"{format_word(pi)} < {format_word(rho)}: {c.verdict}")

# the local rewrite behind one collapsed and one strict cover
print(swap_rewrite_witness((1, 3, 2), 1))
print(swap_rewrite_witness((1, 2, 3), 1))

verdicts = Counter(type(classify_cover(p, r).verdict).__name__ for p, r, _ in right_cover_pairs(5))
print("n = 5:", dict(verdicts))

# the whole order check, for every n up to 5
print(render_text(run_checks(5, ["order"])), end="")
