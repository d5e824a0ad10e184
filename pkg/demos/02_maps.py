"""
Permutations to binary trees
============================

The Loday-Ronco map psi splits at the largest entry; the Tonks map phi is
psi applied to the inverse permutation. Both come out of the encodings.
"""

from operadlab import decreasing_encoding, evaluate, fibers, inverse, loday_ronco, tonks_map
from operadlab import tonks_classes

pi = (2, 4, 1, 3)
print("psi(2413)      =", loday_ronco(pi))
print("eval f(2413)   =", evaluate(decreasing_encoding(pi)))
print("phi(2413)      =", tonks_map(pi))
print("psi(inverse)   =", loday_ronco(inverse(pi)))

# fibers on S_3: psi identifies 132 with 231, phi identifies 132 with 312
print("psi fibers:", fibers(loday_ronco, 3))
print("phi fibers:", fibers(tonks_map, 3))

# the Tonks classes are counted by the Catalan numbers
for n in range(8):
    print(n, len(tonks_classes(n)))
