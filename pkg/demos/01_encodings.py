"""
Encoding words as operadic terms
================================

Two ways of turning a word into a term built from binary generators and
partial compositions, and what the rewrite calculus does with them.
"""

from operadlab import decreasing_encoding, evaluate, format_term, head_insertion
from operadlab.terms import normalize_l_factor, rebuild, replay

# head insertion reads 312 left to right, grafting each letter at its rank
h = head_insertion("312")
print("h(312) =", format_term(h))

# the decreasing encoding inserts 3, then 2, then 1
f = decreasing_encoding("312")
print("f(312) =", format_term(f))

# evaluation forgets the indices and leaves a planar binary tree
print("eval h =", evaluate(h))
print("eval f =", evaluate(f))

###############################################################################
# Root decomposition by rewriting
# -------------------------------
# An l-factor rewrites into (2^i o_2 right) o_1 left, where i is the first
# letter. Every step of the trace is an instance of an associativity axiom.

t = head_insertion("2413")
decomposition, trace = normalize_l_factor(t)
for step in trace:
    print("  ", step)
print("normal form:", format_term(rebuild(decomposition)))
assert replay(t, trace) == rebuild(decomposition)
