"""
Independent reference implementations used to freeze expected values.

Nothing here imports the code under test except the tree constructors, and
each oracle takes a different route from the library code it checks.
"""

from itertools import combinations

from operadlab.trees import LEAF, Node


def rank_standardize(word):
    # rank of each letter = number of letters not exceeding it
    return tuple(sum(1 for y in word if y <= x) for x in word)


def brute_inversions(perm):
    return sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])


def table_inverse(perm):
    return tuple(sorted(range(1, len(perm) + 1), key=lambda k: perm[k - 1]))


def value_inversions(perm):
    """Pairs of values (a, b), a < b, with b standing left of a."""
    pos = {v: k for k, v in enumerate(perm)}
    return {(a, b) for a, b in combinations(sorted(perm), 2) if pos[b] < pos[a]}


def weak_leq_by_inversions(pi, rho):
    return value_inversions(pi) <= value_inversions(rho)


def right_arm_vector(t):
    """Right subtree size of every internal node, in in-order."""
    out = []

    def walk(s):
        if s == LEAF:
            return
        walk(s.left)
        out.append(s.right.internal_nodes)
        walk(s.right)

    walk(t)
    return out


def tamari_leq_by_vectors(t1, t2):
    return all(a <= b for a, b in zip(right_arm_vector(t1), right_arm_vector(t2)))


def string_graft(tree_text, i, sub_text):
    """Replace the i-th '*' of a tree string by another tree string."""
    seen = 0
    for k, ch in enumerate(tree_text):
        if ch == "*":
            seen += 1
            if seen == i:
                return tree_text[:k] + sub_text + tree_text[k + 1:]
    raise IndexError(i)


def string_eval(term_text):
    """Evaluate a canonical term string to a tree string by string surgery."""
    text = term_text
    if text.startswith("2^"):
        return "(*,*)"
    # strip outer parens and split "(A o_n B)" at the top level
    body = text[1:-1]
    depth = 0
    for k, ch in enumerate(body):
        depth += ch == "("
        depth -= ch == ")"
        if depth == 0 and body.startswith(" o_", k):
            head = body[:k]
            rest = body[k + 3:]
            n_text, arg = rest.split(" ", 1)
            return string_graft(string_eval(head), int(n_text), string_eval(arg))
    raise ValueError(term_text)


def gap_merge_tree(perm):
    """Bracket x_1 ... x_{n+1} by composing at gap perm[0], then perm[1], ...

    Gap g sits between the blocks holding x_g and x_{g+1}.
    """
    n = len(perm)
    blocks = [LEAF] * (n + 1)
    gaps = list(range(1, n + 1))  # gaps[k] separates blocks[k] and blocks[k+1]
    for g in perm:
        k = gaps.index(g)
        blocks[k:k + 2] = [Node(blocks[k], blocks[k + 1])]
        del gaps[k]
    return blocks[0]


def cartesian_tree(perm):
    """Max-rooted Cartesian tree shape via the classic stack construction."""
    n = len(perm)
    left = [None] * n
    right = [None] * n
    stack = []
    for k in range(n):
        last = None
        while stack and perm[stack[-1]] < perm[k]:
            last = stack.pop()
        left[k] = last
        if stack:
            right[stack[-1]] = k
        stack.append(k)

    def build(k):
        if k is None:
            return LEAF
        return Node(build(left[k]), build(right[k]))

    return build(stack[0]) if stack else LEAF


def catalan_by_recurrence(n):
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[k] * c[m - 1 - k] for k in range(m)))
    return c[n]
