"""
operadlab: permutations, planar binary trees and the free non-symmetric,
non-unital operad on one binary generator.

The Tonks vertex map is ``tonks_map`` (head-insertion encoding of the
reversed permutation, evaluated); the Loday-Ronco map is ``loday_ronco``
(equal to the evaluated decreasing encoding). ``operadlab.verify`` checks
their identities, lemmas and order preservation exhaustively at small sizes.
"""

from .combinatorics import (
    as_permutation,
    as_word,
    format_word,
    insertion_index,
    inverse,
    inversions,
    parse_word,
    reverse,
    split_below_above,
    standardize,
    weak_covers_left,
    weak_covers_right,
    weak_leq,
)
from .encodings import (
    decreasing_encoding,
    f_normalization,
    g_map,
    h_root_decomposition,
    head_insertion,
    u_count,
)
from .maps import (
    TonksClassPartition,
    fibers,
    loday_ronco,
    phihat,
    tonks_classes,
    tonks_independent,
    tonks_map,
    varphi,
)
from .terms import (
    Comp,
    Gen,
    RewriteStep,
    RootDecomposition,
    Term,
    apply_rewrite,
    compose,
    eq_mod_I,
    evaluate,
    format_term,
    is_l_factor,
    normalize_l_factor,
    parse_term,
)
from .trees import (
    LEAF,
    BinaryTree,
    Leaf,
    Node,
    enumerate_trees,
    graft_at,
    graft_root,
    parse_tree,
    rotations,
    tamari_leq,
)

__version__ = "0.1.0"
