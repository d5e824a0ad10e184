"""
Exhaustive verification of the identities, lemmas and order-theoretic claims
relating the permutation maps, the encodings and the rewrite calculus.

Every ``verify_*`` function returns a :class:`VerificationReport`. Reports
for the same check merge associatively (``a.merge(b)``) and keep their
failures sorted, so the merged result does not depend on evaluation order.
"""

from __future__ import annotations

import itertools
import random
import time
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Optional, Union

from scipy.cluster.hierarchy import DisjointSet

from .combinatorics import (
    Permutation,
    as_permutation,
    as_word,
    format_word,
    insertion_index,
    inverse,
    permutations,
    reverse,
    right_cover_pairs,
    weak_upset,
)
from .encodings import (
    decreasing_encoding,
    f_normalization_trace,
    head_insertion,
    h_root_decomposition,
)
from .errors import NotACoverError, ResourceLimitError, WordError
from .maps import (
    DEFAULT_MAX_CLASSES_N,
    fibers,
    loday_ronco,
    phihat,
    tonks_classes,
    tonks_independent,
    tonks_map,
    varphi,
)
from .poset import Poset, tamari_order
from .terms import (
    Comp,
    Gen,
    RewriteStep,
    Term,
    apply_rewrite,
    applicable_steps,
    enumerate_terms,
    eq_mod_I,
    eval_labeled,
    evaluate,
    format_term,
    is_l_factor,
    normalize_l_factor,
    random_term,
    rebuild,
    shape_key,
    subterm_at,
    _replace_at,
)
from .trees import LEAF, BinaryTree, catalan, enumerate_trees, rotations, tamari_leq

__all__ = [
    "Collapsed", "StrictRotation", "CoverClassification", "classify_cover",
    "SwapWitness", "swap_rewrite_witness", "check_local_indices",
    "VerificationReport", "verify_identities", "verify_order_preservation",
    "verify_classes", "verify_quotient", "quotient_poset", "verify_local_indices",
    "verify_soundness_fuzz", "verify_normalization", "verify_completeness",
    "verify_monotonicity", "run_checks", "CHECKS", "DEFAULT_CHECKS", "DEFAULT_MAX_N",
    "render_text", "render_tsv",
]

DEFAULT_MAX_N = DEFAULT_MAX_CLASSES_N


# --- cover classification ------------------------------------------------

@dataclass(frozen=True)
class Collapsed:
    def __str__(self) -> str:
        return "collapsed"


@dataclass(frozen=True)
class StrictRotation:
    tree_from: BinaryTree
    tree_to: BinaryTree

    def __str__(self) -> str:
        return f"rotation {self.tree_from} -> {self.tree_to}"


Verdict = Union[Collapsed, StrictRotation]


@dataclass(frozen=True)
class CoverClassification:
    pi: Permutation
    rho: Permutation
    position: int
    verdict: Verdict


def _cover_position(pi: Permutation, rho: Permutation) -> int:
    if len(pi) == len(rho):
        diff = [k for k in range(len(pi)) if pi[k] != rho[k]]
        if len(diff) == 2 and diff[1] == diff[0] + 1:
            i = diff[0]
            if pi[i] == rho[i + 1] and pi[i + 1] == rho[i] and pi[i] < pi[i + 1]:
                return i + 1
    raise NotACoverError(f"{format_word(rho)} is not a right weak cover of {format_word(pi)}")


def classify_cover(pi: Iterable[int] | str, rho: Iterable[int] | str) -> CoverClassification:
    """Collapsed when the swapped pair is Tonks-independent, else a rotation ``phi(pi) -> phi(rho)``."""
    pi, rho = as_permutation(pi), as_permutation(rho)
    i = _cover_position(pi, rho)
    if tonks_independent(pi, i):
        verdict: Verdict = Collapsed()
    else:
        verdict = StrictRotation(tonks_map(pi), tonks_map(rho))
    return CoverClassification(pi, rho, i, verdict)


@dataclass(frozen=True)
class SwapWitness:
    """Local rewriting behind one cover ``pi < rho = pi s_i``.

    For an independent pair, ``steps[0]`` is a single assoc2 step taking the
    encoding of ``reverse(rho)`` to the encoding of ``reverse(pi)``. For a
    dependent pair, ``steps`` are assoc1 steps (on the encodings of
    ``reverse(pi)`` and ``reverse(rho)``, possibly none when the suffix after
    the pair is empty) after which the two terms differ only at ``local_path``.
    """

    independent: bool
    steps: tuple[RewriteStep, ...]
    local_path: tuple[str, ...] = ()


def swap_rewrite_witness(pi: Permutation, i: int) -> SwapWitness:
    """Compute the rewrite steps that realise the cover ``pi s_i`` on encodings."""
    # the pair sits i - 1 insertions below the root of the encoding
    path = ("head",) * (i - 1)
    rho_term = head_insertion(reverse(pi[:i - 1] + (pi[i], pi[i - 1]) + pi[i + 1:]))
    pi_term = head_insertion(reverse(pi))
    if tonks_independent(pi, i):
        node = subterm_at(rho_term, path)
        step = RewriteStep("assoc2", "ltr", path, node.head.position, node.position)
        return SwapWitness(True, (step,))
    if i == len(pi) - 1:
        return SwapWitness(False, (), path)
    steps = []
    for term in (pi_term, rho_term):
        node = subterm_at(term, path)
        steps.append(RewriteStep("assoc1", "ltr", path, node.head.position, node.position))
    return SwapWitness(False, tuple(steps), path + ("arg",))


def _check_swap_witness(pi: Permutation, rho: Permutation, i: int) -> Optional[str]:
    w = swap_rewrite_witness(pi, i)
    pi_term, rho_term = head_insertion(reverse(pi)), head_insertion(reverse(rho))
    if w.independent:
        if apply_rewrite(rho_term, w.steps[0]) != pi_term:
            return "assoc2 step does not identify the two encodings"
        return None
    if w.steps:
        pi_term = apply_rewrite(pi_term, w.steps[0])
        rho_term = apply_rewrite(rho_term, w.steps[1])
    local_pi, local_rho = subterm_at(pi_term, w.local_path), subterm_at(rho_term, w.local_path)
    if _replace_at(pi_term, w.local_path, local_rho) != rho_term:
        return "rewritten encodings differ outside the local subterm"
    if evaluate(local_rho) not in rotations(evaluate(local_pi)):
        return "local subterms do not differ by one rotation"
    return None


# --- reports -------------------------------------------------------------

@dataclass
class VerificationReport:
    check: str
    n_min: int
    n_max: int
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: VerificationReport) -> VerificationReport:
        if other.check != self.check:
            raise ValueError(f"cannot merge {self.check!r} with {other.check!r}")
        return VerificationReport(
            self.check, min(self.n_min, other.n_min), max(self.n_max, other.n_max),
            self.instances + other.instances, sorted(self.failures + other.failures),
            self.elapsed + other.elapsed)

    @property
    def n_label(self) -> str:
        return str(self.n_min) if self.n_min == self.n_max else f"{self.n_min}..{self.n_max}"


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self.start
        self.report.failures.sort()
        return False


def render_text(reports: Iterable[VerificationReport], max_failures: int = 20) -> str:
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status}  {r.check:<16} n={r.n_label:<6} instances={r.instances:<8}"
                     f" failures={len(r.failures)}")
        for f in r.failures[:max_failures]:
            lines.append(f"      {f}")
        if len(r.failures) > max_failures:
            lines.append(f"      ... {len(r.failures) - max_failures} more")
    return "\n".join(lines) + "\n"


def render_tsv(reports: Iterable[VerificationReport]) -> str:
    lines = ["check\tn\tinstances\tfailures"]
    lines += [f"{r.check}\t{r.n_label}\t{r.instances}\t{len(r.failures)}" for r in reports]
    return "\n".join(lines) + "\n"


def _guard(n: int, max_n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the limit {max_n}")


def _w(p) -> str:
    return format_word(p) or "∅"


# --- checks --------------------------------------------------------------

def verify_identities(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Four-way agreement of the Tonks recursions, psi = eval(f), phi(pi) = psi(pi^-1),
    the l-factor property of h and both root-decomposition lemmas, on all of S_n."""
    _guard(n, max_n)
    report = VerificationReport("identities", n, n)
    with _Timer(report):
        for pi in permutations(n):
            report.instances += 1
            report.failures.extend(f"{_w(pi)}: {msg}" for msg in _identity_failures(pi))
    return report


def _identity_failures(pi: Permutation) -> list[str]:
    out = []
    phi = tonks_map(pi)
    if not phi == phihat(pi) == varphi(pi):
        out.append(f"tonks recursions disagree: g={phi} phihat={phihat(pi)} varphi={varphi(pi)}")
    psi = loday_ronco(pi)
    if pi and psi != evaluate(decreasing_encoding(pi)):
        out.append(f"psi={psi} differs from eval(f)={evaluate(decreasing_encoding(pi))}")
    if phi != loday_ronco(inverse(pi)):
        out.append(f"phi={phi} differs from psi(inverse)={loday_ronco(inverse(pi))}")
    if not pi:
        if phi != LEAF or psi != LEAF:
            out.append("empty permutation must map to the trivial tree")
        return out
    h = head_insertion(pi)
    if is_l_factor(h) != pi[0] or h.indices != frozenset(pi):
        out.append(f"h={format_term(h)} is not an l-factor rooted at {pi[0]}")
    if not eq_mod_I(h, rebuild(h_root_decomposition(pi))):
        out.append("h root decomposition is not congruent to h")
    f_dec, _ = f_normalization_trace(pi)
    f = decreasing_encoding(pi)
    k = pi.index(len(pi))
    if not eq_mod_I(f, rebuild(f_dec)) or f_dec.root_index != len(pi):
        out.append("f normalization is not congruent to f")
    for side, sub in ((f_dec.left, pi[:k]), (f_dec.right, pi[k + 1:])):
        if (side is None) != (not sub) or (sub and not eq_mod_I(side, decreasing_encoding(sub))):
            out.append(f"f normalization side for {_w(sub)} is wrong")
    return out


def verify_order_preservation(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Every right weak cover either collapses (independent pair) or lifts to
    exactly one Tamari rotation (dependent pair), with the matching local
    rewrite witness on the encodings."""
    _guard(n, max_n)
    report = VerificationReport("order", n, n)
    with _Timer(report):
        for pi, rho, i in right_cover_pairs(n):
            report.instances += 1
            c = classify_cover(pi, rho)
            t_pi, t_rho = tonks_map(pi), tonks_map(rho)
            tag = f"{_w(pi)} < {_w(rho)}"
            if not tamari_leq(t_pi, t_rho):
                report.failures.append(f"{tag}: {t_pi} !<= {t_rho}")
            if isinstance(c.verdict, Collapsed):
                if t_pi != t_rho:
                    report.failures.append(f"{tag}: independent swap changed the tree")
            else:
                v = c.verdict
                if (v.tree_from, v.tree_to) != (t_pi, t_rho) or v.tree_to not in rotations(v.tree_from):
                    report.failures.append(f"{tag}: dependent swap is not one rotation")
            problem = _check_swap_witness(pi, rho, i)
            if problem:
                report.failures.append(f"{tag}: {problem}")
    return report


def verify_monotonicity(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """weak_leq(pi, rho) implies tamari_leq(phi(pi), phi(rho)) on all comparable pairs."""
    _guard(n, max_n)
    report = VerificationReport("monotone", n, n)
    with _Timer(report):
        for pi in permutations(n):
            for rho in sorted(weak_upset(pi)):
                report.instances += 1
                if not tamari_leq(tonks_map(pi), tonks_map(rho)):
                    report.failures.append(f"{_w(pi)} <= {_w(rho)} not preserved")
    return report


def verify_classes(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Tonks classes: Catalan many, constant image, bijective onto Y_n, equal to
    the fibers of phi computed as preimages, and psi is onto Y_n as well."""
    _guard(n, max_n)
    report = VerificationReport("classes", n, n)
    with _Timer(report):
        part = tonks_classes(n, max_n=max_n)
        trees = enumerate_trees(n)
        report.instances = len(part)
        if len(part) != catalan(n):
            report.failures.append(f"{len(part)} classes, expected {catalan(n)}")
        for cls, tree in zip(part.classes, part.trees):
            if any(tonks_map(p) != tree for p in cls):
                report.failures.append(f"class of {_w(cls[0])} has several images")
        if sorted(map(str, part.trees)) != sorted(map(str, trees)):
            report.failures.append("class trees are not a bijection onto Y_n")
        if fibers(tonks_map, n) != list(part.classes):
            report.failures.append("fibers of phi differ from the Tonks classes")
        if {loday_ronco(p) for p in permutations(n)} != set(trees):
            report.failures.append("psi is not onto Y_n")
    return report


def quotient_poset(n: int, max_n: int = DEFAULT_MAX_N) -> tuple[Poset, bool]:
    """Quotient of the right weak cover graph by the Tonks classes.

    The boolean says whether ``class -> tree`` is a bijection onto Y_n sending
    the quotient covers exactly onto the rotation covers.
    """
    _guard(n, max_n)
    part = tonks_classes(n, max_n=max_n)
    covers = set()
    for pi, rho, _ in right_cover_pairs(n):
        a, b = part.class_of(pi), part.class_of(rho)
        if a != b:
            covers.add((a, b))
    quotient = Poset(part.classes, frozenset(covers))
    to_tree = part.tree_of_class()
    tamari = tamari_order(n)
    bijective = len(set(to_tree.values())) == len(to_tree) and set(to_tree.values()) == set(tamari.elements)
    iso = bijective and quotient.relabel(to_tree.__getitem__).covers == tamari.covers
    return quotient, iso


def verify_quotient(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    _guard(n, max_n)
    report = VerificationReport("quotient", n, n)
    with _Timer(report):
        quotient, iso = quotient_poset(n, max_n=max_n)
        report.instances = len(quotient.elements)
        if not iso:
            report.failures.append(f"quotient of S_{n} is not isomorphic to Tamari on Y_{n}")
    return report


def check_local_indices(tau: Iterable[int] | str, u: int, v: int) -> bool:
    """``k(v; tau) - k(u; tau v)`` equals the number of letters of ``tau`` strictly between ``u`` and ``v``."""
    tau = as_word(tau)
    if not u < v:
        raise WordError(f"need u < v, got u={u}, v={v}")
    as_word(tau + (u, v))
    n = insertion_index(v, tau)
    m = insertion_index(u, tau + (v,))
    return n - m == sum(1 for x in tau if u < x < v)


def verify_local_indices(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """All words ``tau`` of distinct letters from [n] and all ``u < v`` in [n] outside ``tau``."""
    _guard(n, max_n)
    report = VerificationReport("local-indices", n, n)
    letters = range(1, n + 1)
    with _Timer(report):
        for size in range(0, max(n - 1, 0)):
            for tau in itertools.permutations(letters, size):
                rest = [x for x in letters if x not in tau]
                for u, v in itertools.combinations(rest, 2):
                    report.instances += 1
                    if not check_local_indices(tau, u, v):
                        report.failures.append(f"tau={_w(tau)} u={u} v={v}")
    return report


def verify_soundness_fuzz(count: int = 10_000, max_generators: int = 10,
                          seed: int = 0) -> VerificationReport:
    """Random terms and random applicable steps: evaluation, arity and
    index set are preserved, and the inverse step restores the term."""
    report = VerificationReport("soundness-fuzz", 1, max_generators)
    rng = random.Random(seed)
    with _Timer(report):
        while report.instances < count:
            k = rng.randint(2, max_generators)
            t = random_term(rng, k, rng.sample(range(1, 3 * max_generators + 1), k))
            steps = applicable_steps(t)
            if not steps:
                continue
            step = rng.choice(steps)
            report.instances += 1
            u = apply_rewrite(t, step)
            tag = f"{format_term(t)} [{step}]"
            if evaluate(u) != evaluate(t):
                report.failures.append(f"{tag}: evaluation changed")
            if u.arity != t.arity or u.indices != t.indices:
                report.failures.append(f"{tag}: arity or indices changed")
            if apply_rewrite(u, step.inverse()) != t:
                report.failures.append(f"{tag}: inverse step does not restore the term")
    return report


def verify_normalization(n: int, max_n: int = DEFAULT_MAX_N) -> VerificationReport:
    """Replay the l-factor normalization trace of h(pi) and of f(pi) for all pi in S_n."""
    _guard(n, max_n)
    report = VerificationReport("normalization", n, n)
    with _Timer(report):
        for pi in permutations(n):
            if not pi:
                continue
            report.instances += 1
            report.failures.extend(f"{_w(pi)}: {msg}" for msg in _normalization_failures(pi))
    return report


def _replay_checked(t: Term, trace) -> tuple[Term, bool]:
    tree, ok = evaluate(t), True
    for step in trace:
        t = apply_rewrite(t, step)
        ok = ok and evaluate(t) == tree
    return t, ok


def _normalization_failures(pi: Permutation) -> list[str]:
    out = []
    h = head_insertion(pi)
    dec, trace = normalize_l_factor(h)
    end, ok = _replay_checked(h, trace)
    i = dec.root_index
    if end != rebuild(dec):
        out.append("h trace does not replay to the decomposed form")
    if not ok:
        out.append("evaluation changed along the h trace")
    below = frozenset(x for x in pi if x < i)
    above = frozenset(x for x in pi if x > i)
    if i != pi[0] or _ind(dec.left) != below or _ind(dec.right) != above:
        out.append("h decomposition does not split the indices at the root")
    for side in (dec.left, dec.right):
        if side is not None and is_l_factor(side) is None:
            out.append("h decomposition side is not an l-factor")
    if dec != h_root_decomposition(pi):
        out.append("rewriting and word splitting give different h decompositions")
    if len(trace) > 2 * (len(pi) - 1):
        out.append(f"h trace has {len(trace)} steps")

    f = decreasing_encoding(pi)
    fdec, ftrace = f_normalization_trace(pi)
    fend, fok = _replay_checked(f, ftrace)
    if fend != rebuild(fdec) or not fok:
        out.append("f trace does not replay to the decomposed form")
    return out


def _ind(t: Optional[Term]) -> frozenset:
    return frozenset() if t is None else t.indices


def verify_completeness(max_generators: int = 5, indexed: bool = False) -> VerificationReport:
    """Compare rewrite reachability with equal evaluation on all small terms.

    Unindexed: components of the rewrite graph on term shapes versus fibers
    of :func:`evaluate`. Indexed: the same over every labelling by
    ``1..k`` versus fibers of :func:`eval_labeled`.
    """
    report = VerificationReport("completeness" + ("-indexed" if indexed else ""), 1, max_generators)
    with _Timer(report):
        for k in range(1, max_generators + 1):
            terms = enumerate_terms(k)
            if indexed:
                terms = [_relabel(t, perm) for t in terms
                         for perm in itertools.permutations(range(1, k + 1))]
                key, image = (lambda t: t), eval_labeled
            else:
                key, image = shape_key, evaluate
            keys = [key(t) for t in terms]
            components = DisjointSet(keys)
            for t, kt in zip(terms, keys):
                for step in applicable_steps(t):
                    components.merge(kt, key(apply_rewrite(t, step)))
            by_image = defaultdict(set)
            for t, kt in zip(terms, keys):
                by_image[image(t)].add(kt)
            report.instances += len(terms)
            reach = sorted(sorted(map(str, c)) for c in components.subsets())
            same = sorted(sorted(map(str, c)) for c in by_image.values())
            if reach != same:
                report.failures.append(
                    f"k={k}: {len(reach)} rewrite components vs {len(same)} evaluation fibers")
    return report


def _relabel(t: Term, perm: tuple[int, ...]) -> Term:
    if not isinstance(t, Comp):
        return Gen(perm[t.index - 1])
    return Comp(_relabel(t.head, perm), t.position, _relabel(t.arg, perm))


# --- suite driver --------------------------------------------------------

CHECKS = ("identities", "order", "classes", "quotient", "local-indices",
          "soundness-fuzz", "normalization", "completeness", "monotone")
DEFAULT_CHECKS = CHECKS[:-1]

_PER_N = {
    "identities": verify_identities,
    "order": verify_order_preservation,
    "classes": verify_classes,
    "quotient": verify_quotient,
    "local-indices": verify_local_indices,
    "normalization": verify_normalization,
    "monotone": verify_monotonicity,
}


def run_checks(max_n: int, checks: Iterable[str] = DEFAULT_CHECKS, fuzz_count: int = 10_000,
               seed: int = 0, limit: int = DEFAULT_MAX_N) -> list[VerificationReport]:
    """Run the selected checks for every n in 0..max_n, one report per (check, n)."""
    _guard(max_n, limit)
    reports = []
    for name in checks:
        if name in _PER_N:
            reports.extend(_PER_N[name](n, max_n=limit) for n in range(max_n + 1))
        elif name == "soundness-fuzz":
            reports.append(verify_soundness_fuzz(fuzz_count, seed=seed))
        elif name == "completeness":
            reports.append(verify_completeness(max(1, min(max_n, 6))))
        else:
            raise ValueError(f"unknown check {name!r}")
    return reports
