"""DOT renderings of the weak order, the Tamari order and their quotient."""

from __future__ import annotations

from .combinatorics import format_word, permutations, right_cover_pairs
from .errors import ResourceLimitError
from .maps import tonks_classes, tonks_independent
from .trees import enumerate_trees, rotations
from .verify import DEFAULT_MAX_N, quotient_poset

__all__ = ["weak_order_dot", "tamari_dot", "quotient_dot", "lattice_dot", "fiber_colors"]

COLLAPSED_EDGE = 'color="red", penwidth=2.5'


def _guard(n: int, max_n: int) -> None:
    if not 0 <= n <= max_n:
        raise ResourceLimitError(f"n = {n} outside 0..{max_n}")


def _quote(s: str) -> str:
    return '"' + s.replace('"', '\\"').replace("\n", "\\n") + '"'


def _label(perm) -> str:
    return format_word(perm) or "∅"


def fiber_colors(k: int) -> list[str]:
    """``k`` distinct pastel HSV colors, evenly spaced in hue."""
    return [f"{h / max(k, 1):.3f} 0.300 1.000" for h in range(k)]


def _header(name: str) -> list[str]:
    return [f"digraph {name} {{", "  rankdir=BT;", '  node [shape=box, fontname="Helvetica"];']


def weak_order_dot(n: int, color_fibers: bool = False, max_n: int = DEFAULT_MAX_N) -> str:
    """Right weak order on S_n. With ``color_fibers`` each Tonks class gets one
    fill color and collapsed edges are drawn in red."""
    _guard(n, max_n)
    lines = _header(f"weak_order_{n}")
    part = tonks_classes(n, max_n=max_n) if color_fibers else None
    colors = fiber_colors(len(part)) if part else []
    for pi in permutations(n):
        attrs = f"label={_quote(_label(pi))}"
        if part is not None:
            attrs += f', style=filled, fillcolor={_quote(colors[part.class_index(pi)])}'
        lines.append(f"  {_quote(_label(pi))} [{attrs}];")
    for pi, rho, i in right_cover_pairs(n):
        edge = f"  {_quote(_label(pi))} -> {_quote(_label(rho))}"
        if color_fibers and tonks_independent(pi, i):
            edge += f" [{COLLAPSED_EDGE}]"
        lines.append(edge + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tamari_dot(n: int, max_n: int = DEFAULT_MAX_N) -> str:
    _guard(n, max_n)
    trees = enumerate_trees(n)
    lines = _header(f"tamari_{n}")
    for t in trees:
        lines.append(f"  {_quote(str(t))};")
    for t in trees:
        for r in sorted(rotations(t), key=trees.index):
            lines.append(f"  {_quote(str(t))} -> {_quote(str(r))};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quotient_dot(n: int, max_n: int = DEFAULT_MAX_N) -> str:
    """Quotient S_n / ~ with each class labelled by its tree and its members."""
    quotient, _ = quotient_poset(n, max_n=max_n)
    part = tonks_classes(n, max_n=max_n)
    index = {c: k for k, c in enumerate(part.classes)}
    lines = _header(f"quotient_{n}")
    for k, (cls, tree) in enumerate(zip(part.classes, part.trees)):
        label = str(tree) + "\n" + " ".join(_label(p) for p in cls)
        lines.append(f"  c{k} [label={_quote(label)}];")
    for a, b in sorted(quotient.covers, key=lambda e: (index[e[0]], index[e[1]])):
        lines.append(f"  c{index[a]} -> c{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(n: int, order: str, color_fibers: bool = False, max_n: int = DEFAULT_MAX_N) -> str:
    if order == "weak":
        return weak_order_dot(n, color_fibers, max_n=max_n)
    if order == "tamari":
        return tamari_dot(n, max_n=max_n)
    if order == "quotient":
        return quotient_dot(n, max_n=max_n)
    raise ValueError(f"unknown order {order!r}")
