"""
Command-line interface::

    operadlab map --perm 2413 --map psi
    operadlab encode --word 312 --encoding h
    operadlab verify --max-n 7 --checks identities,order
    operadlab classes --n 4
    operadlab lattice --n 3 --order weak --color-fibers

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
The default size limit is 7, overridden by ``OPERADLAB_MAX_N``; any size
above 9 additionally needs ``--force``.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from .combinatorics import as_permutation, format_word, parse_word
from .dot import lattice_dot
from .encodings import decreasing_encoding, head_insertion
from .errors import OperadLabError
from .maps import MAPS, tonks_classes
from .terms import format_term
from .verify import CHECKS, DEFAULT_CHECKS, render_text, render_tsv, run_checks

DEFAULT_MAX_N = 7
FACTORIAL_GUARD = 9
ENV_MAX_N = "OPERADLAB_MAX_N"


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    max_n: int = DEFAULT_MAX_N
    output: Optional[str] = None
    format: str = "text"
    force: bool = False

    def check_size(self, n: int) -> None:
        if n < 0:
            raise UsageError("sizes must be non-negative")
        if n > FACTORIAL_GUARD and not self.force:
            raise UsageError(f"n = {n} > {FACTORIAL_GUARD} enumerates {n}! permutations; pass --force")
        if n > self.max_n:
            raise UsageError(f"n = {n} exceeds max_n = {self.max_n} (use --max-n or ${ENV_MAX_N})")


def _default_max_n() -> int:
    raw = os.environ.get(ENV_MAX_N)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"${ENV_MAX_N} must be an integer, got {raw!r}") from None
    if value < 0:
        raise UsageError(f"${ENV_MAX_N} must be non-negative")
    return value


def _check_list(text: str) -> list[str]:
    names = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in names if c not in CHECKS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown check(s) {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="operadlab", description="Permutations, binary trees and operadic terms.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--force", action="store_true", help=f"allow sizes above {FACTORIAL_GUARD}")

    p = sub.add_parser("map", parents=[common], help="image of a permutation under one map")
    p.add_argument("--perm", required=True)
    p.add_argument("--map", dest="which", choices=sorted(MAPS), default="phi")

    p = sub.add_parser("encode", parents=[common], help="operadic encoding of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--encoding", choices=["h", "f"], default="h")

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--checks", type=_check_list, action="append",
                   help=f"comma separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--format", choices=["text", "tsv"], default="text")
    p.add_argument("--fuzz-count", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("classes", parents=[common], help="Tonks classes of S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=["text", "tsv"], default="text")

    p = sub.add_parser("lattice", parents=[common], help="DOT diagram of an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--order", choices=["weak", "tamari", "quotient"], default="weak")
    p.add_argument("--color-fibers", action="store_true")
    return parser


def _config(args) -> CliConfig:
    max_n = getattr(args, "max_n", None)
    config = CliConfig(
        max_n=_default_max_n() if max_n is None else max_n,
        output=args.output,
        format=getattr(args, "format", "text"),
        force=args.force,
    )
    if config.max_n > FACTORIAL_GUARD and not config.force:
        raise UsageError(f"max_n = {config.max_n} > {FACTORIAL_GUARD} requires --force")
    return config


def _cmd_map(args, config: CliConfig) -> tuple[str, int]:
    perm = as_permutation(parse_word(args.perm))
    config.check_size(len(perm))
    return f"{MAPS[args.which](perm)}\n", 0


def _cmd_encode(args, config: CliConfig) -> tuple[str, int]:
    word = parse_word(args.word)
    encode = head_insertion if args.encoding == "h" else decreasing_encoding
    return f"{format_term(encode(word))}\n", 0


def _cmd_verify(args, config: CliConfig) -> tuple[str, int]:
    config.check_size(config.max_n)
    checks = [c for group in args.checks for c in group] if args.checks else list(DEFAULT_CHECKS)
    checks = list(dict.fromkeys(checks))
    reports = run_checks(config.max_n, checks, fuzz_count=args.fuzz_count, seed=args.seed,
                         limit=max(config.max_n, 0))
    render = render_tsv if config.format == "tsv" else render_text
    return render(reports), 0 if all(r.passed for r in reports) else 1


def _cmd_classes(args, config: CliConfig) -> tuple[str, int]:
    config.check_size(args.n)
    part = tonks_classes(args.n, max_n=config.max_n)
    lines = [] if config.format == "tsv" else [f"# S_{args.n}: {len(part)} classes"]
    for cls, tree in zip(part.classes, part.trees):
        members = " ".join(format_word(p) or "∅" for p in cls)
        lines.append(f"{tree}\t{members}")
    return "\n".join(lines) + "\n", 0


def _cmd_lattice(args, config: CliConfig) -> tuple[str, int]:
    config.check_size(args.n)
    return lattice_dot(args.n, args.order, args.color_fibers, max_n=config.max_n), 0


COMMANDS = {
    "map": _cmd_map,
    "encode": _cmd_encode,
    "verify": _cmd_verify,
    "classes": _cmd_classes,
    "lattice": _cmd_lattice,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config(args)
        text, status = COMMANDS[args.command](args, config)
    except (UsageError, OperadLabError) as exc:
        print(f"operadlab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
