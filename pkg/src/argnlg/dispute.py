"""Dispute trees proving credulous acceptance under preferred semantics.

PRO opens with the target; CON answers with every attacker of a PRO move,
and PRO must counter each CON move with one of its attackers.  A CON move
already made on the current branch is not replayed (it has been answered
higher up), while PRO may reuse an argument it has already played.  The
PRO moves of a finished tree form an admissible set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .framework import ArgumentationFramework
from .semantics import DEFAULT_MAX_ARGS, Mode, Semantics, acceptance


class Side(str, Enum):
    PRO = "PRO"
    CON = "CON"


@dataclass(frozen=True)
class DisputeNode:
    argument: str
    side: Side
    children: tuple["DisputeNode", ...] = ()

    def walk(self) -> Iterator["DisputeNode"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def to_dict(self) -> dict:
        return {
            "argument": self.argument,
            "side": self.side.value,
            "children": [c.to_dict() for c in self.children],
        }


@dataclass(frozen=True)
class DisputeTree:
    root: DisputeNode

    @property
    def pro_arguments(self) -> frozenset[str]:
        return frozenset(n.argument for n in self.root.walk() if n.side is Side.PRO)

    @property
    def arguments(self) -> frozenset[str]:
        return frozenset(n.argument for n in self.root.walk())

    def render(self) -> str:
        lines = []

        def rec(node: DisputeNode, depth: int) -> None:
            lines.append(f"{'  ' * depth}{node.side.value} {node.argument}")
            for c in node.children:
                rec(c, depth + 1)

        rec(self.root, 0)
        return "\n".join(lines)


@dataclass(frozen=True)
class NotAccepted:
    argument: str
    blocking: tuple[str, ...]


def _self_attacking(af: ArgumentationFramework, a: str) -> bool:
    return a in af.attackers(a)


def _compatible(af: ArgumentationFramework, q: str, pro: frozenset[str]) -> bool:
    if _self_attacking(af, q):
        return False
    return not any(p in af.attacked(q) or q in af.attacked(p) for p in pro)


class _Game:
    def __init__(self, af: ArgumentationFramework):
        self.af = af

    def pro(self, p: str, con_branch: frozenset[str], pro_set: frozenset[str]):
        pending = [k for k in self.af.attackers(p) if k not in con_branch]
        yield from self.answer_all(pending, 0, con_branch, pro_set, ())

    def answer_all(self, pending, i, con_branch, pro_set, acc):
        if i == len(pending):
            yield acc, pro_set
            return
        k = pending[i]
        for q in self.af.attackers(k):
            if not _compatible(self.af, q, pro_set):
                continue
            for sub, grown in self.pro(q, con_branch | {k}, pro_set | {q}):
                node = DisputeNode(k, Side.CON, (DisputeNode(q, Side.PRO, sub),))
                yield from self.answer_all(pending, i + 1, con_branch, grown, acc + (node,))


def dispute_tree(af: ArgumentationFramework, arg: str, max_args: int = DEFAULT_MAX_ARGS) -> DisputeTree | NotAccepted:
    """Depth-first search, in canonical argument order, for a winning PRO strategy."""
    af.index(arg)
    if _self_attacking(af, arg):
        return NotAccepted(arg, (arg,))
    if not acceptance(af, arg, Semantics.PREFERRED, Mode.CREDULOUS, max_args):
        return NotAccepted(arg, _blocking(af, arg))
    game = _Game(af)
    for children, _ in game.pro(arg, frozenset(), frozenset({arg})):
        return DisputeTree(DisputeNode(arg, Side.PRO, children))
    raise AssertionError(f"credulously accepted argument {arg!r} has no dispute tree")


def _blocking(af: ArgumentationFramework, arg: str) -> tuple[str, ...]:
    attackers = af.attackers(arg)
    pro = frozenset({arg})
    unanswerable = tuple(
        k for k in attackers
        if not any(_compatible(af, q, pro) for q in af.attackers(k))
    )
    if unanswerable:
        return unanswerable
    game = _Game(af)
    failing = tuple(
        k for k in attackers
        if next(game.answer_all([k], 0, frozenset(), pro, ()), None) is None
    )
    return failing or attackers
