"""Complete-based semantics, acceptance, and issues.

Everything is derived from the exhaustive set of complete labellings:
preferred extensions are the maximal complete in-sets, the grounded one is
the minimal, stable ones have no undec argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from . import kernel
from .errors import SizeLimitExceeded
from .framework import ArgumentationFramework

DEFAULT_MAX_ARGS = 20


class Semantics(str, Enum):
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"
    STABLE = "stable"


class Mode(str, Enum):
    CREDULOUS = "credulous"
    SKEPTICAL = "skeptical"


class Label(str, Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    def mirror(self) -> "Label":
        return {Label.IN: Label.OUT, Label.OUT: Label.IN}.get(self, self)


@dataclass(frozen=True)
class Labelling:
    in_args: frozenset[str]
    out_args: frozenset[str]
    undec_args: frozenset[str]

    def __getitem__(self, arg: str) -> Label:
        if arg in self.in_args:
            return Label.IN
        if arg in self.out_args:
            return Label.OUT
        if arg in self.undec_args:
            return Label.UNDEC
        raise KeyError(arg)

    @property
    def assignment(self) -> dict[str, Label]:
        out = {a: Label.IN for a in self.in_args}
        out.update({a: Label.OUT for a in self.out_args})
        out.update({a: Label.UNDEC for a in self.undec_args})
        return out

    def is_complete(self, af: ArgumentationFramework) -> bool:
        """Labelling laws, checked argument by argument."""
        if self.in_args | self.out_args | self.undec_args != set(af.arguments):
            return False
        for a in af.arguments:
            labels = [self[b] for b in af.attackers(a)]
            all_out = all(l is Label.OUT for l in labels)
            some_in = any(l is Label.IN for l in labels)
            if (self[a] is Label.IN) != all_out or (self[a] is Label.OUT) != some_in:
                return False
        return True


@dataclass(frozen=True)
class SemanticsResult:
    semantics: Semantics
    extensions: tuple[frozenset[str], ...]
    labellings: tuple[Labelling, ...]


class Polarity(str, Enum):
    SAME = "same"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class IssuePartition:
    classes: tuple[frozenset[str], ...]
    polarity: Mapping[str, Polarity]

    def class_of(self, arg: str) -> frozenset[str]:
        for c in self.classes:
            if arg in c:
                return c
        raise KeyError(arg)


def _check_size(af: ArgumentationFramework, max_args: int) -> None:
    if len(af) > max_args:
        raise SizeLimitExceeded(len(af), max_args)


def _set_key(af: ArgumentationFramework, s: Iterable[str]) -> list[int]:
    return sorted(af.index(a) for a in s)


def complete_labellings(af: ArgumentationFramework, max_args: int = DEFAULT_MAX_ARGS,
                        backend: str | None = None) -> tuple[Labelling, ...]:
    _check_size(af, max_args)
    everything = frozenset(af.arguments)
    out = []
    for in_mask, out_mask in kernel.complete_labellings(len(af), af.attacker_masks(), backend):
        ins, outs = af.mask_to_set(in_mask), af.mask_to_set(out_mask)
        out.append(Labelling(ins, outs, everything - ins - outs))
    out.sort(key=lambda l: _set_key(af, l.in_args))
    return tuple(out)


def enumerate_extensions(af: ArgumentationFramework, semantics: Semantics | str = Semantics.PREFERRED,
                         max_args: int = DEFAULT_MAX_ARGS, backend: str | None = None) -> SemanticsResult:
    semantics = Semantics(semantics)
    labs = complete_labellings(af, max_args, backend)
    if semantics is Semantics.PREFERRED:
        labs = tuple(l for l in labs if not any(l.in_args < m.in_args for m in labs))
    elif semantics is Semantics.GROUNDED:
        labs = tuple(l for l in labs if not any(m.in_args < l.in_args for m in labs))
    elif semantics is Semantics.STABLE:
        labs = tuple(l for l in labs if not l.undec_args)
    return SemanticsResult(semantics, tuple(l.in_args for l in labs), labs)


def acceptance(af: ArgumentationFramework, arg: str, semantics: Semantics | str = Semantics.PREFERRED,
               mode: Mode | str = Mode.CREDULOUS, max_args: int = DEFAULT_MAX_ARGS) -> bool:
    af.index(arg)
    exts = enumerate_extensions(af, semantics, max_args).extensions
    if Mode(mode) is Mode.CREDULOUS:
        return any(arg in e for e in exts)
    return all(arg in e for e in exts)


def issues(af: ArgumentationFramework, max_args: int = DEFAULT_MAX_ARGS) -> IssuePartition:
    """Group arguments whose labels are locked together across all complete labellings.

    Two arguments share a class when their label vectors are equal or exact
    in/out mirrors; classes are the equivalence classes of that relation.
    """
    labs = complete_labellings(af, max_args)
    vectors = {a: tuple(l[a] for l in labs) for a in af.arguments}
    groups: dict[tuple, list[str]] = {}
    for a in af.arguments:
        v = vectors[a]
        m = tuple(x.mirror() for x in v)
        key = min(v, m, key=lambda t: tuple(x.value for x in t))
        groups.setdefault(key, []).append(a)
    polarity: dict[str, Polarity] = {}
    classes = []
    for members in groups.values():
        rep = vectors[members[0]]
        for a in members:
            polarity[a] = Polarity.SAME if vectors[a] == rep else Polarity.OPPOSITE
        classes.append(frozenset(members))
    classes.sort(key=lambda c: min(af.index(a) for a in c))
    return IssuePartition(tuple(classes), polarity)


def issue_foci(af: ArgumentationFramework, semantics: Semantics | str = Semantics.PREFERRED,
               max_args: int = DEFAULT_MAX_ARGS) -> frozenset[str] | None:
    """An issue class with as many members as there are extensions, if any."""
    n_ext = len(enumerate_extensions(af, semantics, max_args).extensions)
    candidates = [c for c in issues(af, max_args).classes if len(c) == n_ext]
    if not candidates:
        return None
    return min(candidates, key=lambda c: sorted(af.index(a) for a in c))
