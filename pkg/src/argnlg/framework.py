"""Abstract argumentation frameworks and the basic set properties."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import UnknownArgument


@dataclass(frozen=True)
class ArgumentationFramework:
    """Arguments (ordered ids) plus an attack relation.

    ``structured`` optionally maps ids to the deductive arguments they stand
    for, and ``attack_kinds`` records undercut/rebut labels per attack.
    """

    arguments: tuple[str, ...] = ()
    attacks: frozenset[tuple[str, str]] = frozenset()
    structured: Mapping[str, Any] = field(default_factory=dict, compare=False, repr=False)
    attack_kinds: Mapping[tuple[str, str], frozenset[str]] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        args = tuple(dict.fromkeys(str(a) for a in self.arguments))
        if len(args) != len(self.arguments):
            raise ValueError("duplicate argument ids")
        attacks = frozenset((str(a), str(b)) for a, b in self.attacks)
        known = set(args)
        for a, b in attacks:
            for x in (a, b):
                if x not in known:
                    raise UnknownArgument(x)
        object.__setattr__(self, "arguments", args)
        object.__setattr__(self, "attacks", attacks)
        index = {a: i for i, a in enumerate(args)}
        attackers: dict[str, list[str]] = {a: [] for a in args}
        attacked: dict[str, list[str]] = {a: [] for a in args}
        for a, b in sorted(attacks, key=lambda p: (index[p[0]], index[p[1]])):
            attackers[b].append(a)
            attacked[a].append(b)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_attackers", {k: tuple(v) for k, v in attackers.items()})
        object.__setattr__(self, "_attacked", {k: tuple(v) for k, v in attacked.items()})

    def __len__(self) -> int:
        return len(self.arguments)

    def __contains__(self, arg: object) -> bool:
        return arg in self._index

    def index(self, arg: str) -> int:
        try:
            return self._index[arg]
        except KeyError:
            raise UnknownArgument(arg) from None

    def check(self, args: Iterable[str]) -> frozenset[str]:
        out = frozenset(args)
        for a in out:
            self.index(a)
        return out

    def attackers(self, arg: str) -> tuple[str, ...]:
        """a⁻, in canonical argument order."""
        self.index(arg)
        return self._attackers[arg]

    def attacked(self, arg: str) -> tuple[str, ...]:
        """a⁺, in canonical argument order."""
        self.index(arg)
        return self._attacked[arg]

    def attackers_of_set(self, args: Iterable[str]) -> set[str]:
        return {b for a in args for b in self.attackers(a)}

    def attacked_by_set(self, args: Iterable[str]) -> set[str]:
        return {b for a in args for b in self.attacked(a)}

    def ordered(self, args: Iterable[str]) -> list[str]:
        return sorted(args, key=self.index)

    def restrict(self, args: Iterable[str]) -> "ArgumentationFramework":
        keep = self.check(args)
        return ArgumentationFramework(
            tuple(a for a in self.arguments if a in keep),
            frozenset((a, b) for a, b in self.attacks if a in keep and b in keep),
            {k: v for k, v in self.structured.items() if k in keep},
            {k: v for k, v in self.attack_kinds.items() if k[0] in keep and k[1] in keep},
        )

    def attacker_masks(self) -> list[int]:
        masks = [0] * len(self.arguments)
        for a, b in self.attacks:
            masks[self._index[b]] |= 1 << self._index[a]
        return masks

    def mask_to_set(self, mask: int) -> frozenset[str]:
        return frozenset(a for i, a in enumerate(self.arguments) if mask >> i & 1)


def is_conflict_free(af: ArgumentationFramework, args: Iterable[str]) -> bool:
    s = af.check(args)
    return not any(b in s for a in s for b in af.attacked(a))


def is_acceptable(af: ArgumentationFramework, arg: str, args: Iterable[str]) -> bool:
    """Every attacker of ``arg`` is attacked by some member of ``args``."""
    s = af.check(args)
    af.index(arg)
    return all(any(c in s for c in af.attackers(b)) for b in af.attackers(arg))


def is_admissible(af: ArgumentationFramework, args: Iterable[str]) -> bool:
    s = af.check(args)
    return is_conflict_free(af, s) and all(is_acceptable(af, a, s) for a in s)


def build_framework(args: Iterable, attacks: Iterable) -> ArgumentationFramework:
    """Abstract a set of deductive arguments and their attacks.

    Ids ``A1..An`` follow the canonical order of the arguments (claim, then
    support).  ``attacks`` are :class:`argnlg.logic.Attack` records.
    """
    ordered = sorted(set(args), key=lambda a: a.sort_key)
    ids = {arg: f"A{i + 1}" for i, arg in enumerate(ordered)}
    pairs: set[tuple[str, str]] = set()
    kinds: dict[tuple[str, str], set[str]] = {}
    for att in attacks:
        if att.attacker not in ids:
            raise UnknownArgument(str(att.attacker))
        if att.attacked not in ids:
            raise UnknownArgument(str(att.attacked))
        pair = (ids[att.attacker], ids[att.attacked])
        pairs.add(pair)
        kinds.setdefault(pair, set()).add(att.kind.value)
    return ArgumentationFramework(
        tuple(ids[a] for a in ordered),
        frozenset(pairs),
        {v: k for k, v in ids.items()},
        {k: frozenset(v) for k, v in kinds.items()},
    )


# -- ICCMA "p af n" format --------------------------------------------------


def to_iccma(af: ArgumentationFramework) -> str:
    lines = [f"p af {len(af)}"]
    for a, b in sorted(af.attacks, key=lambda p: (af.index(p[0]), af.index(p[1]))):
        lines.append(f"{af.index(a) + 1} {af.index(b) + 1}")
    return "\n".join(lines) + "\n"


def from_iccma(text: str) -> ArgumentationFramework:
    n = None
    attacks = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 3 or parts[1] != "af":
                raise ValueError(f"bad header line: {raw!r}")
            n = int(parts[2])
        else:
            if n is None:
                raise ValueError("attack line before 'p af n' header")
            i, j = (int(p) for p in parts)
            if not (1 <= i <= n and 1 <= j <= n):
                raise UnknownArgument(i if not 1 <= i <= n else j)
            attacks.append((str(i), str(j)))
    if n is None:
        raise ValueError("missing 'p af n' header")
    return ArgumentationFramework(tuple(str(i) for i in range(1, n + 1)), frozenset(attacks))
