"""Simple logic over literals and simple rules, and deductive arguments.

A knowledge base holds literals (facts) and rules ``a1 & ... & ak -> b``.
Entailment is the least fixpoint of forward chaining.  Arguments are
premise/claim pairs; simple arguments are the minimal valid ones produced by
a single rule application whose antecedents are taken as premises.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Union

from .aif import AifGraph, NodeKind
from .errors import CompileError, InconsistentExpansion
from .schemes import SchemeRef

_DIGITS = re.compile(r"(\d+)")


def natural_key(text: str) -> tuple:
    return tuple(int(p) if p.isdigit() else p for p in _DIGITS.split(text))


@dataclass(frozen=True)
class Literal:
    atom: str
    positive: bool = True

    def __post_init__(self):
        if not self.atom:
            raise ValueError("literal atom must be non-empty")

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.positive)

    @property
    def sort_key(self) -> tuple:
        return (natural_key(self.atom), not self.positive)

    def __str__(self) -> str:
        return self.atom if self.positive else f"~{self.atom}"

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith(("~", "¬", "!")):
            return cls(text[1:].strip(), False)
        return cls(text)


@dataclass(frozen=True)
class SimpleRule:
    antecedents: tuple[Literal, ...]
    consequent: Literal
    scheme: SchemeRef | None = field(default=None, compare=False)
    source_node: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.antecedents:
            raise ValueError("a simple rule needs at least one antecedent")
        if self.consequent in self.antecedents:
            raise ValueError(f"self-supporting rule: {self}")
        object.__setattr__(self, "antecedents", tuple(self.antecedents))

    def __str__(self) -> str:
        return f"{' & '.join(map(str, self.antecedents))} -> {self.consequent}"

    @classmethod
    def parse(cls, text: str, **kw) -> "SimpleRule":
        lhs, _, rhs = text.partition("->")
        if not rhs:
            raise ValueError(f"not a rule: {text!r}")
        ants = tuple(Literal.parse(p) for p in lhs.split("&"))
        return cls(ants, Literal.parse(rhs), **kw)


Formula = Union[Literal, SimpleRule]


def formula_key(f: Formula) -> tuple:
    if isinstance(f, Literal):
        return (0, f.sort_key, "")
    return (1, f.consequent.sort_key, str(f))


def parse_formula(text: str) -> Formula:
    return SimpleRule.parse(text) if "->" in text else Literal.parse(text)


@dataclass(frozen=True)
class KnowledgeBase:
    facts: frozenset[Literal] = frozenset()
    rules: tuple[SimpleRule, ...] = ()
    proposition_texts: Mapping[str, str] = field(default_factory=dict, compare=False)
    sources: Mapping[str, str | None] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "facts", frozenset(self.facts))
        rules = tuple(sorted(dict.fromkeys(self.rules), key=formula_key))
        object.__setattr__(self, "rules", rules)
        texts = dict(self.proposition_texts)
        for atom in self.atoms():
            texts.setdefault(atom, atom)
        object.__setattr__(self, "proposition_texts", texts)

    def atoms(self) -> set[str]:
        out = {lit.atom for lit in self.facts}
        for r in self.rules:
            out.add(r.consequent.atom)
            out.update(a.atom for a in r.antecedents)
        return out

    def text(self, lit: Literal) -> str | None:
        """Surface text of a literal.

        Negated literals only have one when the table holds an explicit
        ``"~atom"`` entry; AIF input never provides such entries.
        """
        return self.proposition_texts.get(lit.atom if lit.positive else str(lit))

    def with_facts(self, *extra: Literal) -> "KnowledgeBase":
        return KnowledgeBase(self.facts | set(extra), self.rules, self.proposition_texts, self.sources)


@dataclass(frozen=True)
class ApproximateArgument:
    support: frozenset[Formula]
    claim: Literal

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))

    @property
    def literals(self) -> frozenset[Literal]:
        return frozenset(f for f in self.support if isinstance(f, Literal))

    @property
    def rules(self) -> frozenset[SimpleRule]:
        return frozenset(f for f in self.support if isinstance(f, SimpleRule))

    def sorted_support(self) -> list[Formula]:
        return sorted(self.support, key=formula_key)

    @property
    def sort_key(self) -> tuple:
        return (self.claim.sort_key, tuple(formula_key(f) for f in self.sorted_support()))

    def __str__(self) -> str:
        inner = ", ".join(map(str, self.sorted_support()))
        return f"<{{{inner}}}, {self.claim}>"


@dataclass(frozen=True)
class ArgumentClass:
    valid: bool
    consistent: bool
    minimal: bool
    expansive: bool
    simple: bool


class AttackKind(str, Enum):
    UNDERCUT = "undercut"
    REBUT = "rebut"


@dataclass(frozen=True)
class Attack:
    attacker: ApproximateArgument
    attacked: ApproximateArgument
    kind: AttackKind


# -- consequence -----------------------------------------------------------


def closure(literals: Iterable[Literal], rules: Iterable[SimpleRule]) -> set[Literal]:
    """All literals derivable by forward chaining (least fixpoint)."""
    known = set(literals)
    pending = list(rules)
    changed = True
    while changed and pending:
        changed = False
        rest = []
        for r in pending:
            if all(a in known for a in r.antecedents):
                known.add(r.consequent)
                changed = True
            else:
                rest.append(r)
        pending = rest
    return known


def _split(formulas: Iterable[Formula]) -> tuple[list[Literal], list[SimpleRule]]:
    lits, rules = [], []
    for f in formulas:
        (rules if isinstance(f, SimpleRule) else lits).append(f)
    return lits, rules


def derives(formulas: Iterable[Formula], goal: Literal) -> bool:
    lits, rules = _split(formulas)
    return goal in closure(lits, rules)


def is_inconsistent(formulas: Iterable[Formula]) -> bool:
    lits, rules = _split(formulas)
    known = closure(lits, rules)
    return any(lit.complement() in known for lit in known)


def entails(kb: KnowledgeBase, goal: Literal) -> bool:
    return goal in closure(kb.facts, kb.rules)


# -- arguments -------------------------------------------------------------


def construct_simple_arguments(kb: KnowledgeBase) -> tuple[ApproximateArgument, ...]:
    """One simple argument per applicable rule, antecedents taken as premises.

    Facts on their own never form an argument.  Output is canonically sorted.
    """
    derivable = closure(kb.facts, kb.rules)
    found = {
        ApproximateArgument(frozenset(r.antecedents) | {r}, r.consequent)
        for r in kb.rules
        if all(a in derivable for a in r.antecedents)
    }
    return tuple(sorted(found, key=lambda a: a.sort_key))


def classify(kb: KnowledgeBase | None, arg: ApproximateArgument) -> ArgumentClass:
    support = arg.support
    valid = derives(support, arg.claim)
    consistent = not is_inconsistent(support)
    # entailment is monotone, so single-element removals cover every strict subset
    minimal = valid and not any(derives(support - {f}, arg.claim) for f in support)
    return ArgumentClass(
        valid=valid,
        consistent=consistent,
        minimal=minimal,
        expansive=valid and consistent,
        simple=valid and minimal,
    )


def attacks_between(args: Iterable[ApproximateArgument]) -> set[Attack]:
    args = list(args)
    out: set[Attack] = set()
    for a in args:
        counter = a.claim.complement()
        for b in args:
            if counter == b.claim:
                out.add(Attack(a, b, AttackKind.REBUT))
            if any(counter in r.antecedents for r in b.rules):
                out.add(Attack(a, b, AttackKind.UNDERCUT))
    return out


def _derivation_region(kb: KnowledgeBase, goal: Literal, derivable: set[Literal]) -> tuple[set[Formula], set[Literal]]:
    """Facts and rules on some derivation path to ``goal``, plus the literals visited."""
    elements: set[Formula] = set()
    seen: set[Literal] = set()
    stack = [goal]
    while stack:
        lit = stack.pop()
        if lit in seen:
            continue
        seen.add(lit)
        for r in kb.rules:
            if r.consequent != lit or not all(a in derivable for a in r.antecedents):
                continue
            elements.add(r)
            for a in r.antecedents:
                if a in kb.facts:
                    elements.add(a)
                stack.append(a)
    return elements, seen


def expand_argument(kb: KnowledgeBase, arg: ApproximateArgument) -> ApproximateArgument:
    """Add every fact and rule of ``kb`` lying on a derivation path to the claim."""
    if not derives(arg.support, arg.claim):
        raise ValueError(f"cannot expand an invalid argument {arg}")
    derivable = closure(kb.facts, kb.rules)
    region, _ = _derivation_region(kb, arg.claim, derivable)
    expanded = ApproximateArgument(arg.support | region, arg.claim)
    if is_inconsistent(expanded.support):
        raise InconsistentExpansion(f"expansion of {arg} derives a contradiction")
    return expanded


def relevant(kb: KnowledgeBase, candidate: ApproximateArgument, target: ApproximateArgument) -> bool:
    """Structural relevance of ``candidate`` for ``target``.

    Every premise of the candidate must sit on a derivation path towards the
    target's claim, or towards the complement of a literal on such a path,
    and the candidate must bring something the target does not already have.
    """
    derivable = closure(kb.facts, kb.rules)
    region, path_lits = _derivation_region(kb, target.claim, derivable)
    allowed: set[Formula] = set(region) | path_lits
    for lit in path_lits:
        counter_region, counter_lits = _derivation_region(kb, lit.complement(), derivable)
        allowed |= counter_region | counter_lits
    on_path = candidate.support <= allowed
    novel = not candidate.support <= target.support
    return on_path and novel


# -- compilation from AIF --------------------------------------------------


def compile_graph(graph: AifGraph) -> KnowledgeBase:
    """Translate an AIF graph into a simple knowledge base.

    Every I-node becomes a fact.  RA nodes become rules.  A CA node from
    I-nodes ``x...`` to I-node ``y`` becomes ``x... -> ~y``; when its single
    source is itself concluded by RA rules, those rules are redirected to
    ``~y`` instead (kept as well if the source is used elsewhere).
    """
    inodes = {n.id for n in graph.of_kind(NodeKind.INFORMATION)}
    facts = {Literal(i) for i in inodes}
    texts = {n.id: n.text for n in graph.of_kind(NodeKind.INFORMATION)}
    sources = {n.id: n.speaker for n in graph.of_kind(NodeKind.INFORMATION)}

    def neighbourhood(node_id: str, kind: str) -> tuple[list[str], str]:
        preds = graph.predecessors(node_id)
        succs = graph.successors(node_id)
        stray = [p for p in preds if p not in inodes]
        if stray or not preds:
            raise CompileError(f"{kind} node {node_id!r} must have only I-node premises (got {preds})", node_id)
        if len(succs) != 1 or succs[0] not in inodes:
            raise CompileError(f"{kind} node {node_id!r} must have exactly one I-node target (got {succs})", node_id)
        return sorted(preds, key=natural_key), succs[0]

    rules: list[SimpleRule] = []
    for node in graph.of_kind(NodeKind.RULE_APPLICATION):
        preds, conc = neighbourhood(node.id, "RA")
        if conc in preds:
            raise CompileError(f"RA node {node.id!r} concludes one of its own premises", node.id)
        rules.append(SimpleRule(tuple(Literal(p) for p in preds), Literal(conc), node.scheme, node.id))

    premise_uses: dict[str, int] = {}
    for node in graph.nodes:
        if node.kind in (NodeKind.RULE_APPLICATION, NodeKind.CONFLICT_APPLICATION):
            for p in graph.predecessors(node.id):
                premise_uses[p] = premise_uses.get(p, 0) + 1

    for node in graph.of_kind(NodeKind.CONFLICT_APPLICATION):
        preds, target = neighbourhood(node.id, "CA")
        negated = Literal(target, False)
        producers = [r for r in rules if len(preds) == 1 and r.consequent == Literal(preds[0])]
        if producers:
            shared = premise_uses.get(preds[0], 0) > 1
            for r in producers:
                if negated in r.antecedents:
                    raise CompileError(f"CA node {node.id!r} yields a self-supporting rule", node.id)
                if not shared:
                    rules.remove(r)
                rules.append(SimpleRule(r.antecedents, negated, r.scheme, r.source_node))
        else:
            if target in preds:
                raise CompileError(f"CA node {node.id!r} attacks one of its own sources", node.id)
            rules.append(SimpleRule(tuple(Literal(p) for p in preds), negated, node.scheme, node.id))

    return KnowledgeBase(frozenset(facts), tuple(rules), texts, sources)


# -- JSON form -------------------------------------------------------------


def _scheme_to_dict(s: SchemeRef | None) -> dict | None:
    if s is None:
        return None
    return {
        "name": s.name,
        "family": s.family.value,
        "slots": [{"role": x.role, "filled": x.filled, "premise": x.premise} for x in s.slots],
        "critical_questions": [{"question": q.question, "answered": q.answered} for q in s.critical_questions],
    }


def _scheme_from_dict(d: Mapping | None) -> SchemeRef | None:
    if d is None:
        return None
    from .schemes import CriticalQuestion, SchemeFamily, Slot

    return SchemeRef(
        SchemeFamily(d["family"]),
        d["name"],
        tuple(Slot(x["role"], x["filled"], x.get("premise", True)) for x in d.get("slots", ())),
        tuple(CriticalQuestion(q["question"], q.get("answered", False)) for q in d.get("critical_questions", ())),
    )


def kb_to_dict(kb: KnowledgeBase) -> dict:
    return {
        "facts": [str(f) for f in sorted(kb.facts, key=lambda l: l.sort_key)],
        "rules": [
            {
                "rule": str(r),
                "scheme": _scheme_to_dict(r.scheme),
                "source_node": r.source_node,
            }
            for r in kb.rules
        ],
        "propositions": dict(sorted(kb.proposition_texts.items(), key=lambda kv: natural_key(kv[0]))),
        "sources": {k: v for k, v in sorted(kb.sources.items(), key=lambda kv: natural_key(kv[0])) if v is not None},
    }


def kb_from_dict(d: Mapping) -> KnowledgeBase:
    rules = []
    for entry in d.get("rules", ()):
        if isinstance(entry, str):
            rules.append(SimpleRule.parse(entry))
        else:
            rules.append(SimpleRule.parse(
                entry["rule"],
                scheme=_scheme_from_dict(entry.get("scheme")),
                source_node=entry.get("source_node"),
            ))
    return KnowledgeBase(
        frozenset(Literal.parse(f) for f in d.get("facts", ())),
        tuple(rules),
        dict(d.get("propositions", {})),
        dict(d.get("sources", {})),
    )


def argument_to_dict(arg: ApproximateArgument) -> dict:
    return {"claim": str(arg.claim), "support": [str(f) for f in arg.sorted_support()]}
