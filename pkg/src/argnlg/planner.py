"""Document planning for the four communicative goals.

A plan is a small rhetorical tree: leaves carry verbatim proposition texts
(or one of a few fixed note templates) and relations say how spans hang
together (Justify, Evidence, Antithesis, Conjunction) and in which order
they are written.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Iterator, Mapping, Union

from .dispute import DisputeNode, DisputeTree, NotAccepted, Side, dispute_tree
from .errors import InconsistentExpansion
from .framework import ArgumentationFramework
from .logic import (
    ApproximateArgument,
    KnowledgeBase,
    Literal,
    SimpleRule,
    expand_argument,
    formula_key,
    relevant,
)
from .schemes import ARGUMENT_BY_ESTABLISHED_RULE, ARGUMENT_FROM_EXAMPLE
from .semantics import (
    DEFAULT_MAX_ARGS,
    Mode,
    Semantics,
    enumerate_extensions,
    issue_foci,
)

log = logging.getLogger(__name__)


class Role(str, Enum):
    CLAIM = "claim"
    PREMISE = "premise"
    IMPLICIT_PREMISE_NOTE = "implicit-premise-note"
    CRITICAL_QUESTION_NOTE = "critical-question-note"
    ISSUE_FOCUS_NOTE = "issue-focus-note"
    EMPTY_NOTE = "empty-note"


class RelationKind(str, Enum):
    JUSTIFY = "justify"
    EVIDENCE = "evidence"
    ANTITHESIS = "antithesis"
    CONJUNCTION = "conjunction"


class Direction(str, Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class Strategy(str, Enum):
    ENUMERATE = "enumerate"
    LINES_OF_REASONING = "lines"


class Ordering(str, Enum):
    LENGTH = "length"
    ATTACKS = "attacks"


class ImplicitPremiseMode(str, Enum):
    IMPROVE = "improve"
    REPORT = "report"
    OMIT = "omit"


NOTE_TEMPLATES = {
    (ARGUMENT_BY_ESTABLISHED_RULE, ImplicitPremiseMode.IMPROVE):
        "although we have no evidence that this is the established rule.",
    (ARGUMENT_BY_ESTABLISHED_RULE, ImplicitPremiseMode.REPORT):
        "and we assume that this is the established rule.",
}
GENERIC_NOTE_TEMPLATES = {
    ImplicitPremiseMode.IMPROVE: "although we have no evidence for the {role}.",
    ImplicitPremiseMode.REPORT: "and we assume the {role}.",
}
CRITICAL_QUESTION_TEMPLATE = "This counterargument answers the critical question that states {question}"
ISSUE_FOCUS_TEMPLATE = "The {count} {semantics} extensions gravitate around the issue {{{members}}}."
EMPTY_EXTENSION_TEMPLATE = "No argument is accepted in this extension."
NEGATED_PREMISE_TEMPLATE = "it is not the case that {text}"


@dataclass(frozen=True)
class Message:
    atom: str
    surface: str
    role: Role
    source: str | None = None


@dataclass(frozen=True)
class Leaf:
    message: Message
    arguments: tuple[str, ...] = ()


@dataclass(frozen=True)
class Relation:
    kind: RelationKind
    nucleus: "PlanNode"
    satellites: tuple["PlanNode", ...]
    direction: Direction | None = None
    arguments: tuple[str, ...] = ()
    notes: tuple[Message, ...] = ()
    preface: tuple[Message, ...] = ()
    meta: Mapping = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "satellites", tuple(self.satellites))
        if self.kind in (RelationKind.JUSTIFY, RelationKind.EVIDENCE):
            if not self.satellites:
                raise ValueError(f"{self.kind.value} needs at least one satellite")
            if self.direction is None:
                raise ValueError(f"{self.kind.value} needs a writing direction")
        else:
            if self.direction is not None:
                raise ValueError(f"direction is meaningless for {self.kind.value}")
            if self.kind is RelationKind.ANTITHESIS and len(self.satellites) != 1:
                raise ValueError("antithesis takes exactly one satellite")


PlanNode = Union[Leaf, Relation]


@dataclass(frozen=True)
class PlannerConfig:
    ordering: Ordering = Ordering.LENGTH
    implicit_premise: ImplicitPremiseMode = ImplicitPremiseMode.OMIT
    max_args: int = DEFAULT_MAX_ARGS


DEFAULT_CONFIG = PlannerConfig()


# -- plan inspection -------------------------------------------------------


def walk(plan: PlanNode) -> Iterator[PlanNode]:
    yield plan
    if isinstance(plan, Relation):
        yield from walk(plan.nucleus)
        for s in plan.satellites:
            yield from walk(s)


def plan_messages(plan: PlanNode) -> list[Message]:
    out: list[Message] = []
    for node in walk(plan):
        if isinstance(node, Leaf):
            out.append(node.message)
        else:
            out.extend(node.preface)
            out.extend(node.notes)
    return out


def plan_arguments(plan: PlanNode) -> set[str]:
    return {a for node in walk(plan) for a in node.arguments}


def with_meta(plan: PlanNode, **meta) -> PlanNode:
    if isinstance(plan, Leaf):
        return Relation(RelationKind.CONJUNCTION, plan, (), arguments=plan.arguments, meta=meta)
    return replace(plan, meta={**plan.meta, **meta})


def plan_to_dict(plan: PlanNode) -> dict:
    if isinstance(plan, Leaf):
        m = plan.message
        out = {"leaf": {"atom": m.atom, "surface": m.surface, "role": m.role.value}}
        if m.source:
            out["leaf"]["source"] = m.source
        if plan.arguments:
            out["arguments"] = list(plan.arguments)
        return out
    out = {
        "relation": plan.kind.value,
        "nucleus": plan_to_dict(plan.nucleus),
        "satellites": [plan_to_dict(s) for s in plan.satellites],
    }
    if plan.direction is not None:
        out["direction"] = plan.direction.value
    if plan.arguments:
        out["arguments"] = list(plan.arguments)
    for key in ("notes", "preface"):
        msgs = getattr(plan, key)
        if msgs:
            out[key] = [{"atom": m.atom, "surface": m.surface, "role": m.role.value} for m in msgs]
    if plan.meta:
        out["meta"] = dict(plan.meta)
    return out


def _message_from_dict(d: Mapping) -> Message:
    return Message(d["atom"], d["surface"], Role(d["role"]), d.get("source"))


def plan_from_dict(d: Mapping) -> PlanNode:
    if "leaf" in d:
        return Leaf(_message_from_dict(d["leaf"]), tuple(d.get("arguments", ())))
    return Relation(
        RelationKind(d["relation"]),
        plan_from_dict(d["nucleus"]),
        tuple(plan_from_dict(s) for s in d["satellites"]),
        Direction(d["direction"]) if "direction" in d else None,
        tuple(d.get("arguments", ())),
        tuple(_message_from_dict(m) for m in d.get("notes", ())),
        tuple(_message_from_dict(m) for m in d.get("preface", ())),
        dict(d.get("meta", {})),
    )


# -- single arguments ------------------------------------------------------


def _message(kb: KnowledgeBase, lit: Literal, role: Role) -> Message | None:
    text = kb.text(lit)
    if text is None and not lit.positive and role is Role.PREMISE:
        text = NEGATED_PREMISE_TEMPLATE.format(text=kb.text(lit.complement()))
    if text is None:
        return None
    return Message(lit.atom, text, role, kb.sources.get(lit.atom))


def _implicit_notes(rule: SimpleRule, mode: ImplicitPremiseMode) -> tuple[Message, ...]:
    if mode is ImplicitPremiseMode.OMIT or rule.scheme is None:
        return ()
    notes = []
    for slot in rule.scheme.unfilled:
        if not slot.premise:
            continue
        template = NOTE_TEMPLATES.get((rule.scheme.name, mode))
        if template is None:
            template = GENERIC_NOTE_TEMPLATES[mode].format(role=slot.role)
        notes.append(Message("", template, Role.IMPLICIT_PREMISE_NOTE))
    return tuple(dict.fromkeys(notes))


def _join(parts: list[PlanNode], arguments: tuple[str, ...] = ()) -> PlanNode:
    if len(parts) == 1:
        return parts[0]
    return Relation(RelationKind.CONJUNCTION, parts[0], tuple(parts[1:]), arguments=arguments)


def _derivation(kb: KnowledgeBase, support: frozenset, lit: Literal, direction: Direction,
                cfg: PlannerConfig, arguments: tuple[str, ...], top: bool, seen: frozenset) -> PlanNode | None:
    role = Role.CLAIM if top else Role.PREMISE
    message = _message(kb, lit, role)
    rule = None
    if lit not in seen:
        for f in sorted(support, key=formula_key):
            if isinstance(f, SimpleRule) and f.consequent == lit:
                rule = f
                break
    if rule is None:
        return None if message is None else Leaf(message, arguments)

    parts = [
        p for a in rule.antecedents
        if (p := _derivation(kb, support, a, direction, cfg, arguments, False, seen | {lit})) is not None
    ]
    if not parts:
        return None if message is None else Leaf(message, arguments)
    satellite = _join(parts, arguments)
    if message is None:
        # negated claims have no surface of their own: the premises stand in
        return satellite
    kind = RelationKind.JUSTIFY
    if rule.scheme is not None and rule.scheme.name == ARGUMENT_FROM_EXAMPLE:
        kind = RelationKind.EVIDENCE
    return Relation(
        kind, Leaf(message, arguments), (satellite,), direction,
        arguments=arguments, notes=_implicit_notes(rule, cfg.implicit_premise),
    )


def _argument_body(kb: KnowledgeBase, arg: ApproximateArgument, direction: Direction,
                   cfg: PlannerConfig, arguments: tuple[str, ...]) -> PlanNode:
    plan = _derivation(kb, arg.support, arg.claim, direction, cfg, arguments, True, frozenset())
    if plan is not None:
        return plan
    leaves = [
        Leaf(m, arguments)
        for lit in sorted(arg.literals, key=lambda l: l.sort_key)
        if (m := _message(kb, lit, Role.PREMISE)) is not None
    ]
    if not leaves:
        raise ValueError(f"argument {arg} has nothing that can be verbalised")
    return _join(leaves, arguments)


def _relevant_expansion(kb: KnowledgeBase, target: ApproximateArgument) -> ApproximateArgument:
    expanded = expand_argument(kb, target)
    added = expanded.support - target.support
    kept: set = set()
    for f in sorted(added, key=formula_key):
        if not isinstance(f, SimpleRule):
            continue
        bundle = {f} | {a for a in f.antecedents if a in added}
        candidate = ApproximateArgument(target.support | bundle, target.claim)
        if relevant(kb, candidate, target):
            kept |= bundle
    return ApproximateArgument(target.support | kept, target.claim)


def plan_argument(kb: KnowledgeBase, target: ApproximateArgument, direction: Direction | str = Direction.BACKWARD,
                  expand: bool = False, config: PlannerConfig = DEFAULT_CONFIG,
                  arg_id: str | None = None) -> PlanNode:
    """Present one (approximate) argument, forward or backward."""
    direction = Direction(direction)
    diagnostics = []
    chosen = target
    if expand:
        try:
            chosen = _relevant_expansion(kb, target)
        except InconsistentExpansion as exc:
            log.warning("falling back to the unexpanded argument: %s", exc)
            diagnostics.append(str(exc))
    ids = (arg_id,) if arg_id else ()
    plan = _argument_body(kb, chosen, direction, config, ids)
    meta = {"goal": "present-argument"}
    if diagnostics:
        meta["diagnostics"] = diagnostics
    return with_meta(plan, **meta)


# -- networks --------------------------------------------------------------


@dataclass(frozen=True)
class DependencyGraph:
    framework: ArgumentationFramework
    edges: frozenset[tuple[str, str]]

    def successors(self, arg: str) -> list[str]:
        return self.framework.ordered(b for a, b in self.edges if a == arg)


@dataclass(frozen=True)
class LineOfReasoning:
    arguments: tuple[str, ...]
    merged: ApproximateArgument


def annotate_dependencies(af: ArgumentationFramework, kb: KnowledgeBase | None = None) -> DependencyGraph:
    """x -> y whenever x's claim is a premise literal of y, unless they conflict."""
    edges = set()
    for x in af.arguments:
        for y in af.arguments:
            if x == y or (x, y) in af.attacks or (y, x) in af.attacks:
                continue
            if af.structured[x].claim in af.structured[y].literals:
                edges.add((x, y))
    return DependencyGraph(af, frozenset(edges))


def _attacks_received(af: ArgumentationFramework, line: tuple[str, ...]) -> int:
    members = set(line)
    return sum(1 for a, b in af.attacks if b in members and a not in members)


def extract_lines(dep: DependencyGraph, ordering: Ordering | str = Ordering.LENGTH) -> list[LineOfReasoning]:
    """Partition the arguments into dependency chains, longest chains first.

    Chains are then ordered by length (descending) or by attacks received
    from outside the chain (ascending); ties go to canonical argument order.
    """
    af = dep.framework
    remaining = set(af.arguments)
    chains: list[tuple[str, ...]] = []
    while remaining:
        memo: dict[str, tuple[str, ...]] = {}

        def longest(x: str) -> tuple[str, ...]:
            if x not in memo:
                best: tuple[str, ...] = (x,)
                for y in dep.successors(x):
                    if y not in remaining:
                        continue
                    cand = (x,) + longest(y)
                    if _chain_key(af, cand) < _chain_key(af, best):
                        best = cand
                memo[x] = best
            return memo[x]

        chain = min((longest(x) for x in remaining), key=lambda c: _chain_key(af, c))
        chains.append(chain)
        remaining -= set(chain)

    if Ordering(ordering) is Ordering.ATTACKS:
        chains.sort(key=lambda c: (_attacks_received(af, c), [af.index(a) for a in c]))
    else:
        chains.sort(key=lambda c: _chain_key(af, c))
    return [LineOfReasoning(c, _merge(af, c)) for c in chains]


def _chain_key(af: ArgumentationFramework, chain: tuple[str, ...]) -> tuple:
    return (-len(chain), [af.index(a) for a in chain])


def _merge(af: ArgumentationFramework, chain: tuple[str, ...]) -> ApproximateArgument:
    support = frozenset().union(*(af.structured[a].support for a in chain))
    return ApproximateArgument(support, af.structured[chain[-1]].claim)


def _critical_question_notes(af: ArgumentationFramework, attackers: Iterable[str], attacked: Iterable[str]) -> tuple[Message, ...]:
    notes = []
    attacked = list(attacked)
    for x in attackers:
        counter = af.structured[x].claim.complement()
        for y in attacked:
            if (x, y) not in af.attacks:
                continue
            for r in sorted(af.structured[y].rules, key=formula_key):
                if r.scheme is None:
                    continue
                if counter == r.consequent or counter in r.antecedents:
                    for q in r.scheme.answered_questions:
                        text = CRITICAL_QUESTION_TEMPLATE.format(question=q.question)
                        notes.append(Message("", text, Role.CRITICAL_QUESTION_NOTE))
    return tuple(dict.fromkeys(notes))


def _gist(kb: KnowledgeBase, af: ArgumentationFramework, arg_id: str) -> PlanNode:
    arg = af.structured[arg_id]
    m = _message(kb, arg.claim, Role.CLAIM)
    if m is not None:
        return Leaf(m, (arg_id,))
    return _argument_body(kb, ApproximateArgument(arg.literals, arg.claim), Direction.BACKWARD,
                          replace(DEFAULT_CONFIG, implicit_premise=ImplicitPremiseMode.OMIT), (arg_id,))


def _empty_plan() -> PlanNode:
    return Leaf(Message("", EMPTY_EXTENSION_TEMPLATE, Role.EMPTY_NOTE))


def plan_network(af: ArgumentationFramework, kb: KnowledgeBase,
                 strategy: Strategy | str = Strategy.LINES_OF_REASONING,
                 direction: Direction | str = Direction.BACKWARD,
                 config: PlannerConfig = DEFAULT_CONFIG) -> PlanNode:
    """Present all arguments of a framework together with their conflicts."""
    strategy, direction = Strategy(strategy), Direction(direction)
    if len(af) == 0:
        return _empty_plan()
    if len(af) == 1:
        only = af.arguments[0]
        return plan_argument(kb, af.structured[only], direction, False, config, only)

    if strategy is Strategy.ENUMERATE:
        parts = [
            plan_argument(kb, af.structured[a], direction, False, config, a)
            for a in af.arguments
        ]
        for a, b in sorted(af.attacks, key=lambda p: (af.index(p[1]), af.index(p[0]))):
            parts.append(Relation(
                RelationKind.ANTITHESIS, _gist(kb, af, b), (_gist(kb, af, a),),
                arguments=(a, b), notes=_critical_question_notes(af, [a], [b]),
            ))
        body = Relation(RelationKind.CONJUNCTION, parts[0], tuple(parts[1:]))
        return with_meta(body, goal="present-network", strategy=strategy.value, document=True)

    lines = extract_lines(annotate_dependencies(af, kb), config.ordering)
    placed: list[str] = []
    body: PlanNode | None = None
    for line in lines:
        plan = with_meta(
            plan_argument(kb, line.merged, direction, False, config),
            line=list(line.arguments),
        )
        plan = _tag_arguments(plan, line.arguments)
        if body is None:
            body = plan
        else:
            hit = [b for b in placed if any((a, b) in af.attacks for a in line.arguments)]
            hitting = [b for b in placed if any((b, a) in af.attacks for a in line.arguments)]
            if hit or hitting:
                body = Relation(
                    RelationKind.ANTITHESIS, body, (plan,),
                    notes=_critical_question_notes(af, line.arguments, hit),
                    # the satellite follows the whole attacked line, wherever in it the attack lands
                    meta={"attacked": hit, "attacked_by": hitting, "attached": "after-line"},
                )
            else:
                body = Relation(RelationKind.CONJUNCTION, body, (plan,))
        placed.extend(line.arguments)
    return with_meta(body, goal="present-network", strategy=strategy.value, document=True,
                     lines=[list(l.arguments) for l in lines])


def _tag_arguments(plan: PlanNode, ids: tuple[str, ...]) -> PlanNode:
    if isinstance(plan, Leaf):
        return replace(plan, arguments=ids)
    return replace(
        plan,
        nucleus=_tag_arguments(plan.nucleus, ids),
        satellites=tuple(_tag_arguments(s, ids) for s in plan.satellites),
        arguments=ids,
    )


# -- acceptability ---------------------------------------------------------


def _dispute_plan(kb: KnowledgeBase, af: ArgumentationFramework, node: DisputeNode,
                  direction: Direction, cfg: PlannerConfig) -> PlanNode:
    base = plan_argument(kb, af.structured[node.argument], direction, False, cfg, node.argument)
    base = with_meta(base, side=node.side.value)
    for child in node.children:
        base = Relation(
            RelationKind.ANTITHESIS, base, (_dispute_plan(kb, af, child, direction, cfg),),
            notes=_critical_question_notes(af, [child.argument], [node.argument]) if child.side is Side.CON else (),
        )
    return base


def plan_acceptability(af: ArgumentationFramework, kb: KnowledgeBase, target: str,
                       mode: Mode | str = Mode.CREDULOUS, semantics: Semantics | str = Semantics.PREFERRED,
                       config: PlannerConfig = DEFAULT_CONFIG,
                       direction: Direction | str = Direction.BACKWARD) -> PlanNode:
    """Explain whether ``target`` is credulously or skeptically accepted."""
    mode, semantics, direction = Mode(mode), Semantics(semantics), Direction(direction)
    af.index(target)
    meta = {"goal": "explain-acceptability", "target": target, "mode": mode.value,
            "semantics": semantics.value, "document": True}
    target_plan = plan_argument(kb, af.structured[target], direction, False, config, target)

    if mode is Mode.CREDULOUS and semantics in (Semantics.PREFERRED, Semantics.COMPLETE):
        result = dispute_tree(af, target, config.max_args)
        if isinstance(result, DisputeTree):
            plan = _dispute_plan(kb, af, result.root, direction, config)
            return with_meta(plan, accepted=True, tree=result.root.to_dict(), **meta)
        blocking = list(result.blocking)
        plan = Relation(RelationKind.ANTITHESIS, target_plan,
                        (_join([_gist(kb, af, b) for b in blocking]),))
        return with_meta(plan, accepted=False, blocking=blocking, **meta)

    extensions = enumerate_extensions(af, semantics, config.max_args).extensions
    listed = [af.ordered(e) for e in extensions]
    if mode is Mode.CREDULOUS:
        accepted = any(target in e for e in extensions)
        lacking = [] if accepted else [e for e in extensions]
    else:
        lacking = [e for e in extensions if target not in e]
        accepted = not lacking
    if accepted:
        return with_meta(target_plan, accepted=True, extensions=listed, **meta)
    blocking = af.ordered({b for e in lacking for b in af.attackers(target) if b in e})
    meta.update(accepted=False, extensions=listed, lacking=[af.ordered(e) for e in lacking], blocking=blocking)
    if not blocking:
        return with_meta(target_plan, **meta)
    plan = Relation(RelationKind.ANTITHESIS, target_plan, (_join([_gist(kb, af, b) for b in blocking]),))
    return with_meta(plan, **meta)


# -- extensions ------------------------------------------------------------


def plan_extensions(af: ArgumentationFramework, kb: KnowledgeBase,
                    semantics: Semantics | str = Semantics.PREFERRED,
                    config: PlannerConfig = DEFAULT_CONFIG,
                    direction: Direction | str = Direction.BACKWARD) -> PlanNode:
    """One sub-plan per extension, pivoting on an issue when one fits."""
    semantics = Semantics(semantics)
    extensions = enumerate_extensions(af, semantics, config.max_args).extensions
    focus = issue_foci(af, semantics, config.max_args)
    diagnostics = []
    preface: tuple[Message, ...] = ()
    if focus is None:
        diagnostics.append(
            f"no issue class has exactly {len(extensions)} member(s); presenting extensions without a focus"
        )
        log.info(diagnostics[-1])
    else:
        text = ISSUE_FOCUS_TEMPLATE.format(
            count=len(extensions), semantics=semantics.value, members=", ".join(af.ordered(focus)),
        )
        preface = (Message("", text, Role.ISSUE_FOCUS_NOTE),)

    subplans = []
    for ext in extensions:
        members = af.ordered(ext)
        sub = plan_network(af.restrict(members), kb, Strategy.LINES_OF_REASONING, direction, config) if members else _empty_plan()
        subplans.append(with_meta(sub, extension=members))

    if not subplans:
        body: PlanNode = with_meta(_empty_plan())
    else:
        body = subplans[0]
        for sub in subplans[1:]:
            body = Relation(RelationKind.ANTITHESIS, body, (sub,))
    if preface:
        body = replace(body, preface=preface + body.preface)
    meta = {"goal": "explain-extensions", "semantics": semantics.value, "document": True,
            "extensions": [af.ordered(e) for e in extensions],
            "focus": af.ordered(focus) if focus else None}
    if diagnostics:
        meta["diagnostics"] = diagnostics
    return with_meta(body, **meta)
