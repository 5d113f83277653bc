import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from argnlg.framework import build_framework
from argnlg.logic import KnowledgeBase, attacks_between, construct_simple_arguments
from argnlg.planner import (
    Direction,
    ImplicitPremiseMode,
    Leaf,
    Message,
    Ordering,
    PlannerConfig,
    Relation,
    RelationKind,
    Role,
    Strategy,
    annotate_dependencies,
    extract_lines,
    plan_acceptability,
    plan_argument,
    plan_extensions,
    plan_from_dict,
    plan_messages,
    plan_network,
    plan_to_dict,
    walk,
)

from oracles import random_kb


def message_bag(plan):
    return Counter((m.atom, m.surface, m.role) for m in plan_messages(plan))


class TestRelations:
    def test_justify_needs_direction_and_satellite(self):
        leaf = Leaf(Message("p", "p", Role.CLAIM))
        with pytest.raises(ValueError):
            Relation(RelationKind.JUSTIFY, leaf, (leaf,))
        with pytest.raises(ValueError):
            Relation(RelationKind.EVIDENCE, leaf, (), Direction.FORWARD)
        with pytest.raises(ValueError):
            Relation(RelationKind.ANTITHESIS, leaf, (leaf, leaf))
        with pytest.raises(ValueError):
            Relation(RelationKind.CONJUNCTION, leaf, (leaf,), Direction.BACKWARD)


class TestSingleArgument:
    def test_b_backward(self, kb, af, letter):
        b = letter["b"]
        plan = plan_argument(kb, af.structured[b], "backward", arg_id=b)
        (rel,) = [n for n in walk(plan) if isinstance(n, Relation) and n.kind is RelationKind.JUSTIFY]
        assert rel.direction is Direction.BACKWARD
        assert rel.nucleus.message.atom == "T3" and rel.nucleus.message.role is Role.CLAIM
        assert [m.atom for m in plan_messages(plan)] == ["T3", "T4"]
        assert plan.meta["goal"] == "present-argument"

    def test_expansion_uses_evidence(self, kb, af, letter):
        plan = plan_argument(kb, af.structured[letter["b"]], "backward", expand=True)
        kinds = [n.kind for n in walk(plan) if isinstance(n, Relation)]
        assert RelationKind.EVIDENCE in kinds and RelationKind.JUSTIFY in kinds
        assert [m.atom for m in plan_messages(plan)] == ["T3", "T4", "T5"]

    @pytest.mark.parametrize("mode,text", [
        ("improve", "although we have no evidence that this is the established rule."),
        ("report", "and we assume that this is the established rule."),
    ])
    def test_implicit_premise_notes(self, kb, af, letter, mode, text):
        cfg = PlannerConfig(implicit_premise=ImplicitPremiseMode(mode))
        plan = plan_argument(kb, af.structured[letter["b"]], config=cfg)
        notes = [m for m in plan_messages(plan) if m.role is Role.IMPLICIT_PREMISE_NOTE]
        assert [m.surface for m in notes] == [text]

    def test_omit_is_default(self, kb, af, letter):
        plan = plan_argument(kb, af.structured[letter["b"]])
        assert all(m.role is not Role.IMPLICIT_PREMISE_NOTE for m in plan_messages(plan))

    def test_negative_claim_presents_premises(self, kb, af, letter):
        plan = plan_argument(kb, af.structured[letter["d"]])
        assert [m.atom for m in plan_messages(plan)] == ["T6", "T7"]

    def test_inconsistent_expansion_falls_back(self):
        from argnlg.logic import Literal, SimpleRule
        R = SimpleRule.parse
        kb = KnowledgeBase(frozenset({Literal("a"), Literal("b")}), (R("a -> c"), R("b -> ~a"), R("~a -> c")))
        target = next(x for x in construct_simple_arguments(kb) if str(x) == "<{a, a -> c}, c>")
        plan = plan_argument(kb, target, expand=True)
        assert plan.meta["diagnostics"]
        assert [m.atom for m in plan_messages(plan)] == ["c", "a"]


    def test_negated_premise_placeholder(self):
        from argnlg.logic import Literal, SimpleRule
        kb = KnowledgeBase(frozenset({Literal("a", False)}), (SimpleRule.parse("~a -> b"),),
                           {"a": "it rains", "b": "we walk"})
        plan = plan_argument(kb, construct_simple_arguments(kb)[0])
        assert [m.surface for m in plan_messages(plan)] == ["we walk", "it is not the case that it rains"]
        explicit = KnowledgeBase(kb.facts, kb.rules, {**kb.proposition_texts, "~a": "it is dry"})
        plan = plan_argument(explicit, construct_simple_arguments(explicit)[0])
        assert [m.surface for m in plan_messages(plan)] == ["we walk", "it is dry"]


class TestNetwork:
    def test_dependencies(self, kb, af, letter):
        dep = annotate_dependencies(af, kb)
        a, b, c = letter["a"], letter["b"], letter["c"]
        assert dep.edges == {(a, b), (b, c)}

    def test_lines(self, kb, af, letter):
        lines = extract_lines(annotate_dependencies(af, kb))
        assert [l.arguments for l in lines] == [(letter["a"], letter["b"], letter["c"]), (letter["d"],)]
        merged = lines[0].merged
        assert str(merged.claim) == "T1" and len(merged.support) == 7

    def test_ordering_by_attacks(self, kb, af, letter):
        lines = extract_lines(annotate_dependencies(af, kb), Ordering.ATTACKS)
        # the long line receives two attacks from d, d receives one from b
        assert lines[0].arguments == (letter["d"],)

    def test_network_plan(self, kb, af, letter):
        plan = plan_network(af, kb)
        assert plan.kind is RelationKind.ANTITHESIS
        assert plan.meta["attacked"] == [letter["b"], letter["c"]]
        assert plan.meta["attached"] == "after-line"
        assert plan.meta["document"] is True
        assert [m.atom for m in plan_messages(plan)] == ["T1", "T2", "T3", "T4", "T5", "T6", "T7"]

    def test_enumerate_strategy(self, kb, af):
        plan = plan_network(af, kb, Strategy.ENUMERATE)
        antitheses = [n for n in walk(plan) if isinstance(n, Relation) and n.kind is RelationKind.ANTITHESIS]
        assert len(antitheses) == len(af.attacks)

    def test_tiny_networks(self, kb, af, letter):
        empty = plan_network(af.restrict(()), kb)
        assert plan_messages(empty)[0].role is Role.EMPTY_NOTE
        single = plan_network(af.restrict({letter["a"]}), kb)
        assert [m.atom for m in plan_messages(single)] == ["T4", "T5"]


class TestAcceptability:
    def test_credulous_c(self, kb, af, letter):
        plan = plan_acceptability(af, kb, letter["c"])
        assert plan.meta["accepted"] is True
        assert plan.meta["tree"]["children"][0]["argument"] == letter["d"]
        assert plan.kind is RelationKind.ANTITHESIS

    def test_skeptical_c(self, kb, af, letter):
        plan = plan_acceptability(af, kb, letter["c"], "skeptical")
        assert plan.meta["accepted"] is False
        assert plan.meta["blocking"] == [letter["d"]]
        assert plan.meta["lacking"] == [[letter["d"], letter["a"]]]

    def test_grounded_membership(self, kb, af, letter):
        plan = plan_acceptability(af, kb, letter["a"], "credulous", "grounded")
        assert plan.meta["accepted"] is True and plan.meta["extensions"] == [[letter["a"]]]


class TestExtensions:
    def test_plan(self, kb, af):
        plan = plan_extensions(af, kb)
        assert plan.meta["extensions"] == [["A1", "A2", "A4"], ["A3", "A4"]]
        assert plan.meta["focus"] is None and plan.meta["diagnostics"]
        subs = [n for n in walk(plan) if isinstance(n, Relation) and "extension" in n.meta]
        assert [n.meta["extension"] for n in subs] == [["A1", "A2", "A4"], ["A3", "A4"]]

    def test_focus_preface_when_an_issue_fits(self):
        from argnlg.logic import Literal, SimpleRule
        R = SimpleRule.parse
        kb = KnowledgeBase(frozenset(Literal(x) for x in "xy"), (R("x -> p"), R("y -> ~p")),
                           {"x": "X holds.", "y": "Y holds.", "p": "P holds."})
        args = construct_simple_arguments(kb)
        af = build_framework(args, attacks_between(args))
        plan = plan_extensions(af, kb)
        assert plan.preface[0].role is Role.ISSUE_FOCUS_NOTE
        assert plan.preface[0].surface == "The 2 preferred extensions gravitate around the issue {A1, A2}."


class TestSerialisation:
    @pytest.mark.parametrize("goal", ["argument", "network", "acceptability", "extensions"])
    def test_round_trip(self, kb, af, letter, goal):
        plan = {
            "argument": lambda: plan_argument(kb, af.structured[letter["b"]], expand=True),
            "network": lambda: plan_network(af, kb),
            "acceptability": lambda: plan_acceptability(af, kb, letter["c"]),
            "extensions": lambda: plan_extensions(af, kb),
        }[goal]()
        again = plan_from_dict(plan_to_dict(plan))
        assert again == plan
        assert plan_to_dict(again) == plan_to_dict(plan)


# -- properties over random knowledge bases -------------------------------------


def _texts(kb):
    return KnowledgeBase(kb.facts, kb.rules, {a: f"Statement {a} holds" for a in kb.atoms()})


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(list(ImplicitPremiseMode)))
def test_forward_and_backward_say_the_same_things(seed, mode):
    kb = _texts(random_kb(random.Random(seed)))
    cfg = PlannerConfig(implicit_premise=mode)
    args = construct_simple_arguments(kb)
    for a in args:
        fwd = plan_argument(kb, a, "forward", config=cfg)
        bwd = plan_argument(kb, a, "backward", config=cfg)
        assert message_bag(fwd) == message_bag(bwd)
    if args:
        af = build_framework(args, attacks_between(args))
        assert message_bag(plan_network(af, kb, direction="forward")) == \
            message_bag(plan_network(af, kb, direction="backward"))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_network_mentions_every_argument(seed):
    kb = _texts(random_kb(random.Random(seed)))
    args = construct_simple_arguments(kb)
    if not args:
        return
    af = build_framework(args, attacks_between(args))
    lines = extract_lines(annotate_dependencies(af, kb))
    assert sorted(a for l in lines for a in l.arguments) == sorted(af.arguments)
    plan = plan_network(af, kb)
    said = {m.atom for m in plan_messages(plan)}
    for a in af.arguments:
        assert {l.atom for l in af.structured[a].literals} <= said
