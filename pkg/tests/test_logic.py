import random

import pytest
from hypothesis import given, settings, strategies as st

from argnlg import aif
from argnlg.errors import CompileError, InconsistentExpansion
from argnlg.logic import (
    ApproximateArgument,
    AttackKind,
    KnowledgeBase,
    Literal,
    SimpleRule,
    attacks_between,
    classify,
    closure,
    compile_graph,
    construct_simple_arguments,
    derives,
    entails,
    expand_argument,
    is_inconsistent,
    kb_from_dict,
    kb_to_dict,
    parse_formula,
    relevant,
)

import golden
from oracles import is_minimal_support, oracle_entails, random_kb

L = Literal.parse
R = SimpleRule.parse


def arg(claim, *support):
    return ApproximateArgument(frozenset(parse_formula(s) for s in support), L(claim))


class TestLiterals:
    def test_parse_and_print(self):
        assert str(L("~T3")) == "~T3" and L("¬T3") == L("~T3") and L(" T3 ") == Literal("T3")
        assert L("T3").complement() == L("~T3")
        assert L("~T3").complement().complement() == L("~T3")

    def test_natural_order(self):
        lits = [L("T10"), L("~T2"), L("T2"), L("T1")]
        assert [str(x) for x in sorted(lits, key=lambda l: l.sort_key)] == ["T1", "T2", "~T2", "T10"]

    def test_rule_text(self):
        r = R("T2 & T3 -> T1")
        assert r.antecedents == (L("T2"), L("T3")) and r.consequent == L("T1")
        assert str(r) == "T2 & T3 -> T1"
        assert str(R("T6&T7->~T3")) == "T6 & T7 -> ~T3"

    @pytest.mark.parametrize("bad", ["T1", "-> T1", "T1 -> T1", "T1 & T2 -> T2"])
    def test_bad_rules(self, bad):
        with pytest.raises(ValueError):
            R(bad)

    def test_empty_atom(self):
        with pytest.raises(ValueError):
            Literal("")


class TestCompilation:
    def test_running_example(self, kb):
        assert {str(r) for r in kb.rules} == golden.RULES
        assert {str(f) for f in kb.facts} == golden.FACTS

    def test_rule_provenance(self, kb):
        by_text = {str(r): r for r in kb.rules}
        assert by_text["T5 -> T4"].scheme.name == "argument_from_example"
        assert by_text["T4 -> T3"].source_node == "RA2"
        assert by_text["T6 & T7 -> ~T3"].source_node == "CA1"
        assert by_text["T2 & T3 -> T1"].scheme is None

    def test_texts_and_sources(self, kb):
        assert kb.text(L("T2")) == golden.T2
        assert kb.text(L("~T2")) is None
        assert kb.sources["T6"] == "Nick Dearden"

    def _graph(self, nodes, edges):
        return aif.graph_from_dict({
            "nodes": [{"nodeID": i, "type": k, "text": i} for i, k in nodes],
            "edges": [{"fromID": a, "toID": b} for a, b in edges],
        })

    def test_conflict_from_concluded_source_redirects_rule(self):
        g = self._graph(
            [("1", "I"), ("2", "I"), ("3", "I"), ("R", "RA"), ("C", "CA")],
            [("1", "R"), ("R", "2"), ("2", "C"), ("C", "3")],
        )
        kb = compile_graph(g)
        assert {str(r) for r in kb.rules} == {"1 -> ~3"}

    def test_redirect_keeps_rule_when_source_is_shared(self):
        g = self._graph(
            [("1", "I"), ("2", "I"), ("3", "I"), ("4", "I"), ("R", "RA"), ("S", "RA"), ("C", "CA")],
            [("1", "R"), ("R", "2"), ("2", "C"), ("C", "3"), ("2", "S"), ("S", "4")],
        )
        kb = compile_graph(g)
        assert {str(r) for r in kb.rules} == {"1 -> 2", "1 -> ~3", "2 -> 4"}

    def test_plain_conflict(self):
        g = self._graph([("1", "I"), ("2", "I"), ("C", "CA")], [("1", "C"), ("C", "2")])
        assert {str(r) for r in compile_graph(g).rules} == {"1 -> ~2"}

    def test_scheme_node_with_two_conclusions(self):
        g = self._graph([("1", "I"), ("2", "I"), ("3", "I"), ("R", "RA")], [("1", "R"), ("R", "2"), ("R", "3")])
        with pytest.raises(CompileError) as exc:
            compile_graph(g)
        assert exc.value.node_id == "R"

    def test_scheme_node_fed_by_scheme_node(self):
        g = self._graph(
            [("1", "I"), ("2", "I"), ("R", "RA"), ("C", "CA")],
            [("1", "R"), ("R", "2"), ("C", "R"), ("2", "C")],
        )
        with pytest.raises(CompileError):
            compile_graph(g)

    def test_preference_nodes_are_ignored(self):
        g = self._graph([("1", "I"), ("2", "I"), ("P", "PA")], [("1", "P"), ("P", "2")])
        kb = compile_graph(g)
        assert kb.rules == () and {str(f) for f in kb.facts} == {"1", "2"}


class TestConsequence:
    def test_closure(self, kb):
        assert L("~T3") in closure(kb.facts, kb.rules)
        assert is_inconsistent(list(kb.facts) + list(kb.rules))

    def test_facts_entail_themselves(self):
        kb = KnowledgeBase(frozenset({L("p")}))
        assert entails(kb, L("p")) and not entails(kb, L("q"))

    def test_chain(self):
        assert derives([L("a"), R("a -> b"), R("b -> c")], L("c"))
        assert not derives([R("a -> b"), R("b -> c")], L("c"))
        assert not derives([L("a"), R("a & d -> c")], L("c"))


class TestArguments:
    def test_running_example(self, arguments):
        got = {(str(a.claim), frozenset(map(str, a.support))) for a in arguments}
        want = {(c, frozenset(s)) for c, s in golden.ARGUMENTS.values()}
        assert got == want

    def test_all_simple(self, kb, arguments):
        for a in arguments:
            c = classify(kb, a)
            assert c.valid and c.minimal and c.consistent and c.simple

    def test_classification_of_approximate_arguments(self, kb):
        c_prime = arg("T1", "T5", "T4", "T3", "T2", "T5 -> T4", "T4 -> T3", "T2 & T3 -> T1")
        cls = classify(kb, c_prime)
        assert cls.valid and not cls.minimal and cls.consistent
        empty = classify(kb, arg("T1"))
        assert not empty.valid and not empty.simple
        bad = classify(kb, arg("T3", "T4", "T4 -> T3", "T6", "T7", "T6 & T7 -> ~T3"))
        assert bad.valid and not bad.consistent and not bad.expansive

    def test_facts_alone_are_not_arguments(self):
        assert construct_simple_arguments(KnowledgeBase(frozenset({L("p"), L("q")}))) == ()

    def test_blocked_rules_give_no_argument(self):
        kb = KnowledgeBase(frozenset({L("a")}), (R("a -> b"), R("c -> d")))
        assert [str(a) for a in construct_simple_arguments(kb)] == ["<{a, a -> b}, b>"]

    def test_derived_antecedent(self):
        kb = KnowledgeBase(frozenset({L("a")}), (R("a -> b"), R("b -> c")))
        args = construct_simple_arguments(kb)
        assert [str(a) for a in args] == ["<{a, a -> b}, b>", "<{b, b -> c}, c>"]


class TestAttacks:
    def test_running_example(self, arguments, letter):
        by_claim = {str(a.claim): a for a in arguments}
        name = {by_claim[c]: k for k, (c, _) in golden.ARGUMENTS.items()}
        got = {(name[t.attacker], name[t.attacked], t.kind.value) for t in attacks_between(arguments)}
        assert got == golden.ATTACKS

    def test_rebut_is_symmetric_example(self):
        a, b = arg("p", "x", "x -> p"), arg("~p", "y", "y -> ~p")
        kinds = {(t.attacker, t.attacked, t.kind) for t in attacks_between([a, b])}
        assert kinds == {(a, b, AttackKind.REBUT), (b, a, AttackKind.REBUT)}


class TestExpansion:
    def test_expand_b(self, kb, arguments):
        b = next(a for a in arguments if str(a.claim) == "T3")
        assert {str(f) for f in expand_argument(kb, b).support} == {"T4", "T5", "T5 -> T4", "T4 -> T3"}

    def test_relevance(self, kb, arguments):
        b = next(a for a in arguments if str(a.claim) == "T3")
        b_prime = arg("T3", "T5", "T5 -> T4", "T4 -> T3")
        assert relevant(kb, b_prime, b)
        assert not relevant(kb, b, b)
        assert not relevant(kb, arg("T3", "T4", "T4 -> T3", "T2"), b)

    def test_inconsistent_expansion(self):
        kb = KnowledgeBase(frozenset({L("a"), L("b")}), (R("a -> c"), R("b -> ~a"), R("~a -> c")))
        with pytest.raises(InconsistentExpansion):
            expand_argument(kb, arg("c", "a", "a -> c"))

    def test_invalid_argument_cannot_expand(self, kb):
        with pytest.raises(ValueError):
            expand_argument(kb, arg("T3"))


class TestSerialisation:
    def test_kb_round_trip(self, kb):
        again = kb_from_dict(kb_to_dict(kb))
        assert again == kb
        assert again.proposition_texts == kb.proposition_texts
        assert [r.scheme for r in again.rules] == [r.scheme for r in kb.rules]
        assert kb_to_dict(again) == kb_to_dict(kb)

    def test_bare_string_rules(self):
        kb = kb_from_dict({"facts": ["a"], "rules": ["a -> b"]})
        assert [str(r) for r in kb.rules] == ["a -> b"] and kb.text(L("b")) == "b"


# -- oracle checks over random knowledge bases ---------------------------------


def test_entails_matches_derivation_oracle():
    rng = random.Random(20240917)
    for _ in range(200):
        kb = random_kb(rng)
        for atom in sorted(kb.atoms()):
            for lit in (Literal(atom), Literal(atom, False)):
                assert entails(kb, lit) == oracle_entails(kb, lit), (kb, lit)


def test_simple_arguments_are_minimal_and_complete():
    rng = random.Random(7)
    for _ in range(200):
        kb = random_kb(rng)
        args = construct_simple_arguments(kb)
        for a in args:
            assert is_minimal_support(a.support, a.claim), a
        # every rule whose antecedents are all entailed is the last step of one argument
        fired = {r for r in kb.rules if all(oracle_entails(kb, x) for x in r.antecedents)}
        assert {next(iter(a.rules)) for a in args} == fired


@st.composite
def kbs(draw):
    return random_kb(random.Random(draw(st.integers(0, 2**32 - 1))))


@settings(max_examples=100, deadline=None)
@given(kbs())
def test_kb_json_round_trip(kb):
    assert kb_from_dict(kb_to_dict(kb)) == kb


@settings(max_examples=100, deadline=None)
@given(kbs())
def test_rebut_symmetry(kb):
    attacks = attacks_between(construct_simple_arguments(kb))
    rebuts = {(t.attacker, t.attacked) for t in attacks if t.kind is AttackKind.REBUT}
    assert rebuts == {(b, a) for a, b in rebuts}
