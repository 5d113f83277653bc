"""Brute-force reference implementations used to check the real code.

Nothing here imports the search or chaining code under test: the AF oracle
enumerates all 2^n subsets against the set-theoretic definitions, and the
logic oracle enumerates rule subsets that form a grounded derivation.
"""

from __future__ import annotations

import itertools
import random

from argnlg.framework import ArgumentationFramework
from argnlg.logic import KnowledgeBase, Literal, SimpleRule


# -- abstract argumentation -------------------------------------------------


def _subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def _attacks(att, s, x):
    return any((a, x) in att for a in s)


def brute_extensions(args, attacks):
    """Complete, preferred, grounded and stable extensions straight from the definitions."""
    args = list(args)
    att = set(attacks)

    def conflict_free(s):
        return not any((a, b) in att for a in s for b in s)

    def defended(s, x):
        return all(_attacks(att, s, y) for y in args if (y, x) in att)

    admissible = [s for s in _subsets(args) if conflict_free(s) and all(defended(s, x) for x in s)]
    complete = [s for s in admissible if all(x in s for x in args if defended(s, x))]
    preferred = [s for s in admissible if not any(s < t for t in admissible)]
    # least fixpoint of the characteristic function
    grounded = frozenset()
    while True:
        nxt = frozenset(x for x in args if defended(grounded, x))
        if nxt == grounded:
            break
        grounded = nxt
    stable = [
        s for s in _subsets(args)
        if conflict_free(s) and all(_attacks(att, s, x) for x in args if x not in s)
    ]
    return {
        "complete": set(complete),
        "preferred": set(preferred),
        "grounded": {grounded},
        "stable": set(stable),
        "admissible": set(admissible),
    }


def random_af(rng: random.Random, n_max: int = 8, density: float | None = None) -> ArgumentationFramework:
    n = rng.randint(0, n_max)
    p = rng.uniform(0.05, 0.5) if density is None else density
    args = tuple(f"a{i}" for i in range(n))
    attacks = frozenset((a, b) for a in args for b in args if rng.random() < p)
    return ArgumentationFramework(args, attacks)


# -- simple logic -----------------------------------------------------------


def grounded_rule_sets(kb: KnowledgeBase):
    """Every subset of rules in which each antecedent is a fact or concluded inside the subset.

    For an acyclic rule base such a subset is exactly the rule part of some
    derivation, so its conclusions are derivable.
    """
    rules = list(kb.rules)
    for r in range(len(rules) + 1):
        for combo in itertools.combinations(rules, r):
            concluded = {x.consequent for x in combo}
            if all(a in kb.facts or a in concluded for x in combo for a in x.antecedents):
                yield combo


def oracle_entails(kb: KnowledgeBase, goal: Literal) -> bool:
    if goal in kb.facts:
        return True
    return any(any(r.consequent == goal for r in combo) for combo in grounded_rule_sets(kb))


def oracle_derives(formulas, goal: Literal) -> bool:
    facts = frozenset(f for f in formulas if isinstance(f, Literal))
    rules = tuple(f for f in formulas if isinstance(f, SimpleRule))
    return oracle_entails(KnowledgeBase(facts, rules), goal)


def is_minimal_support(support, claim: Literal) -> bool:
    """Valid and no strict subset (checked exhaustively) is valid."""
    support = list(support)
    if not oracle_derives(support, claim):
        return False
    for r in range(len(support)):
        for combo in itertools.combinations(support, r):
            if oracle_derives(combo, claim):
                return False
    return True


def random_kb(rng: random.Random, max_atoms: int = 6, max_rules: int = 6) -> KnowledgeBase:
    """Acyclic by construction: a rule concludes an atom of higher index than all its antecedents."""
    n = rng.randint(2, max_atoms)
    atoms = [f"p{i}" for i in range(n)]
    facts = {Literal(a, rng.random() < 0.85) for a in atoms if rng.random() < 0.5}
    rules = []
    for _ in range(rng.randint(0, max_rules)):
        head = rng.randint(1, n - 1)
        k = rng.randint(1, min(3, head))
        body = rng.sample(range(head), k)
        ants = tuple(Literal(atoms[i], rng.random() < 0.8) for i in sorted(body))
        rules.append(SimpleRule(ants, Literal(atoms[head], rng.random() < 0.75)))
    return KnowledgeBase(frozenset(facts), tuple(rules))
