"""Argumentation scheme catalogue.

Scheme nodes in an AIF graph may name the scheme they fulfil.  For the
schemes listed here we know the premise/conclusion slots, so we can tell
which slots the network actually supplies and which are left implicit.
Unknown scheme names are accepted with an empty slot template.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SchemeFamily(str, Enum):
    INFERENCE = "inference"
    CONFLICT = "conflict"
    PREFERENCE = "preference"


@dataclass(frozen=True)
class Slot:
    role: str
    filled: bool
    premise: bool = True


@dataclass(frozen=True)
class CriticalQuestion:
    question: str
    answered: bool = False


@dataclass(frozen=True)
class SchemeRef:
    family: SchemeFamily
    name: str
    slots: tuple[Slot, ...] = ()
    critical_questions: tuple[CriticalQuestion, ...] = ()

    @property
    def unfilled(self) -> tuple[Slot, ...]:
        return tuple(s for s in self.slots if not s.filled)

    @property
    def answered_questions(self) -> tuple[CriticalQuestion, ...]:
        return tuple(q for q in self.critical_questions if q.answered)


@dataclass(frozen=True)
class SchemeTemplate:
    family: SchemeFamily
    premises: tuple[str, ...]
    conclusion: str
    questions: tuple[str, ...] = field(default=())


ARGUMENT_FROM_EXAMPLE = "argument_from_example"
ARGUMENT_BY_ESTABLISHED_RULE = "argument_by_established_rule"

CATALOGUE: dict[str, SchemeTemplate] = {
    ARGUMENT_FROM_EXAMPLE: SchemeTemplate(
        SchemeFamily.INFERENCE,
        premises=("example",),
        conclusion="generalisation",
        questions=(
            "Is the proposition claimed in the premise in fact true?",
            "Does the example cited support the generalisation it is supposed to be an instance of?",
            "Is the example typical of the kinds of cases the generalisation covers?",
        ),
    ),
    ARGUMENT_BY_ESTABLISHED_RULE: SchemeTemplate(
        SchemeFamily.INFERENCE,
        premises=("major premise", "minor premise"),
        conclusion="conclusion",
        questions=(
            "Does the rule require carrying out this type of action?",
            "Are there other established rules that might conflict with this one?",
            "Is this case an exception to the rule?",
        ),
    ),
}


def resolve_slots(name: str, supplied_premises: int) -> tuple[Slot, ...]:
    """Slot template for ``name`` with the first ``supplied_premises`` premises filled."""
    template = CATALOGUE.get(name)
    if template is None:
        return ()
    slots = [
        Slot(role, filled=i < supplied_premises)
        for i, role in enumerate(template.premises)
    ]
    slots.append(Slot(template.conclusion, filled=True, premise=False))
    return tuple(slots)


def default_questions(name: str) -> tuple[CriticalQuestion, ...]:
    template = CATALOGUE.get(name)
    if template is None:
        return ()
    return tuple(CriticalQuestion(q) for q in template.questions)
