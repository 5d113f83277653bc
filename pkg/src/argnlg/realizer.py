"""Surface realisation of document plans.

Propositions are emitted verbatim, in plan order, with discourse markers
between them.  Sentence-level markers are capitalised; the Evidence marker
is aggregated inline (``", e.g."``) unless aggregation is switched off.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

from .errors import MissingMarker
from .planner import (
    Direction,
    Leaf,
    Message,
    PlanNode,
    Relation,
    RelationKind,
    plan_to_dict,
)

INLINE = "inline"
SENTENCE = "sentence"

DEFAULT_LEXICON: dict[tuple, str] = {
    (RelationKind.JUSTIFY, Direction.FORWARD, SENTENCE): "Therefore",
    (RelationKind.JUSTIFY, Direction.BACKWARD, SENTENCE): "Indeed",
    (RelationKind.EVIDENCE, None, INLINE): ", e.g.",
    (RelationKind.EVIDENCE, Direction.BACKWARD, SENTENCE): "For example,",
    (RelationKind.EVIDENCE, Direction.FORWARD, SENTENCE): "This illustrates that",
    (RelationKind.ANTITHESIS, None, SENTENCE): "However,",
    (RelationKind.CONJUNCTION, None, SENTENCE): "and",
}


class OutputFormat(str, Enum):
    PLAIN = "plain"
    MARKDOWN = "markdown"
    JSON = "json"


@dataclass(frozen=True)
class RealizationConfig:
    format: OutputFormat = OutputFormat.PLAIN
    show_tags: bool = True
    aggregation: bool = True
    explicit_markers: bool = True
    lexicon: Mapping[tuple, str] = field(default_factory=lambda: dict(DEFAULT_LEXICON))


@dataclass(frozen=True)
class Segment:
    kind: str  # surface | tag | marker | inline | note | heading
    text: str


_TERMINAL = (".", "?", "!")


class _Emitter:
    def __init__(self, config: RealizationConfig):
        self.config = config
        self.out: list[Segment] = []

    def marker(self, kind: RelationKind, direction: Direction | None, context: str = SENTENCE) -> None:
        key = (kind, direction, context)
        if key not in self.config.lexicon:
            raise MissingMarker(key)
        if self.config.explicit_markers:
            self.out.append(Segment(INLINE if context == INLINE else "marker", self.config.lexicon[key]))

    def message(self, m: Message) -> None:
        if m.atom and m.role.value in ("claim", "premise"):
            self.out.append(Segment("surface", m.surface))
            if self.config.show_tags:
                self.out.append(Segment("tag", f"[{m.atom}]"))
        else:
            self.out.append(Segment("note", m.surface))

    def sequence(self, nodes) -> None:
        for i, node in enumerate(nodes):
            if i:
                self.marker(RelationKind.CONJUNCTION, None)
            self.node(node)

    def node(self, plan: PlanNode) -> None:
        if isinstance(plan, Leaf):
            self.message(plan.message)
            return
        ext = plan.meta.get("extension")
        if ext is not None:
            self.out.append(Segment("heading", "Extension {" + ", ".join(ext) + "}"))
        for m in plan.preface:
            self.message(m)
        kind, direction = plan.kind, plan.direction
        if kind is RelationKind.JUSTIFY:
            if direction is Direction.FORWARD:
                self.sequence(plan.satellites)
                self.marker(kind, direction)
                self.node(plan.nucleus)
            else:
                self.node(plan.nucleus)
                self.marker(kind, direction)
                self.sequence(plan.satellites)
        elif kind is RelationKind.EVIDENCE:
            if self.config.aggregation:
                self.node(plan.nucleus)
                self.marker(kind, None, INLINE)
                self.sequence(plan.satellites)
            elif direction is Direction.FORWARD:
                self.sequence(plan.satellites)
                self.marker(kind, direction)
                self.node(plan.nucleus)
            else:
                self.node(plan.nucleus)
                self.marker(kind, direction)
                self.sequence(plan.satellites)
        elif kind is RelationKind.ANTITHESIS:
            self.node(plan.nucleus)
            self.marker(kind, None)
            self.node(plan.satellites[0])
        else:
            self.sequence((plan.nucleus,) + plan.satellites)
        for m in plan.notes:
            self.message(m)


def realize_segments(plan: PlanNode, config: RealizationConfig = RealizationConfig()) -> list[Segment]:
    em = _Emitter(config)
    em.node(plan)
    segs = em.out
    document = isinstance(plan, Relation) and plan.meta.get("document")
    if document:
        last_surface = next((s for s in reversed(segs) if s.kind in ("surface", "note")), None)
        if last_surface is not None and segs[-1].kind in ("surface", "tag") \
                and not last_surface.text.rstrip().endswith(_TERMINAL):
            segs.append(Segment(INLINE, "."))
    return segs


def _join_plain(segs: list[Segment]) -> str:
    text = ""
    for s in segs:
        if s.kind == "heading":
            continue
        if s.kind == INLINE or not text:
            text += s.text
        else:
            text += " " + s.text
    return text


def _join_markdown(segs: list[Segment]) -> str:
    blocks: list[list[Segment]] = [[]]
    headings: list[str | None] = [None]
    for s in segs:
        if s.kind == "heading":
            carried = [blocks[-1].pop()] if blocks[-1] and blocks[-1][-1].kind == "marker" else []
            blocks.append(carried)
            headings.append(s.text)
        else:
            blocks[-1].append(s)
    out = []
    for heading, block in zip(headings, blocks):
        if heading is not None:
            out.append(f"## {heading}")
        if block:
            out.append(_join_plain([
                Segment(s.kind, f"`{s.text}`") if s.kind == "tag" else s for s in block
            ]))
    return "\n\n".join(out)


def realize(plan: PlanNode, config: RealizationConfig = RealizationConfig()) -> str:
    """Render a plan as plain text, markdown, or JSON (plan tree + plain text)."""
    segs = realize_segments(plan, config)
    fmt = OutputFormat(config.format)
    if fmt is OutputFormat.MARKDOWN:
        return _join_markdown(segs)
    text = _join_plain(segs)
    if fmt is OutputFormat.JSON:
        return json.dumps({"plan": plan_to_dict(plan), "text": text}, indent=2, ensure_ascii=False)
    return text


def verdict_sentence(meta: Mapping) -> str:
    target = meta.get("target", "?")
    mode = meta.get("mode", "credulous")
    adverb = {"credulous": "credulously", "skeptical": "skeptically"}.get(mode, mode)
    negation = "" if meta.get("accepted") else "not "
    return f"Argument {target} is {negation}{adverb} accepted w.r.t. {meta.get('semantics', 'preferred')} semantics."


def realize_acceptability(plan: PlanNode, config: RealizationConfig = RealizationConfig()) -> str:
    meta = plan.meta if isinstance(plan, Relation) else {}
    header = verdict_sentence(meta)
    fmt = OutputFormat(config.format)
    if fmt is OutputFormat.JSON:
        body = json.loads(realize(plan, config))
        body["verdict"] = header
        body["text"] = f"{header} {body['text']}"
        return json.dumps(body, indent=2, ensure_ascii=False)
    body = realize(plan, config)
    sep = "\n\n" if fmt is OutputFormat.MARKDOWN else " "
    return f"{header}{sep}{body}"


_QUOTES = {"``": '"', "''": '"', "“": '"', "”": '"', "‘": "'", "’": "'"}


def normalize_text(text: str) -> str:
    """Whitespace- and quote-normalised form used for golden comparisons."""
    for src, dst in _QUOTES.items():
        text = text.replace(src, dst)
    text = re.sub(r"\s+", " ", text).strip()
    return re.sub(r" +([,.;:?!])", r"\1", text)
