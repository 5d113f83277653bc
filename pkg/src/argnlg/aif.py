"""AIF graph model, validation and ingestion.

The on-disk format is a small JSON schema compatible with AIFdb exports::

    {"nodes": [{"nodeID": "T1", "text": "...", "type": "I"}, ...],
     "edges": [{"fromID": "T5", "toID": "RA1"}, ...]}

Scheme nodes may carry ``"scheme": {"name": ..., "family": ...}``.  Unknown
fields (timestamps, edge ids, participant ids) are ignored.
"""

from __future__ import annotations

import json
import urllib.error
import urllib.request
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from graphlib import CycleError, TopologicalSorter
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .errors import (
    InvariantViolation,
    MalformedInput,
    NetworkError,
    RemoteError,
    SchemaViolation,
)
from .schemes import (
    CriticalQuestion,
    SchemeFamily,
    SchemeRef,
    Slot,
    default_questions,
    resolve_slots,
)

DEFAULT_TIMEOUT = 10.0


class NodeKind(str, Enum):
    INFORMATION = "I"
    RULE_APPLICATION = "RA"
    CONFLICT_APPLICATION = "CA"
    PREFERENCE_APPLICATION = "PA"

    @property
    def is_scheme(self) -> bool:
        return self is not NodeKind.INFORMATION


FAMILY_OF_KIND = {
    NodeKind.RULE_APPLICATION: SchemeFamily.INFERENCE,
    NodeKind.CONFLICT_APPLICATION: SchemeFamily.CONFLICT,
    NodeKind.PREFERENCE_APPLICATION: SchemeFamily.PREFERENCE,
}


@dataclass(frozen=True)
class AifNode:
    id: str
    kind: NodeKind
    text: str = ""
    scheme: SchemeRef | None = None
    speaker: str | None = None


@dataclass(frozen=True)
class AifEdge:
    source: str
    target: str


@dataclass(frozen=True)
class AifGraph:
    """Typed AIF graph.

    Construction canonicalises ordering (nodes by id, edges by endpoints)
    but performs no checks; use :func:`validate` for that.
    """

    nodes: tuple[AifNode, ...] = ()
    edges: tuple[AifEdge, ...] = ()
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        nodes = tuple(sorted(self.nodes, key=lambda n: (n.id, n.kind.value)))
        edges = tuple(sorted(set(self.edges), key=lambda e: (e.source, e.target)))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        self._index.update({n.id: n for n in nodes})

    def node(self, node_id: str) -> AifNode:
        return self._index[node_id]

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._index

    def of_kind(self, kind: NodeKind) -> tuple[AifNode, ...]:
        return tuple(n for n in self.nodes if n.kind is kind)

    def predecessors(self, node_id: str) -> list[str]:
        return [e.source for e in self.edges if e.target == node_id]

    def successors(self, node_id: str) -> list[str]:
        return [e.target for e in self.edges if e.source == node_id]


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    ids: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


def validate(graph: AifGraph) -> list[Diagnostic]:
    """Check every structural invariant, one diagnostic per violation."""
    out: list[Diagnostic] = []
    counts = Counter(n.id for n in graph.nodes)
    kinds = {}
    for n in graph.nodes:
        kinds.setdefault(n.id, n.kind)

    for node_id, count in sorted(counts.items()):
        if not node_id:
            out.append(Diagnostic("empty-id", "node with empty id", ("",)))
        elif count > 1:
            out.append(Diagnostic("duplicate-id", f"{count} nodes share id {node_id!r}", (node_id,)))

    for n in graph.nodes:
        if n.kind is NodeKind.INFORMATION:
            if not n.text.strip():
                out.append(Diagnostic("empty-text", f"I-node {n.id!r} has no text", (n.id,)))
            if n.scheme is not None:
                out.append(Diagnostic("scheme-on-inode", f"I-node {n.id!r} carries a scheme", (n.id,)))
        elif n.scheme is not None and n.scheme.family is not FAMILY_OF_KIND[n.kind]:
            out.append(Diagnostic(
                "family-mismatch",
                f"{n.kind.value} node {n.id!r} fulfils a {n.scheme.family.value} scheme",
                (n.id,),
            ))

    for e in graph.edges:
        missing = [x for x in (e.source, e.target) if x not in kinds]
        if missing:
            out.append(Diagnostic(
                "dangling-edge",
                f"edge {e.source!r}->{e.target!r} references unknown node(s) {', '.join(map(repr, missing))}",
                (e.source, e.target),
            ))
        elif kinds[e.source] is NodeKind.INFORMATION and kinds[e.target] is NodeKind.INFORMATION:
            out.append(Diagnostic(
                "i-i-edge",
                f"edge {e.source!r}->{e.target!r} connects two I-nodes",
                (e.source, e.target),
            ))

    for node_id, kind in kinds.items():
        if not kind.is_scheme:
            continue
        if not graph.predecessors(node_id):
            out.append(Diagnostic("no-incoming", f"{kind.value} node {node_id!r} has no incoming edge", (node_id,)))
        if not graph.successors(node_id):
            out.append(Diagnostic("no-outgoing", f"{kind.value} node {node_id!r} has no outgoing edge", (node_id,)))

    inference = {NodeKind.INFORMATION, NodeKind.RULE_APPLICATION}
    sorter = TopologicalSorter({k: () for k, v in kinds.items() if v in inference})
    for e in graph.edges:
        if kinds.get(e.source) in inference and kinds.get(e.target) in inference:
            sorter.add(e.target, e.source)
    try:
        sorter.prepare()
    except CycleError as exc:
        cycle = tuple(dict.fromkeys(exc.args[1]))
        out.append(Diagnostic("inference-cycle", f"cyclic inference chain through {', '.join(cycle)}", cycle))
    return out


# -- (de)serialisation -----------------------------------------------------


def _require(obj: Mapping, key: str, where: str) -> Any:
    if key not in obj:
        raise SchemaViolation(f"{where} is missing field {key!r}", (str(obj.get("nodeID", "")),))
    return obj[key]


def _parse_scheme(raw: Any, kind: NodeKind, node_id: str, supplied: int) -> SchemeRef:
    if isinstance(raw, str):
        raw = {"name": raw}
    if not isinstance(raw, Mapping):
        raise SchemaViolation(f"scheme of node {node_id!r} must be an object or a name", (node_id,))
    name = str(_require(raw, "name", f"scheme of node {node_id!r}"))
    family_raw = raw.get("family")
    if family_raw is None:
        family = FAMILY_OF_KIND.get(kind, SchemeFamily.INFERENCE)
    else:
        try:
            family = SchemeFamily(str(family_raw).lower())
        except ValueError:
            raise SchemaViolation(f"unknown scheme family {family_raw!r} on node {node_id!r}", (node_id,)) from None
    if "slots" in raw:
        slots = tuple(
            Slot(str(s["role"]), bool(s["filled"]), bool(s.get("premise", True)))
            for s in raw["slots"]
        )
    else:
        slots = resolve_slots(name, supplied)
    if "critical_questions" in raw:
        questions = tuple(
            CriticalQuestion(str(q["question"]), bool(q.get("answered", False)))
            for q in raw["critical_questions"]
        )
    else:
        questions = default_questions(name)
    return SchemeRef(family, name, slots, questions)


def graph_from_dict(payload: Any, *, strict: bool = True, check: bool = True) -> AifGraph:
    """Build and validate a graph from an already-decoded JSON payload.

    With ``strict=False`` nodes of kinds outside I/RA/CA/PA (AIFdb locutions,
    transitions) are dropped together with their edges instead of raising.
    ``check=False`` skips the structural invariants (see :func:`validate`).
    """
    if not isinstance(payload, Mapping):
        raise SchemaViolation("top-level value must be an object")
    raw_nodes = _require(payload, "nodes", "graph")
    raw_edges = _require(payload, "edges", "graph")
    if not isinstance(raw_nodes, list) or not isinstance(raw_edges, list):
        raise SchemaViolation("'nodes' and 'edges' must be lists")

    staged = []
    skipped: set[str] = set()
    for raw in raw_nodes:
        if not isinstance(raw, Mapping):
            raise SchemaViolation("node entries must be objects")
        node_id = str(_require(raw, "nodeID", "node"))
        kind_raw = _require(raw, "type", f"node {node_id!r}")
        try:
            kind = NodeKind(str(kind_raw))
        except ValueError:
            if strict:
                raise SchemaViolation(f"node {node_id!r} has unknown type {kind_raw!r}", (node_id,)) from None
            skipped.add(node_id)
            continue
        if kind is NodeKind.INFORMATION and "text" not in raw:
            raise SchemaViolation(f"I-node {node_id!r} is missing field 'text'", (node_id,))
        staged.append((node_id, kind, raw))

    edges = []
    for raw in raw_edges:
        if not isinstance(raw, Mapping):
            raise SchemaViolation("edge entries must be objects")
        src = str(_require(raw, "fromID", "edge"))
        dst = str(_require(raw, "toID", "edge"))
        if src in skipped or dst in skipped:
            continue
        edges.append(AifEdge(src, dst))

    kind_of = {node_id: kind for node_id, kind, _ in staged}
    nodes = []
    for node_id, kind, raw in staged:
        scheme = None
        if raw.get("scheme") is not None:
            supplied = sum(
                1 for e in edges
                if e.target == node_id and kind_of.get(e.source) is NodeKind.INFORMATION
            )
            scheme = _parse_scheme(raw["scheme"], kind, node_id, supplied)
        speaker = raw.get("speaker")
        nodes.append(AifNode(
            node_id, kind, str(raw.get("text", "")), scheme,
            None if speaker is None else str(speaker),
        ))

    graph = AifGraph(tuple(nodes), tuple(edges))
    problems = validate(graph) if check else []
    if problems:
        ids = tuple(dict.fromkeys(i for d in problems for i in d.ids))
        detail = "; ".join(str(d) for d in problems)
        raise InvariantViolation(detail, ids)
    return graph


def parse_graph(text: str | bytes, *, strict: bool = True, check: bool = True) -> AifGraph:
    try:
        payload = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedInput(f"invalid AIF-JSON: {exc}") from None
    return graph_from_dict(payload, strict=strict, check=check)


def load_graph(path: str | Path, *, strict: bool = True, check: bool = True) -> AifGraph:
    return parse_graph(Path(path).read_bytes(), strict=strict, check=check)


def graph_to_dict(graph: AifGraph) -> dict:
    nodes = []
    for n in graph.nodes:
        entry: dict[str, Any] = {"nodeID": n.id, "text": n.text, "type": n.kind.value}
        if n.speaker is not None:
            entry["speaker"] = n.speaker
        if n.scheme is not None:
            entry["scheme"] = {
                "name": n.scheme.name,
                "family": n.scheme.family.value,
                "slots": [
                    {"role": s.role, "filled": s.filled, "premise": s.premise}
                    for s in n.scheme.slots
                ],
                "critical_questions": [
                    {"question": q.question, "answered": q.answered}
                    for q in n.scheme.critical_questions
                ],
            }
        nodes.append(entry)
    edges = [{"fromID": e.source, "toID": e.target} for e in graph.edges]
    return {"nodes": nodes, "edges": edges}


def dump_graph(graph: AifGraph, indent: int | None = 2) -> str:
    return json.dumps(graph_to_dict(graph), indent=indent, ensure_ascii=False)


def fetch_payload(endpoint: str, graph_id: str, timeout: float = DEFAULT_TIMEOUT) -> bytes:
    if not graph_id:
        raise ValueError("graph_id must be non-empty")
    url = f"{endpoint.rstrip('/')}/{graph_id}"
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            return resp.read()
    except urllib.error.HTTPError as exc:
        raise RemoteError(f"GET {url} returned status {exc.code}", exc.code) from None
    except (urllib.error.URLError, TimeoutError, OSError) as exc:
        reason = getattr(exc, "reason", exc)
        raise NetworkError(f"GET {url} failed: {reason}") from None


def fetch_graph(endpoint: str, graph_id: str, timeout: float = DEFAULT_TIMEOUT, *, strict: bool = True) -> AifGraph:
    """Download graph ``graph_id`` from ``{endpoint}/{graph_id}`` and parse it."""
    return parse_graph(fetch_payload(endpoint, graph_id, timeout), strict=strict)


def running_example_path() -> Path:
    return Path(str(resources.files("argnlg") / "data" / "moral_maze_1724.json"))


def load_running_example() -> AifGraph:
    """The Moral Maze debt excerpt (AIFdb argview 1724, edited)."""
    return load_graph(running_example_path())
