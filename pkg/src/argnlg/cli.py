"""``arg-nlg``: ingest an AIF graph, reason over it and explain the result.

Exit status is 0 on success, 1 on domain errors (a failed compilation, a
graph that breaks an invariant, an unreachable endpoint...) and 2 on input
errors (unreadable files, bad JSON, unknown targets, bad flags).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence, TextIO

from . import aif
from .dispute import DisputeTree, dispute_tree
from .errors import ArgNlgError, MalformedInput, SchemaViolation, UnknownArgument
from .framework import ArgumentationFramework, build_framework
from .logic import (
    ApproximateArgument,
    KnowledgeBase,
    Literal,
    argument_to_dict,
    attacks_between,
    classify,
    compile_graph,
    construct_simple_arguments,
    kb_from_dict,
    kb_to_dict,
)
from .planner import (
    Direction,
    ImplicitPremiseMode,
    Ordering,
    PlannerConfig,
    Strategy,
    plan_acceptability,
    plan_argument,
    plan_extensions,
    plan_network,
)
from .realizer import OutputFormat, RealizationConfig, realize, realize_acceptability
from .semantics import (
    DEFAULT_MAX_ARGS,
    Mode,
    Semantics,
    acceptance,
    enumerate_extensions,
    issues,
)

log = logging.getLogger("argnlg")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2

ENDPOINT_VARIABLE = "ARG_NLG_ENDPOINT"

COMMANDS = ("validate", "compile", "semantics", "status", "explain", "fetch")


class Goal(str, Enum):
    PRESENT_ARGUMENT = "present-argument"
    PRESENT_NETWORK = "present-network"
    EXPLAIN_ACCEPTABILITY = "explain-acceptability"
    EXPLAIN_EXTENSIONS = "explain-extensions"


ARGUMENT_GOALS = (Goal.PRESENT_ARGUMENT, Goal.EXPLAIN_ACCEPTABILITY)


class InputError(Exception):
    """Bad invocation or unreadable input; maps to exit status 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    endpoint: str | None = None
    graph_id: str | None = None
    from_kb: str | None = None
    semantics: Semantics = Semantics.PREFERRED
    mode: Mode = Mode.CREDULOUS
    goal: Goal = Goal.PRESENT_NETWORK
    target: str | None = None
    style: Direction = Direction.BACKWARD
    expand: bool = False
    ordering: Ordering = Ordering.LENGTH
    implicit_premise: ImplicitPremiseMode = ImplicitPremiseMode.OMIT
    format: str = "text"
    max_args: int = DEFAULT_MAX_ARGS
    output: str | None = None

    def check(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.command == "fetch":
            if self.graph_id is None or not self.endpoint:
                raise InputError(f"fetch needs --id and --endpoint (or ${ENDPOINT_VARIABLE})")
            return
        sources = [self.input is not None, self.graph_id is not None, self.from_kb is not None]
        if sum(sources) != 1:
            raise InputError("give exactly one input source: --input, --endpoint/--id or --from-kb")
        if self.graph_id is not None and not self.endpoint:
            raise InputError(f"--id needs --endpoint (or ${ENDPOINT_VARIABLE})")
        if self.from_kb is not None and self.command == "validate":
            raise InputError("validate works on AIF graphs, not on compiled knowledge bases")
        if self.command == "status" and self.target is None:
            raise InputError("status needs --target")
        if self.command == "explain" and self.goal in ARGUMENT_GOALS and self.target is None:
            raise InputError(f"--goal {self.goal.value} needs --target")
        if self.max_args < 1:
            raise InputError("--max-args must be positive")


# -- loading ---------------------------------------------------------------


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def load_input_graph(config: RunConfig, *, check: bool = True) -> aif.AifGraph:
    if config.input is not None:
        return aif.parse_graph(_read(config.input), check=check)
    return aif.parse_graph(aif.fetch_payload(config.endpoint, config.graph_id), check=check)


def load_kb_file(path: str) -> KnowledgeBase:
    """Read a knowledge base, either bare or wrapped in ``compile`` output."""
    try:
        payload = json.loads(_read(path))
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None
    if isinstance(payload, dict) and "kb" in payload:
        payload = payload["kb"]
    if not isinstance(payload, dict):
        raise InputError(f"{path} does not hold a knowledge base object")
    try:
        return kb_from_dict(payload)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path} holds a malformed knowledge base: {exc}") from None


@dataclass(frozen=True)
class Workspace:
    kb: KnowledgeBase
    arguments: tuple[ApproximateArgument, ...]
    framework: ArgumentationFramework


def build_workspace(kb: KnowledgeBase) -> Workspace:
    args = construct_simple_arguments(kb)
    return Workspace(kb, args, build_framework(args, attacks_between(args)))


def load_workspace(config: RunConfig) -> Workspace:
    if config.from_kb is not None:
        return build_workspace(load_kb_file(config.from_kb))
    return build_workspace(compile_graph(load_input_graph(config)))


def resolve_target(af: ArgumentationFramework, target: str) -> str:
    """Accept an argument id, or an atom/literal naming the claim of exactly one argument."""
    if target in af:
        return target
    try:
        lit = Literal.parse(target)
    except ValueError:
        raise InputError(f"target {target!r} is neither an argument id nor a literal") from None
    candidates = [a for a in af.arguments if af.structured[a].claim == lit]
    if not candidates:
        raise InputError(f"no argument claims {lit}; known arguments: {', '.join(af.arguments) or 'none'}")
    if len(candidates) > 1:
        listed = "; ".join(f"{a} = {af.structured[a]}" for a in candidates)
        raise InputError(f"target {target!r} is ambiguous, candidates: {listed}")
    return candidates[0]


# -- rendering helpers -----------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def compile_document(ws: Workspace) -> dict:
    af = ws.framework
    arguments = []
    for a in af.arguments:
        entry = {"id": a, **argument_to_dict(af.structured[a])}
        entry["class"] = asdict(classify(ws.kb, af.structured[a]))
        arguments.append(entry)
    attacks = [
        {"attacker": a, "attacked": b, "kinds": sorted(af.attack_kinds.get((a, b), ()))}
        for a, b in sorted(af.attacks, key=lambda p: (af.index(p[0]), af.index(p[1])))
    ]
    return {"kb": kb_to_dict(ws.kb), "arguments": arguments, "attacks": attacks}


def _compile_text(doc: dict) -> str:
    lines = ["facts: " + ", ".join(doc["kb"]["facts"]), "rules:"]
    lines += [f"  {r['rule']}" for r in doc["kb"]["rules"]]
    lines.append("arguments:")
    lines += [f"  {a['id']} = <{{{', '.join(a['support'])}}}, {a['claim']}>" for a in doc["arguments"]]
    lines.append("attacks:")
    lines += [f"  {t['attacker']} -> {t['attacked']} ({', '.join(t['kinds'])})" for t in doc["attacks"]]
    return "\n".join(lines)


def semantics_document(ws: Workspace, semantics: Semantics, max_args: int) -> dict:
    af = ws.framework
    result = enumerate_extensions(af, semantics, max_args)
    partition = issues(af, max_args)
    return {
        "semantics": semantics.value,
        "arguments": {a: str(af.structured[a]) for a in af.arguments},
        "extensions": [af.ordered(e) for e in result.extensions],
        "labellings": [
            {"in": af.ordered(l.in_args), "out": af.ordered(l.out_args), "undec": af.ordered(l.undec_args)}
            for l in result.labellings
        ],
        "issues": [
            {"members": af.ordered(c), "opposite": af.ordered(a for a in c if partition.polarity[a].value == "opposite")}
            for c in partition.classes
        ],
    }


def _semantics_text(doc: dict) -> str:
    lines = ["arguments:"]
    lines += [f"  {k} = {v}" for k, v in doc["arguments"].items()]
    lines.append(f"{doc['semantics']} extensions:")
    lines += ["  {" + ", ".join(e) + "}" for e in doc["extensions"]] or ["  (none)"]
    lines.append("labellings:")
    for l in doc["labellings"]:
        lines.append("  in {" + ", ".join(l["in"]) + "} out {" + ", ".join(l["out"])
                     + "} undec {" + ", ".join(l["undec"]) + "}")
    lines.append("issues:")
    for c in doc["issues"]:
        suffix = f" (opposite: {', '.join(c['opposite'])})" if c["opposite"] else ""
        lines.append("  {" + ", ".join(c["members"]) + "}" + suffix)
    return "\n".join(lines)


def _semantics_markdown(doc: dict) -> str:
    out = [f"## {doc['semantics'].capitalize()} extensions", ""]
    out += ["- {" + ", ".join(e) + "}" for e in doc["extensions"]] or ["- (none)"]
    out += ["", "## Issues", ""]
    for c in doc["issues"]:
        suffix = f" (opposite: {', '.join(c['opposite'])})" if c["opposite"] else ""
        out.append("- {" + ", ".join(c["members"]) + "}" + suffix)
    return "\n".join(out)


def status_document(ws: Workspace, target: str, semantics: Semantics, mode: Mode, max_args: int) -> dict:
    af = ws.framework
    accepted = acceptance(af, target, semantics, mode, max_args)
    doc = {"target": target, "argument": str(af.structured[target]), "semantics": semantics.value,
           "mode": mode.value, "accepted": accepted}
    if mode is Mode.CREDULOUS and semantics in (Semantics.PREFERRED, Semantics.COMPLETE):
        tree = dispute_tree(af, target, max_args)
        if isinstance(tree, DisputeTree):
            doc["dispute_tree"] = tree.root.to_dict()
            doc["dispute_tree_text"] = tree.render()
        else:
            doc["blocking"] = list(tree.blocking)
    return doc


def _status_text(doc: dict) -> str:
    adverb = "credulously" if doc["mode"] == "credulous" else "skeptically"
    negation = "" if doc["accepted"] else "not "
    lines = [f"{doc['target']} {doc['argument']} is {negation}{adverb} accepted under {doc['semantics']} semantics"]
    if "dispute_tree_text" in doc:
        lines += ["dispute tree:"] + ["  " + l for l in doc["dispute_tree_text"].splitlines()]
    if doc.get("blocking"):
        lines.append("blocked by: " + ", ".join(doc["blocking"]))
    return "\n".join(lines)


# -- commands --------------------------------------------------------------


def _realization(config: RunConfig) -> RealizationConfig:
    fmt = {"text": OutputFormat.PLAIN, "markdown": OutputFormat.MARKDOWN, "json": OutputFormat.JSON}[config.format]
    return RealizationConfig(format=fmt)


def cmd_validate(config: RunConfig, out: TextIO) -> int:
    graph = load_input_graph(config, check=False)
    problems = aif.validate(graph)
    if config.format == "json":
        out.write(_dumps({
            "valid": not problems,
            "nodes": len(graph.nodes),
            "edges": len(graph.edges),
            "diagnostics": [{"code": d.code, "message": d.message, "ids": list(d.ids)} for d in problems],
        }) + "\n")
    else:
        for d in problems:
            out.write(f"{d}\n")
        out.write(f"{'ok' if not problems else 'invalid'}: {len(graph.nodes)} nodes, "
                  f"{len(graph.edges)} edges, {len(problems)} diagnostic(s)\n")
    return EXIT_OK if not problems else EXIT_DOMAIN


def cmd_compile(config: RunConfig, out: TextIO) -> int:
    doc = compile_document(load_workspace(config))
    out.write((_dumps(doc) if config.format == "json" else _compile_text(doc)) + "\n")
    return EXIT_OK


def cmd_semantics(config: RunConfig, out: TextIO) -> int:
    doc = semantics_document(load_workspace(config), config.semantics, config.max_args)
    render = {"json": _dumps, "markdown": _semantics_markdown}.get(config.format, _semantics_text)
    out.write(render(doc) + "\n")
    return EXIT_OK


def cmd_status(config: RunConfig, out: TextIO) -> int:
    ws = load_workspace(config)
    target = resolve_target(ws.framework, config.target)
    doc = status_document(ws, target, config.semantics, config.mode, config.max_args)
    if config.format == "json":
        doc.pop("dispute_tree_text", None)
        out.write(_dumps(doc) + "\n")
    else:
        out.write(_status_text(doc) + "\n")
    return EXIT_OK


def cmd_explain(config: RunConfig, out: TextIO) -> int:
    ws = load_workspace(config)
    af, kb = ws.framework, ws.kb
    planning = PlannerConfig(config.ordering, config.implicit_premise, config.max_args)
    rendering = _realization(config)
    goal = config.goal
    if goal is Goal.PRESENT_ARGUMENT:
        target = resolve_target(af, config.target)
        plan = plan_argument(kb, af.structured[target], config.style, config.expand, planning, target)
        text = realize(plan, rendering)
    elif goal is Goal.PRESENT_NETWORK:
        plan = plan_network(af, kb, Strategy.LINES_OF_REASONING, config.style, planning)
        text = realize(plan, rendering)
    elif goal is Goal.EXPLAIN_ACCEPTABILITY:
        target = resolve_target(af, config.target)
        plan = plan_acceptability(af, kb, target, config.mode, config.semantics, planning, config.style)
        text = realize_acceptability(plan, rendering)
    else:
        plan = plan_extensions(af, kb, config.semantics, planning, config.style)
        text = realize(plan, rendering)
    out.write(text + "\n")
    return EXIT_OK


def cmd_fetch(config: RunConfig, out: TextIO) -> int:
    graph = aif.fetch_graph(config.endpoint, config.graph_id)
    text = aif.dump_graph(graph) + "\n"
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
        log.info("stored graph %s in %s", config.graph_id, config.output)
    else:
        out.write(text)
    return EXIT_OK


HANDLERS = {
    "validate": cmd_validate,
    "compile": cmd_compile,
    "semantics": cmd_semantics,
    "status": cmd_status,
    "explain": cmd_explain,
    "fetch": cmd_fetch,
}


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Execute one command; errors are reported on ``err`` and mapped to an exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config.check()
        return HANDLERS[config.command](config, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (MalformedInput, SchemaViolation) as exc:
        err.write(f"error: {exc.qualified()}\n")
        return EXIT_INPUT
    except UnknownArgument as exc:
        # argument ids only ever come from the command line
        err.write(f"error: {exc.qualified()}\n")
        return EXIT_INPUT
    except ArgNlgError as exc:
        err.write(f"error: {exc.qualified()}\n")
        return EXIT_DOMAIN


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="arg-nlg",
        description="Reason about AIF argument graphs and describe the results in English.",
    )
    p.add_argument("command", choices=COMMANDS)
    source = p.add_argument_group("input")
    source.add_argument("--input", help="AIF-JSON file")
    source.add_argument("--endpoint", default=os.environ.get(ENDPOINT_VARIABLE),
                        help=f"graph server base URL (default: ${ENDPOINT_VARIABLE})")
    source.add_argument("--id", dest="graph_id", help="graph id on the endpoint")
    source.add_argument("--from-kb", help="knowledge base JSON as written by 'compile --format json'")
    source.add_argument("--output", help="where 'fetch' stores the graph (default: stdout)")

    reasoning = p.add_argument_group("reasoning")
    reasoning.add_argument("--semantics", choices=[s.value for s in Semantics], default="preferred")
    reasoning.add_argument("--mode", choices=[m.value for m in Mode], default="credulous",
                           help="acceptance mode for 'status' and explain-acceptability")
    reasoning.add_argument("--max-args", type=int, default=DEFAULT_MAX_ARGS,
                           help="refuse frameworks with more arguments than this")

    gen = p.add_argument_group("generation")
    gen.add_argument("--goal", choices=[g.value for g in Goal], default=Goal.PRESENT_NETWORK.value)
    gen.add_argument("--target", help="argument id (A1...) or claim literal (T3, ~T3)")
    gen.add_argument("--style", choices=[d.value for d in Direction], default="backward")
    gen.add_argument("--expand", action="store_true", help="expand the argument with its relevant sub-derivations")
    gen.add_argument("--ordering", choices=[o.value for o in Ordering], default="length")
    gen.add_argument("--implicit-premise", choices=[m.value for m in ImplicitPremiseMode], default="omit",
                     help="how to mention an unfilled scheme premise (default: not at all)")
    gen.add_argument("--format", choices=["text", "markdown", "json"], default="text")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        input=ns.input,
        endpoint=ns.endpoint,
        graph_id=ns.graph_id,
        from_kb=ns.from_kb,
        semantics=Semantics(ns.semantics),
        mode=Mode(ns.mode),
        goal=Goal(ns.goal),
        target=ns.target,
        style=Direction(ns.style),
        expand=ns.expand,
        ordering=Ordering(ns.ordering),
        implicit_premise=ImplicitPremiseMode(ns.implicit_premise),
        format=ns.format,
        max_args=ns.max_args,
        output=ns.output,
    )


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
