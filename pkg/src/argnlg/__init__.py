"""Argument graphs to argumentation frameworks to English text.

The pipeline runs AIF graph -> simple knowledge base -> simple arguments and
attacks -> abstract framework and its semantics -> document plan -> text.
"""

from .aif import AifGraph, NodeKind, load_graph, load_running_example, parse_graph, validate
from .dispute import DisputeTree, NotAccepted, dispute_tree
from .errors import ArgNlgError
from .framework import ArgumentationFramework, build_framework
from .kernel import BACKEND
from .logic import (
    ApproximateArgument,
    KnowledgeBase,
    Literal,
    SimpleRule,
    attacks_between,
    classify,
    compile_graph,
    construct_simple_arguments,
    entails,
    expand_argument,
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
from .realizer import OutputFormat, RealizationConfig, normalize_text, realize, realize_acceptability
from .semantics import Mode, Semantics, acceptance, enumerate_extensions, issue_foci, issues

__version__ = "0.1.0"

__all__ = [
    "AifGraph", "NodeKind", "load_graph", "load_running_example", "parse_graph", "validate",
    "DisputeTree", "NotAccepted", "dispute_tree",
    "ArgNlgError",
    "ArgumentationFramework", "build_framework",
    "BACKEND",
    "ApproximateArgument", "KnowledgeBase", "Literal", "SimpleRule", "attacks_between", "classify",
    "compile_graph", "construct_simple_arguments", "entails", "expand_argument",
    "Direction", "ImplicitPremiseMode", "Ordering", "PlannerConfig", "Strategy",
    "plan_acceptability", "plan_argument", "plan_extensions", "plan_network",
    "OutputFormat", "RealizationConfig", "normalize_text", "realize", "realize_acceptability",
    "Mode", "Semantics", "acceptance", "enumerate_extensions", "issue_foci", "issues",
    "__version__",
]
