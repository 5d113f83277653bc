import json
import re

import pytest

from argnlg import aif
from argnlg.framework import build_framework
from argnlg.logic import attacks_between, compile_graph, construct_simple_arguments

from golden import LETTER


@pytest.fixture(scope="session")
def graph():
    return aif.load_running_example()


@pytest.fixture(scope="session")
def kb(graph):
    return compile_graph(graph)


@pytest.fixture(scope="session")
def arguments(kb):
    return construct_simple_arguments(kb)


@pytest.fixture(scope="session")
def af(arguments):
    return build_framework(arguments, attacks_between(arguments))


@pytest.fixture(scope="session")
def letter():
    """Published letter name -> canonical argument id."""
    return dict(LETTER)


@pytest.fixture(scope="session")
def example_path():
    return str(aif.running_example_path())


@pytest.fixture
def write_json(tmp_path):
    def _write(payload, name="graph.json"):
        p = tmp_path / name
        p.write_text(payload if isinstance(payload, str) else json.dumps(payload), encoding="utf-8")
        return str(p)
    return _write


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion."""
    lines = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            if rep.when != "call" and status != "error":
                continue
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props:
                lines.append((props["criterion"], "PASS" if status == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for text, verdict in sorted(lines, key=lambda t: (int(re.match(r"AC(\d+)", t[0]).group(1)), t[0])):
            terminalreporter.write_line(f"{verdict}  {text}")
