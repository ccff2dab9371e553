import os

import pytest

from maxmatch.tree_core import Forest, Tree

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("MAXMATCH_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set MAXMATCH_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def path_tree(n):
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def edges_tree(*edges):
    n = 1 + max((max(e) for e in edges), default=0)
    return Tree.from_edges(n, edges)


def subgraph(t, vertices):
    """Induced sub-forest on ``vertices`` (relabelled in sorted order) and the id map."""
    vs = sorted(vertices)
    idx = {v: i for i, v in enumerate(vs)}
    return Forest.from_edges(len(vs), [(idx[a], idx[b]) for a, b in t.edges if a in idx and b in idx]), idx
