"""Brute-force enumeration of maximal matchings.

Deliberately naive: edges are visited in sorted order, each one either
taken (when both ends are free) or skipped, and a finished branch is kept
only if no edge is left with both ends uncovered.  This is the ground truth
the sign DP is checked against, so it shares no code with it.
"""
from __future__ import annotations

from typing import Iterator, Sequence, Union

from .tree_core import CapExceeded, Forest, Tree, TreeError

DEFAULT_ORACLE_CAP = 22

Matching = tuple[tuple[int, int], ...]
Graph = Union[Tree, Forest]


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise CapExceeded(f"oracle capped at n={cap}, graph has {g.n} vertices")


def is_matching(g: Graph, m: Sequence[Sequence[int]]) -> bool:
    edges = set(g.edges)
    covered: set[int] = set()
    for u, v in m:
        if (min(u, v), max(u, v)) not in edges or u in covered or v in covered:
            return False
        covered.update((u, v))
    return True


def is_maximal(g: Graph, m: Sequence[Sequence[int]]) -> bool:
    if not is_matching(g, m):
        raise TreeError(f"{list(m)} is not a matching")
    covered = {x for e in m for x in e}
    return all(u in covered or v in covered for u, v in g.edges)


def enumerate_maximal(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> Iterator[Matching]:
    """Yield every maximal matching once, include-branch before exclude-branch."""
    _check_cap(g, cap)
    edges = sorted(g.edges)
    bits = [(1 << u) | (1 << v) for u, v in edges]
    # last index of an edge touching each vertex
    last = [-1] * g.n
    for i, (u, v) in enumerate(edges):
        last[u] = last[v] = i
    chosen: list[int] = []

    def maximal(covered: int) -> bool:
        return all(covered & b for b in bits)

    def search(i: int, covered: int) -> Iterator[Matching]:
        if i == len(edges):
            if maximal(covered):
                yield tuple(edges[j] for j in chosen)
            return
        b = bits[i]
        if not covered & b:
            chosen.append(i)
            yield from search(i + 1, covered | b)
            chosen.pop()
            u, v = edges[i]
            if last[u] == i and last[v] == i:
                # skipping would leave this edge addable forever
                return
        yield from search(i + 1, covered)

    yield from search(0, 0)


def count_maximal(g: Graph, cap: int = DEFAULT_ORACLE_CAP) -> int:
    return sum(1 for _ in enumerate_maximal(g, cap))


def covered_by_all(g: Graph, v: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    if g.n < 2:
        raise TreeError("need at least two vertices")
    return all(any(v in e for e in m) for m in enumerate_maximal(g, cap))
