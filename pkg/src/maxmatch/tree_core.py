"""Trees and forests: data model, parsing, generation, canonical forms and
the structural predicates used when reasoning about minimizing trees.

Vertex ids are always ``0..n-1``.  All types are immutable.
"""
from __future__ import annotations

import heapq
from bisect import bisect_left
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_TREE_CAP = 16
# above this order all_trees_prufer gets impractically slow (n^(n-2) decodes)
PRUFER_ORACLE_MAX = 9

Edge = tuple[int, int]


class TreeError(ValueError):
    """Raised for structurally invalid trees or operation preconditions."""


class ParseError(ValueError):
    """Raised when an edge-list text cannot be turned into a forest."""


class CapExceeded(ValueError):
    """Raised when an exhaustive operation is asked for more than its cap."""


def _contains(sorted_ids: Sequence[int], v: int) -> bool:
    i = bisect_left(sorted_ids, v)
    return i < len(sorted_ids) and sorted_ids[i] == v


def _normalize_edges(edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in edges))


@dataclass(frozen=True)
class Tree:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.adjacency) != self.n:
            raise TreeError(f"bad vertex count {self.n}")
        m = 0
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise TreeError(f"adjacency of {v} not sorted/unique")
            for u in nbrs:
                if u == v:
                    raise TreeError(f"self-loop at {v}")
                if not 0 <= u < self.n or not _contains(self.adjacency[u], v):
                    raise TreeError(f"asymmetric adjacency {v}-{u}")
            m += len(nbrs)
        if m != 2 * (self.n - 1):
            raise TreeError(f"{m // 2} edges on {self.n} vertices")
        # connected + n-1 edges => tree
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adjacency[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != self.n:
            raise TreeError("graph is disconnected")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Tree":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, tuple(tuple(sorted(a)) for a in adj))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple((v, u) for v in range(self.n) for u in self.adjacency[v] if v < u)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the isomorphic tree with vertex ``v`` renamed ``perm[v]``."""
        return Tree.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass(frozen=True)
class Forest:
    """Disjoint union of trees.

    ``vertex_maps[i][j]`` is the global id of local vertex ``j`` of component ``i``.
    """

    n: int
    components: tuple[Tree, ...]
    vertex_maps: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Forest":
        edges = list(edges)
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise TreeError(f"self-loop at {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise TreeError(f"duplicate edge {e}")
            seen.add(e)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise TreeError(f"cycle detected at edge {e}")
            parent[ru] = rv

        groups: dict[int, list[int]] = {}
        for v in range(n):
            groups.setdefault(find(v), []).append(v)
        comps = sorted(groups.values(), key=lambda g: g[0])
        local = {}
        for g in comps:
            for j, v in enumerate(g):
                local[v] = j
        comp_edges: list[list[Edge]] = [[] for _ in comps]
        index = {v: i for i, g in enumerate(comps) for v in g}
        for u, v in edges:
            comp_edges[index[u]].append((local[u], local[v]))
        trees = tuple(Tree.from_edges(len(g), es) for g, es in zip(comps, comp_edges))
        return cls(n, trees, tuple(tuple(g) for g in comps))

    @classmethod
    def of(cls, *trees: Tree) -> "Forest":
        maps, offset = [], 0
        for t in trees:
            maps.append(tuple(range(offset, offset + t.n)))
            offset += t.n
        return cls(offset, tuple(trees), tuple(maps))

    @property
    def edges(self) -> tuple[Edge, ...]:
        return _normalize_edges(
            (vm[u], vm[v]) for t, vm in zip(self.components, self.vertex_maps) for u, v in t.edges
        )

    def as_tree(self) -> Tree:
        if len(self.components) != 1:
            raise TreeError(f"forest has {len(self.components)} components, expected 1")
        return self.components[0]


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int
    parent: tuple[Optional[int], ...]
    children: tuple[tuple[int, ...], ...]
    post_order: tuple[int, ...]

    @classmethod
    def build(cls, tree: Tree, root: int = 0) -> "RootedTree":
        if not 0 <= root < tree.n:
            raise TreeError(f"root {root} not a vertex")
        adj = tree.adjacency
        parent: list[Optional[int]] = [None] * tree.n
        order = [root]
        parent[root] = -1
        # BFS order reversed is a valid post-order (children before parents)
        i = 0
        while i < len(order):
            v = order[i]
            for u in adj[v]:
                if parent[u] is None:
                    parent[u] = v
                    order.append(u)
            i += 1
        parent[root] = None
        children = tuple(tuple(u for u in adj[v] if u != parent[v]) for v in range(tree.n))
        return cls(tree, root, tuple(parent), children, tuple(reversed(order)))

    def subtree_vertices(self, v: int) -> list[int]:
        out, stack = [], [v]
        while stack:
            x = stack.pop()
            out.append(x)
            stack.extend(self.children[x])
        return sorted(out)


@dataclass(frozen=True)
class SpiderSpec:
    legs: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if any(l < 1 for l in self.legs):
            raise TreeError(f"leg lengths must be positive: {self.legs}")
        object.__setattr__(self, "legs", tuple(sorted(self.legs)))

    @property
    def order(self) -> int:
        return 1 + sum(self.legs)


# --------------------------------------------------------------------------
# parsing


def parse_edge_list(text: str) -> Forest:
    """Parse ``u v`` lines into a forest.

    Ids are renumbered by first appearance.  A line holding a single id
    declares a (possibly isolated) vertex; ``#`` starts a comment line.
    """
    ids: dict[int, int] = {}
    edges: list[Edge] = []

    def vid(tok: str, lineno: int) -> int:
        try:
            raw = int(tok)
        except ValueError:
            raise ParseError(f"line {lineno}: not an integer: {tok!r}") from None
        if raw < 0:
            raise ParseError(f"line {lineno}: negative vertex id {raw}")
        return ids.setdefault(raw, len(ids))

    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0], lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = vid(parts[0], lineno), vid(parts[1], lineno)
        edges.append((u, v))
    try:
        return Forest.from_edges(len(ids), edges)
    except TreeError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(t: Tree | Forest) -> str:
    lines = [f"{u} {v}" for u, v in t.edges]
    if not lines:
        lines = [str(v) for v in range(t.n)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# Prüfer codes and random trees


def from_prufer(seq: Sequence[int], n: int) -> Tree:
    if n < 2:
        raise TreeError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise TreeError(f"sequence length {len(seq)} != n-2 = {n - 2}")
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise TreeError(f"entry {x} out of range 0..{n - 1}")
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return Tree.from_edges(n, edges)


def to_prufer(t: Tree) -> list[int]:
    if t.n < 2:
        raise TreeError("Prüfer encoding needs n >= 2")
    degree = [len(a) for a in t.adjacency]
    removed = [False] * t.n
    heap = [v for v in range(t.n) if degree[v] == 1]
    heapq.heapify(heap)
    seq = []
    for _ in range(t.n - 2):
        leaf = heapq.heappop(heap)
        removed[leaf] = True
        (nb,) = [u for u in t.adjacency[leaf] if not removed[u]]
        seq.append(nb)
        degree[nb] -= 1
        if degree[nb] == 1:
            heapq.heappush(heap, nb)
    return seq


def random_tree(n: int, seed: int = 0) -> Tree:
    if n < 1:
        raise TreeError("n must be >= 1")
    if n <= 2:
        return Tree.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    return from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


# --------------------------------------------------------------------------
# canonical forms


def _rooted_code_adj(adj: Sequence[Sequence[int]], root: int) -> str:
    order, parent = [root], {root: -1}
    for v in order:
        for u in adj[v]:
            if u not in parent:
                parent[u] = v
                order.append(u)
    code: dict[int, str] = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(code[u] for u in adj[v] if u != parent[v])) + ")"
    return code[root]


def _centroids_adj(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    order, parent = [0], [-1] * n
    seen = [False] * n
    seen[0] = True
    for v in order:
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
    size = [1] * n
    biggest = [0] * n
    for v in reversed(order):
        p = parent[v]
        if p >= 0:
            size[p] += size[v]
            biggest[p] = max(biggest[p], size[v])
    return [v for v in range(n) if 2 * max(biggest[v], n - size[v]) <= n]


def centroids(t: Tree) -> list[int]:
    return _centroids_adj(t.adjacency)


def rooted_code(t: Tree, root: int) -> str:
    """AHU parenthesis code of ``t`` rooted at ``root``."""
    return _rooted_code_adj(t.adjacency, root)


def canonical_code(t: Tree) -> str:
    return min(_rooted_code_adj(t.adjacency, c) for c in _centroids_adj(t.adjacency))


def _prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    seq = [0] * (n - 2)
    while True:
        yield tuple(seq)
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


def all_trees_prufer(n: int) -> list[Tree]:
    """One tree per isomorphism class, by decoding every Prüfer sequence.

    Brute force (n^(n-2) decodes); used to cross-check :func:`all_trees`.
    """
    if n < 1:
        raise TreeError("n must be >= 1")
    if n > PRUFER_ORACLE_MAX:
        raise CapExceeded(f"Prüfer enumeration capped at n={PRUFER_ORACLE_MAX}")
    if n <= 2:
        return [Tree.from_edges(n, [(0, 1)] if n == 2 else [])]
    found: dict[str, tuple[int, ...]] = {}
    for seq in _prufer_sequences(n):
        # decode straight to adjacency lists; Tree validation is too slow here
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        adj: list[list[int]] = [[] for _ in range(n)]
        for x in seq:
            leaf = degree.index(1)
            degree[leaf] = 0
            degree[x] -= 1
            adj[leaf].append(x)
            adj[x].append(leaf)
        a = degree.index(1)
        b = degree.index(1, a + 1)
        adj[a].append(b)
        adj[b].append(a)
        code = min(_rooted_code_adj(adj, c) for c in _centroids_adj(adj))
        if code not in found:
            found[code] = seq
    return [from_prufer(found[c], n) for c in sorted(found)]


def _level_sequence_tree(levels: Sequence[int]) -> Tree:
    edges = []
    stack: list[int] = []  # stack[d] = latest vertex at depth d
    for v, d in enumerate(levels):
        del stack[d:]
        if d:
            edges.append((stack[d - 1], v))
        stack.append(v)
    return Tree.from_edges(len(levels), edges)


def _rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of all rooted trees on n vertices, each once.

    Starts at the path and steps to the lexicographic predecessor until the
    star is reached (constant-amortized successor on level sequences).
    """
    levels = list(range(n))
    while True:
        yield levels
        p = n - 1
        while p > 0 and levels[p] <= 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while levels[q] != levels[p] - 1:
            q -= 1
        shift = p - q
        for i in range(p, n):
            levels[i] = levels[i - shift]


def _centroid_rooted(levels: Sequence[int]) -> bool:
    """Keep a rooted level sequence iff it is the canonical rooting of its free tree."""
    n = len(levels)
    half = n // 2
    # child subtrees of the root are the blocks starting at each level-1 entry
    starts = [i for i in range(1, n) if levels[i] == 1] + [n]
    big = None
    for a, b in zip(starts, starts[1:]):
        size = b - a
        if 2 * size > n:
            return False
        if 2 * size == n:
            big = (a, b)
    if big is None:
        return True
    # two centroids: keep the rooting whose root-side half has the larger code
    a, b = big
    other = [levels[i] - 1 for i in range(a, b)]
    mine = list(levels[:a]) + list(levels[b:])
    assert len(mine) == half
    return mine >= other


def all_trees(n: int, cap: int = DEFAULT_TREE_CAP) -> Iterator[Tree]:
    """Yield one representative per isomorphism class of free trees on n vertices."""
    if n < 1:
        raise TreeError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"all_trees capped at n={cap}, asked for {n}")
    for levels in _rooted_level_sequences(n):
        if _centroid_rooted(levels):
            yield _level_sequence_tree(levels)


# --------------------------------------------------------------------------
# structural predicates


def _path_order(t: Tree) -> list[int]:
    start = next(v for v in range(t.n) if len(t.adjacency[v]) <= 1)
    order, prev = [start], -1
    while len(order) < t.n:
        v = order[-1]
        nxt = next(u for u in t.adjacency[v] if u != prev)
        prev = v
        order.append(nxt)
    return order


def _walk_leg(t: Tree, branch: int, first: int) -> list[int]:
    """Vertices from ``first`` outward while degree is 2; ends at a leaf or branch vertex."""
    path, prev, v = [first], branch, first
    while len(t.adjacency[v]) == 2:
        nxt = t.adjacency[v][0] if t.adjacency[v][0] != prev else t.adjacency[v][1]
        prev, v = v, nxt
        path.append(v)
    return path


def is_spider(t: Tree) -> Optional[SpiderSpec]:
    """Leg lengths (in edges) if ``t`` has at most one branch vertex.

    A path on n >= 2 vertices is centred at position ``(n-1)//2`` so that
    P_4 reads as legs (1, 2) and P_5 as (2, 2).
    """
    if t.n == 1:
        return SpiderSpec(())
    branch = [v for v in range(t.n) if len(t.adjacency[v]) >= 3]
    if len(branch) > 1:
        return None
    if not branch:
        c = (t.n - 1) // 2
        return SpiderSpec(tuple(l for l in (c, t.n - 1 - c) if l > 0))
    (b,) = branch
    return SpiderSpec(tuple(len(_walk_leg(t, b, u)) for u in t.adjacency[b]))


@dataclass(frozen=True)
class StructuralFlags:
    branch_vertices: tuple[int, ...]
    max_leaf_siblings: int
    pendant_star_sizes: tuple[int, ...]
    # vertex counts, branch vertex and leaf included
    pendant_path_lengths: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "branch_vertices": len(self.branch_vertices),
            "max_leaf_siblings": self.max_leaf_siblings,
            "pendant_star_sizes": list(self.pendant_star_sizes),
            "max_pendant_path": max(self.pendant_path_lengths, default=0),
        }


def structural_predicates(t: Tree) -> StructuralFlags:
    adj = t.adjacency
    is_leaf = [len(a) == 1 for a in adj]
    leaf_nbrs = [sum(is_leaf[u] for u in a) for a in adj]
    branch = tuple(v for v in range(t.n) if len(adj[v]) >= 3)
    stars = []
    paths = []
    for v in branch:
        d = len(adj[v])
        if leaf_nbrs[v] == d - 1:
            stars.append(d)
        for u in adj[v]:
            leg = _walk_leg(t, v, u)
            if is_leaf[leg[-1]]:
                paths.append(len(leg) + 1)
    return StructuralFlags(
        branch_vertices=branch,
        max_leaf_siblings=max(leaf_nbrs, default=0),
        pendant_star_sizes=tuple(sorted(stars)),
        pendant_path_lengths=tuple(sorted(paths)),
    )


# --------------------------------------------------------------------------
# transformations


def remove_vertex(t: Tree, v: int) -> Forest:
    """``t - v`` as a forest; ids renumbered preserving order."""
    if not 0 <= v < t.n:
        raise TreeError(f"{v} is not a vertex")
    new = {u: i for i, u in enumerate(x for x in range(t.n) if x != v)}
    return Forest.from_edges(t.n - 1, [(new[a], new[b]) for a, b in t.edges if v not in (a, b)])


def delete_leaf(t: Tree, v: int) -> tuple[Tree, tuple[Optional[int], ...]]:
    """Remove leaf ``v``; returns the new tree and the old-id -> new-id map (None for v)."""
    if t.n < 2 or not 0 <= v < t.n or len(t.adjacency[v]) != 1:
        raise TreeError(f"vertex {v} is not a leaf")
    mapping = tuple(None if u == v else (u if u < v else u - 1) for u in range(t.n))
    edges = [(mapping[a], mapping[b]) for a, b in t.edges if v not in (a, b)]
    return Tree.from_edges(t.n - 1, edges), mapping


def leaf_slide(t: Tree, v1: int, v2: int, x: int) -> Tree:
    """Replace edge v1v2 by v1x, where v1 is a leaf hanging off the degree-2 vertex v2."""
    adj = t.adjacency
    ok = (
        all(0 <= a < t.n for a in (v1, v2, x))
        and len({v1, v2, x}) == 3
        and adj[v1] == (v2,)
        and len(adj[v2]) == 2
        and x in adj[v2]
    )
    if not ok:
        raise TreeError(f"({v1}, {v2}, {x}) is not a leaf/degree-2/any path")
    edges = [e for e in t.edges if set(e) != {v1, v2}] + [(v1, x)]
    return Tree.from_edges(t.n, edges)


def valid_slides(t: Tree) -> list[tuple[int, int, int]]:
    out = []
    for v1 in range(t.n):
        if len(t.adjacency[v1]) != 1:
            continue
        v2 = t.adjacency[v1][0]
        if len(t.adjacency[v2]) == 2:
            x = next(u for u in t.adjacency[v2] if u != v1)
            out.append((v1, v2, x))
    return out

