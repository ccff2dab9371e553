"""Named tree families and the closed-form maximal-matching counts known for them.

``expected_psi`` is filled in only where a closed form is known; everything
else is left to the counting code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .tree_core import Tree, TreeError, canonical_code

FAMILY_NAMES = ("path", "star", "subdivided_star", "spider", "star_of_triples")


class FamilySpecError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyInstance:
    tree: Tree
    family_name: str
    parameters: tuple[int, ...]
    expected_psi: Optional[int] = None

    @property
    def label(self) -> str:
        return f"{self.family_name}:{','.join(map(str, self.parameters))}"


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def path(n: int) -> FamilyInstance:
    if n < 1:
        raise TreeError("path needs n >= 1")
    return FamilyInstance(Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)]), "path", (n,))


def star(m: int) -> FamilyInstance:
    if m < 1:
        raise TreeError("star needs m >= 1")
    return FamilyInstance(Tree.from_edges(m + 1, [(0, i) for i in range(1, m + 1)]), "star", (m,), m)


def _spider_tree(legs: Sequence[int]) -> Tree:
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return Tree.from_edges(nxt, edges)


def spider(legs: Sequence[int]) -> FamilyInstance:
    """Centre 0 with pendant paths of the given edge lengths, laid out leg by leg."""
    legs = tuple(legs)
    if not legs:
        raise TreeError("spider needs at least one leg")
    if any(l < 1 for l in legs):
        raise TreeError(f"leg lengths must be positive: {legs}")
    return FamilyInstance(_spider_tree(legs), "spider", legs)


def subdivided_star(m: int, t: int) -> FamilyInstance:
    """K_{1,m} with m - t of its edges subdivided once (t short legs, m - t long)."""
    if not 0 <= t < m:
        raise TreeError(f"need 0 <= t < m, got m={m}, t={t}")
    order = 2 * m - t + 1
    expected = _ceil_half(order) if t <= 2 else None
    return FamilyInstance(_spider_tree([1] * t + [2] * (m - t)), "subdivided_star", (m, t), expected)


def star_of_triples(n: int) -> FamilyInstance:
    """Centre joined to the centres of n copies of K_{1,3}; 4n + 1 vertices."""
    if n < 1:
        raise TreeError("star_of_triples needs n >= 1")
    edges = []
    for i in range(n):
        c = 1 + 4 * i
        edges += [(0, c), (c, c + 1), (c, c + 2), (c, c + 3)]
    expected = 3**n + n * 3 ** (n - 1)
    return FamilyInstance(Tree.from_edges(4 * n + 1, edges), "star_of_triples", (n,), expected)


def extremal_family(n: int) -> list[FamilyInstance]:
    """Predicted trees of order n with the fewest maximal matchings.

    Odd n: all legs of length 2, or two legs of length 1 and the rest 2.
    Even n: one leg of length 1 and the rest 2.  Small n degenerate to
    paths; isomorphic duplicates (n = 3) are dropped.
    """
    if n < 2:
        raise TreeError("extremal_family needs n >= 2")
    if n % 2:
        candidates = [[2] * ((n - 1) // 2), [1, 1] + [2] * ((n + 1) // 2 - 2)]
    else:
        candidates = [[1] + [2] * (n // 2 - 1)]
    out, seen = [], set()
    for legs in candidates:
        inst = spider(legs)
        code = canonical_code(inst.tree)
        if code not in seen:
            seen.add(code)
            out.append(FamilyInstance(inst.tree, "spider", inst.parameters, _ceil_half(n)))
    return out


def parse_family_spec(spec: str) -> FamilyInstance:
    """Build a family from ``name:p1,p2,...`` (e.g. ``subdivided_star:5,2``)."""
    name, sep, rest = spec.partition(":")
    if not sep or name not in FAMILY_NAMES:
        raise FamilySpecError(f"bad family spec {spec!r}; expected name:params with name in {FAMILY_NAMES}")
    try:
        params = [int(p) for p in rest.split(",")] if rest.strip() else []
    except ValueError:
        raise FamilySpecError(f"non-integer parameter in {spec!r}") from None
    arity = {"path": 1, "star": 1, "subdivided_star": 2, "star_of_triples": 1}
    if name in arity and len(params) != arity[name]:
        raise FamilySpecError(f"{name} takes {arity[name]} parameter(s), got {len(params)}")
    try:
        if name == "spider":
            return spider(params)
        if name == "subdivided_star":
            return subdivided_star(*params)
        return {"path": path, "star": star, "star_of_triples": star_of_triples}[name](params[0])
    except TreeError as exc:
        raise FamilySpecError(str(exc)) from None
