"""Bottom-up sign propagation counting maximal matchings of trees.

Every vertex ``v`` of a rooted tree gets a sign ``(alpha, beta, gamma)``:

* ``alpha`` -- maximal matchings of the subtree at ``v`` that leave ``v`` uncovered,
* ``beta``  -- maximal matchings of that subtree covering ``v``,
* ``gamma`` -- maximal matchings of the subtree with ``v`` deleted.

For children ``x_1..x_k`` of ``v``::

    alpha_v = prod beta_i
    beta_v  = sum_i gamma_i * prod_{j != i} (alpha_j + beta_j)
    gamma_v = prod (alpha_i + beta_i)

and a childless vertex gets ``(1, 0, 1)``.  Python ints keep the counts exact.

On a path ``v1 .. vn`` rooted at ``vn`` each sign is ``(beta, gamma, alpha + beta)``
of its predecessor: ``(1, 0, 1), (0, 1, 1), (1, 1, 1), (1, 1, 2), (1, 2, 2), ...``
so Psi(P_4) = 2 and Psi(P_5) = 3.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .tree_core import Forest, RootedTree, Tree

LEAF_SIGN = (1, 0, 1)


class Sign(NamedTuple):
    alpha: int
    beta: int
    gamma: int

    @property
    def total(self) -> int:
        return self.alpha + self.beta


@dataclass(frozen=True)
class SignTable:
    root: int
    signs: tuple[Sign, ...]

    def __getitem__(self, v: int) -> Sign:
        return self.signs[v]

    def __len__(self) -> int:
        return len(self.signs)


def combine(child_signs) -> Sign:
    """Sign of a vertex from its children's signs (empty -> leaf sign)."""
    alpha = 1
    # running fold of beta: covering through a child seen so far, or through this one
    beta = 0
    whole = 1
    for a, b, g in child_signs:
        alpha *= b
        beta = beta * (a + b) + whole * g
        whole *= a + b
    return Sign(alpha, beta, whole)


def compute_signs(rt: RootedTree) -> SignTable:
    signs: list = [None] * rt.tree.n
    children = rt.children
    for v in rt.post_order:
        kids = children[v]
        if not kids:
            signs[v] = Sign(*LEAF_SIGN)
        elif len(kids) == 1:
            a, b, g = signs[kids[0]]
            signs[v] = Sign(b, g, a + b)
        else:
            signs[v] = combine([signs[c] for c in kids])
    return SignTable(rt.root, tuple(signs))


def psi_split(t: Tree, root: int) -> tuple[int, int]:
    """(uncovered, covered) counts of maximal matchings w.r.t. ``root``."""
    s = compute_signs(RootedTree.build(t, root))[root]
    return s.alpha, s.beta


def psi(t: Tree, root: int = 0) -> int:
    """Number of maximal matchings of ``t``."""
    return sum(psi_split(t, root))


def psi_forest(f: Forest) -> int:
    return prod(psi(c) for c in f.components)
