"""Exhaustive checks of the lower bound Psi(T) >= ceil(n/2), of which trees
attain it, and of the structural facts about minimizing trees.

Every check returns a report object that serializes to JSON; failures carry
canonical codes so offending trees can be rebuilt.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from . import families
from .oracle import DEFAULT_ORACLE_CAP, count_maximal, enumerate_maximal
from .signs import compute_signs, psi, psi_forest
from .tree_core import (
    DEFAULT_TREE_CAP,
    CapExceeded,
    Forest,
    RootedTree,
    Tree,
    TreeError,
    all_trees,
    canonical_code,
    delete_leaf,
    is_spider,
    leaf_slide,
    random_tree,
    remove_vertex,
    structural_predicates,
    valid_slides,
)

SUITES = ("bound", "characterization", "structure", "even", "oracle", "signs", "monotonicity")
DEFAULT_SEED = 20240607


def ceil_half(n: int) -> int:
    return (n + 1) // 2


def _map(fn: Callable, items: Iterable, threads: int = 1) -> list:
    if threads <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=256))


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MAXMATCH_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class Achiever:
    code: str
    legs: Optional[list[int]]
    flags: dict = field(default_factory=dict)


@dataclass
class ExtremalReport:
    n: int
    min_psi: int
    bound: int
    achievers: list[Achiever]
    predicted: list[str]
    violations: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.min_psi == self.bound and sorted(a.code for a in self.achievers) == sorted(self.predicted)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "min_psi": str(self.min_psi),
            "bound": str(self.bound),
            "achievers": [{"code": a.code, "legs": a.legs} for a in self.achievers],
            "predicted": list(self.predicted),
            "structural_flags": [a.flags for a in self.achievers],
            "pass": self.passed,
            "violations": self.violations,
        }


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "checked": self.checked,
            "pass": self.passed,
            "violations": self.violations,
            "details": self.details,
        }


def _check_order(n: int, lo: int, cap: int) -> None:
    if n < lo:
        raise TreeError(f"n must be >= {lo}, got {n}")
    if n > cap:
        raise CapExceeded(f"search capped at n={cap}, asked for {n}")


def min_psi_search(n: int, cap: int = DEFAULT_TREE_CAP, threads: int = 1) -> ExtremalReport:
    _check_order(n, 2, cap)
    trees = list(all_trees(n, cap))
    values = _map(psi, trees, threads)
    low = min(values)
    achievers = []
    for t, v in zip(trees, values):
        if v == low:
            spec = is_spider(t)
            achievers.append(
                Achiever(canonical_code(t), list(spec.legs) if spec else None, structural_predicates(t).as_dict())
            )
    achievers.sort(key=lambda a: a.code)
    predicted = sorted(canonical_code(f.tree) for f in families.extremal_family(n))
    report = ExtremalReport(n, low, ceil_half(n), achievers, predicted)
    if low != report.bound:
        report.violations.append({"kind": "min_psi", "min_psi": str(low), "bound": str(report.bound)})
    got = {a.code for a in achievers}
    for code in sorted(got - set(predicted)):
        report.violations.append({"kind": "unexpected_achiever", "code": code})
    for code in sorted(set(predicted) - got):
        report.violations.append({"kind": "missing_achiever", "code": code})
    return report


def _minimizers(n: int, cap: int, threads: int) -> list[Tree]:
    trees = list(all_trees(n, cap))
    values = _map(psi, trees, threads)
    low = min(values)
    return [t for t, v in zip(trees, values) if v == low]


def check_structural_theorems(n: int, cap: int = DEFAULT_TREE_CAP, threads: int = 1) -> VerificationReport:
    """Every minimizer of order n >= 8: no vertex with 3 leaf neighbours, no
    pendant star (3 rays or more), no pendant path on 4+ vertices, one branch vertex."""
    _check_order(n, 8, cap)
    report = VerificationReport("structure", n)
    for t in _minimizers(n, cap, threads):
        report.checked += 1
        f = structural_predicates(t)
        failed = []
        if f.max_leaf_siblings >= 3:
            failed.append("three_leaf_siblings")
        if f.pendant_star_sizes:
            failed.append("pendant_star")
        if any(length >= 4 for length in f.pendant_path_lengths):
            failed.append("long_pendant_path")
        if len(f.branch_vertices) != 1:
            failed.append("branch_vertex_count")
        if failed:
            report.violations.append({"n": n, "code": canonical_code(t), "failed": failed})
        report.details.append({"n": n, "code": canonical_code(t), **f.as_dict()})
    return report


def leaf_stable(t: Tree) -> bool:
    """True if deleting any single leaf leaves the count unchanged."""
    total = psi(t)
    return all(psi(delete_leaf(t, x)[0]) == total for x in t.leaves())


def check_even_theorem(n: int, cap: int = DEFAULT_TREE_CAP) -> VerificationReport:
    _check_order(n, 3, cap)
    report = VerificationReport("even", n)
    for t in all_trees(n, cap):
        report.checked += 1
        if not leaf_stable(t):
            continue
        leaf = [len(a) == 1 for a in t.adjacency]
        one_leaf_each = all(sum(leaf[u] for u in t.adjacency[v]) == 1 for v in range(t.n) if not leaf[v])
        code = canonical_code(t)
        report.details.append({"n": n, "code": code, "one_leaf_per_inner_vertex": one_leaf_each})
        if n % 2 or not one_leaf_each:
            report.violations.append({"n": n, "code": code, "odd_order": bool(n % 2), "one_leaf_per_inner_vertex": one_leaf_each})
    return report


def verify_lower_bound(n_max: int, cap: int = DEFAULT_TREE_CAP, threads: int = 1) -> VerificationReport:
    _check_order(n_max, 2, cap)
    report = VerificationReport("bound", n_max)
    for n in range(2, n_max + 1):
        trees = list(all_trees(n, cap))
        values = _map(psi, trees, threads)
        report.checked += len(trees)
        for t, v in zip(trees, values):
            if v < ceil_half(n):
                report.violations.append({"n": n, "code": canonical_code(t), "psi": str(v)})
        report.details.append({"n": n, "trees": len(trees), "min_psi": str(min(values)), "bound": str(ceil_half(n))})
    return report


# --------------------------------------------------------------------------
# DP-versus-enumeration and sign property checks


def oracle_agrees(t: Tree) -> bool:
    return psi(t) == count_maximal(t)


def verify_oracle(n_max: int, cap: int = DEFAULT_TREE_CAP, oracle_cap: int = DEFAULT_ORACLE_CAP,
                  threads: int = 1) -> VerificationReport:
    _check_order(n_max, 1, min(cap, oracle_cap))
    report = VerificationReport("oracle", n_max)
    for n in range(1, n_max + 1):
        trees = list(all_trees(n, cap))
        ok = _map(oracle_agrees, trees, threads)
        report.checked += len(trees)
        for t, good in zip(trees, ok):
            if not good:
                report.violations.append({"n": n, "code": canonical_code(t), "psi": str(psi(t)),
                                          "enumerated": str(count_maximal(t))})
    return report


def alpha_equals_gamma_expected(rt: RootedTree, v: int) -> bool:
    """Structural condition for alpha_v == gamma_v: v is childless, or each child
    of v has a childless child of its own."""
    kids = rt.children[v]
    return not kids or all(any(not rt.children[y] for y in rt.children[z]) for z in kids)


def sign_violations(t: Tree, root: int) -> list[str]:
    rt = RootedTree.build(t, root)
    table = compute_signs(rt)
    bad = []
    for v in range(t.n):
        a, b, g = table[v]
        if a > g:
            bad.append(f"alpha>gamma@{v}")
        if a + b < g or g < 1:
            bad.append(f"alpha+beta>=gamma>=1@{v}")
        if rt.children[v] and b < 1:
            bad.append(f"beta>0@{v}")
        if not rt.children[v] and (a, b, g) != (1, 0, 1):
            bad.append(f"leaf_sign@{v}")
        if (a == g) != alpha_equals_gamma_expected(rt, v):
            bad.append(f"alpha=gamma_condition@{v}")
    return bad


def _signs_all_roots(t: Tree) -> list[str]:
    bad = []
    totals = set()
    for r in range(t.n):
        bad += sign_violations(t, r)
        totals.add(psi(t, r))
    if len(totals) != 1:
        bad.append("root_dependence")
    return bad


def verify_signs(n_max: int, cap: int = DEFAULT_TREE_CAP, random_trees: int = 1000, random_n_max: int = 60,
                 roots_per_tree: int = 5, seed: int = DEFAULT_SEED, threads: int = 1) -> VerificationReport:
    _check_order(n_max, 1, cap)
    report = VerificationReport("signs", n_max)
    for n in range(1, n_max + 1):
        trees = list(all_trees(n, cap))
        results = _map(_signs_all_roots, trees, threads)
        report.checked += len(trees)
        for t, bad in zip(trees, results):
            if bad:
                report.violations.append({"n": n, "code": canonical_code(t), "failed": bad})
    rng = random.Random(seed)
    for i in range(random_trees):
        n = rng.randint(1, random_n_max)
        t = random_tree(n, rng.randrange(2**32))
        roots = [rng.randrange(n) for _ in range(roots_per_tree)]
        bad = [x for r in roots for x in sign_violations(t, r)]
        if len({psi(t, r) for r in roots + [0]}) != 1:
            bad.append("root_dependence")
        report.checked += 1
        if bad:
            report.violations.append({"random_tree": i, "n": n, "code": canonical_code(t), "failed": bad})
    return report


# --------------------------------------------------------------------------
# monotonicity


def leaf_deletion_equality_expected(t: Tree, v: int) -> bool:
    """Predicted condition for Psi(T - v) == Psi(T)."""
    if len(t.adjacency[v]) != 1:
        return False
    (x,) = t.adjacency[v]
    leaf = [len(a) == 1 for a in t.adjacency]
    return all(any(leaf[y] for y in t.adjacency[w]) for w in t.adjacency[x] if w != v)


def deletion_violations(t: Tree, counter: Callable[[Forest], int] = psi_forest) -> list[dict]:
    total = psi(t)
    bad = []
    for v in range(t.n):
        smaller = counter(remove_vertex(t, v))
        if smaller > total:
            bad.append({"vertex": v, "kind": "increase", "psi": str(total), "psi_minus_v": str(smaller)})
        elif (smaller == total) != leaf_deletion_equality_expected(t, v):
            bad.append({"vertex": v, "kind": "equality_condition", "psi": str(total), "psi_minus_v": str(smaller)})
    return bad


def slide_violations(count: int = 10_000, n_max: int = 18, seed: int = DEFAULT_SEED) -> tuple[int, list[dict]]:
    """Random leaf slides; returns (slides checked, violations)."""
    rng = random.Random(seed)
    checked, bad = 0, []
    while checked < count:
        n = rng.randint(3, n_max)
        t = random_tree(n, rng.randrange(2**32))
        slides = valid_slides(t)
        if not slides:
            continue
        v1, v2, x = rng.choice(slides)
        after = leaf_slide(t, v1, v2, x)
        checked += 1
        if psi(after) < psi(t):
            bad.append({"code": canonical_code(t), "slide": [v1, v2, x], "before": str(psi(t)), "after": str(psi(after))})
    return checked, bad


def verify_monotonicity(n_max: int, cap: int = DEFAULT_TREE_CAP, slides: int = 10_000, slide_n_max: int = 18,
                        seed: int = DEFAULT_SEED) -> VerificationReport:
    _check_order(n_max, 2, cap)
    report = VerificationReport("monotonicity", n_max)
    for n in range(2, n_max + 1):
        for t in all_trees(n, cap):
            report.checked += 1
            for bad in deletion_violations(t):
                report.violations.append({"n": n, "code": canonical_code(t), **bad})
    checked, bad = slide_violations(slides, slide_n_max, seed)
    report.checked += checked
    report.violations += bad
    report.details.append({"slides_checked": checked})
    return report


def lemma1_violations(t: Tree, cap: int = DEFAULT_ORACLE_CAP) -> list[int]:
    """Vertices where 'covered by every maximal matching' disagrees with 'has a leaf neighbour'."""
    if t.n < 2:
        return []
    leaf = [len(a) == 1 for a in t.adjacency]
    matchings = list(enumerate_maximal(t, cap))
    out = []
    for v in range(t.n):
        always = all(any(v in e for e in m) for m in matchings)
        if always != any(leaf[u] for u in t.adjacency[v]):
            out.append(v)
    return out


# --------------------------------------------------------------------------
# suite dispatch used by the CLI


def run_suite(name: str, n_max: int, cap: int = DEFAULT_TREE_CAP, oracle_cap: int = DEFAULT_ORACLE_CAP,
              threads: int = 1, seed: int = DEFAULT_SEED) -> VerificationReport:
    if name == "bound":
        return verify_lower_bound(n_max, cap, threads)
    if name == "characterization":
        _check_order(n_max, 2, cap)
        report = VerificationReport("characterization", n_max)
        for n in range(2, n_max + 1):
            r = min_psi_search(n, cap, threads)
            report.checked += 1
            report.details.append(r.to_dict())
            report.violations += [{"n": n, **v} for v in r.violations]
        return report
    if name == "structure":
        _check_order(n_max, 8, cap)
        report = VerificationReport("structure", n_max)
        for n in range(8, n_max + 1):
            r = check_structural_theorems(n, cap, threads)
            report.checked += r.checked
            report.details += r.details
            report.violations += r.violations
        return report
    if name == "even":
        _check_order(n_max, 3, cap)
        report = VerificationReport("even", n_max)
        for n in range(3, n_max + 1):
            r = check_even_theorem(n, cap)
            report.checked += r.checked
            report.details += r.details
            report.violations += r.violations
        return report
    if name == "oracle":
        return verify_oracle(n_max, cap, oracle_cap, threads)
    if name == "signs":
        return verify_signs(n_max, cap, seed=seed, threads=threads)
    if name == "monotonicity":
        return verify_monotonicity(n_max, cap, seed=seed)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")

