"""Exact counting of maximal matchings in trees and forests."""
# ruff: noqa: F401
from .families import FamilyInstance, extremal_family, parse_family_spec
from .oracle import count_maximal, covered_by_all, enumerate_maximal, is_maximal
from .signs import Sign, SignTable, compute_signs, psi, psi_forest, psi_split
from .tree_core import (
    CapExceeded,
    Forest,
    ParseError,
    RootedTree,
    SpiderSpec,
    Tree,
    TreeError,
    all_trees,
    canonical_code,
    from_prufer,
    parse_edge_list,
    random_tree,
)

__version__ = "0.1.0"
