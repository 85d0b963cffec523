# -*- coding: utf-8 -*-
"""
Nerve of a finite category
==========================

The normalized nerve: in dimension d the chains (f₁, ..., f_d) of composable
non-identity morphisms; in dimension 0 the objects. Degenerate simplices
never materialize.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory

logger = logging.getLogger(__name__)

Simplex = Tuple[str, ...]


def is_loop_free(C: FiniteCategory) -> bool:
    """
    True iff the directed graph of non-identity morphisms is acyclic.

    In particular there are no non-identity endomorphisms and no inverse pairs.
    """
    return nx.is_directed_acyclic_graph(nx.DiGraph(C.to_digraph()))


def longest_chain(C: FiniteCategory) -> Optional[int]:
    """Length of the longest chain of composable non-identity morphisms (None if loopy)."""
    if not is_loop_free(C):
        return None
    return nx.dag_longest_path_length(nx.DiGraph(C.to_digraph()))


@dataclass
class NerveTruncation:
    """
    Nondegenerate simplices of N𝒞 up to dimension k.

    Attributes:
        category: The category
        k: Top dimension built
        simplices: d ↦ list of simplices (objects for d = 0, morphism chains otherwise)
        complete: True when no nondegenerate simplex exists above k
            (loop-free category whose longest chain is ≤ k)
    """
    category: FiniteCategory
    k: int
    simplices: Dict[int, List[Simplex]]
    complete: bool
    index: Dict[int, Dict[Simplex, int]] = field(default_factory=dict)

    def __post_init__(self):
        self.index = {d: {s: i for i, s in enumerate(chain)} for d, chain in self.simplices.items()}

    def dims(self) -> Tuple[int, ...]:
        return tuple(len(self.simplices[d]) for d in range(self.k + 1))

    @property
    def truncated(self) -> bool:
        return not self.complete


def nerve(C: FiniteCategory, k: int, budget: Optional[Budget] = None) -> NerveTruncation:
    """
    All nondegenerate chains of length ≤ k.

    For a loop-free category whose longest chain L is < k, the dimensions
    above L are empty and the truncation is marked complete.

    Args:
        C: Category
        k: Top dimension (≥ 0)
        budget: Optional budget charged per simplex

    Raises:
        BudgetExceeded: Too many simplices
    """
    if k < 0:
        raise ValueError(f"Nerve dimension must be ≥ 0, got {k}")
    started = time.time()
    simplices: Dict[int, List[Simplex]] = {0: [(x,) for x in C.objects]}
    outgoing = {x: [m for m in C.morphisms_from(x) if not C.is_identity(m)] for x in C.objects}
    current: List[Simplex] = [(m,) for m in C.non_identity_morphisms()]
    for d in range(1, k + 1):
        size = len(current) if d == 1 else sum(len(outgoing[C.cod(chain[-1])]) for chain in current)
        if budget is not None:
            budget.charge(size, f"nerve of {C.name} in dimension {d}")
        if d > 1:
            current = [chain + (g,) for chain in current for g in outgoing[C.cod(chain[-1])]]
        simplices[d] = current
    L = longest_chain(C)
    complete = L is not None and L <= k
    logger.info("  Nerve of %s to dimension %d: %s (elapsed: %.3fs)",
                C.name, k, tuple(len(simplices[d]) for d in range(k + 1)), time.time() - started)
    return NerveTruncation(C, k, simplices, complete)
