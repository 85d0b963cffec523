# -*- coding: utf-8 -*-
"""
Random corpus
=============

Seeded generators for property tests: random posets, random monotone maps
between them, and random natural transformations.
"""

from typing import List, Optional

import networkx as nx
import numpy as np

from evrard.categories.category import (
    FiniteCategory,
    Functor,
    NatTransformation,
    identity_functor,
    poset_category,
)


def random_poset(rng: np.random.Generator, max_objects: int = 6, density: float = 0.35,
                 with_minimum: bool = False, name: str = "") -> FiniteCategory:
    """
    A random poset on at most ``max_objects`` elements.

    Edges are drawn only from lower to higher index, so the relation is
    acyclic; ``poset_category`` closes it transitively.

    Args:
        rng: numpy random generator
        max_objects: Upper bound on the number of elements
        density: Probability of each generating relation
        with_minimum: Add an element below everything
    """
    size = int(rng.integers(1, max_objects + 1))
    if with_minimum:
        size = max(size - 1, 0)
    elements = [f"p{i}" for i in range(size)]
    relations = []
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < density:
                relations.append((elements[i], elements[j]))
    if with_minimum:
        relations += [("m", x) for x in elements]
        elements = ["m"] + elements
    return poset_category(elements, relations, name=name or f"P{size}")


def poset_order(C: FiniteCategory) -> nx.DiGraph:
    """The order relation of a poset category as a DiGraph (x→y iff x≤y, x≠y)."""
    graph = nx.DiGraph()
    graph.add_nodes_from(C.objects)
    for m in C.non_identity_morphisms():
        graph.add_edge(C.dom(m), C.cod(m))
    return graph


def _unique_arrow(C: FiniteCategory, x: str, y: str) -> Optional[str]:
    arrows = C.hom(x, y)
    return arrows[0] if arrows else None


def random_monotone_functor(rng: np.random.Generator, source: FiniteCategory,
                            target: FiniteCategory, attempts: int = 50) -> Optional[Functor]:
    """
    A random functor between two posets (an order-preserving map).

    Objects are assigned in a topological order, each image chosen among the
    target elements above the images of everything below it.
    Returns None if no assignment is found within ``attempts``.
    """
    order = list(nx.topological_sort(poset_order(source)))
    for _ in range(attempts):
        obj_map = {}
        for x in order:
            below = [obj_map[m_dom] for m_dom in (source.dom(m) for m in source.morphisms_to(x)) if m_dom != x]
            choices = [y for y in target.objects if all(_unique_arrow(target, b, y) for b in below)]
            if not choices:
                break
            obj_map[x] = choices[int(rng.integers(len(choices)))]
        else:
            mor_map = {m: _unique_arrow(target, obj_map[source.dom(m)], obj_map[source.cod(m)])
                       for m in source.morphisms}
            return Functor(source, target, obj_map, mor_map, name="random")
    return None


def random_nat_trans(rng: np.random.Generator, C: FiniteCategory, attempts: int = 50) -> NatTransformation:
    """
    A random transformation id ⇒ G for an endofunctor G of a poset with G(x) ≥ x.

    Rejection-samples inflationary monotone maps; falls back to G = id.
    """
    F = identity_functor(C)
    order = list(reversed(list(nx.topological_sort(poset_order(C)))))
    for _ in range(attempts):
        obj_map = {}
        for x in order:
            above = [obj_map[C.cod(m)] for m in C.morphisms_from(x) if C.cod(m) != x]
            choices = [y for y in C.objects
                       if _unique_arrow(C, x, y) and all(_unique_arrow(C, y, a) for a in above)]
            if not choices:
                break
            obj_map[x] = choices[int(rng.integers(len(choices)))]
        else:
            mor_map = {m: _unique_arrow(C, obj_map[C.dom(m)], obj_map[C.cod(m)]) for m in C.morphisms}
            G = Functor(C, C, obj_map, mor_map, name="G")
            return NatTransformation(F, G, {x: _unique_arrow(C, x, obj_map[x]) for x in C.objects}, name="η")
    return NatTransformation(F, F, {x: C.id(x) for x in C.objects}, name="η")


def poset_corpus(seed: int = 0, count: int = 50, max_objects: int = 6) -> List[FiniteCategory]:
    """``count`` random posets from one seed."""
    rng = np.random.default_rng(seed)
    return [random_poset(rng, max_objects=max_objects, name=f"P#{k}") for k in range(count)]
