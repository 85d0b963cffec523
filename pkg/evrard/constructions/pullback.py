# -*- coding: utf-8 -*-
"""
Strict pullback of finite categories
"""

from dataclasses import dataclass
from typing import Optional

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory, Functor, Morphism
from evrard.errors import CategoryError


def pullback_label(a: str, b: str) -> str:
    return f"({a};{b})"


@dataclass
class Pullback:
    """
    A ×_C B for f: A → C ← B: g.

    Attributes:
        category: The pullback
        left: Projection to A
        right: Projection to B
    """
    category: FiniteCategory
    left: Functor
    right: Functor


def pullback_category(f: Functor, g: Functor, budget: Optional[Budget] = None, name: str = "") -> Pullback:
    """
    Objects (a, b) with f(a) = g(b); morphisms (u, v) with f(u) = g(v).

    Raises:
        CategoryError: If f and g have different targets
    """
    if not f.target.same_as(g.target):
        raise CategoryError(f"Cannot pull back {f.name} and {g.name}: different targets")
    A, B = f.source, g.source
    over = {}
    for b in B.objects:
        over.setdefault(g.ob(b), []).append(b)
    objects, object_data = [], {}
    for a in A.objects:
        for b in over.get(f.ob(a), []):
            label = pullback_label(a, b)
            objects.append(label)
            object_data[label] = (a, b)
    arrows_over = {}
    for v in B.morphisms:
        arrows_over.setdefault(g.mor(v), []).append(v)
    records, morphism_data = [], {}
    for u, ru in A.morphisms.items():
        partners = arrows_over.get(f.mor(u), [])
        if budget is not None:
            budget.charge(len(partners), name or "pullback")
        for v in partners:
            rv = B.morphisms[v]
            label = pullback_label(u, v)
            records.append(Morphism(label, pullback_label(ru.dom, rv.dom), pullback_label(ru.cod, rv.cod)))
            morphism_data[label] = (u, v)
    identity = {o: pullback_label(A.id(a), B.id(b)) for o, (a, b) in object_data.items()}

    def compose(second: str, first: str) -> str:
        u2, v2 = morphism_data[second]
        u1, v1 = morphism_data[first]
        return pullback_label(A.compose(u2, u1), B.compose(v2, v1))

    category = FiniteCategory.from_composition(objects, records, identity, compose,
                                               name=name or f"{A.name}×{B.name}",
                                               object_data=object_data, morphism_data=morphism_data,
                                               budget=budget)
    left = Functor(category, A, {o: d[0] for o, d in object_data.items()},
                   {m: d[0] for m, d in morphism_data.items()}, name="pr_A")
    right = Functor(category, B, {o: d[1] for o, d in object_data.items()},
                    {m: d[1] for m, d in morphism_data.items()}, name="pr_B")
    return Pullback(category, left, right)
