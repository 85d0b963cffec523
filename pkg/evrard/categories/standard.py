# -*- coding: utf-8 -*-
"""
Standard fixtures
=================

Small categories and functors used throughout: the terminal category *,
the interval 𝓘, discrete categories, the square-boundary poset, and the
functors between them that appear as examples and negative controls.
"""

from typing import Dict, Sequence

from evrard.categories.category import (
    FiniteCategory,
    Functor,
    Morphism,
    NatTransformation,
    constant_functor,
    identity_functor,
    poset_category,
    product_category,
    product_projection,
)


def terminal_category() -> FiniteCategory:
    """The category * with one object and its identity."""
    return FiniteCategory(["*"], [Morphism("id_*", "*", "*")], {"*": "id_*"},
                          {("id_*", "id_*"): "id_*"}, name="*")


def interval_category() -> FiniteCategory:
    """The category 𝓘: objects 0, 1 and the single arrow i: 0 → 1."""
    records = [Morphism("id_0", "0", "0"), Morphism("id_1", "1", "1"), Morphism("i", "0", "1")]
    table = {
        ("id_0", "id_0"): "id_0",
        ("id_1", "id_1"): "id_1",
        ("i", "id_0"): "i",
        ("id_1", "i"): "i",
    }
    return FiniteCategory(["0", "1"], records, {"0": "id_0", "1": "id_1"}, table, name="𝓘")


def discrete_category(names: Sequence[str], name: str = "") -> FiniteCategory:
    """Objects ``names`` and identities only."""
    records = [Morphism(f"id_{x}", x, x) for x in names]
    table = {(f"id_{x}", f"id_{x}"): f"id_{x}" for x in names}
    return FiniteCategory(list(names), records, {x: f"id_{x}" for x in names}, table,
                          name=name or f"disc{len(names)}")


def empty_category() -> FiniteCategory:
    return FiniteCategory([], [], {}, {}, name="∅")


def chain_category(length: int, name: str = "") -> FiniteCategory:
    """The poset 0 < 1 < ... < length-1."""
    elements = [str(i) for i in range(length)]
    relations = [(elements[i], elements[i + 1]) for i in range(length - 1)]
    return poset_category(elements, relations, name=name or f"[{length}]")


def square_boundary() -> FiniteCategory:
    """The poset a<c, a<d, b<c, b<d (nerve: a 4-cycle)."""
    return poset_category(["a", "b", "c", "d"],
                          [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")], name="□")


def square_cone() -> FiniteCategory:
    """The square-boundary poset with a top element t added."""
    return poset_category(["a", "b", "c", "d", "t"],
                          [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "t"), ("d", "t")],
                          name="□+t")


def minimum_poset() -> FiniteCategory:
    """A poset with a minimum element m below a, b."""
    return poset_category(["m", "a", "b"], [("m", "a"), ("m", "b")], name="∨")


def object_inclusion(C: FiniteCategory, obj: str) -> Functor:
    """The functor * → C picking ``obj``."""
    C.require_object(obj)
    point = terminal_category()
    return Functor(point, C, {"*": obj}, {"id_*": C.id(obj)}, name=f"{obj}:*→{C.name}")


def to_terminal(C: FiniteCategory) -> Functor:
    """The unique functor C → *."""
    return constant_functor(C, terminal_category(), "*", name=f"{C.name}→*")


def interval_constants() -> Dict[str, object]:
    """const₀, const₁: 𝓘 → 𝓘 and the transformation const₀ ⇒ const₁ with all components i."""
    I = interval_category()
    c0 = constant_functor(I, I, "0", name="const₀")
    c1 = constant_functor(I, I, "1", name="const₁")
    eta = NatTransformation(c0, c1, {"0": "i", "1": "i"}, name="i")
    return {'category': I, 'const0': c0, 'const1': c1, 'transformation': eta}


def discrete_to_interval() -> Functor:
    """The negative control a ↦ 0, b ↦ 1 from discrete{a, b} to 𝓘."""
    D = discrete_category(["a", "b"], name="disc2")
    I = interval_category()
    return Functor(D, I, {"a": "0", "b": "1"}, {"id_a": "id_0", "id_b": "id_1"}, name="disc2→𝓘")


def square_boundary_inclusion() -> Functor:
    """The inclusion of the square-boundary poset into its cone."""
    S = square_boundary()
    T = square_cone()
    return Functor(S, T, {x: x for x in S.objects}, {m: m for m in S.morphisms}, name="□⊂□+t")


def interval_square_projection(side: int = 1) -> Functor:
    """The projection 𝓘×𝓘 → 𝓘."""
    I = interval_category()
    P = product_category(I, I)
    return product_projection(P, I, I, side)


def interval_identity() -> Functor:
    return identity_functor(interval_category())
