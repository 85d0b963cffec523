# -*- coding: utf-8 -*-
"""
Comma categories and fibers
===========================

For a functor f: 𝒞 → 𝒟 and an object Y of 𝒟:

- ``comma_under(f, Y)`` builds Y\\f: objects (X, v: Y → f(X)), morphisms
  w: X → X′ with f(w)∘v = v′.
- ``comma_over(f, Y)`` builds f\\Y: objects (X, v: f(X) → Y), morphisms
  w: X → X′ with v′∘f(w) = v.
- ``fiber(f, Y)`` is the set-theoretical fiber f⁻¹(Y).

Comma objects are labelled "⟨X|v⟩". A comma morphism is labelled "⟨w|v⟩"
where v is the arrow of its source object (under) or of its target object
(over); that pair determines it.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory, Functor, Morphism, identity_functor
from evrard.categories.universal import UniversalObject, find_initial, find_terminal
from evrard.errors import CategoryError

logger = logging.getLogger(__name__)


def comma_label(x: str, v: str) -> str:
    return f"⟨{x}|{v}⟩"


@dataclass
class CommaCategory:
    """
    A comma category Y\\f or f\\Y together with its projections.

    Attributes:
        category: The comma category itself
        f: The functor it is built from
        Y: The base object in the target of f
        side: "under" (Y\\f) or "over" (f\\Y)
        projection_j: Functor to the source of f forgetting the arrow
        universal: Initial (under) / terminal (over) search result, filled for
            ``under_category`` / ``over_category``
    """
    category: FiniteCategory
    f: Functor
    Y: str
    side: str
    projection_j: Functor
    universal: Optional[UniversalObject] = None
    _bracket: Optional[Functor] = field(default=None, repr=False)

    def decode(self, obj: str) -> Tuple[str, str]:
        """Comma object id → (X, v)."""
        return self.category.object_data[obj]

    def arrow_of(self, obj: str) -> str:
        return self.category.object_data[obj][1]

    def projection_bracket(self) -> Functor:
        """
        The functor [f] to Y\\𝒟 (under) or 𝒟\\Y (over): (X, v) ↦ (f(X), v).
        """
        if self._bracket is None:
            D = self.f.target
            base = identity_functor(D)
            target = comma_under(base, self.Y) if self.side == "under" else comma_over(base, self.Y)
            C = self.category
            obj_map = {}
            for o in C.objects:
                x, v = self.decode(o)
                obj_map[o] = comma_label(self.f.ob(x), v)
            mor_map = {}
            for m in C.morphisms:
                w, v = C.morphism_data[m]
                mor_map[m] = comma_label(self.f.mor(w), v)
            self._bracket = Functor(C, target.category, obj_map, mor_map, name=f"[{self.f.name}]")
        return self._bracket


def _charge(budget: Optional[Budget], count: int, what: str) -> None:
    if budget is not None:
        budget.charge(count, what)


def comma_under(f: Functor, Y: str, budget: Optional[Budget] = None) -> CommaCategory:
    """
    Build Y\\f.

    Args:
        f: Functor 𝒞 → 𝒟
        Y: Object of 𝒟
        budget: Optional enumeration budget

    Returns:
        CommaCategory with side "under"

    Raises:
        CategoryError: If Y is not an object of 𝒟
    """
    C, D = f.source, f.target
    D.require_object(Y)
    objects, object_data = [], {}
    for x in C.objects:
        for v in D.hom(Y, f.ob(x)):
            label = comma_label(x, v)
            objects.append(label)
            object_data[label] = (x, v)
    records, morphism_data = [], {}
    for x, v in object_data.values():
        for w in C.morphisms_from(x):
            target_arrow = D.compose(f.mor(w), v)
            label = comma_label(w, v)
            records.append(Morphism(label, comma_label(x, v), comma_label(C.cod(w), target_arrow)))
            morphism_data[label] = (w, v)
    _charge(budget, len(records), f"{Y}\\{f.name}")
    identity = {comma_label(x, v): comma_label(C.id(x), v) for x, v in object_data.values()}

    def compose(second: str, first: str) -> str:
        w2, _ = morphism_data[second]
        w1, v1 = morphism_data[first]
        return comma_label(C.compose(w2, w1), v1)

    category = FiniteCategory.from_composition(objects, records, identity, compose,
                                               name=f"{Y}\\{f.name}", object_data=object_data,
                                               morphism_data=morphism_data, budget=budget)
    j = Functor(category, C, {o: object_data[o][0] for o in objects},
                {m: morphism_data[m][0] for m in morphism_data}, name="j")
    logger.debug("  Comma %s: %d objects, %d morphisms", category.name, len(objects), len(records))
    return CommaCategory(category, f, Y, "under", j)


def comma_over(f: Functor, Y: str, budget: Optional[Budget] = None) -> CommaCategory:
    """
    Build f\\Y (dual of ``comma_under``).

    Raises:
        CategoryError: If Y is not an object of 𝒟
    """
    C, D = f.source, f.target
    D.require_object(Y)
    objects, object_data = [], {}
    for x in C.objects:
        for v in D.hom(f.ob(x), Y):
            label = comma_label(x, v)
            objects.append(label)
            object_data[label] = (x, v)
    records, morphism_data = [], {}
    for x2, v2 in object_data.values():
        for w in C.morphisms_to(x2):
            source_arrow = D.compose(v2, f.mor(w))
            label = comma_label(w, v2)
            records.append(Morphism(label, comma_label(C.dom(w), source_arrow), comma_label(x2, v2)))
            morphism_data[label] = (w, v2)
    _charge(budget, len(records), f"{f.name}\\{Y}")
    identity = {comma_label(x, v): comma_label(C.id(x), v) for x, v in object_data.values()}

    def compose(second: str, first: str) -> str:
        w2, v3 = morphism_data[second]
        w1, _ = morphism_data[first]
        return comma_label(C.compose(w2, w1), v3)

    category = FiniteCategory.from_composition(objects, records, identity, compose,
                                               name=f"{f.name}\\{Y}", object_data=object_data,
                                               morphism_data=morphism_data, budget=budget)
    j = Functor(category, C, {o: object_data[o][0] for o in objects},
                {m: morphism_data[m][0] for m in morphism_data}, name="j")
    logger.debug("  Comma %s: %d objects, %d morphisms", category.name, len(objects), len(records))
    return CommaCategory(category, f, Y, "over", j)


def under_category(D: FiniteCategory, Y: str) -> CommaCategory:
    """Y\\𝒟 with its initial object located by search."""
    comma = comma_under(identity_functor(D), Y)
    comma.universal = find_initial(comma.category)
    return comma


def over_category(D: FiniteCategory, Y: str) -> CommaCategory:
    """𝒟\\Y with its terminal object located by search."""
    comma = comma_over(identity_functor(D), Y)
    comma.universal = find_terminal(comma.category)
    return comma


def fiber(f: Functor, Y: str) -> FiniteCategory:
    """
    The set-theoretical fiber f⁻¹(Y): objects over Y, morphisms over id_Y.

    Raises:
        CategoryError: If Y is not an object of the target
    """
    C, D = f.source, f.target
    D.require_object(Y)
    identity_Y = D.id(Y)
    objects = [x for x in C.objects if f.ob(x) == Y]
    morphisms = [m for m in C.morphisms if f.mor(m) == identity_Y]
    return C.subcategory(objects, morphisms, name=f"{f.name}⁻¹({Y})")


def _check_same_functor(f: Functor, comma: CommaCategory) -> None:
    if comma.f is not f and not comma.f.equals(f):
        raise CategoryError(f"Comma category {comma.category.name} is not built over {f.name}")


def induced_under_map(f: Functor, v: str, under_source: Optional[CommaCategory] = None,
                      under_target: Optional[CommaCategory] = None) -> Functor:
    """
    [v*]: Y′\\f → Y\\f for v: Y → Y′, precomposing arrows with v.

    Args:
        f: The functor the commas are built over
        v: Morphism Y → Y′ of the target of f
        under_source: Prebuilt Y′\\f (optional)
        under_target: Prebuilt Y\\f (optional)
    """
    D = f.target
    D.require_morphism(v)
    Y, Yp = D.dom(v), D.cod(v)
    src = under_source or comma_under(f, Yp)
    tgt = under_target or comma_under(f, Y)
    _check_same_functor(f, src)
    _check_same_functor(f, tgt)
    obj_map = {}
    for o in src.category.objects:
        x, u = src.decode(o)
        obj_map[o] = comma_label(x, D.compose(u, v))
    mor_map = {}
    for m in src.category.morphisms:
        w, u = src.category.morphism_data[m]
        mor_map[m] = comma_label(w, D.compose(u, v))
    return Functor(src.category, tgt.category, obj_map, mor_map, name=f"[{v}*]")


def induced_over_map(f: Functor, v: str, over_source: Optional[CommaCategory] = None,
                     over_target: Optional[CommaCategory] = None) -> Functor:
    """
    [v_*]: f\\Y → f\\Y′ for v: Y → Y′, postcomposing arrows with v.
    """
    D = f.target
    D.require_morphism(v)
    Y, Yp = D.dom(v), D.cod(v)
    src = over_source or comma_over(f, Y)
    tgt = over_target or comma_over(f, Yp)
    _check_same_functor(f, src)
    _check_same_functor(f, tgt)
    obj_map = {}
    for o in src.category.objects:
        x, u = src.decode(o)
        obj_map[o] = comma_label(x, D.compose(v, u))
    mor_map = {}
    for m in src.category.morphisms:
        w, u = src.category.morphism_data[m]
        mor_map[m] = comma_label(w, D.compose(v, u))
    return Functor(src.category, tgt.category, obj_map, mor_map, name=f"[{v}_*]")


def fiber_inclusion_under(f: Functor, Y: str, fib: Optional[FiniteCategory] = None,
                          comma: Optional[CommaCategory] = None) -> Functor:
    """i_Y: f⁻¹(Y) → Y\\f, X ↦ (X, id_Y)."""
    fib = fib if fib is not None else fiber(f, Y)
    comma = comma or comma_under(f, Y)
    identity_Y = f.target.id(Y)
    return Functor(fib, comma.category,
                   {x: comma_label(x, identity_Y) for x in fib.objects},
                   {w: comma_label(w, identity_Y) for w in fib.morphisms},
                   name=f"i_{Y}")


def fiber_inclusion_over(f: Functor, Y: str, fib: Optional[FiniteCategory] = None,
                         comma: Optional[CommaCategory] = None) -> Functor:
    """j_Y: f⁻¹(Y) → f\\Y, X ↦ (X, id_Y)."""
    fib = fib if fib is not None else fiber(f, Y)
    comma = comma or comma_over(f, Y)
    identity_Y = f.target.id(Y)
    return Functor(fib, comma.category,
                   {x: comma_label(x, identity_Y) for x in fib.objects},
                   {w: comma_label(w, identity_Y) for w in fib.morphisms},
                   name=f"j_{Y}")
