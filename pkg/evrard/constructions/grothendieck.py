# -*- coding: utf-8 -*-
"""
Grothendieck construction
=========================

For a strict functor F: 𝒦 → Cat the category 𝒦∫F has objects (K, X) with
X ∈ F(K) and morphisms (k, x): (K₁, X₁) → (K₀, X₀) with k: K₁ → K₀ and
x: F(k)(X₁) → X₀. Composition:

    (k, x)·(k′, x′) = (k∘k′, x∘F(k)(x′))

Also provided: the functor induced by a strictly natural family of
functors, and the functor out of 𝒦∫F assembled from per-object functors
and per-morphism transformations satisfying the cocycle condition.
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import (
    CheckReport,
    FiniteCategory,
    Functor,
    Morphism,
    NatTransformation,
    compose_functors,
    identity_functor,
    require_valid,
    validate_functor,
    validate_nat_trans,
)
from evrard.errors import CategoryError, ValidationError

logger = logging.getLogger(__name__)


def grothendieck_object(K: str, X: str) -> str:
    return f"({K},{X})"


def grothendieck_morphism(k: str, x: str, X1: str) -> str:
    return f"({k},{x}|{X1})"


class CatValuedFunctor:
    """
    A strict functor 𝒦 → Cat with finite values.

    Attributes:
        source: The index category 𝒦
        on_objects: K ↦ F(K)
        on_morphisms: k ↦ F(k): F(dom k) → F(cod k)
    """

    def __init__(self, source: FiniteCategory, on_objects: Mapping[str, FiniteCategory],
                 on_morphisms: Mapping[str, Functor], name: str = "F"):
        self.source = source
        self.on_objects: Dict[str, FiniteCategory] = dict(on_objects)
        self.on_morphisms: Dict[str, Functor] = dict(on_morphisms)
        self.name = name

    def __call__(self, K: str) -> FiniteCategory:
        return self.on_objects[K]

    def at(self, k: str) -> Functor:
        return self.on_morphisms[k]


def validate_strictness(F: CatValuedFunctor, check_functors: bool = True) -> CheckReport:
    """
    F(id_K) = id and F(k′∘k) = F(k′)∘F(k) as exact equalities of maps.

    Args:
        F: Cat-valued functor
        check_functors: Also run ``validate_functor`` on every F(k)
    """
    report = CheckReport(f"strict functor {F.name}")
    K = F.source
    for K0 in K.objects:
        if K0 not in F.on_objects:
            report.fail("object totality", K0)
    for k in K.morphisms:
        Fk = F.on_morphisms.get(k)
        if Fk is None:
            report.fail("morphism totality", k)
            continue
        if not (Fk.source.same_as(F(K.dom(k))) and Fk.target.same_as(F(K.cod(k)))):
            report.fail("endpoints", k)
            continue
        if check_functors:
            report.absorb(validate_functor(Fk), prefix=f"F({k})")
    if not report.passed:
        return report
    for K0 in K.objects:
        if not F.at(K.id(K0)).equals(identity_functor(F(K0))):
            report.fail("identity strictness", K.id(K0))
    for (k2, k1), k21 in K.table.items():
        if not F.at(k21).equals(compose_functors(F.at(k2), F.at(k1))):
            report.fail("composition strictness", k1, k2)
    return report


@dataclass
class GrothendieckCategory:
    """
    The result of ``grothendieck``.

    Attributes:
        category: 𝒦∫F
        projection: (K, X) ↦ K
        F: The Cat-valued functor
    """
    category: FiniteCategory
    projection: Functor
    F: CatValuedFunctor

    def decode_object(self, obj: str) -> Tuple[str, str]:
        return self.category.object_data[obj]

    def decode_morphism(self, m: str) -> Tuple[str, str, str]:
        """Morphism id → (k, x, X₁)."""
        return self.category.morphism_data[m]


def grothendieck(F: CatValuedFunctor, budget: Optional[Budget] = None, validate: bool = True,
                 name: str = "") -> GrothendieckCategory:
    """
    Build 𝒦∫F.

    Args:
        F: Strict Cat-valued functor
        budget: Optional enumeration budget (charged per morphism)
        validate: Check strictness first

    Raises:
        ValidationError: Strictness violated, with the witness pair
    """
    started = time.time()
    if validate:
        report = validate_strictness(F, check_functors=False)
        if not report.passed:
            raise ValidationError(f"{F.name} is not a strict functor:\n{report.summary()}", report)
    K = F.source
    objects, object_data = [], {}
    for K0 in K.objects:
        for X in F(K0).objects:
            label = grothendieck_object(K0, X)
            objects.append(label)
            object_data[label] = (K0, X)
    records, morphism_data = [], {}
    for k in K.morphisms:
        K1, K0 = K.dom(k), K.cod(k)
        Fk, target = F.at(k), F(K0)
        for X1 in F(K1).objects:
            start = Fk.ob(X1)
            arrows = target.morphisms_from(start)
            if budget is not None:
                budget.charge(len(arrows), f"{K.name}∫{F.name}")
            for x in arrows:
                label = grothendieck_morphism(k, x, X1)
                records.append(Morphism(label, grothendieck_object(K1, X1),
                                        grothendieck_object(K0, target.cod(x))))
                morphism_data[label] = (k, x, X1)
    identity = {grothendieck_object(K0, X): grothendieck_morphism(K.id(K0), F(K0).id(X), X)
                for K0, X in object_data.values()}

    def compose(second: str, first: str) -> str:
        k, x, X1 = morphism_data[second]
        kp, xp, X2 = morphism_data[first]
        K0 = K.cod(k)
        moved = F.at(k).mor(xp)
        return grothendieck_morphism(K.compose(k, kp), F(K0).compose(x, moved), X2)

    category = FiniteCategory.from_composition(objects, records, identity, compose,
                                               name=name or f"{K.name}∫{F.name}",
                                               object_data=object_data, morphism_data=morphism_data,
                                               budget=budget)
    projection = Functor(category, K, {o: object_data[o][0] for o in objects},
                         {m: morphism_data[m][0] for m in morphism_data}, name="π")
    logger.info("  Built %s: %d objects, %d morphisms (elapsed: %.3fs)",
                category.name, len(objects), len(records), time.time() - started)
    return GrothendieckCategory(category, projection, F)


def grothendieck_map(alpha: Mapping[str, Functor], source: GrothendieckCategory,
                     target: GrothendieckCategory) -> Functor:
    """
    The functor 𝒦∫F → 𝒦∫F′ induced by a strictly natural family α_K: F(K) → F′(K).

    (K, X) ↦ (K, α_K(X)), (k, x) ↦ (k, α_{K₀}(x)).

    Raises:
        ValidationError: If α_{K₀}∘F(k) ≠ F′(k)∘α_{K₁} for some k
    """
    F, Fp = source.F, target.F
    K = F.source
    report = CheckReport("strict naturality")
    for k in K.morphisms:
        K1, K0 = K.dom(k), K.cod(k)
        lhs = compose_functors(alpha[K0], F.at(k))
        rhs = compose_functors(Fp.at(k), alpha[K1])
        if not lhs.equals(rhs):
            report.fail("naturality", k)
    require_valid(report, "family α")
    obj_map = {o: grothendieck_object(K0, alpha[K0].ob(X)) for o, (K0, X) in source.category.object_data.items()}
    mor_map = {}
    for m, (k, x, X1) in source.category.morphism_data.items():
        K0, K1 = K.cod(k), K.dom(k)
        mor_map[m] = grothendieck_morphism(k, alpha[K0].mor(x), alpha[K1].ob(X1))
    return Functor(source.category, target.category, obj_map, mor_map, name="∫α")


def validate_lax_data(total: GrothendieckCategory, g_obj: Mapping[str, Functor],
                      g_mor: Mapping[str, NatTransformation]) -> CheckReport:
    """
    Check the data for a functor out of 𝒦∫F.

    g(K): F(K) → 𝒞 and g(k): g(K₁) ⇒ g(K₀)∘F(k), with g(id) = id and the
    cocycle g(k′∘k) = g(k′)F(k) ∘ g(k).
    """
    F = total.F
    K = F.source
    report = CheckReport("lax data")
    for k in K.morphisms:
        K1, K0 = K.dom(k), K.cod(k)
        eta = g_mor[k]
        expected_G = compose_functors(g_obj[K0], F.at(k))
        if not eta.F.equals(g_obj[K1]) or not eta.G.equals(expected_G):
            report.fail("transformation endpoints", k)
            continue
        report.absorb(validate_nat_trans(eta), prefix=f"g({k})")
    if not report.passed:
        return report
    for K0 in K.objects:
        eta = g_mor[K.id(K0)]
        C = g_obj[K0].target
        for X, c in eta.components.items():
            if c != C.id(g_obj[K0].ob(X)):
                report.fail("identity condition", K.id(K0), X)
    for (k2, k1), k21 in K.table.items():
        K1 = K.dom(k1)
        C = g_obj[K1].target
        for X in F(K1).objects:
            step = g_mor[k1].at(X)
            then = g_mor[k2].at(F.at(k1).ob(X))
            if g_mor[k21].at(X) != C.compose(then, step):
                report.fail("cocycle", k1, k2, X)
    return report


def functor_from_lax_data(total: GrothendieckCategory, g_obj: Mapping[str, Functor],
                          g_mor: Mapping[str, NatTransformation], name: str = "G") -> Functor:
    """
    The unique functor G: 𝒦∫F → 𝒞 with G(K, X) = g(K)(X) and
    G(k, x) = g(K₀)(x)∘g(k)_{X₁}.

    Raises:
        ValidationError: Identity or cocycle condition fails; witness is (k, k′)
    """
    require_valid(validate_lax_data(total, g_obj, g_mor), "lax data")
    K = total.F.source
    any_K = next(iter(g_obj.values()), None)
    if any_K is None:
        raise CategoryError("Empty lax data")
    C = any_K.target
    obj_map = {o: g_obj[K0].ob(X) for o, (K0, X) in total.category.object_data.items()}
    mor_map = {}
    for m, (k, x, X1) in total.category.morphism_data.items():
        K0 = K.cod(k)
        mor_map[m] = C.compose(g_obj[K0].mor(x), g_mor[k].at(X1))
    return Functor(total.category, C, obj_map, mor_map, name=name)


def decompose_functor(total: GrothendieckCategory, G: Functor) -> Tuple[Dict[str, Functor], Dict[str, NatTransformation]]:
    """
    Recover (g_obj, g_mor) from a functor G: 𝒦∫F → 𝒞.

    g(K)(x) = G(id_K, x) and g(k)_X = G(k, id_{F(k)X}).
    """
    F = total.F
    K = F.source
    C = G.target
    g_obj = {}
    for K0 in K.objects:
        FK = F(K0)
        g_obj[K0] = Functor(
            FK, C,
            {X: G.ob(grothendieck_object(K0, X)) for X in FK.objects},
            {x: G.mor(grothendieck_morphism(K.id(K0), x, FK.dom(x))) for x in FK.morphisms},
            name=f"g({K0})",
        )
    g_mor = {}
    for k in K.morphisms:
        K1, K0 = K.dom(k), K.cod(k)
        Fk = F.at(k)
        components = {X: G.mor(grothendieck_morphism(k, F(K0).id(Fk.ob(X)), X)) for X in F(K1).objects}
        g_mor[k] = NatTransformation(g_obj[K1], compose_functors(g_obj[K0], Fk), components, name=f"g({k})")
    return g_obj, g_mor


def same_lax_data(a: Tuple[Mapping[str, Functor], Mapping[str, NatTransformation]],
                  b: Tuple[Mapping[str, Functor], Mapping[str, NatTransformation]]) -> bool:
    """Exact equality of two lax data sets."""
    (obj_a, mor_a), (obj_b, mor_b) = a, b
    if set(obj_a) != set(obj_b) or set(mor_a) != set(mor_b):
        return False
    if any(not obj_a[K].equals(obj_b[K]) for K in obj_a):
        return False
    return all(mor_a[k].components == mor_b[k].components for k in mor_a)
