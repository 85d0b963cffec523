# -*- coding: utf-8 -*-
"""
Truncated path categories Λ𝒟^{≤N} and Λ′𝒟^{≤N}
===============================================

The Grothendieck construction of [n] ↦ Λ_n𝒟 over Δ_str^{≤N} (variant
"str") or Δ_≤^{≤N} (variant "le"). Objects are "([n],Z[...])", morphisms
"(φ,t|Z₁)" with t: Λ(φ)Z₁ → Z₀ in Λ_n𝒟.
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory, Functor, NatTransformation, compose_functors
from evrard.constructions.grothendieck import (
    CatValuedFunctor,
    GrothendieckCategory,
    functor_from_lax_data,
    grothendieck,
    grothendieck_morphism,
    grothendieck_object,
)
from evrard.errors import CategoryError
from evrard.paths.lambda_n import ZigZagCategory, build_lambda_n, lambda_functor
from evrard.paths.simplex import VARIANTS, StrictMonotone, index_category, object_label
from evrard.paths.zigzag import ZigZag, ZigZagMorphism

logger = logging.getLogger(__name__)


@dataclass
class PathCategoryStage:
    """
    Λ𝒟^{≤N} (or Λ′𝒟^{≤N}) with its endpoint projections.

    Attributes:
        D: Ambient category
        N: Stage
        variant: "str" or "le"
        index: The index category on [1..N]
        layers: n ↦ Λ_n𝒟
        total: The Grothendieck construction
        p0, p1: Functors to 𝒟 reading Ȳ₀ / Ȳ_n
    """
    D: FiniteCategory
    N: int
    variant: str
    index: FiniteCategory
    layers: Dict[int, ZigZagCategory]
    total: GrothendieckCategory
    p0: Functor
    p1: Functor

    @property
    def category(self) -> FiniteCategory:
        return self.total.category

    def decode(self, obj: str) -> Tuple[int, ZigZag]:
        K, Z = self.total.decode_object(obj)
        return self.index.object_data[K], self.layers[self.index.object_data[K]].decode(Z)

    def decode_morphism(self, m: str) -> Tuple[StrictMonotone, ZigZagMorphism]:
        k, t, _ = self.total.decode_morphism(m)
        phi = self.index.morphism_data[k]
        return phi, self.layers[phi.n].decode_morphism(t)

    def object_id(self, Z: ZigZag) -> str:
        return grothendieck_object(object_label(Z.n), Z.label)

    def morphism_id(self, phi: StrictMonotone, t: ZigZagMorphism, source: ZigZag) -> str:
        """Id of (φ, t): ([m], source) → ([n], t.target); t starts at Λ(φ)(source)."""
        return grothendieck_morphism(phi.label, t.label, source.label)


def path_label(variant: str, D: FiniteCategory) -> str:
    return f"Λ′{D.name}" if variant == "le" else f"Λ{D.name}"


def build_path_category(D: FiniteCategory, N: int, variant: str = "le", budget: Optional[Budget] = None,
                        check_strictness: bool = False) -> PathCategoryStage:
    """
    Build the stage-N path category and its projections p0, p1.

    p0 and p1 are assembled from per-layer projections with identity
    transformations (Λ(φ) never moves the endpoints).

    Args:
        D: Ambient category
        N: Stage ≥ 1
        variant: "str" (Δ_str) or "le" (Δ_≤)
        budget: Shared enumeration budget
        check_strictness: Validate Λ as a strict functor before assembling

    Raises:
        CategoryError: N < 1 or unknown variant
        BudgetExceeded: Enumeration too large
    """
    if variant not in VARIANTS:
        raise CategoryError(f"Unknown variant {variant!r}; expected one of {VARIANTS}")
    started = time.time()
    index = index_category(N, variant)
    layers = {n: build_lambda_n(D, n, budget=budget) for n in range(1, N + 1)}
    on_objects = {object_label(n): layers[n].category for n in layers}
    on_morphisms = {}
    for k, phi in index.morphism_data.items():
        on_morphisms[k] = lambda_functor(phi, layers[phi.m], layers[phi.n])
    Lam = CatValuedFunctor(index, on_objects, on_morphisms, name="Λ")
    name = f"{path_label(variant, D)}^≤{N}"
    total = grothendieck(Lam, budget=budget, validate=check_strictness, name=name)

    projections = []
    for which in ("p0", "p1"):
        g_obj = {object_label(n): getattr(layers[n], which) for n in layers}
        g_mor = {}
        for k, phi in index.morphism_data.items():
            source, target = g_obj[object_label(phi.m)], g_obj[object_label(phi.n)]
            expected = compose_functors(target, Lam.at(k))
            components = {Z: D.id(source.ob(Z)) for Z in layers[phi.m].category.objects}
            g_mor[k] = NatTransformation(source, expected, components, name=f"{which}({k})")
        projections.append(functor_from_lax_data(total, g_obj, g_mor, name=which))
    logger.info("  Path category %s ready (elapsed: %.3fs)", name, time.time() - started)
    return PathCategoryStage(D, N, variant, index, layers, total, projections[0], projections[1])


def stage_inclusion(small: FiniteCategory, big: FiniteCategory, name: str = "") -> Functor:
    """
    Inclusion of a stage into a later one; ids are stage independent.

    Raises:
        CategoryError: If some id of ``small`` is absent from ``big``
    """
    missing = [x for x in small.objects if not big.has_object(x)]
    missing += [m for m in small.morphisms if not big.has_morphism(m)]
    if missing:
        raise CategoryError(f"{small.name} is not contained in {big.name}: {missing[0]}")
    return Functor(small, big, {x: x for x in small.objects}, {m: m for m in small.morphisms},
                   name=name or f"{small.name}↪{big.name}")


def path_stage_inclusion(small: PathCategoryStage, big: PathCategoryStage) -> Functor:
    """Λ𝒟^{≤N} ↪ Λ𝒟^{≤N′} for N ≤ N′."""
    if small.variant != big.variant or not small.D.same_as(big.D) or small.N > big.N:
        raise CategoryError("Stages are not compatible")
    return stage_inclusion(small.category, big.category)
