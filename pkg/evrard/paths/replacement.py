# -*- coding: utf-8 -*-
"""
Fibrant replacement ℋ(f)^{≤N}
=============================

For f: 𝒞 → 𝒟, ℋ(f) is the pullback of f and p₀: Λ𝒟 → 𝒟. Its objects are
triples (X, [n], Y̲) with Ȳ₀ = f(X), labelled "(X;([n],Z[...]))".

    f_h = p₁∘pr      q = projection to 𝒞      i(X) = (X, [1], constant on f(X))
"""

import logging
import time
from dataclasses import dataclass
from typing import Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import (
    CheckReport,
    FiniteCategory,
    Functor,
    compose_functors,
    identity_functor,
    require_valid,
    validate_functor,
)
from evrard.constructions.pullback import Pullback, pullback_category, pullback_label
from evrard.errors import CategoryError
from evrard.paths.path_category import PathCategoryStage, build_path_category, stage_inclusion
from evrard.paths.simplex import StrictMonotone, identity_map
from evrard.paths.zigzag import ZigZag, ZigZagMorphism, constant_zigzag, constant_zigzag_morphism

logger = logging.getLogger(__name__)


@dataclass
class ReplacementStage:
    """
    ℋ(f)^{≤N} (variant "str") or ℋ′(f)^{≤N} (variant "le").

    Attributes:
        f: The functor being replaced
        path: The path-category stage it is pulled back from
        pullback: The pullback with its two projections
        f_h: p₁ after the projection to the path category
        q: Projection to the source of f
        i: The section X ↦ (X, [1], constant zig-zag on f(X))
    """
    f: Functor
    path: PathCategoryStage
    pullback: Pullback
    f_h: Functor
    q: Functor
    i: Functor

    @property
    def N(self) -> int:
        return self.path.N

    @property
    def variant(self) -> str:
        return self.path.variant

    @property
    def category(self) -> FiniteCategory:
        return self.pullback.category

    def decode(self, obj: str) -> Tuple[str, int, ZigZag]:
        """Object id → (X, n, Y̲)."""
        X, path_obj = self.category.object_data[obj]
        n, Z = self.path.decode(path_obj)
        return X, n, Z

    def decode_morphism(self, m: str) -> Tuple[str, StrictMonotone, ZigZagMorphism]:
        """Morphism id → (w, φ, t)."""
        w, path_mor = self.category.morphism_data[m]
        phi, t = self.path.decode_morphism(path_mor)
        return w, phi, t

    def object_id(self, X: str, Z: ZigZag) -> str:
        return pullback_label(X, self.path.object_id(Z))

    def morphism_id(self, w: str, phi: StrictMonotone, t: ZigZagMorphism, source: ZigZag) -> str:
        return pullback_label(w, self.path.morphism_id(phi, t, source))


def build_replacement(f: Functor, N: int, variant: str = "le", budget: Optional[Budget] = None,
                      path: Optional[PathCategoryStage] = None) -> ReplacementStage:
    """
    Build ℋ(f)^{≤N} with f_h, q and i, and verify q∘i = id_𝒞.

    Args:
        f: Functor 𝒞 → 𝒟
        N: Stage ≥ 1
        variant: "str" or "le"
        budget: Shared enumeration budget
        path: A prebuilt path-category stage over the target of f

    Raises:
        ValidationError: If f, f_h, q or i fails validation
        CategoryError: If q∘i ≠ id or the prebuilt path stage does not fit
    """
    require_valid(validate_functor(f), f"functor {f.name}")
    started = time.time()
    D = f.target
    if path is None:
        path = build_path_category(D, N, variant, budget=budget)
    elif path.N != N or path.variant != variant or not path.D.same_as(D):
        raise CategoryError("Prebuilt path stage does not match the request")
    prime = "′" if variant == "le" else ""
    pullback = pullback_category(f, path.p0, budget=budget, name=f"ℋ{prime}({f.name})^≤{N}")
    C, H = f.source, pullback.category
    f_h = compose_functors(path.p1, pullback.right, name="f_h")
    q = Functor(pullback.left.source, C, pullback.left.obj_map, pullback.left.mor_map, name="q")

    one = identity_map(1)
    obj_map, mor_map = {}, {}
    for X in C.objects:
        obj_map[X] = pullback_label(X, path.object_id(constant_zigzag(D, f.ob(X), 1)))
    for w in C.morphisms:
        t = constant_zigzag_morphism(D, f.mor(w), 1)
        mor_map[w] = pullback_label(w, path.morphism_id(one, t, t.source))
    i = Functor(C, H, obj_map, mor_map, name="i")

    for functor in (f_h, q, i):
        require_valid(validate_functor(functor), f"functor {functor.name}")
    if not compose_functors(q, i).equals(identity_functor(C)):
        raise CategoryError(f"q∘i ≠ id for {f.name}")
    logger.info("  Replacement %s: %d objects, %d morphisms (elapsed: %.3fs)",
                H.name, H.num_objects, H.num_morphisms, time.time() - started)
    return ReplacementStage(f, path, pullback, f_h, q, i)


def check_replacement_identities(stage: ReplacementStage) -> CheckReport:
    """
    The strict identities of the replacement: q∘i = id, f_h∘i = f and
    p₀∘pr = f∘q.
    """
    report = CheckReport(f"replacement identities for {stage.f.name}")
    f, C = stage.f, stage.f.source
    if not compose_functors(stage.q, stage.i).equals(identity_functor(C)):
        report.fail("q∘i = id")
    if not compose_functors(stage.f_h, stage.i).equals(f):
        report.fail("f_h∘i = f")
    square = compose_functors(stage.path.p0, stage.pullback.right)
    if not square.equals(compose_functors(f, stage.q)):
        report.fail("pullback square")
    return report


def replacement_stage_inclusion(small: ReplacementStage, big: ReplacementStage) -> Functor:
    """ℋ(f)^{≤N} ↪ ℋ(f)^{≤N′}."""
    if small.variant != big.variant or not small.f.equals(big.f) or small.N > big.N:
        raise CategoryError("Replacement stages are not compatible")
    return stage_inclusion(small.category, big.category, name=f"ι_{small.N},{big.N}")


def index_projection(stage: ReplacementStage) -> Functor:
    """π: ℋ(f)^{≤N} → Δ^{≤N}, (X, [n], Y̲) ↦ [n]."""
    pi = stage.path.total.projection
    return compose_functors(pi, stage.pullback.right, name="π")
