# -*- coding: utf-8 -*-
"""
The categories Λ_n𝒟 and the functors Λ(φ)
==========================================

Λ_n𝒟 has the zig-zags of length n as objects and the zig-zag morphisms as
morphisms. For φ: [m] → [n] strictly monotone, Λ(φ): Λ_m𝒟 → Λ_n𝒟 puts
rung k at place φ(k) and fills the other places with identities:

    Ȳ_j′ = Ȳ_{#{i : φ(i) ≤ j}}
    Y_j′ = Y_k (arrows a_k, b_k)  if j = φ(k)
         = Ȳ_k (identities)       otherwise, with k = #{i : φ(i) < j}
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory, Functor, Morphism
from evrard.errors import CategoryError
from evrard.paths.simplex import StrictMonotone
from evrard.paths.zigzag import (
    ZigZag,
    ZigZagMorphism,
    compose_zigzag_morphisms,
    enumerate_zigzag_morphisms,
    enumerate_zigzags,
    identity_zigzag_morphism,
)

logger = logging.getLogger(__name__)


def _placement(phi: StrictMonotone, j: int):
    """(is_rung, k) for place j ≥ 1 of Λ(φ)."""
    k = phi.count_at_most(j)
    if k and phi(k) == j:
        return True, k
    return False, k


def lambda_phi(D: FiniteCategory, phi: StrictMonotone, Y: ZigZag) -> ZigZag:
    """
    Λ(φ)(Y̲) for φ: [m] → [n].

    Raises:
        CategoryError: If Y̲ does not have length m
    """
    if Y.n != phi.m:
        raise CategoryError(f"Λ({phi.label}) expects a zig-zag of length {phi.m}, got {Y.n}")
    bars, mids, forward, backward = [Y.bars[0]], [], [], []
    for j in range(1, phi.n + 1):
        rung, k = _placement(phi, j)
        bars.append(Y.bars[k])
        if rung:
            mids.append(Y.mids[k - 1])
            forward.append(Y.forward[k - 1])
            backward.append(Y.backward[k - 1])
        else:
            identity = D.id(Y.bars[k])
            mids.append(Y.bars[k])
            forward.append(identity)
            backward.append(identity)
    return ZigZag(tuple(bars), tuple(mids), tuple(forward), tuple(backward))


def lambda_phi_morphism(D: FiniteCategory, phi: StrictMonotone, t: ZigZagMorphism) -> ZigZagMorphism:
    """Λ(φ) on a zig-zag morphism: filler places take t̄_k."""
    components = [t.bar(0)]
    for j in range(1, phi.n + 1):
        rung, k = _placement(phi, j)
        components.append(t.mid(k) if rung else t.bar(k))
        components.append(t.bar(k))
    return ZigZagMorphism(lambda_phi(D, phi, t.source), lambda_phi(D, phi, t.target), tuple(components))


@dataclass
class ZigZagCategory:
    """
    A built Λ_n𝒟 (or a full subcategory of it).

    Attributes:
        category: The finite category; object_data / morphism_data decode to
            ZigZag / ZigZagMorphism
        D: The ambient category
        n: Zig-zag length
        p0: Ȳ₀ projection
        p1: Ȳ_n projection
    """
    category: FiniteCategory
    D: FiniteCategory
    n: int
    p0: Functor
    p1: Functor

    def decode(self, obj: str) -> ZigZag:
        return self.category.object_data[obj]

    def decode_morphism(self, m: str) -> ZigZagMorphism:
        return self.category.morphism_data[m]


def build_lambda_n(D: FiniteCategory, n: int, budget: Optional[Budget] = None,
                   zigzags: Optional[Iterable[ZigZag]] = None, name: str = "") -> ZigZagCategory:
    """
    Build Λ_n𝒟 by exhaustive enumeration.

    Args:
        D: Ambient category (assumed valid)
        n: Length ≥ 1
        budget: Charged per zig-zag and per candidate component
        zigzags: Restrict to the full subcategory on these zig-zags

    Raises:
        CategoryError: n < 1
        BudgetExceeded: Enumeration too large
    """
    if n < 1:
        raise CategoryError(f"Zig-zag length must be ≥ 1, got {n}")
    started = time.time()
    if zigzags is None:
        chosen = list(enumerate_zigzags(D, n, budget=budget))
    else:
        chosen = list(dict.fromkeys(zigzags))
        if any(Z.n != n for Z in chosen):
            raise CategoryError(f"Hosted zig-zags must have length {n}")
    object_data: Dict[str, ZigZag] = {Z.label: Z for Z in chosen}
    records: List[Morphism] = []
    morphism_data: Dict[str, ZigZagMorphism] = {}
    for S in chosen:
        for T in chosen:
            for t in enumerate_zigzag_morphisms(D, S, T, budget=budget):
                records.append(Morphism(t.label, S.label, T.label))
                morphism_data[t.label] = t
    identity = {Z.label: identity_zigzag_morphism(D, Z).label for Z in chosen}

    def compose(second: str, first: str) -> str:
        return compose_zigzag_morphisms(D, morphism_data[second], morphism_data[first]).label

    category = FiniteCategory.from_composition(list(object_data), records, identity, compose,
                                               name=name or f"Λ{n}({D.name})",
                                               object_data=object_data, morphism_data=morphism_data,
                                               budget=budget)
    p0 = Functor(category, D, {o: Z.bars[0] for o, Z in object_data.items()},
                 {m: t.bar(0) for m, t in morphism_data.items()}, name="p0")
    p1 = Functor(category, D, {o: Z.bars[-1] for o, Z in object_data.items()},
                 {m: t.bar(n) for m, t in morphism_data.items()}, name="p1")
    logger.info("  Built %s: %d zig-zags, %d morphisms (elapsed: %.3fs)",
                category.name, len(object_data), len(records), time.time() - started)
    return ZigZagCategory(category, D, n, p0, p1)


def lambda_functor(phi: StrictMonotone, source: ZigZagCategory, target: ZigZagCategory) -> Functor:
    """
    Λ(φ): Λ_m𝒟 → Λ_n𝒟 as a Functor between built layers.

    Raises:
        CategoryError: Lengths do not match φ, or an image is missing from the target
    """
    if source.n != phi.m or target.n != phi.n:
        raise CategoryError(f"Λ({phi.label}) does not go from length {source.n} to {target.n}")
    D = source.D
    obj_map = {o: lambda_phi(D, phi, Z).label for o, Z in source.category.object_data.items()}
    mor_map = {m: lambda_phi_morphism(D, phi, t).label for m, t in source.category.morphism_data.items()}
    missing = [x for x in obj_map.values() if not target.category.has_object(x)]
    if missing:
        raise CategoryError(f"Λ({phi.label}) leaves {target.category.name}: {missing[0]}")
    return Functor(source.category, target.category, obj_map, mor_map, name=f"Λ({phi.label})")
