# -*- coding: utf-8 -*-
"""
Evrard homotopies
=================

f, g: 𝒞₁ → 𝒞₂ are Evrard homotopic when some H: 𝒞₁ → Λ_n𝒞₂ has p₀∘H = f
and p₁∘H = g. Witnesses are checked exactly and the canonical ones are
constructed here:

- ``homotopy_from_nat_trans``: h: f ⇒ g gives f(X) —h_X→ g(X) ←id— g(X)
- ``contraction_witness``: p̲₀ ∼ id on Λ_n𝒟
- ``iq_homotopy_witness``: i∘q ∼ id on ℋ′(f)^{≤N}

A witness is hosted in the full subcategory of Λ_n𝒞₂ spanned by its
image objects.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from evrard.budget import Budget
from evrard.categories.category import (
    CheckReport,
    FiniteCategory,
    Functor,
    NatTransformation,
    compose_functors,
    identity_functor,
    require_valid,
    validate_functor,
    validate_nat_trans,
)
from evrard.errors import CategoryError, TruncationError, ValidationError
from evrard.paths.lambda_n import ZigZagCategory, build_lambda_n
from evrard.paths.replacement import ReplacementStage
from evrard.paths.simplex import identity_map, standard_inclusion
from evrard.paths.zigzag import (
    ZigZag,
    ZigZagMorphism,
    constant_zigzag,
    constant_zigzag_morphism,
    identity_zigzag_morphism,
)

logger = logging.getLogger(__name__)


@dataclass
class EvrardHomotopy:
    """
    A witness H: 𝒞₁ → Λ_n𝒞₂ for f ∼ g.

    Attributes:
        f, g: The endpoint functors 𝒞₁ → 𝒞₂
        n: Zig-zag length
        H: The witness functor
        host: The (sub)category of Λ_n𝒞₂ that H lands in
    """
    f: Functor
    g: Functor
    n: int
    H: Functor
    host: ZigZagCategory


def check_evrard_homotopy(w: EvrardHomotopy) -> CheckReport:
    """
    Passes iff H is a functor, p₀∘H = f and p₁∘H = g exactly.

    Failures: "p0 mismatch" / "p1 mismatch" with the first differing id.
    """
    report = CheckReport(f"Evrard homotopy {w.f.name} ∼ {w.g.name}")
    if w.host.n != w.n:
        report.fail("length", w.n, w.host.n)
        return report
    report.absorb(validate_functor(w.H), prefix="H")
    if not report.passed:
        return report
    for which, projection, expected in (("p0", w.host.p0, w.f), ("p1", w.host.p1, w.g)):
        composite = compose_functors(projection, w.H)
        diffs = composite.differences(expected)
        if diffs or not composite.target.same_as(expected.target):
            kind, key, got, want = diffs[0] if diffs else ("target", "", "", "")
            report.fail(f"{which} mismatch", kind, key, detail=f"{got} ≠ {want}")
    return report


@dataclass
class TransformationChain:
    """
    The 2n+1 functors and 2n transformations read off a witness.

    Attributes:
        functors: Ȳ₀, Y₁, Ȳ₁, ..., Y_n, Ȳ_n as functors 𝒞₁ → 𝒞₂
        transformations: γ₁, δ₁, ..., γ_n, δ_n with γ_i: Ȳ_{i-1} ⇒ Y_i and δ_i: Ȳ_i ⇒ Y_i
    """
    functors: List[Functor]
    transformations: List[NatTransformation]


def witness_to_nat_trans_chain(w: EvrardHomotopy) -> TransformationChain:
    """
    Unpack a witness into its chain of functors and transformations.

    Raises:
        ValidationError: If the witness does not check, or a piece fails to validate
    """
    require_valid(check_evrard_homotopy(w), "Evrard homotopy")
    C1, C2 = w.H.source, w.host.D
    zigzags = {X: w.host.decode(w.H.ob(X)) for X in C1.objects}
    ladders = {m: w.host.decode_morphism(w.H.mor(m)) for m in C1.morphisms}
    functors = []
    for p in range(2 * w.n + 1):
        name = f"Ȳ{p // 2}" if p % 2 == 0 else f"Y{(p + 1) // 2}"
        functors.append(Functor(C1, C2, {X: Z.positions()[p] for X, Z in zigzags.items()},
                                {m: t.components[p] for m, t in ladders.items()}, name=name))
    transformations = []
    for i in range(1, w.n + 1):
        mid = functors[2 * i - 1]
        transformations.append(NatTransformation(functors[2 * i - 2], mid,
                                                 {X: Z.forward[i - 1] for X, Z in zigzags.items()}, name=f"γ{i}"))
        transformations.append(NatTransformation(functors[2 * i], mid,
                                                 {X: Z.backward[i - 1] for X, Z in zigzags.items()}, name=f"δ{i}"))
    for functor in functors:
        require_valid(validate_functor(functor), f"component functor {functor.name}")
    for eta in transformations:
        require_valid(validate_nat_trans(eta), f"transformation {eta.name}")
    return TransformationChain(functors, transformations)


def homotopy_from_nat_trans(h: NatTransformation, host: Optional[ZigZagCategory] = None,
                            budget: Optional[Budget] = None) -> EvrardHomotopy:
    """
    The length-1 witness X ↦ (f(X) —h_X→ g(X) ←id— g(X)) for h: f ⇒ g.

    Its squares are exactly the naturality squares of h.

    Raises:
        ValidationError: If h is not a valid transformation
    """
    require_valid(validate_nat_trans(h), f"transformation {h.name}")
    f, g = h.F, h.G
    C1, C2 = f.source, f.target
    zigzags = {}
    for X in C1.objects:
        gX = g.ob(X)
        zigzags[X] = ZigZag((f.ob(X), gX), (gX,), (h.at(X),), (C2.id(gX),))
    if host is None:
        host = build_lambda_n(C2, 1, budget=budget, zigzags=zigzags.values(), name=f"Λ1({C2.name})|{h.name}")
    mor_map = {}
    for m in C1.morphisms:
        gm = g.mor(m)
        t = ZigZagMorphism(zigzags[C1.dom(m)], zigzags[C1.cod(m)], (f.mor(m), gm, gm))
        mor_map[m] = t.label
    H = Functor(C1, host.category, {X: Z.label for X, Z in zigzags.items()}, mor_map, name=f"H[{h.name}]")
    return EvrardHomotopy(f, g, 1, H, host)


def constant_path_functor(layer: ZigZagCategory) -> Functor:
    """p̲₀: Λ_n𝒟 → Λ_n𝒟, Y̲ ↦ constant zig-zag on Ȳ₀."""
    D, n = layer.D, layer.n
    obj_map = {o: constant_zigzag(D, Z.start, n).label for o, Z in layer.category.object_data.items()}
    mor_map = {m: constant_zigzag_morphism(D, t.bar(0), n).label
               for m, t in layer.category.morphism_data.items()}
    return Functor(layer.category, layer.category, obj_map, mor_map, name="p̲0")


# ----------------------------------------------------------------------
# Truncations Y_(k), Y^(k) and the ladders α_k, β_k
# ----------------------------------------------------------------------

def lower_cut(D: FiniteCategory, Z: ZigZag, k: int) -> ZigZag:
    """Y_(k): Y̲ up to Ȳ_k, then identities on Ȳ_k."""
    if k >= Z.n:
        return Z
    end = Z.bars[k]
    identity = D.id(end)
    pad = Z.n - k
    return ZigZag(Z.bars[:k + 1] + (end,) * pad, Z.mids[:k] + (end,) * pad,
                  Z.forward[:k] + (identity,) * pad, Z.backward[:k] + (identity,) * pad)


def upper_cut(D: FiniteCategory, Z: ZigZag, k: int) -> ZigZag:
    """Y^(k) for k ≥ 1: Y̲ up to Y_k, then Y_k with identities (b_k replaced by id)."""
    if k > Z.n:
        return Z
    top = Z.mids[k - 1]
    identity = D.id(top)
    pad = Z.n - k
    return ZigZag(Z.bars[:k] + (top,) * (pad + 1), Z.mids[:k] + (top,) * pad,
                  Z.forward[:k] + (identity,) * pad, Z.backward[:k - 1] + (identity,) * (pad + 1))


def lower_cut_morphism(D: FiniteCategory, t: ZigZagMorphism, k: int) -> ZigZagMorphism:
    if k >= t.n:
        return t
    keep = t.components[:2 * k + 1]
    rest = (t.bar(k),) * (2 * (t.n - k))
    return ZigZagMorphism(lower_cut(D, t.source, k), lower_cut(D, t.target, k), keep + rest)


def upper_cut_morphism(D: FiniteCategory, t: ZigZagMorphism, k: int) -> ZigZagMorphism:
    if k > t.n:
        return t
    keep = t.components[:2 * k]
    rest = (t.mid(k),) * (2 * (t.n - k) + 1)
    return ZigZagMorphism(upper_cut(D, t.source, k), upper_cut(D, t.target, k), keep + rest)


def alpha_ladder(D: FiniteCategory, Z: ZigZag, k: int) -> ZigZagMorphism:
    """α_k: Y_(k-1) → Y^(k); identity before Y_k, a_k from there on."""
    source, target = lower_cut(D, Z, k - 1), upper_cut(D, Z, k)
    if k > Z.n:
        return identity_zigzag_morphism(D, Z)
    a = Z.forward[k - 1]
    parts = [D.id(x) for x in source.positions()[:2 * k - 1]] + [a] * (2 * (Z.n - k) + 2)
    return ZigZagMorphism(source, target, tuple(parts))


def beta_ladder(D: FiniteCategory, Z: ZigZag, k: int) -> ZigZagMorphism:
    """β_k: Y_(k) → Y^(k); identity up to Y_k, b_k from Ȳ_k on."""
    source, target = lower_cut(D, Z, k), upper_cut(D, Z, k)
    if k > Z.n:
        return identity_zigzag_morphism(D, Z)
    b = Z.backward[k - 1]
    parts = [D.id(x) for x in source.positions()[:2 * k]] + [b] * (2 * (Z.n - k) + 1)
    return ZigZagMorphism(source, target, tuple(parts))


def contraction_witness(D: FiniteCategory, n: int, layer: Optional[ZigZagCategory] = None,
                        budget: Optional[Budget] = None) -> EvrardHomotopy:
    """
    Witness for p̲₀ ∼ id on Λ_n𝒟:

        Y_(0) —α₁→ Y^(1) ←β₁— Y_(1) —α₂→ ... —α_n→ Y^(n) ←β_n— Y_(n) = Y̲

    Hosted in Λ_n(Λ_n𝒟) restricted to the image objects.
    """
    layer = layer or build_lambda_n(D, n, budget=budget)
    if layer.n != n or not layer.D.same_as(D):
        raise CategoryError(f"Layer {layer.category.name} is not Λ{n}({D.name})")
    outer = {}
    for o, Z in layer.category.object_data.items():
        bars = tuple(lower_cut(D, Z, k).label for k in range(n + 1))
        mids = tuple(upper_cut(D, Z, k).label for k in range(1, n + 1))
        forward = tuple(alpha_ladder(D, Z, k).label for k in range(1, n + 1))
        backward = tuple(beta_ladder(D, Z, k).label for k in range(1, n + 1))
        outer[o] = ZigZag(bars, mids, forward, backward)
    host = build_lambda_n(layer.category, n, budget=budget, zigzags=outer.values(),
                          name=f"Λ{n}(Λ{n}({D.name}))|H")
    mor_map = {}
    for m, t in layer.category.morphism_data.items():
        parts = [lower_cut_morphism(D, t, 0).label]
        for k in range(1, n + 1):
            parts += [upper_cut_morphism(D, t, k).label, lower_cut_morphism(D, t, k).label]
        source, target = outer[layer.category.dom(m)], outer[layer.category.cod(m)]
        mor_map[m] = ZigZagMorphism(source, target, tuple(parts)).label
    H = Functor(layer.category, host.category, {o: Z.label for o, Z in outer.items()}, mor_map, name="H")
    logger.info("  Contraction witness on %s hosted in %s", layer.category.name, host.category.name)
    return EvrardHomotopy(constant_path_functor(layer), identity_functor(layer.category), n, H, host)


def iq_homotopy_witness(stage: ReplacementStage, budget: Optional[Budget] = None) -> EvrardHomotopy:
    """
    Witness for i∘q ∼ id on ℋ′(f)^{≤N}, of length N+1:

        iq(o) → (X,[n],c_n) = (X,[n],Y_(0)) → (X,[n],Y^(1)) ← (X,[n],Y_(1)) ... ← (X,[n],Y_(N))

    where c_n is the constant zig-zag on f(X) and the first arrow is
    (ι_{1,n}, id). Cut levels past n repeat Y̲ with identity arrows.

    Every object is cut at the same level k. A morphism of the Δ_str
    variant may carry a non-initial φ, and Λ(φ) moves the bars of Z to
    other levels, so the ladder is natural only along the standard
    inclusions of Δ_≤. Where q is not a homology isomorphism no witness
    exists at all: a witness unfolds into natural transformations linking
    i∘q and id, which would make q_* and i_* mutually inverse.

    Raises:
        TruncationError: For the Δ_str variant
    """
    if stage.variant != "le":
        raise TruncationError("i∘q ∼ id: the cut ladder is natural only along the standard inclusions of Δ_≤; "
                              "use the Δ_≤ variant")
    f, H = stage.f, stage.category
    D, C = f.target, f.source
    N = stage.N
    iq = compose_functors(stage.i, stage.q, name="i∘q")
    outer = {}
    for o in H.objects:
        X, n, Z = stage.decode(o)
        idX = C.id(X)
        c1 = constant_zigzag(D, f.ob(X), 1)
        cn = lower_cut(D, Z, 0)
        start = stage.object_id(X, cn)
        first = stage.morphism_id(idX, standard_inclusion(1, n), identity_zigzag_morphism(D, cn), c1)
        bars = [iq.ob(o), start]
        mids = [start]
        forward = [first]
        backward = [H.id(start)]
        for k in range(1, N + 1):
            low_prev, low = lower_cut(D, Z, k - 1), lower_cut(D, Z, k)
            mids.append(stage.object_id(X, upper_cut(D, Z, k)))
            bars.append(stage.object_id(X, low))
            forward.append(stage.morphism_id(idX, identity_map(n), alpha_ladder(D, Z, k), low_prev))
            backward.append(stage.morphism_id(idX, identity_map(n), beta_ladder(D, Z, k), low))
        outer[o] = ZigZag(tuple(bars), tuple(mids), tuple(forward), tuple(backward))
    host = build_lambda_n(H, N + 1, budget=budget, zigzags=outer.values(), name=f"Λ{N + 1}({H.name})|H")
    mor_map = {}
    for m in H.morphisms:
        w, psi, t = stage.decode_morphism(m)
        Z1 = stage.decode(H.dom(m))[2]
        const = lower_cut_morphism(D, t, 0)
        parts = [iq.mor(m)]
        step = stage.morphism_id(w, psi, const, lower_cut(D, Z1, 0))
        parts += [step, step]
        for k in range(1, N + 1):
            parts.append(stage.morphism_id(w, psi, upper_cut_morphism(D, t, k), upper_cut(D, Z1, k)))
            parts.append(stage.morphism_id(w, psi, lower_cut_morphism(D, t, k), lower_cut(D, Z1, k)))
        mor_map[m] = ZigZagMorphism(outer[H.dom(m)], outer[H.cod(m)], tuple(parts)).label
    witness = Functor(H, host.category, {o: Z.label for o, Z in outer.items()}, mor_map, name="H_iq")
    logger.info("  i∘q witness on %s hosted in %s", H.name, host.category.name)
    return EvrardHomotopy(iq, identity_functor(H), N + 1, witness, host)
