# -*- coding: utf-8 -*-
"""
Shift functors and the explicit transformations around them
===========================================================

Everything here maps stage N into stage N+1 by appending one rung:

- ``shift_functor``: T appends Ȳ_n —id→ Ȳ_n ←id— Ȳ_n; θ: inclusion ⇒ T
- ``u_dagger``: u_† on fibers of f_h, appends Y —u→ Y′ ←id— Y′
- ``u_dagger_up``: u^† on fibers of f_h, rewrites the last backward arrow b ↦ b∘u
- ``theta1`` / ``theta2``: inclusion ⇒ u^†u_† and u_†u^† ⇒ T_f
- ``ell_Y``: ℓ_Y on f_h\\Y, appends Ȳ_n —s→ Y ←id— Y; ω: inclusion ⇒ i_Y∘ℓ_Y

Maps that append a non-identity rung need the successor φ⁺ of Δ_str; on
the Δ_≤ variant they raise PreconditionError.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from evrard.categories.category import (
    CheckReport,
    FiniteCategory,
    Functor,
    NatTransformation,
    compose_functors,
)
from evrard.constructions.comma import CommaCategory, comma_label, comma_over, fiber, fiber_inclusion_over
from evrard.constructions.pullback import pullback_label
from evrard.errors import CategoryError, PreconditionError
from evrard.paths.lambda_n import lambda_phi
from evrard.paths.path_category import PathCategoryStage, stage_inclusion
from evrard.paths.replacement import ReplacementStage
from evrard.paths.simplex import StrictMonotone, coface, identity_map, successor
from evrard.paths.zigzag import ZigZag, ZigZagMorphism

logger = logging.getLogger(__name__)

Stage = Union[PathCategoryStage, ReplacementStage]


@dataclass
class Shift:
    """
    T from stage N to N+1 with θ: inclusion ⇒ T.

    Attributes:
        functor: T (or T_f)
        theta: θ with domain functor the stage inclusion
        inclusion: The stage inclusion
    """
    functor: Functor
    theta: NatTransformation
    inclusion: Functor


def _check_pair(small: Stage, big: Stage) -> None:
    if type(small) is not type(big) or small.variant != big.variant or big.N != small.N + 1:
        raise CategoryError(f"Stages {small.N} and {big.N} are not consecutive stages of one construction")
    if isinstance(small, ReplacementStage) and not small.f.equals(big.f):
        raise CategoryError("Stages replace different functors")


def _require_strict(stage: Stage, what: str) -> None:
    if stage.variant != "str":
        raise PreconditionError(f"{what} appends a non-identity rung, which needs the successor maps of Δ_str; "
                                f"the Δ_≤ variant has none")


def _tail(D: FiniteCategory, Z: ZigZag, a: str, b: str) -> ZigZag:
    return Z.extend(a, D.cod(a), b, D.dom(b))


def _identity_tail(D: FiniteCategory, Z: ZigZag) -> ZigZag:
    identity = D.id(Z.end)
    return Z.extend(identity, Z.end, identity, Z.end)


def _extended_morphism(D: FiniteCategory, phi: StrictMonotone, t: ZigZagMorphism, source: ZigZag,
                       source_tail: Tuple[str, str], target_tail: Tuple[str, str],
                       extra: Tuple[str, str], variant: str) -> Tuple[StrictMonotone, ZigZagMorphism, ZigZag]:
    """(φ⁺, t ++ extra, source + tail) for a path morphism (φ, t) out of ``source``."""
    new_source = _tail(D, source, *source_tail)
    new_phi = successor(phi, variant)
    moved = lambda_phi(D, new_phi, new_source)
    new_target = _tail(D, t.target, *target_tail)
    return new_phi, ZigZagMorphism(moved, new_target, t.components + extra), new_source


# ----------------------------------------------------------------------
# T and θ
# ----------------------------------------------------------------------

def _shift_path(small: PathCategoryStage, big: PathCategoryStage) -> Shift:
    D = small.D
    C = small.category
    obj_map, mor_map, theta = {}, {}, {}
    for o in C.objects:
        n, Z = small.decode(o)
        TZ = _identity_tail(D, Z)
        obj_map[o] = big.object_id(TZ)
        theta[o] = big.morphism_id(coface(n), ZigZagMorphism(TZ, TZ, tuple(D.id(x) for x in TZ.positions())), Z)
    for m in C.morphisms:
        phi, t = small.decode_morphism(m)
        _, Z1 = small.decode(C.dom(m))
        end = D.id(Z1.end)
        last = t.bar(phi.n)
        new_phi, new_t, new_source = _extended_morphism(D, phi, t, Z1, (end, end), (D.id(t.target.end),) * 2,
                                                        (last, last), small.variant)
        mor_map[m] = big.morphism_id(new_phi, new_t, new_source)
    T = Functor(C, big.category, obj_map, mor_map, name="T")
    inclusion = stage_inclusion(C, big.category)
    return Shift(T, NatTransformation(inclusion, T, theta, name="θ"), inclusion)


def _shift_replacement(small: ReplacementStage, big: ReplacementStage) -> Shift:
    path_shift = _shift_path(small.path, big.path)
    T, theta_path = path_shift.functor, path_shift.theta
    H = small.category
    obj_map, mor_map, theta = {}, {}, {}
    for o, (X, path_obj) in H.object_data.items():
        obj_map[o] = pullback_label(X, T.ob(path_obj))
        theta[o] = pullback_label(small.f.source.id(X), theta_path.at(path_obj))
    for m, (w, path_mor) in H.morphism_data.items():
        mor_map[m] = pullback_label(w, T.mor(path_mor))
    T_f = Functor(H, big.category, obj_map, mor_map, name="T_f")
    inclusion = stage_inclusion(H, big.category)
    return Shift(T_f, NatTransformation(inclusion, T_f, theta, name="θ"), inclusion)


def shift_functor(small: Stage, big: Stage) -> Shift:
    """
    T: stage N → stage N+1 and θ: inclusion ⇒ T.

    θ at ([n], Y̲) is (θ_n, identity); Λ(θ_n)Y̲ is exactly TY̲.

    Raises:
        CategoryError: Stages are not consecutive stages of one construction
    """
    _check_pair(small, big)
    if isinstance(small, ReplacementStage):
        return _shift_replacement(small, big)
    return _shift_path(small, big)


def shift_preserves_fibers(small: ReplacementStage, big: ReplacementStage, shift: Shift) -> CheckReport:
    """f_h∘T_f = f_h∘inclusion, exactly."""
    report = CheckReport("T_f preserves the fibers of f_h")
    lhs = compose_functors(big.f_h, shift.functor)
    rhs = compose_functors(big.f_h, shift.inclusion)
    for kind, key, got, want in lhs.differences(rhs):
        report.fail("fiber preserved", kind, key, detail=f"{got} ≠ {want}")
    return report


# ----------------------------------------------------------------------
# Fibers and commas across stages
# ----------------------------------------------------------------------

def fiber_stage_inclusion(small: ReplacementStage, big: ReplacementStage, Y: str) -> Functor:
    """f_h⁻¹(Y) at stage N ↪ f_h⁻¹(Y) at stage N′."""
    return stage_inclusion(fiber(small.f_h, Y), fiber(big.f_h, Y))


def comma_stage_inclusion(small_comma: CommaCategory, big_comma: CommaCategory) -> Functor:
    """f_h\\Y at stage N ↪ f_h\\Y at stage N′."""
    return stage_inclusion(small_comma.category, big_comma.category)


def restrict_to_fibers(F: Functor, source_fiber: FiniteCategory, target_fiber: FiniteCategory, name: str = "") -> Functor:
    """Corestrict a functor that maps ``source_fiber`` into ``target_fiber``."""
    restricted = F.restrict(source_fiber)
    return Functor(source_fiber, target_fiber, restricted.obj_map, restricted.mor_map, name=name or F.name)


# ----------------------------------------------------------------------
# u_† and u^†
# ----------------------------------------------------------------------

def u_dagger(small: ReplacementStage, big: ReplacementStage, u: str) -> Functor:
    """
    u_†: f_h⁻¹(Y) at stage N → f_h⁻¹(Y′) at stage N+1 for u: Y → Y′.

    Objects get the rung Y —u→ Y′ ←id— Y′; morphisms get (φ⁺, t, id, id).

    Raises:
        CategoryError: u is not a morphism of 𝒟, or stages are not consecutive
        PreconditionError: Δ_≤ variant
    """
    _check_pair(small, big)
    _require_strict(small, "u_†")
    D = small.f.target
    D.require_morphism(u)
    Y, Yp = D.dom(u), D.cod(u)
    source, target = fiber(small.f_h, Y), fiber(big.f_h, Yp)
    identity = D.id(Yp)
    obj_map = {}
    for o in source.objects:
        X, _, Z = small.decode(o)
        obj_map[o] = big.object_id(X, _tail(D, Z, u, identity))
    mor_map = {}
    for m in source.morphisms:
        w, phi, t = small.decode_morphism(m)
        Z1 = small.decode(source.dom(m))[2]
        new_phi, new_t, new_source = _extended_morphism(D, phi, t, Z1, (u, identity), (u, identity),
                                                        (identity, identity), small.variant)
        mor_map[m] = big.morphism_id(w, new_phi, new_t, new_source)
    return Functor(source, target, obj_map, mor_map, name=f"{u}_†")


def _pull_back_end(D: FiniteCategory, Z: ZigZag, u: str) -> ZigZag:
    """Replace the last bar Y′ by Y and b_n by b_n∘u."""
    b = D.compose(Z.backward[-1], u)
    return ZigZag(Z.bars[:-1] + (D.dom(u),), Z.mids, Z.forward, Z.backward[:-1] + (b,))


def _pull_back_end_morphism(D: FiniteCategory, phi: StrictMonotone, t: ZigZagMorphism, Z1: ZigZag,
                            u: str) -> Tuple[ZigZagMorphism, ZigZag]:
    """
    The morphism Λ(φ)(Z₁ with end pulled back) → (t.target with end pulled back).

    Components sitting on copies of Z₁'s last bar are precomposed with u;
    the final bar component becomes id_Y.
    """
    new_source = _pull_back_end(D, Z1, u)
    moved = lambda_phi(D, phi, new_source)
    new_target = _pull_back_end(D, t.target, u)
    m = phi.m
    components = list(t.components)
    for p in range(len(components)):
        if p % 2 == 0:
            on_end = phi.count_at_most(p // 2) == m
        else:
            on_end = (p + 1) // 2 > phi(m)
        if on_end:
            components[p] = D.compose(components[p], u)
    components[-1] = D.id(D.dom(u))
    return ZigZagMorphism(moved, new_target, tuple(components)), new_source


def u_dagger_up(stage: ReplacementStage, u: str) -> Functor:
    """
    u^†: f_h⁻¹(Y′) → f_h⁻¹(Y) within one stage, for u: Y → Y′.

    Length preserving: the last backward arrow b_n: Y′ → Y_n becomes b_n∘u.

    Raises:
        CategoryError: u is not a morphism of 𝒟
    """
    D = stage.f.target
    D.require_morphism(u)
    Y, Yp = D.dom(u), D.cod(u)
    source, target = fiber(stage.f_h, Yp), fiber(stage.f_h, Y)
    obj_map = {}
    for o in source.objects:
        X, _, Z = stage.decode(o)
        obj_map[o] = stage.object_id(X, _pull_back_end(D, Z, u))
    mor_map = {}
    for m in source.morphisms:
        w, phi, t = stage.decode_morphism(m)
        Z1 = stage.decode(source.dom(m))[2]
        new_t, new_source = _pull_back_end_morphism(D, phi, t, Z1, u)
        mor_map[m] = stage.morphism_id(w, phi, new_t, new_source)
    return Functor(source, target, obj_map, mor_map, name=f"{u}^†")


def theta1(small: ReplacementStage, big: ReplacementStage, u: str) -> NatTransformation:
    """
    θ₁: inclusion ⇒ u^†∘u_† on f_h⁻¹(Y).

    Component at (X, [n], Y̲): (θ_n, identity ladder with u at mid n+1).

    Raises:
        PreconditionError: Δ_≤ variant
    """
    lower = u_dagger(small, big, u)
    upper = u_dagger_up(big, u)
    G = compose_functors(upper, lower, name=f"{u}^†∘{u}_†")
    D = small.f.target
    source = lower.source
    F = stage_inclusion(source, upper.target)
    components = {}
    for o in source.objects:
        X, n, Z = small.decode(o)
        start = _identity_tail(D, Z)
        end = big.decode(G.ob(o))[2]
        parts = [D.id(x) for x in start.positions()]
        parts[2 * n + 1] = u
        components[o] = big.morphism_id(small.f.source.id(X), coface(n), ZigZagMorphism(start, end, tuple(parts)), Z)
    return NatTransformation(F, G, components, name="θ₁")


def theta2(small: ReplacementStage, big: ReplacementStage, u: str) -> NatTransformation:
    """
    θ₂: u_†∘u^† ⇒ T_f on f_h⁻¹(Y′).

    Component at (X, [n], Y̲): (id, identity ladder with u at bar n).

    Raises:
        PreconditionError: Δ_≤ variant
    """
    upper = u_dagger_up(small, u)
    lower = u_dagger(small, big, u)
    F = compose_functors(lower, upper, name=f"{u}_†∘{u}^†")
    shift = shift_functor(small, big)
    G = restrict_to_fibers(shift.functor, upper.source, lower.target, name="T_f")
    D = small.f.target
    components = {}
    for o in upper.source.objects:
        X, n, Z = small.decode(o)
        start = big.decode(F.ob(o))[2]
        end = _identity_tail(D, Z)
        parts = [D.id(x) for x in end.positions()]
        parts[2 * n] = u
        components[o] = big.morphism_id(small.f.source.id(X), identity_map(n + 1),
                                        ZigZagMorphism(start, end, tuple(parts)), start)
    return NatTransformation(F, G, components, name="θ₂")


# ----------------------------------------------------------------------
# ℓ_Y and ω
# ----------------------------------------------------------------------

@dataclass
class EllResult:
    """
    ℓ_Y with ω and the check ℓ_Y∘i_Y = T_f.

    Attributes:
        ell: f_h\\Y (stage N) → f_h⁻¹(Y) (stage N+1)
        omega: inclusion ⇒ i_Y∘ℓ_Y on f_h\\Y
        comma_small, comma_big: f_h\\Y at both stages
        triangle: Report for ℓ_Y∘i_Y = T_f
    """
    ell: Functor
    omega: NatTransformation
    comma_small: CommaCategory
    comma_big: CommaCategory
    triangle: CheckReport


def ell_Y(small: ReplacementStage, big: ReplacementStage, Y: str,
          comma_small: Optional[CommaCategory] = None, comma_big: Optional[CommaCategory] = None) -> EllResult:
    """
    ℓ_Y(X, [n], Y̲, s) = (X, [n+1], Y̲ —s→ Y ←id— Y) and ω.

    Raises:
        CategoryError: Y is not an object of 𝒟
        PreconditionError: Δ_≤ variant
    """
    _check_pair(small, big)
    _require_strict(small, "ℓ_Y")
    D = small.f.target
    D.require_object(Y)
    comma_small = comma_small or comma_over(small.f_h, Y)
    comma_big = comma_big or comma_over(big.f_h, Y)
    fib_small, fib_big = fiber(small.f_h, Y), fiber(big.f_h, Y)
    identity = D.id(Y)
    K = comma_small.category
    obj_map, omega = {}, {}
    for c in K.objects:
        o, s = comma_small.decode(c)
        X, n, Z = small.decode(o)
        extended = _tail(D, Z, s, identity)
        obj_map[c] = big.object_id(X, extended)
        start = _identity_tail(D, Z)
        parts = [D.id(x) for x in start.positions()]
        parts[2 * n + 1] = s
        parts[2 * n + 2] = s
        m = big.morphism_id(small.f.source.id(X), coface(n), ZigZagMorphism(start, extended, tuple(parts)), Z)
        omega[c] = comma_label(m, identity)
    mor_map = {}
    for c in K.morphisms:
        m, s2 = K.morphism_data[c]
        s1 = comma_small.decode(K.dom(c))[1]
        w, phi, t = small.decode_morphism(m)
        Z1 = small.decode(small.category.dom(m))[2]
        new_phi, new_t, new_source = _extended_morphism(D, phi, t, Z1, (s1, identity), (s2, identity),
                                                        (identity, identity), small.variant)
        mor_map[c] = big.morphism_id(w, new_phi, new_t, new_source)
    ell = Functor(K, fib_big, obj_map, mor_map, name=f"ℓ_{Y}")

    j_big = fiber_inclusion_over(big.f_h, Y, fib=fib_big, comma=comma_big)
    G = compose_functors(j_big, ell, name=f"i_{Y}∘ℓ_{Y}")
    F = comma_stage_inclusion(comma_small, comma_big)
    omega_t = NatTransformation(F, G, omega, name="ω")

    j_small = fiber_inclusion_over(small.f_h, Y, fib=fib_small, comma=comma_small)
    composite = compose_functors(ell, j_small)
    shift = shift_functor(small, big)
    T_fiber = restrict_to_fibers(shift.functor, fib_small, fib_big, name="T_f")
    triangle = CheckReport(f"ℓ_{Y}∘i_{Y} = T_f")
    for kind, key, got, want in composite.differences(T_fiber):
        triangle.fail("ℓ∘i = T", kind, key, detail=f"{got} ≠ {want}")
    logger.info("  ℓ_%s on %d comma objects; ℓ∘i = T: %s", Y, K.num_objects, triangle.passed)
    return EllResult(ell, omega_t, comma_small, comma_big, triangle)
