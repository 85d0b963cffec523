# -*- coding: utf-8 -*-
"""
Adjoint search through universal arrows
=======================================

F: 𝒜 → ℬ has a right adjoint iff every comma F\\d has a terminal object
⟨R(d)|ε_d⟩; dually a left adjoint iff every d\\F has an initial object
⟨L(d)|η_d⟩. The adjoint, unit and counit are read off the universal
arrows and the triangle identities are validated.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import (
    CheckReport,
    Functor,
    NatTransformation,
    compose_functors,
    identity_functor,
    validate_functor,
    validate_nat_trans,
)
from evrard.categories.universal import find_initial, find_terminal
from evrard.checks.base import BaseCheck
from evrard.constructions.comma import CommaCategory, comma_label, comma_over, comma_under
from evrard.errors import CategoryError

logger = logging.getLogger(__name__)


@dataclass
class AdjointSearchResult:
    """
    Outcome of ``find_right_adjoint`` / ``find_left_adjoint``.

    Attributes:
        functor: The functor F searched
        side: "right" or "left"
        adjoint: R (or L) when found
        universal: d ↦ (R(d), ε_d) or (L(d), η_d)
        witness: An object d whose comma has no terminal (initial) object
        unit: η: id ⇒ RF (right) or id ⇒ FL (left)
        counit: ε: FR ⇒ id (right) or LF ⇒ id (left)
        triangles: Validation of the adjoint, unit, counit and triangle identities
    """
    functor: Functor
    side: str
    adjoint: Optional[Functor] = None
    universal: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    witness: Optional[str] = None
    unit: Optional[NatTransformation] = None
    counit: Optional[NatTransformation] = None
    triangles: Optional[CheckReport] = None

    @property
    def found(self) -> bool:
        return self.adjoint is not None

    def unit_counit(self) -> Tuple[NatTransformation, NatTransformation]:
        """
        Raises:
            CategoryError: No adjoint was found
        """
        if not self.found:
            raise CategoryError(f"{self.functor.name} has no {self.side} adjoint (witness {self.witness})")
        return self.unit, self.counit

    def to_dict(self) -> Dict:
        result = {'functor': self.functor.name, 'side': self.side, 'found': self.found}
        if self.found:
            result['objects'] = dict(sorted(self.adjoint.obj_map.items()))
            result['morphisms'] = dict(sorted(self.adjoint.mor_map.items()))
            result['universal_arrows'] = {d: list(pair) for d, pair in sorted(self.universal.items())}
            result['triangle_identities'] = self.triangles.passed
        else:
            result['witness'] = self.witness
        return result


def _unique(comma: CommaCategory, source: str, target: str) -> str:
    """The underlying morphism of the unique comma morphism source → target."""
    arrows = comma.category.hom(source, target)
    if len(arrows) != 1:
        raise CategoryError(f"{len(arrows)} comma morphisms {source} → {target}; expected exactly one")
    return comma.category.morphism_data[arrows[0]][0]


def find_right_adjoint(F: Functor, budget: Optional[Budget] = None) -> AdjointSearchResult:
    """
    Search for R ⊣-right of F through terminal objects of F\\d.

    Returns:
        AdjointSearchResult; when not found, ``witness`` is the first d
        (declaration order) whose comma has no terminal object
    """
    A, B = F.source, F.target
    result = AdjointSearchResult(F, "right")
    commas: Dict[str, CommaCategory] = {}
    for d in B.objects:
        comma = comma_over(F, d, budget=budget)
        terminal = find_terminal(comma.category)
        if not terminal.found:
            result.witness = d
            logger.debug("  %s has no right adjoint: %s has no terminal object", F.name, comma.category.name)
            return result
        commas[d] = comma
        result.universal[d] = comma.decode(terminal.obj)
    obj_map = {d: result.universal[d][0] for d in B.objects}
    mor_map = {}
    for g in B.morphisms:
        d, dp = B.dom(g), B.cod(g)
        Rd, eps_d = result.universal[d]
        terminal = comma_label(*result.universal[dp])
        mor_map[g] = _unique(commas[dp], comma_label(Rd, B.compose(g, eps_d)), terminal)
    R = Functor(B, A, obj_map, mor_map, name=f"R[{F.name}]")
    FR = compose_functors(F, R)
    RF = compose_functors(R, F)
    counit = NatTransformation(FR, identity_functor(B), {d: result.universal[d][1] for d in B.objects}, name="ε")
    unit_components = {}
    for c in A.objects:
        Fc = F.ob(c)
        unit_components[c] = _unique(commas[Fc], comma_label(c, B.id(Fc)), comma_label(*result.universal[Fc]))
    unit = NatTransformation(identity_functor(A), RF, unit_components, name="η")
    result.adjoint, result.unit, result.counit = R, unit, counit
    result.triangles = _triangle_report(F, R, unit, counit, "right")
    return result


def find_left_adjoint(F: Functor, budget: Optional[Budget] = None) -> AdjointSearchResult:
    """Dual of ``find_right_adjoint``: initial objects of d\\F."""
    A, B = F.source, F.target
    result = AdjointSearchResult(F, "left")
    commas: Dict[str, CommaCategory] = {}
    for d in B.objects:
        comma = comma_under(F, d, budget=budget)
        initial = find_initial(comma.category)
        if not initial.found:
            result.witness = d
            logger.debug("  %s has no left adjoint: %s has no initial object", F.name, comma.category.name)
            return result
        commas[d] = comma
        result.universal[d] = comma.decode(initial.obj)
    obj_map = {d: result.universal[d][0] for d in B.objects}
    mor_map = {}
    for g in B.morphisms:
        d, dp = B.dom(g), B.cod(g)
        Ldp, eta_dp = result.universal[dp]
        initial = comma_label(*result.universal[d])
        mor_map[g] = _unique(commas[d], initial, comma_label(Ldp, B.compose(eta_dp, g)))
    L = Functor(B, A, obj_map, mor_map, name=f"L[{F.name}]")
    FL = compose_functors(F, L)
    LF = compose_functors(L, F)
    unit = NatTransformation(identity_functor(B), FL, {d: result.universal[d][1] for d in B.objects}, name="η")
    counit_components = {}
    for c in A.objects:
        Fc = F.ob(c)
        counit_components[c] = _unique(commas[Fc], comma_label(*result.universal[Fc]), comma_label(c, B.id(Fc)))
    counit = NatTransformation(LF, identity_functor(A), counit_components, name="ε")
    result.adjoint, result.unit, result.counit = L, unit, counit
    result.triangles = _triangle_report(F, L, unit, counit, "left")
    return result


def _triangle_report(F: Functor, G: Functor, unit: NatTransformation, counit: NatTransformation,
                     side: str) -> CheckReport:
    """
    Validate G, η, ε and both triangle identities.

    Right (F ⊣ G): ε_{Fc}∘F(η_c) = id and G(ε_d)∘η_{Gd} = id.
    Left (G ⊣ F): F(ε_c)∘η_{Fc} = id and ε_{Gd}∘G(η_d) = id.
    """
    A, B = F.source, F.target
    report = CheckReport(f"{side} adjoint of {F.name}")
    report.absorb(validate_functor(G), prefix="adjoint")
    report.absorb(validate_nat_trans(unit), prefix="unit")
    report.absorb(validate_nat_trans(counit), prefix="counit")
    if not report.passed:
        return report
    for c in A.objects:
        Fc = F.ob(c)
        if side == "right":
            lhs = B.compose(counit.at(Fc), F.mor(unit.at(c)))
        else:
            lhs = B.compose(F.mor(counit.at(c)), unit.at(Fc))
        if lhs != B.id(Fc):
            report.fail("triangle identity on F", c)
    for d in B.objects:
        Gd = G.ob(d)
        if side == "right":
            lhs = A.compose(G.mor(counit.at(d)), unit.at(Gd))
        else:
            lhs = A.compose(counit.at(Gd), G.mor(unit.at(d)))
        if lhs != A.id(Gd):
            report.fail("triangle identity on adjoint", d)
    return report


class AdjointCheck(BaseCheck):
    """
    Adjoint search on either side.

    Complexity: one comma category and one terminal (initial) search per
    object of the target.
    """

    name = "Adjoint search"
    description = "Find a left or right adjoint through universal arrows"
    claims = [
        "A right adjoint exists iff every F\\d has a terminal object",
        "A left adjoint exists iff every d\\F has an initial object",
    ]

    def __init__(self, functor: Functor, side: str = "right", budget: Optional[Budget] = None):
        if side not in ("left", "right"):
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        self.side = side
        super().__init__(functor, max_dim=0, budget=budget)

    def run(self) -> AdjointSearchResult:
        search = find_right_adjoint if self.side == "right" else find_left_adjoint
        return search(self.functor, budget=self.budget)
