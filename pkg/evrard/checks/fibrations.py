# -*- coding: utf-8 -*-
"""
Pre-fibrations, pre-cofibrations and base change
================================================

f is pre-fibred when every i_Y: f⁻¹(Y) → Y\\f has a right adjoint R_Y,
and pre-cofibred when every j_Y: f⁻¹(Y) → f\\Y has a left adjoint L_Y.
Base change along v: Y → Y′ is R_Y∘[v*]∘i_{Y′}; cobase change is
L_{Y′}∘[v_*]∘j_Y.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from evrard.budget import Budget
from evrard.categories.category import (
    FiniteCategory,
    Functor,
    compose_functors,
    require_valid,
    validate_functor,
)
from evrard.checks.adjoints import AdjointSearchResult, find_left_adjoint, find_right_adjoint
from evrard.checks.base import BaseCheck
from evrard.constructions.comma import (
    CommaCategory,
    comma_over,
    comma_under,
    fiber,
    fiber_inclusion_over,
    fiber_inclusion_under,
    induced_over_map,
    induced_under_map,
)
from evrard.errors import PreconditionError

logger = logging.getLogger(__name__)

NO_COUNTEREXAMPLE = "no counterexample at this scale"


@dataclass
class FiberData:
    """The fiber over Y with its comma category and inclusion."""
    fiber: FiniteCategory
    comma: CommaCategory
    inclusion: Functor
    search: AdjointSearchResult


@dataclass
class FibrationReport:
    """
    Per-object adjoint searches for ``is_prefibred`` / ``is_precofibred``.

    Attributes:
        functor: The functor f tested
        side: "prefibred" or "precofibred"
        fibers: Y ↦ fiber data and adjoint search, in target declaration order
    """
    functor: Functor
    side: str
    fibers: Dict[str, FiberData] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(data.search.found for data in self.fibers.values())

    @property
    def witness(self) -> Optional[Tuple[str, str]]:
        """First (Y, comma object) with no universal arrow, or None."""
        for Y, data in self.fibers.items():
            if not data.search.found:
                return Y, data.search.witness
        return None

    def adjoint_at(self, Y: str) -> Functor:
        """
        Raises:
            PreconditionError: The inclusion at Y has no adjoint
        """
        data = self.fibers.get(Y)
        if data is None or not data.search.found:
            kind = "right" if self.side == "prefibred" else "left"
            raise PreconditionError(f"{self.functor.name} is not {self.side} at {Y}: "
                                    f"the fiber inclusion has no {kind} adjoint")
        return data.search.adjoint

    def to_dict(self) -> Dict:
        return {
            'functor': self.functor.name,
            'side': self.side,
            'passed': self.passed,
            'witness': list(self.witness) if self.witness else None,
            'objects': {Y: data.search.found for Y, data in self.fibers.items()},
        }


def _fiber_data(f: Functor, Y: str, side: str, budget: Optional[Budget]) -> FiberData:
    fib = fiber(f, Y)
    if side == "prefibred":
        comma = comma_under(f, Y, budget=budget)
        inclusion = fiber_inclusion_under(f, Y, fib=fib, comma=comma)
        search = find_right_adjoint(inclusion, budget=budget)
    else:
        comma = comma_over(f, Y, budget=budget)
        inclusion = fiber_inclusion_over(f, Y, fib=fib, comma=comma)
        search = find_left_adjoint(inclusion, budget=budget)
    return FiberData(fib, comma, inclusion, search)


def _fibration_report(f: Functor, side: str, budget: Optional[Budget], stop_at_first: bool) -> FibrationReport:
    require_valid(validate_functor(f), f"functor {f.name}")
    report = FibrationReport(f, side)
    for Y in f.target.objects:
        data = _fiber_data(f, Y, side, budget)
        report.fibers[Y] = data
        if not data.search.found:
            logger.info("  %s is not %s: witness %s over %s", f.name, side, data.search.witness, Y)
            if stop_at_first:
                break
    return report


def is_prefibred(f: Functor, budget: Optional[Budget] = None, stop_at_first: bool = False) -> FibrationReport:
    """Search a right adjoint of i_Y for every object Y of the target."""
    return _fibration_report(f, "prefibred", budget, stop_at_first)


def is_precofibred(f: Functor, budget: Optional[Budget] = None, stop_at_first: bool = False) -> FibrationReport:
    """Search a left adjoint of j_Y for every object Y of the target."""
    return _fibration_report(f, "precofibred", budget, stop_at_first)


def _fiber_at(f: Functor, Y: str, side: str, report: Optional[FibrationReport],
              budget: Optional[Budget]) -> FiberData:
    if report is not None and Y in report.fibers:
        return report.fibers[Y]
    return _fiber_data(f, Y, side, budget)


def base_change(f: Functor, v: str, report: Optional[FibrationReport] = None,
                budget: Optional[Budget] = None) -> Functor:
    """
    v*: f⁻¹(Y′) → f⁻¹(Y) for v: Y → Y′, the composite R_Y∘[v*]∘i_{Y′}.

    Args:
        f: The functor
        v: Morphism of the target of f
        report: An ``is_prefibred`` report to reuse (optional)

    Raises:
        PreconditionError: i_Y has no right adjoint
    """
    D = f.target
    D.require_morphism(v)
    Y, Yp = D.dom(v), D.cod(v)
    at_Y = _fiber_at(f, Y, "prefibred", report, budget)
    if not at_Y.search.found:
        raise PreconditionError(f"{f.name} is not prefibred at {Y}: i_{Y} has no right adjoint "
                                f"(witness {at_Y.search.witness})")
    at_Yp = at_Y if Yp == Y else _fiber_at(f, Yp, "prefibred", report, budget)
    pull = induced_under_map(f, v, under_source=at_Yp.comma, under_target=at_Y.comma)
    composite = compose_functors(at_Y.search.adjoint, compose_functors(pull, at_Yp.inclusion))
    composite.name = f"{v}*"
    require_valid(validate_functor(composite), f"base change {composite.name}")
    return composite


def cobase_change(f: Functor, v: str, report: Optional[FibrationReport] = None,
                  budget: Optional[Budget] = None) -> Functor:
    """
    v_*: f⁻¹(Y) → f⁻¹(Y′) for v: Y → Y′, the composite L_{Y′}∘[v_*]∘j_Y.

    Raises:
        PreconditionError: j_{Y′} has no left adjoint
    """
    D = f.target
    D.require_morphism(v)
    Y, Yp = D.dom(v), D.cod(v)
    at_Yp = _fiber_at(f, Yp, "precofibred", report, budget)
    if not at_Yp.search.found:
        raise PreconditionError(f"{f.name} is not precofibred at {Yp}: j_{Yp} has no left adjoint "
                                f"(witness {at_Yp.search.witness})")
    at_Y = at_Yp if Y == Yp else _fiber_at(f, Y, "precofibred", report, budget)
    push = induced_over_map(f, v, over_source=at_Y.comma, over_target=at_Yp.comma)
    composite = compose_functors(at_Yp.search.adjoint, compose_functors(push, at_Y.inclusion))
    composite.name = f"{v}_*"
    require_valid(validate_functor(composite), f"cobase change {composite.name}")
    return composite


def remark_probe(f: Functor, budget: Optional[Budget] = None) -> Dict[str, str]:
    """
    Search both sides for a counterexample to pre-(co)fibredness.

    Returns:
        {"prefibred": verdict, "precofibred": verdict}; a verdict is
        "confirmed: not <side> (witness Y=…, d=…)" or "no counterexample at this scale"
    """
    verdicts = {}
    for side, search in (("prefibred", is_prefibred), ("precofibred", is_precofibred)):
        report = search(f, budget=budget, stop_at_first=True)
        if report.passed:
            verdicts[side] = NO_COUNTEREXAMPLE
        else:
            Y, d = report.witness
            verdicts[side] = f"confirmed: not {side} (witness Y={Y}, d={d})"
        logger.info("  %s %s: %s", f.name, side, verdicts[side])
    return verdicts


class FibrationCheck(BaseCheck):
    """Pre-fibredness and pre-cofibredness, reported per side."""

    name = "Pre-(co)fibration probe"
    description = "Search the adjoints of the fiber inclusions i_Y and j_Y"
    claims = [
        "f is pre-fibred iff every i_Y has a right adjoint",
        "f is pre-cofibred iff every j_Y has a left adjoint",
    ]

    def run(self) -> Dict[str, FibrationReport]:
        return {
            'prefibred': is_prefibred(self.functor, budget=self.budget),
            'precofibred': is_precofibred(self.functor, budget=self.budget),
        }
