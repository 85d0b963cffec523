# -*- coding: utf-8 -*-
"""
End-to-end verification of the fibrant replacement
==================================================

``verify_evrard_replacement(f, N, k, variant)`` builds ℋ(f)^{≤N} and runs
four sections:

- **strict**: q∘i = id, f_h∘i = f, the pullback square
- **witness**: naturality of the explicit homotopies (i∘q ∼ id, the
  contraction of Λ_n𝒟, θ, θ₁, θ₂, ω) and ℓ_Y∘i_Y = T_f
- **homology**: Theorem B hypothesis for f_h, q and every p₁ on Λ_n𝒟 as
  homology isomorphisms through degree k
- **stability**: the homology section again at stage N+1

When the homology answers differ between N and N+1 the verdict is
"unstable at N" instead of pass/fail.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from evrard.budget import Budget, as_budget
from evrard.categories.category import CheckReport, Functor, require_valid, validate_functor, validate_nat_trans
from evrard.checks.base import BaseCheck
from evrard.checks.theorem_b import TheoremBReport, check_theorem_b_hypothesis, require_loop_free
from evrard.homology.chains import CERTIFICATE, ComplexCache, is_quasi_iso
from evrard.paths.homotopy import check_evrard_homotopy, contraction_witness, iq_homotopy_witness
from evrard.paths.replacement import ReplacementStage, build_replacement, check_replacement_identities
from evrard.paths.shift import ell_Y, shift_functor, shift_preserves_fibers, theta1, theta2

logger = logging.getLogger(__name__)

SECTIONS = ('strict', 'witness', 'homology', 'stability')


@dataclass
class CheckItem:
    """One line of a verification section."""
    section: str
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False
    answer: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'section': self.section, 'name': self.name, 'passed': self.passed,
                'skipped': self.skipped, 'detail': self.detail}


@dataclass
class HomologyAnswers:
    """The homological verdicts at one stage, compared across stages."""
    theorem_b: bool
    q: bool
    layers: Dict[int, bool]

    def differs_from(self, other: "HomologyAnswers") -> List[str]:
        changed = []
        if self.theorem_b != other.theorem_b:
            changed.append("theorem B for f_h")
        if self.q != other.q:
            changed.append("q")
        for n in sorted(set(self.layers) & set(other.layers)):
            if self.layers[n] != other.layers[n]:
                changed.append(f"p₁ on Λ{n}")
        return changed


@dataclass
class ReplacementReport:
    """
    Composite report of ``verify_evrard_replacement``.

    Attributes:
        functor: Name of f
        stage: N
        degree_bound: k
        variant: "str" or "le"
        items: Section lines in execution order
        theorem_b: The Theorem B report for f_h at stage N
        counts: Sizes of the categories built
        unstable: Homology answers that changed between N and N+1
    """
    functor: str
    stage: int
    degree_bound: int
    variant: str
    items: List[CheckItem] = field(default_factory=list)
    theorem_b: Optional[TheoremBReport] = None
    counts: Dict[str, List[int]] = field(default_factory=dict)
    unstable: List[str] = field(default_factory=list)

    def add(self, section: str, name: str, report: CheckReport, answer: str = "") -> None:
        self.items.append(CheckItem(section, name, report.passed, report.summary(limit=3), answer=answer))

    def skip(self, section: str, name: str, reason: str) -> None:
        self.items.append(CheckItem(section, name, True, reason, skipped=True))

    def section_passed(self, section: str) -> bool:
        return all(item.passed for item in self.items if item.section == section)

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @property
    def verdict(self) -> str:
        # a homology failure whose answer flips at stage N+1 is instability, not failure
        for item in self.items:
            if not item.passed and not (item.answer and item.answer in self.unstable):
                return "fail"
        if self.unstable:
            return f"unstable at {self.stage}"
        return "pass"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'check': "evrard-replacement",
            'target': self.functor,
            'stage': self.stage,
            'degree_bound': self.degree_bound,
            'variant': self.variant,
            'verdict': self.verdict,
            'certificate': CERTIFICATE.format(k=self.degree_bound),
            'counts': self.counts,
            'sections': {s: self.section_passed(s) for s in SECTIONS},
            'unstable': self.unstable,
            'witnesses': [item.to_dict() for item in self.items if not item.passed],
            'items': [item.to_dict() for item in self.items],
            'theorem_b': self.theorem_b.to_dict() if self.theorem_b else None,
        }

    def to_frame(self) -> pd.DataFrame:
        rows = [{
            'Section': item.section,
            'Check': item.name,
            'Result': "skipped" if item.skipped else ("pass" if item.passed else "FAIL"),
            'Detail': item.detail.splitlines()[0] if item.detail else "",
        } for item in self.items]
        return pd.DataFrame(rows, columns=['Section', 'Check', 'Result', 'Detail'])


def _strict_section(report: ReplacementReport, stage: ReplacementStage) -> None:
    report.add('strict', "q∘i = id, f_h∘i = f, pullback square", check_replacement_identities(stage))


def _witness_section(report: ReplacementReport, stage: ReplacementStage, big: ReplacementStage,
                     budget: Budget) -> None:
    D = stage.f.target
    if stage.variant == "le":
        report.add('witness', "i∘q ∼ id", check_evrard_homotopy(iq_homotopy_witness(stage, budget=budget)))
    else:
        report.skip('witness', "i∘q ∼ id", "the cut ladder needs the standard inclusions of Δ_≤")
    for n, layer in sorted(stage.path.layers.items()):
        witness = contraction_witness(D, n, layer=layer, budget=budget)
        report.add('witness', f"p̲₀ ∼ id on Λ{n}", check_evrard_homotopy(witness))

    shift = shift_functor(stage, big)
    report.add('witness', "θ: inclusion ⇒ T_f", validate_nat_trans(shift.theta))
    report.add('witness', "f_h∘T_f = f_h", shift_preserves_fibers(stage, big, shift))
    if stage.variant != "str":
        reason = "needs the successor maps of Δ_str"
        for name in ("θ₁", "θ₂", "ω", "ℓ_Y∘i_Y = T_f"):
            report.skip('witness', name, reason)
        return
    for u in sorted(m for m in D.morphisms if not D.is_identity(m)):
        report.add('witness', f"θ₁ for {u}", validate_nat_trans(theta1(stage, big, u)))
        report.add('witness', f"θ₂ for {u}", validate_nat_trans(theta2(stage, big, u)))
    for Y in D.objects:
        ell = ell_Y(stage, big, Y)
        report.add('witness', f"ω over {Y}", validate_nat_trans(ell.omega))
        report.add('witness', f"ℓ_{Y}∘i_{Y} = T_f", ell.triangle)


def _note_iq_obstruction(report: ReplacementReport) -> None:
    # natural transformations induce equal maps on homology, and q∘i = id
    for item in report.items:
        if item.name == "i∘q ∼ id" and item.skipped:
            item.detail = "no witness exists: q is not a homology isomorphism at this stage"


def _homology_section(report: Optional[ReplacementReport], stage: ReplacementStage, k: int,
                      budget: Budget, section: str = 'homology') -> HomologyAnswers:
    cache = ComplexCache(budget)
    theorem_b = check_theorem_b_hypothesis(stage.f_h, k, allow_loops=True, budget=budget, cache=cache)
    theorem_b.metadata = {'stage': stage.N, 'variant': stage.variant,
                          'objects': stage.category.num_objects, 'morphisms': stage.category.num_morphisms}
    q = is_quasi_iso(stage.q, k, cache=cache)
    layers = {}
    layer_reports = {}
    for n, layer in sorted(stage.path.layers.items()):
        layer_reports[n] = is_quasi_iso(layer.p1, k, cache=cache)
        layers[n] = layer_reports[n].passed
    if report is not None:
        report.theorem_b = theorem_b
        summary = CheckReport(f"Theorem B hypothesis for f_h at stage {stage.N}")
        for entry in theorem_b.failures:
            summary.fail("homology isomorphism", entry.functor, *entry.failing_degrees())
        report.add(section, "Theorem B hypothesis for f_h", summary, answer="theorem B for f_h")
        report.add(section, "q is a homology isomorphism", q, answer="q")
        for n, layer_report in layer_reports.items():
            report.add(section, f"p₁: Λ{n} → 𝒟 is a homology isomorphism", layer_report, answer=f"p₁ on Λ{n}")
    return HomologyAnswers(theorem_b.passed, q.passed, layers)


def verify_evrard_replacement(f: Functor, N: int, k: int, variant: str = "le",
                              budget: Optional[Budget] = None, allow_loops: bool = False,
                              witnesses: bool = True, stability: bool = True) -> ReplacementReport:
    """
    Build ℋ(f)^{≤N} and run the strict, witness, homology and stability sections.

    Args:
        f: Functor 𝒞 → 𝒟 with 𝒟 loop-free
        N: Stage ≥ 1
        k: Degree bound ≥ 0
        variant: "str" or "le"
        budget: Shared enumeration budget (int, Budget or None)
        allow_loops: Accept a loopy target
        witnesses: Run the witness section (needs stage N+1)
        stability: Repeat the homology section at stage N+1

    Raises:
        PreconditionError: Loopy target without ``allow_loops``
        BudgetExceeded: Any enumeration ran past the budget
    """
    if N < 1:
        raise ValueError(f"Stage must be ≥ 1, got {N}")
    if k < 0:
        raise ValueError(f"Degree bound must be ≥ 0, got {k}")
    require_valid(validate_functor(f), f"functor {f.name}")
    require_loop_free(f, allow_loops)
    budget = as_budget(budget)
    started = time.time()
    report = ReplacementReport(f.name, N, k, variant)

    stage = build_replacement(f, N, variant, budget=budget)
    report.counts[stage.category.name] = [stage.category.num_objects, stage.category.num_morphisms]
    _strict_section(report, stage)

    big = None
    if witnesses or stability:
        big = build_replacement(f, N + 1, variant, budget=budget)
        report.counts[big.category.name] = [big.category.num_objects, big.category.num_morphisms]
    if witnesses:
        _witness_section(report, stage, big, budget)

    answers = _homology_section(report, stage, k, budget)
    if witnesses and not answers.q:
        _note_iq_obstruction(report)
    if stability:
        later = _homology_section(None, big, k, budget)
        report.unstable = answers.differs_from(later)
        if report.unstable:
            logger.warning("  Homology answers for %s change between stages %d and %d: %s",
                           f.name, N, N + 1, ", ".join(report.unstable))
        detail = "stable" if not report.unstable else "changed: " + ", ".join(report.unstable)
        report.items.append(CheckItem('stability', f"homology answers at stage {N + 1}", True, detail))
    else:
        report.skip('stability', f"homology answers at stage {N + 1}", "not requested")

    logger.info("  Replacement verification for %s at N=%d (%s): %s (elapsed: %.3fs)",
                f.name, N, variant, report.verdict, time.time() - started)
    return report


class ReplacementCheck(BaseCheck):
    """
    Full verification of ℋ(f)^{≤N}.

    Complexity: dominated by the zig-zag enumeration of stage N+1 and the
    comma categories of f_h.
    """

    name = "Fibrant replacement"
    description = "Strict identities, homotopy witnesses and Theorem B evidence for f_h"
    claims = [
        "q∘i = id and f_h∘i = f",
        "i∘q ∼ id through an explicit homotopy",
        "f_h fulfils the hypothesis of Theorem B",
        "q is a homotopy equivalence",
    ]

    def __init__(self, functor: Functor, max_dim: int = 1, budget: Optional[Budget] = None,
                 max_stage: int = 2, variant: str = "le", allow_loops: bool = False):
        if max_stage < 1:
            raise ValueError(f"Stage must be ≥ 1, got {max_stage}")
        self.max_stage = max_stage
        self.variant = variant
        self.allow_loops = allow_loops
        super().__init__(functor, max_dim=max_dim, budget=budget)

    def run(self) -> ReplacementReport:
        return verify_evrard_replacement(self.functor, self.max_stage, self.max_dim, self.variant,
                                         budget=self.budget, allow_loops=self.allow_loops)
