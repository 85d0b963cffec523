# -*- coding: utf-8 -*-
"""
Theorem B hypothesis checks
===========================

For f: 𝒞 → 𝒟 the hypothesis asks every [v*]: Y′\\f → Y\\f (v: Y → Y′)
to be a homotopy equivalence; the dual form asks it of [v_*]: f\\Y → f\\Y′.
The corollary form asks it of the base-change (cobase-change) functors
between fibers of a pre-fibred (pre-cofibred) f.

Each homotopy equivalence is certified as an integral homology
isomorphism through degree k. Identities of 𝒟 are forced passes.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd

from evrard.budget import Budget
from evrard.categories.category import CheckReport, Functor, require_valid, validate_functor
from evrard.checks.base import BaseCheck
from evrard.checks.fibrations import base_change, cobase_change, is_precofibred, is_prefibred
from evrard.constructions.comma import CommaCategory, comma_over, comma_under, induced_over_map, induced_under_map
from evrard.errors import BudgetExceeded, PreconditionError
from evrard.homology.chains import CERTIFICATE, ComplexCache, is_quasi_iso
from evrard.homology.nerve import is_loop_free

logger = logging.getLogger(__name__)


@dataclass
class TheoremBEntry:
    """
    One morphism v: Y → Y′ of the target.

    Attributes:
        v: Morphism id
        source: Y
        target: Y′
        functor: Name of the induced functor tested
        sizes: (objects, morphisms) of the two categories compared
        forced: True for identities (passed without computation)
        quasi_iso: The homology report (None when forced)
    """
    v: str
    source: str
    target: str
    functor: str
    sizes: Dict[str, List[int]] = field(default_factory=dict)
    forced: bool = False
    quasi_iso: Optional[CheckReport] = None

    @property
    def passed(self) -> bool:
        return self.forced or self.quasi_iso.passed

    def failing_degrees(self) -> List[int]:
        if self.forced:
            return []
        return sorted({failure.witness[0] for failure in self.quasi_iso.failures})

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'v': self.v,
            'source': self.source,
            'target': self.target,
            'functor': self.functor,
            'forced': self.forced,
            'passed': self.passed,
            'sizes': self.sizes,
        }
        if not self.forced:
            result['failures'] = [failure.to_dict() for failure in self.quasi_iso.failures]
        return result


@dataclass
class TheoremBReport:
    """
    Per-morphism evidence for the Theorem B hypothesis (or its corollary).

    Attributes:
        check: "theorem-b" or "corollary"
        functor: Name of f
        degree_bound: k
        dual: True for [v_*] / cobase change
        entries: One entry per morphism of the target, sorted by id
        metadata: Stage and truncation information supplied by the caller
    """
    check: str
    functor: str
    degree_bound: int
    dual: bool = False
    entries: List[TheoremBEntry] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[TheoremBEntry]:
        return [entry for entry in self.entries if not entry.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'check': self.check,
            'target': self.functor,
            'degree_bound': self.degree_bound,
            'dual': self.dual,
            'verdict': "pass" if self.passed else "fail",
            'certificate': CERTIFICATE.format(k=self.degree_bound),
            'metadata': self.metadata,
            'witnesses': [entry.to_dict() for entry in self.failures],
            'entries': [entry.to_dict() for entry in self.entries],
        }

    def to_frame(self) -> pd.DataFrame:
        """One row per morphism, for printing and Excel export."""
        rows = []
        for entry in self.entries:
            rows.append({
                'Morphism': entry.v,
                'From': entry.source,
                'To': entry.target,
                'Functor': entry.functor,
                'Sizes': " vs ".join(f"{o}/{m}" for o, m in entry.sizes.values()),
                'Result': "forced" if entry.forced else ("pass" if entry.passed else "FAIL"),
                'Failing degrees': ",".join(str(d) for d in entry.failing_degrees()),
            })
        return pd.DataFrame(rows, columns=['Morphism', 'From', 'To', 'Functor', 'Sizes', 'Result',
                                           'Failing degrees'])


def _sizes(F: Functor) -> Dict[str, List[int]]:
    return {
        F.source.name: [F.source.num_objects, F.source.num_morphisms],
        F.target.name: [F.target.num_objects, F.target.num_morphisms],
    }


def require_loop_free(f: Functor, allow_loops: bool) -> None:
    if not allow_loops and not is_loop_free(f.target):
        raise PreconditionError(f"target {f.target.name} of {f.name} has a non-identity endomorphism cycle; "
                                f"pass allow_loops=True to check anyway")


def _test_entry(entry: TheoremBEntry, F: Functor, k: int, cache: ComplexCache) -> None:
    started = time.time()
    entry.sizes = _sizes(F)
    try:
        entry.quasi_iso = is_quasi_iso(F, k, cache=cache)
    except BudgetExceeded as exc:
        biggest = max(entry.sizes.items(), key=lambda item: item[1][1])
        raise BudgetExceeded(f"{exc.what} in {biggest[0]} ({biggest[1][0]} objects, {biggest[1][1]} morphisms)",
                             exc.used, exc.limit) from exc
    logger.debug("  %s: %s (elapsed: %.3fs)", entry.functor,
                 "pass" if entry.quasi_iso.passed else "FAIL", time.time() - started)


def check_theorem_b_hypothesis(f: Functor, k: int, dual: bool = False, allow_loops: bool = False,
                               budget: Optional[Budget] = None,
                               cache: Optional[ComplexCache] = None) -> TheoremBReport:
    """
    Test [v*]: Y′\\f → Y\\f (or [v_*]: f\\Y → f\\Y′ when ``dual``) for every v.

    Args:
        f: The functor
        k: Degree bound of the homology certificate
        dual: Test the over-category form
        allow_loops: Accept a target with non-identity cycles
        budget: Shared enumeration budget
        cache: Chain complex cache shared between calls

    Raises:
        PreconditionError: Loopy target without ``allow_loops``
        BudgetExceeded: Naming the comma category that was too big
    """
    if k < 0:
        raise ValueError(f"Degree bound must be ≥ 0, got {k}")
    require_valid(validate_functor(f), f"functor {f.name}")
    require_loop_free(f, allow_loops)
    cache = cache or ComplexCache(budget)
    D = f.target
    report = TheoremBReport("theorem-b", f.name, k, dual)
    commas: Dict[str, CommaCategory] = {}

    def comma_at(Y: str) -> CommaCategory:
        if Y not in commas:
            commas[Y] = comma_over(f, Y, budget=budget) if dual else comma_under(f, Y, budget=budget)
        return commas[Y]

    started = time.time()
    for v in sorted(D.morphisms):
        Y, Yp = D.dom(v), D.cod(v)
        label = f"[{v}_*]" if dual else f"[{v}*]"
        entry = TheoremBEntry(v, Y, Yp, label)
        if D.is_identity(v):
            entry.forced = True
            report.entries.append(entry)
            continue
        if dual:
            induced = induced_over_map(f, v, over_source=comma_at(Y), over_target=comma_at(Yp))
        else:
            induced = induced_under_map(f, v, under_source=comma_at(Yp), under_target=comma_at(Y))
        _test_entry(entry, induced, k, cache)
        report.entries.append(entry)
    logger.info("  Theorem B hypothesis for %s through degree %d: %s (%d morphisms, elapsed: %.3fs)",
                f.name, k, "pass" if report.passed else "FAIL", len(report.entries), time.time() - started)
    return report


def check_corollary_hypothesis(f: Functor, k: int, dual: bool = False, allow_loops: bool = False,
                               budget: Optional[Budget] = None,
                               cache: Optional[ComplexCache] = None) -> TheoremBReport:
    """
    Test every base-change v* (or cobase-change v_* when ``dual``) functor.

    Raises:
        PreconditionError: f is not pre-fibred (pre-cofibred), naming the witness
    """
    if k < 0:
        raise ValueError(f"Degree bound must be ≥ 0, got {k}")
    require_loop_free(f, allow_loops)
    side = "precofibred" if dual else "prefibred"
    fibration = (is_precofibred if dual else is_prefibred)(f, budget=budget, stop_at_first=True)
    if not fibration.passed:
        Y, d = fibration.witness
        raise PreconditionError(f"{f.name} is not {side} (witness Y={Y}, d={d})")
    cache = cache or ComplexCache(budget)
    D = f.target
    report = TheoremBReport("corollary", f.name, k, dual)
    for v in sorted(D.morphisms):
        entry = TheoremBEntry(v, D.dom(v), D.cod(v), f"{v}_*" if dual else f"{v}*")
        if D.is_identity(v):
            entry.forced = True
            report.entries.append(entry)
            continue
        change = (cobase_change if dual else base_change)(f, v, report=fibration, budget=budget)
        _test_entry(entry, change, k, cache)
        report.entries.append(entry)
    logger.info("  Corollary hypothesis for %s through degree %d: %s",
                f.name, k, "pass" if report.passed else "FAIL")
    return report


class TheoremBCheck(BaseCheck):
    """
    Theorem B hypothesis on f itself.

    Complexity: one comma category per object and one cone homology per
    non-identity morphism of the target.
    """

    name = "Theorem B hypothesis"
    description = "Every induced functor between comma categories is a homology isomorphism"
    claims = [
        "[v*]: Y′\\f → Y\\f is a homotopy equivalence for every v: Y → Y′",
        "dually [v_*]: f\\Y → f\\Y′",
    ]

    def __init__(self, functor: Functor, max_dim: int = 1, budget: Optional[Budget] = None,
                 dual: bool = False, allow_loops: bool = False, corollary: bool = False):
        self.dual = dual
        self.allow_loops = allow_loops
        self.corollary = corollary
        super().__init__(functor, max_dim=max_dim, budget=budget)

    def run(self) -> TheoremBReport:
        check = check_corollary_hypothesis if self.corollary else check_theorem_b_hypothesis
        return check(self.functor, self.max_dim, dual=self.dual, allow_loops=self.allow_loops, budget=self.budget)
