# -*- coding: utf-8 -*-
"""
Evrard Verifier - Main Module
=============================

Runs the checks of the fibrant-replacement toolkit against one functor
and collects the results.

Supported checks:
- Theorem B hypothesis on the raw functor
- Full verification of ℋ(f)^{≤N} (strict, witness, homology, stability)
- Pre-(co)fibration probe on f_h
- Adjoint search

See constructions.md for the constructions behind each check.
"""

import os
from typing import Any, Dict, Literal, Optional

import pandas as pd

from evrard.budget import Budget, as_budget
from evrard.categories.category import Functor, require_valid, validate_functor
from evrard.errors import EvrardError
from evrard.checks import (
    AdjointCheck,
    AdjointSearchResult,
    FibrationCheck,
    ReplacementCheck,
    ReplacementReport,
    TheoremBCheck,
    TheoremBReport,
    remark_probe,
)
from evrard.homology.chains import format_homology, homology_of_category
from evrard.paths.replacement import ReplacementStage, build_replacement


class EvrardVerifier:
    """
    Main class for verifying the replacement of a functor
    """

    def __init__(self, functor: Functor, max_stage: int = 2, max_dim: int = 1,
                 variant: Literal["str", "le"] = "le", budget: Optional[int] = None,
                 verbose: bool = True):
        """
        Initialize the verifier

        Args:
            functor: Functor f: 𝒞 → 𝒟 to verify
            max_stage: Stage N of the truncated replacement
            max_dim: Homology degree bound k
            variant: "str" (Δ_str) or "le" (Δ_≤)
            budget: Enumeration budget shared by every check
            verbose: Print progress lines
        """
        self.functor = functor
        self.max_stage = max_stage
        self.max_dim = max_dim
        self.variant = variant
        self.budget: Budget = as_budget(budget)
        self.verbose = verbose
        self.stage: Optional[ReplacementStage] = None

    def _say(self, line: str) -> None:
        if self.verbose:
            print(line)

    def validate_input(self):
        """Validate the functor and its categories"""
        self._say("🔎 Validating input...")
        require_valid(validate_functor(self.functor), f"functor {self.functor.name}")
        source, target = self.functor.source, self.functor.target
        self._say(f"✅ {self.functor.name}: {source.name} ({source.num_objects} objects, "
                  f"{source.num_morphisms} morphisms) → {target.name} ({target.num_objects} objects, "
                  f"{target.num_morphisms} morphisms)")

    def homology_summary(self) -> pd.DataFrame:
        """Homology of source and target through degree k"""
        self._say("\n🧮 Computing homology...")
        rows = []
        for role, C in (("source", self.functor.source), ("target", self.functor.target)):
            groups = homology_of_category(C, self.max_dim, budget=self.budget)
            rows.append({'Role': role, 'Category': C.name, 'Homology': format_homology(groups)})
            self._say(f"   • {C.name}: {format_homology(groups)}")
        return pd.DataFrame(rows)

    def build_replacement(self) -> ReplacementStage:
        """Build ℋ(f)^{≤N}"""
        self._say(f"\n🔄 Building replacement at stage {self.max_stage} ({self.variant})...")
        self.stage = build_replacement(self.functor, self.max_stage, self.variant, budget=self.budget)
        H = self.stage.category
        self._say(f"✅ {H.name}: {H.num_objects} objects, {H.num_morphisms} morphisms")
        return self.stage

    def check(self, kind: Literal["raw", "replacement"] = "replacement",
              dual: bool = False, allow_loops: bool = False):
        """
        Run a Theorem B style check.

        Args:
            kind: Which check to run:
                - "raw": Theorem B hypothesis on f itself
                - "replacement": full verification of ℋ(f)^{≤N}
            dual: Use the [v_*] form (raw only)
            allow_loops: Accept a loopy target

        Returns:
            TheoremBReport or ReplacementReport
        """
        self._say(f"\n{'=' * 60}")
        self._say(f"🚀 CHECKING: {kind.upper()} ({self.functor.name}, k={self.max_dim})")
        self._say(f"{'=' * 60}")

        if kind == "raw":
            checker = TheoremBCheck(self.functor, self.max_dim, self.budget, dual=dual, allow_loops=allow_loops)
        elif kind == "replacement":
            checker = ReplacementCheck(self.functor, self.max_dim, self.budget, max_stage=self.max_stage,
                                       variant=self.variant, allow_loops=allow_loops)
        else:
            raise ValueError(f"Unknown check: {kind}. Use 'raw' or 'replacement'")

        info = checker.info()
        self._say(f"📝 {info['description']}")
        for claim in info['claims']:
            self._say(f"   • {claim}")
        report = checker.run()
        verdict = getattr(report, 'verdict', "pass" if report.passed else "fail")
        marker = "✅" if report.passed else ("⚠️ " if verdict.startswith("unstable") else "❌")
        self._say(f"\n{marker} {checker.name}: {verdict}")
        self._say(report.to_frame().to_string(index=False))
        return report

    def check_raw(self, dual: bool = False, allow_loops: bool = False) -> TheoremBReport:
        """Equivalent to check("raw", ...)"""
        return self.check("raw", dual=dual, allow_loops=allow_loops)

    def check_replacement(self, allow_loops: bool = False) -> ReplacementReport:
        """Equivalent to check("replacement", ...)"""
        return self.check("replacement", allow_loops=allow_loops)

    def probe_remark(self) -> Dict[str, str]:
        """Search f_h for a counterexample to pre-(co)fibredness"""
        if self.stage is None:
            self.build_replacement()
        self._say("\n🔍 Probing f_h for pre-(co)fibredness...")
        verdicts = remark_probe(self.stage.f_h, budget=self.budget)
        for side, verdict in verdicts.items():
            self._say(f"   • {side}: {verdict}")
        return verdicts

    def find_adjoint(self, side: Literal["left", "right"] = "right") -> AdjointSearchResult:
        """Search an adjoint of f"""
        self._say(f"\n🔍 Searching {side} adjoint of {self.functor.name}...")
        result = AdjointCheck(self.functor, side=side, budget=self.budget).run()
        if result.found:
            self._say(f"✅ {result.adjoint.name} found; triangle identities: "
                      f"{'pass' if result.triangles.passed else 'FAIL'}")
        else:
            self._say(f"   ⚠️  No {side} adjoint: no universal arrow at {result.witness}")
        return result

    def run_all(self) -> Dict[str, Any]:
        """Run every check and collect the results"""
        self.validate_input()
        results: Dict[str, Any] = {'homology': self.homology_summary()}
        try:
            results['raw'] = self.check_raw()
        except EvrardError as e:
            self._say(f"❌ Error in raw check: {e}")
        results['replacement'] = self.check_replacement()
        return results

    @staticmethod
    def describe_checks() -> pd.DataFrame:
        """One row per check class: name, description and the claims it gives evidence for"""
        rows = []
        for check in (TheoremBCheck, ReplacementCheck, FibrationCheck, AdjointCheck):
            info = check.info()
            rows.append({'Check': info['name'], 'Description': info['description'],
                         'Claims': "; ".join(info['claims'])})
        return pd.DataFrame(rows, columns=['Check', 'Description', 'Claims'])

    def export_results(self, results: Dict[str, Any], output_path: str):
        """
        Export results to Excel file

        Args:
            results: Dictionary from run_all (reports and frames)
            output_path: Output file path
        """
        self._say("\n📊 Exporting results...")
        os.makedirs(os.path.dirname(output_path) or ".", exist_ok=True)

        summary_data = []
        sheets = {}
        for name, result in results.items():
            if isinstance(result, pd.DataFrame):
                sheets[name] = result
                continue
            verdict = getattr(result, 'verdict', "pass" if result.passed else "fail")
            summary_data.append({
                'Check': name,
                'Functor': self.functor.name,
                'Stage': self.max_stage,
                'Variant': self.variant,
                'Degree_Bound': self.max_dim,
                'Verdict': verdict,
            })
            sheets[name] = result.to_frame()

        df_summary = pd.DataFrame(summary_data, columns=['Check', 'Functor', 'Stage', 'Variant',
                                                         'Degree_Bound', 'Verdict'])

        with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
            df_summary.to_excel(writer, sheet_name='Summary', index=False)
            self.describe_checks().to_excel(writer, sheet_name='Checks', index=False)
            for name, df in sheets.items():
                df.to_excel(writer, sheet_name=name[:31], index=False)

        self._say(f"✅ Results exported to: {output_path}")
        self._say("\n📋 Summary:")
        self._say(df_summary.to_string(index=False))


def example_usage():
    """Example usage of the module"""
    from evrard.categories.standard import discrete_to_interval

    verifier = EvrardVerifier(discrete_to_interval(), max_stage=2, max_dim=1, variant="le")
    results = verifier.run_all()
    verifier.probe_remark()
    verifier.export_results(results, "output/negative_control.xlsx")
    return verifier, results


if __name__ == "__main__":
    example_usage()
