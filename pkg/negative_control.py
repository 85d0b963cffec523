#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Example: Negative control disc2 → 𝓘
===================================

The functor a ↦ 0, b ↦ 1 from the discrete category on {a, b} to 𝓘
fails the Theorem B hypothesis: the comma category under 0 has two
components while the one under 1 has one. Its replacement f_h passes.

Raw vs replaced:
- Raw: [i*]: 1\\f → 0\\f is not a homology isomorphism in degree 0
- Replaced: every [v*] for f_h is a homology isomorphism through degree k

Usage: python negative_control.py
"""

from evrard.categories.standard import discrete_to_interval
from evrard.checks import find_left_adjoint, find_right_adjoint
from evrard_verifier import EvrardVerifier


def main():
    """Theorem B fails for disc2 → 𝓘 and holds for its replacement"""

    print("=" * 70)
    print(" EVRARD TOOLKIT - NEGATIVE CONTROL disc2 → 𝓘")
    print("=" * 70)

    f = discrete_to_interval()
    verifier = EvrardVerifier(f, max_stage=2, max_dim=1, variant="le")

    # 1. EVERYTHING AT ONCE
    results = verifier.run_all()

    # 2. NO ADJOINTS EITHER SIDE
    print("\n🔍 Adjoints of f...")
    for search in (find_right_adjoint, find_left_adjoint):
        result = search(f, budget=verifier.budget)
        status = "found" if result.found else f"none (no universal arrow at {result.witness})"
        print(f"   • {result.side}: {status}")

    # 3. PRE-(CO)FIBREDNESS OF THE RAW FUNCTOR AND OF f_h
    verdicts = verifier.probe_remark()

    verifier.export_results(results, "output/negative_control.xlsx")

    print("\n" + "=" * 70)
    print(" FINAL SUMMARY - disc2 → 𝓘")
    print("=" * 70)
    raw = results.get('raw')
    if raw is not None:
        failing = sorted({d for entry in raw.failures for d in entry.failing_degrees()})
        print(f"\n❌ Raw Theorem B:   {'pass' if raw.passed else 'fail'} (degrees {failing})")
    print(f"✅ Replacement:     {results['replacement'].verdict}")
    for side, verdict in verdicts.items():
        print(f"   • f_h {side}: {verdict}")
    print("\n📊 Data: output/negative_control.xlsx")
    print("\n" + "=" * 70)


if __name__ == "__main__":
    main()
