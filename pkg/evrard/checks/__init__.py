# -*- coding: utf-8 -*-
"""
Verification checks
===================

- **adjoints**: left/right adjoints through universal arrows
- **fibrations**: pre-(co)fibredness, base and cobase change
- **theorem_b**: Theorem B hypothesis and its corollary form
- **replacement**: end-to-end verification of ℋ(f)^{≤N}

Usage:
    from evrard.categories import discrete_to_interval
    from evrard.checks import TheoremBCheck, ReplacementCheck

    report = TheoremBCheck(discrete_to_interval(), max_dim=1).run()
    print(report.passed)             # False: the raw functor fails at H0

    report = ReplacementCheck(discrete_to_interval(), max_dim=1, max_stage=2).run()
    print(report.verdict)
"""

from evrard.checks.adjoints import AdjointCheck, AdjointSearchResult, find_left_adjoint, find_right_adjoint
from evrard.checks.base import BaseCheck
from evrard.checks.fibrations import (
    NO_COUNTEREXAMPLE,
    FibrationCheck,
    FibrationReport,
    base_change,
    cobase_change,
    is_precofibred,
    is_prefibred,
    remark_probe,
)
from evrard.checks.replacement import CheckItem, ReplacementCheck, ReplacementReport, verify_evrard_replacement
from evrard.checks.theorem_b import (
    TheoremBCheck,
    TheoremBEntry,
    TheoremBReport,
    check_corollary_hypothesis,
    check_theorem_b_hypothesis,
    require_loop_free,
)

__all__ = [
    'AdjointCheck', 'AdjointSearchResult', 'find_left_adjoint', 'find_right_adjoint',
    'BaseCheck',
    'NO_COUNTEREXAMPLE', 'FibrationCheck', 'FibrationReport', 'base_change', 'cobase_change',
    'is_precofibred', 'is_prefibred', 'remark_probe',
    'CheckItem', 'ReplacementCheck', 'ReplacementReport', 'verify_evrard_replacement',
    'TheoremBCheck', 'TheoremBEntry', 'TheoremBReport', 'check_corollary_hypothesis',
    'check_theorem_b_hypothesis', 'require_loop_free',
]
