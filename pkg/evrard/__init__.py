# -*- coding: utf-8 -*-
"""
Fibrant replacement over explicit finite categories
===================================================

- **categories**: finite categories, functors, natural transformations, validators
- **constructions**: comma categories, fibers, Grothendieck construction, pullbacks
- **paths**: zig-zags, Λ_n𝒟, the path categories and ℋ(f) with its witnesses
- **homology**: nerves, normalized chain complexes, exact integral homology
- **checks**: adjoints, pre-(co)fibrations, Theorem B and the replacement pipeline
"""

from evrard.budget import DEFAULT_BUDGET, Budget
from evrard.errors import (
    BudgetExceeded,
    CategoryError,
    EvrardError,
    InputError,
    PreconditionError,
    TruncationError,
    ValidationError,
)
from evrard.settings import RunConfig

__version__ = "1.0.0"

__all__ = [
    'DEFAULT_BUDGET', 'Budget',
    'BudgetExceeded', 'CategoryError', 'EvrardError', 'InputError', 'PreconditionError',
    'TruncationError', 'ValidationError', 'RunConfig',
]
