# -*- coding: utf-8 -*-
"""
Constructions
=============

- **Comma categories** Y\\f, f\\Y, fibers, induced functors [v*], [v_*]
  and fiber inclusions i_Y, j_Y
- **Grothendieck construction** 𝒦∫F of a strict Cat-valued functor
- **Pullbacks** of finite categories
"""

from evrard.constructions.comma import (
    CommaCategory,
    comma_label,
    comma_over,
    comma_under,
    fiber,
    fiber_inclusion_over,
    fiber_inclusion_under,
    induced_over_map,
    induced_under_map,
    over_category,
    under_category,
)
from evrard.constructions.grothendieck import (
    CatValuedFunctor,
    GrothendieckCategory,
    decompose_functor,
    functor_from_lax_data,
    grothendieck,
    grothendieck_map,
    grothendieck_morphism,
    grothendieck_object,
    same_lax_data,
    validate_lax_data,
    validate_strictness,
)
from evrard.constructions.pullback import Pullback, pullback_category, pullback_label

__all__ = [
    'CommaCategory', 'comma_label', 'comma_over', 'comma_under', 'fiber',
    'fiber_inclusion_over', 'fiber_inclusion_under', 'induced_over_map', 'induced_under_map',
    'over_category', 'under_category',
    'CatValuedFunctor', 'GrothendieckCategory', 'decompose_functor', 'functor_from_lax_data',
    'grothendieck', 'grothendieck_map', 'grothendieck_morphism', 'grothendieck_object',
    'same_lax_data', 'validate_lax_data', 'validate_strictness',
    'Pullback', 'pullback_category', 'pullback_label',
]
