# -*- coding: utf-8 -*-
"""
Finite categories
=================

Explicit finite categories, functors, natural transformations and their
exhaustive validators.

Usage:
    from evrard.categories import interval_category, validate_category

    I = interval_category()
    report = validate_category(I)
    assert report.passed
"""

from evrard.categories.category import (
    CheckReport,
    Failure,
    FiniteCategory,
    Functor,
    Morphism,
    NatTransformation,
    compose_functors,
    constant_functor,
    cylinder_functor,
    end_inclusion,
    identity_functor,
    identity_transformation,
    pair_label,
    pairing_functor,
    poset_category,
    product_category,
    product_projection,
    require_valid,
    validate_category,
    validate_functor,
    validate_nat_trans,
    whisker_left,
    whisker_right,
)
from evrard.categories.standard import (
    chain_category,
    discrete_category,
    discrete_to_interval,
    empty_category,
    interval_category,
    interval_constants,
    interval_identity,
    interval_square_projection,
    minimum_poset,
    object_inclusion,
    square_boundary,
    square_boundary_inclusion,
    square_cone,
    terminal_category,
    to_terminal,
)
from evrard.categories.universal import UniversalObject, find_initial, find_terminal

__all__ = [
    'CheckReport', 'Failure', 'FiniteCategory', 'Functor', 'Morphism', 'NatTransformation',
    'compose_functors', 'constant_functor', 'cylinder_functor', 'end_inclusion',
    'identity_functor', 'identity_transformation', 'pair_label', 'pairing_functor',
    'poset_category', 'product_category', 'product_projection', 'require_valid',
    'validate_category', 'validate_functor', 'validate_nat_trans', 'whisker_left', 'whisker_right',
    'chain_category', 'discrete_category', 'discrete_to_interval', 'empty_category',
    'interval_category', 'interval_constants', 'interval_identity', 'interval_square_projection',
    'minimum_poset', 'object_inclusion', 'square_boundary', 'square_boundary_inclusion',
    'square_cone', 'terminal_category', 'to_terminal',
    'UniversalObject', 'find_initial', 'find_terminal',
]
