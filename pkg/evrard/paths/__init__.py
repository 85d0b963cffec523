# -*- coding: utf-8 -*-
"""
Zig-zag path categories and the fibrant replacement
===================================================

- **zigzag**: zig-zags, zig-zag morphisms and their enumeration
- **simplex**: the index categories Δ_str and Δ_≤ truncated at [N]
- **lambda_n**: Λ_n𝒟 and the functors Λ(φ)
- **path_category**: Λ𝒟^{≤N} as a Grothendieck construction with p₀, p₁
- **replacement**: ℋ(f)^{≤N} with f_h, q, i
- **shift**: T, θ, u_†, u^†, θ₁, θ₂, ℓ_Y, ω
- **homotopy**: Evrard homotopy witnesses

Usage:
    from evrard.categories import interval_identity
    from evrard.paths import build_replacement

    stage = build_replacement(interval_identity(), N=2, variant="le")
    print(stage.category.num_objects)
"""

from evrard.paths.homotopy import (
    EvrardHomotopy,
    TransformationChain,
    alpha_ladder,
    beta_ladder,
    check_evrard_homotopy,
    constant_path_functor,
    contraction_witness,
    homotopy_from_nat_trans,
    iq_homotopy_witness,
    lower_cut,
    upper_cut,
    witness_to_nat_trans_chain,
)
from evrard.paths.lambda_n import ZigZagCategory, build_lambda_n, lambda_functor, lambda_phi, lambda_phi_morphism
from evrard.paths.path_category import PathCategoryStage, build_path_category, path_stage_inclusion, stage_inclusion
from evrard.paths.replacement import (
    ReplacementStage,
    build_replacement,
    check_replacement_identities,
    index_projection,
    replacement_stage_inclusion,
)
from evrard.paths.shift import (
    EllResult,
    Shift,
    comma_stage_inclusion,
    ell_Y,
    fiber_stage_inclusion,
    shift_functor,
    shift_preserves_fibers,
    theta1,
    theta2,
    u_dagger,
    u_dagger_up,
)
from evrard.paths.simplex import (
    VARIANTS,
    StrictMonotone,
    compose_maps,
    coface,
    identity_map,
    index_category,
    monotone_maps,
    standard_inclusion,
    successor,
)
from evrard.paths.zigzag import (
    ZigZag,
    ZigZagMorphism,
    constant_zigzag,
    constant_zigzag_morphism,
    enumerate_zigzag_morphisms,
    enumerate_zigzags,
    square_failures,
    validate_zigzag,
    zigzag_from_arrows,
    zigzag_morphism,
)

__all__ = [
    'EvrardHomotopy', 'TransformationChain', 'alpha_ladder', 'beta_ladder', 'check_evrard_homotopy',
    'constant_path_functor', 'contraction_witness', 'homotopy_from_nat_trans', 'iq_homotopy_witness',
    'lower_cut', 'upper_cut', 'witness_to_nat_trans_chain',
    'ZigZagCategory', 'build_lambda_n', 'lambda_functor', 'lambda_phi', 'lambda_phi_morphism',
    'PathCategoryStage', 'build_path_category', 'path_stage_inclusion', 'stage_inclusion',
    'ReplacementStage', 'build_replacement', 'check_replacement_identities', 'index_projection',
    'replacement_stage_inclusion',
    'EllResult', 'Shift', 'comma_stage_inclusion', 'ell_Y', 'fiber_stage_inclusion', 'shift_functor',
    'shift_preserves_fibers', 'theta1', 'theta2', 'u_dagger', 'u_dagger_up',
    'VARIANTS', 'StrictMonotone', 'compose_maps', 'coface', 'identity_map', 'index_category',
    'monotone_maps', 'standard_inclusion', 'successor',
    'ZigZag', 'ZigZagMorphism', 'constant_zigzag', 'constant_zigzag_morphism', 'enumerate_zigzag_morphisms',
    'enumerate_zigzags', 'square_failures', 'validate_zigzag', 'zigzag_from_arrows', 'zigzag_morphism',
]
