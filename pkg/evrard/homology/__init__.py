# -*- coding: utf-8 -*-
"""
Nerves and integral homology
============================

- **nerve**: nondegenerate simplices up to a dimension
- **chains**: normalized chain complexes, homology, chain maps, cones,
  quasi-isomorphism and homotopy-agreement certificates
- **smith**: exact integer elimination and Smith normal form
"""

from evrard.homology.chains import (
    CERTIFICATE,
    ChainComplex,
    ChainMap,
    ComplexCache,
    HomologyGroup,
    chain_complex,
    format_homology,
    homology,
    homology_of_category,
    induced_chain_map,
    is_quasi_iso,
    mapping_cone,
    nat_trans_homology_agreement,
)
from evrard.homology.nerve import NerveTruncation, is_loop_free, longest_chain, nerve
from evrard.homology.smith import (
    DiagonalForm,
    Elimination,
    IntMatrix,
    diagonal_form,
    eliminate,
    integer_kernel,
    invariant_factors,
    smith_normal_form,
    solvable_over_integers,
)

__all__ = [
    'CERTIFICATE', 'ChainComplex', 'ChainMap', 'ComplexCache', 'HomologyGroup', 'chain_complex',
    'format_homology', 'homology', 'homology_of_category', 'induced_chain_map', 'is_quasi_iso',
    'mapping_cone', 'nat_trans_homology_agreement',
    'NerveTruncation', 'is_loop_free', 'longest_chain', 'nerve',
    'DiagonalForm', 'Elimination', 'IntMatrix', 'diagonal_form', 'eliminate', 'integer_kernel',
    'invariant_factors', 'smith_normal_form', 'solvable_over_integers',
]
