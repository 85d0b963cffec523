# -*- coding: utf-8 -*-
"""
Normalized chain complexes and homology
=======================================

Boundary of a chain (f₁, ..., f_d) is Σ (-1)^i d_i where d_0 drops f₁,
d_d drops f_d and d_i composes f_{i+1}∘f_i. A face containing an identity
is degenerate and contributes 0.

Homology is computed exactly over the integers:
    betti_d = dim C_d - rank ∂_d - rank ∂_{d+1}
    torsion_d = invariant factors > 1 of ∂_{d+1}

Homotopy-equivalence claims are certified as integral homology
isomorphisms through a stated degree; every report says so.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from evrard.budget import Budget
from evrard.categories.category import (
    CheckReport,
    FiniteCategory,
    Functor,
    NatTransformation,
    require_valid,
    validate_nat_trans,
)
from evrard.errors import TruncationError
from evrard.homology.nerve import NerveTruncation, Simplex, nerve
from evrard.homology.smith import Elimination, IntMatrix, diagonal_form, eliminate, integer_kernel, solvable_over_integers

logger = logging.getLogger(__name__)

CERTIFICATE = "integral homology isomorphism through degree {k} (necessary, not sufficient, for a homotopy equivalence)"


@dataclass
class HomologyGroup:
    """
    H_d ≅ ℤ^betti ⊕ ⊕ ℤ/t.

    Attributes:
        degree: d
        betti: Free rank
        torsion: Invariant factors ≥ 2, each dividing the next
        truncated: True when ∂_{d+1} was not available (upper bound only)
    """
    degree: int
    betti: int
    torsion: List[int] = field(default_factory=list)
    truncated: bool = False

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def same_group(self, other: "HomologyGroup") -> bool:
        return self.betti == other.betti and self.torsion == other.torsion

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts += [f"Z/{t}" for t in self.torsion]
        text = "+".join(parts) if parts else "0"
        return f"H{self.degree}={text}" + ("?" if self.truncated else "")

    def to_dict(self) -> Dict:
        return {'betti': self.betti, 'torsion': list(self.torsion), 'truncated': self.truncated}


@dataclass
class ChainComplex:
    """
    Free chain complex with explicit bases.

    Attributes:
        name: Display name
        bases: d ↦ list of basis labels of C_d
        boundaries: d ↦ ∂_d: C_d → C_{d-1} (d ≥ 1)
        top: Highest degree with a known basis
        complete: C_d = 0 for every d > top
    """
    name: str
    bases: Dict[int, List]
    boundaries: Dict[int, IntMatrix]
    top: int
    complete: bool = False
    _eliminations: Dict[int, Elimination] = field(default_factory=dict, repr=False)
    budget: Optional[Budget] = field(default=None, repr=False, compare=False)

    def rank(self, d: int) -> int:
        return len(self.bases.get(d, []))

    def ranks(self) -> Tuple[int, ...]:
        return tuple(self.rank(d) for d in range(self.top + 1))

    def boundary(self, d: int) -> IntMatrix:
        if d in self.boundaries:
            return self.boundaries[d]
        return IntMatrix(self.rank(d - 1), self.rank(d))

    def elimination(self, d: int) -> Elimination:
        if d not in self._eliminations:
            started = time.time()
            matrix = self.boundary(d)
            self._eliminations[d] = eliminate(matrix, budget=self.budget)
            logger.info("  Computed %dx%d matrix d[%d] of %s (elapsed: %.3fs)",
                        matrix.n_rows, matrix.n_cols, d, self.name, time.time() - started)
        return self._eliminations[d]

    def check_boundary_squares(self) -> CheckReport:
        """∂_d ∘ ∂_{d+1} = 0 for every available pair."""
        report = CheckReport(f"∂∂ = 0 on {self.name}")
        for d in range(1, self.top):
            if not self.boundary(d).matmul(self.boundary(d + 1)).is_zero():
                report.fail("boundary squares to zero", d)
        return report


def chain_complex(nv: NerveTruncation, budget: Optional[Budget] = None) -> ChainComplex:
    """
    The normalized chain complex of a nerve truncation.

    Face computations are spent against ``budget``; so is the later
    elimination of every boundary matrix.

    Entries are in {-1, 0, +1} after summing coincident faces.
    """
    C = nv.category
    boundaries = {}
    for d in range(1, nv.k + 1):
        rows_index = nv.index[d - 1]
        if budget is not None:
            budget.spend(len(nv.simplices[d]) * (d + 1), f"boundary d[{d}] of N({C.name})")
        matrix = IntMatrix(len(nv.simplices[d - 1]), len(nv.simplices[d]))
        for j, chain in enumerate(nv.simplices[d]):
            for i, face in enumerate(_faces(C, chain)):
                if face is not None:
                    matrix.add(rows_index[face], j, -1 if i % 2 else 1)
        boundaries[d] = matrix
    return ChainComplex(f"N({C.name})", {d: list(s) for d, s in nv.simplices.items()},
                        boundaries, nv.k, nv.complete, budget=budget)


def _faces(C: FiniteCategory, chain: Simplex) -> List[Optional[Simplex]]:
    d = len(chain)
    if d == 1:
        return [(C.cod(chain[0]),), (C.dom(chain[0]),)]
    faces: List[Optional[Simplex]] = [chain[1:]]
    for i in range(1, d):
        composite = C.compose(chain[i], chain[i - 1])
        faces.append(None if C.is_identity(composite) else chain[:i - 1] + (composite,) + chain[i + 1:])
    faces.append(chain[:-1])
    return faces


def homology(cx: ChainComplex, up_to: int) -> List[HomologyGroup]:
    """
    H_0 .. H_{up_to} of ``cx``.

    Degrees below ``cx.top`` are exact. At ``cx.top`` the answer is exact
    only when the complex is complete, otherwise it is stamped truncated.
    Above ``top`` a complete complex has zero homology.

    Raises:
        TruncationError: Degree above ``top`` requested on an incomplete complex
    """
    groups = []
    for d in range(up_to + 1):
        if d > cx.top:
            if not cx.complete:
                raise TruncationError(f"H{d} of {cx.name} needs the complex to degree {d + 1}; built to {cx.top}")
            groups.append(HomologyGroup(d, 0))
            continue
        rank_out = cx.elimination(d).rank if d >= 1 else 0
        if d + 1 <= cx.top:
            incoming = cx.elimination(d + 1)
            rank_in, torsion, truncated = incoming.rank, incoming.torsion, False
        else:
            rank_in, torsion, truncated = 0, [], not cx.complete
        groups.append(HomologyGroup(d, cx.rank(d) - rank_out - rank_in, list(torsion), truncated))
    return groups


def homology_of_category(C: FiniteCategory, up_to: int, budget: Optional[Budget] = None) -> List[HomologyGroup]:
    """Build the nerve to ``up_to + 1`` and return H_0 .. H_{up_to}."""
    return homology(chain_complex(nerve(C, up_to + 1, budget=budget), budget=budget), up_to)


def format_homology(groups: List[HomologyGroup]) -> str:
    """E.g. "H0=Z H1=Z"; zero groups in positive degrees are omitted."""
    shown = [str(g) for g in groups if g.degree == 0 or not g.is_zero() or g.truncated]
    return " ".join(shown)


# ----------------------------------------------------------------------
# Chain maps
# ----------------------------------------------------------------------

@dataclass
class ChainMap:
    """
    Degree-wise integer matrices between two chain complexes.

    Attributes:
        source, target: The complexes
        matrices: d ↦ F_d: C_d(source) → C_d(target)
        top: Highest degree with a matrix
    """
    source: ChainComplex
    target: ChainComplex
    matrices: Dict[int, IntMatrix]
    top: int

    def check_commutes(self) -> CheckReport:
        """∂′_d ∘ F_d = F_{d-1} ∘ ∂_d."""
        report = CheckReport(f"chain map {self.source.name} → {self.target.name}")
        for d in range(1, self.top + 1):
            lhs = self.target.boundary(d).matmul(self.matrices[d])
            rhs = self.matrices[d - 1].matmul(self.source.boundary(d))
            if lhs != rhs:
                report.fail("commutes with boundaries", d)
        return report

    def compose(self, first: "ChainMap") -> "ChainMap":
        """self ∘ first."""
        top = min(self.top, first.top)
        return ChainMap(first.source, self.target,
                        {d: self.matrices[d].matmul(first.matrices[d]) for d in range(top + 1)}, top)

    def __sub__(self, other: "ChainMap") -> "ChainMap":
        top = min(self.top, other.top)
        return ChainMap(self.source, self.target,
                        {d: self.matrices[d] - other.matrices[d] for d in range(top + 1)}, top)


class ComplexCache:
    """Chain complexes keyed by category, built once at the highest degree asked for."""

    def __init__(self, budget: Optional[Budget] = None):
        self.budget = budget
        self._store: Dict[int, Tuple[FiniteCategory, NerveTruncation, ChainComplex]] = {}

    def get(self, C: FiniteCategory, k: int) -> Tuple[NerveTruncation, ChainComplex]:
        entry = self._store.get(id(C))
        if entry is None or entry[1].k < k:
            nv = nerve(C, k, budget=self.budget)
            entry = (C, nv, chain_complex(nv, budget=self.budget))
            self._store[id(C)] = entry
        return entry[1], entry[2]


def induced_chain_map(F: Functor, k: int, cache: Optional[ComplexCache] = None) -> ChainMap:
    """
    The chain map of N(F) through degree k.

    A chain whose image contains an identity is degenerate and maps to 0.
    """
    cache = cache or ComplexCache()
    nv_source, cx_source = cache.get(F.source, k)
    nv_target, cx_target = cache.get(F.target, k)
    T = F.target
    matrices = {}
    for d in range(k + 1):
        matrix = IntMatrix(len(nv_target.simplices[d]), len(nv_source.simplices[d]))
        if cache.budget is not None:
            cache.budget.spend(len(nv_source.simplices[d]), f"chain map of {F.name} in degree {d}")
        target_index = nv_target.index[d]
        for j, simplex in enumerate(nv_source.simplices[d]):
            if d == 0:
                image = (F.ob(simplex[0]),)
            else:
                image = tuple(F.mor(m) for m in simplex)
                if any(T.is_identity(m) for m in image):
                    continue
            matrix.add(target_index[image], j, 1)
        matrices[d] = matrix
    return ChainMap(cx_source, cx_target, matrices, k)


def mapping_cone(chain_map: ChainMap) -> ChainComplex:
    """
    Cone(F)_d = A_{d-1} ⊕ B_d with ∂(a, b) = (-∂a, F(a) + ∂b).

    Built through degree min(top(F) + 1, top(B)).
    """
    A, B = chain_map.source, chain_map.target
    top = min(chain_map.top + 1, B.top, A.top + 1)
    bases = {d: [('a', s) for s in A.bases.get(d - 1, [])] + [('b', s) for s in B.bases.get(d, [])]
             for d in range(top + 1)}
    boundaries = {}
    for d in range(1, top + 1):
        a_cols, b_rows = A.rank(d - 1), B.rank(d - 1)
        a_rows = A.rank(d - 2) if d >= 2 else 0
        matrix = IntMatrix(a_rows + b_rows, a_cols + B.rank(d))
        if d >= 2:
            for i, row in A.boundary(d - 1).rows.items():
                for j, value in row.items():
                    matrix.add(i, j, -value)
        for i, row in chain_map.matrices[d - 1].rows.items():
            for j, value in row.items():
                matrix.add(a_rows + i, j, value)
        for i, row in B.boundary(d).rows.items():
            for j, value in row.items():
                matrix.add(a_rows + i, a_cols + j, value)
        boundaries[d] = matrix
    return ChainComplex(f"Cone({A.name}→{B.name})", bases, boundaries, top,
                        complete=A.complete and B.complete and top >= max(A.top + 1, B.top),
                        budget=A.budget or B.budget)


def is_quasi_iso(F: Functor, k: int, cache: Optional[ComplexCache] = None) -> CheckReport:
    """
    Certify that N(F) induces isomorphisms H_d(source) → H_d(target) for d ≤ k.

    Passes iff for every d ≤ k the mapping cone has H_d = 0 (F_* is onto in
    degree k and bijective below) and H_d(source) ≅ H_d(target) abstractly;
    a surjection between isomorphic finitely generated abelian groups is an
    isomorphism. Needs nerves to degree k + 1.

    Returns:
        CheckReport with failures "homology mismatch" / "cone homology" per degree
    """
    if k < 0:
        raise ValueError(f"Degree bound must be ≥ 0, got {k}")
    cache = cache or ComplexCache()
    report = CheckReport(f"quasi-isomorphism {F.name}")
    chain_map = induced_chain_map(F, k + 1, cache=cache)
    source_h = homology(chain_map.source, k)
    target_h = homology(chain_map.target, k)
    cone = mapping_cone(chain_map)
    if cone.top < k + 1 and not cone.complete:
        raise TruncationError(f"cone of {F.name} built to degree {cone.top}; needs {k + 1}")
    cone_h = homology(cone, k)
    for d in range(k + 1):
        if not source_h[d].same_group(target_h[d]):
            report.fail("homology mismatch", d, detail=f"{source_h[d]} vs {target_h[d]}")
        if not cone_h[d].is_zero():
            report.fail("cone homology", d, detail=str(cone_h[d]))
    report.note(CERTIFICATE.format(k=k))
    return report


def nat_trans_homology_agreement(h: NatTransformation, k: int, cache: Optional[ComplexCache] = None) -> CheckReport:
    """
    Check F_* = G_* on H_d for d ≤ k, where h: F ⇒ G.

    For every integer cycle z of the source (kernel basis from the diagonal
    form of ∂_d), (F - G)(z) must be an integral boundary in the target.

    Raises:
        ValidationError: If h does not validate
    """
    require_valid(validate_nat_trans(h), f"transformation {h.name}")
    cache = cache or ComplexCache()
    report = CheckReport(f"homology agreement {h.F.name} vs {h.G.name}")
    F_map = induced_chain_map(h.F, k + 1, cache=cache)
    G_map = induced_chain_map(h.G, k + 1, cache=cache)
    difference = F_map - G_map
    A, B = F_map.source, F_map.target
    for d in range(k + 1):
        if d == 0:
            cycles = np.eye(A.rank(0), dtype=object)
        else:
            cycles = integer_kernel(A.boundary(d).to_dense())
        if cycles.shape[1] == 0:
            continue
        images = difference.matrices[d].to_dense().dot(cycles)
        boundary = B.boundary(d + 1).to_dense()
        form = diagonal_form(boundary) if boundary.size else None
        for column in range(cycles.shape[1]):
            y = images[:, column]
            if not any(y):
                continue
            if boundary.shape[1] == 0 or not solvable_over_integers(boundary, y, form=form):
                support = [A.bases[d][i] for i in range(A.rank(d)) if cycles[i, column]]
                report.fail("homology disagreement", d, *support[:4])
                break
    report.note(f"agreement of induced maps on homology through degree {k}")
    return report
