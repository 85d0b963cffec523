# -*- coding: utf-8 -*-
"""
Index categories Δ_str and Δ_≤
==============================

Objects [1], [2], ..., [N]. In Δ_str the morphisms [m] → [n] are the
strictly monotone maps; in Δ_≤ there is exactly one, i ↦ i, when m ≤ n.
Morphism ids do not depend on N, so the stage inclusions are identities
on ids.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from evrard.categories.category import FiniteCategory, Morphism
from evrard.errors import CategoryError

VARIANTS = ("str", "le")


@dataclass(frozen=True)
class StrictMonotone:
    """
    φ: [m] → [n], stored as its values φ(1) < ... < φ(m).

    Attributes:
        n: Size of the codomain
        values: φ(1), ..., φ(m)
    """
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise CategoryError("A map out of [m] needs m ≥ 1")
        if any(b <= a for a, b in zip(self.values, self.values[1:])):
            raise CategoryError(f"{self.values} is not strictly increasing")
        if self.values[0] < 1 or self.values[-1] > self.n:
            raise CategoryError(f"{self.values} does not land in [1..{self.n}]")

    @property
    def m(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    @property
    def label(self) -> str:
        return f"[{self.m}]→[{self.n}]:" + ",".join(str(v) for v in self.values)

    def is_standard(self) -> bool:
        """φ(i) = i."""
        return self.values == tuple(range(1, self.m + 1))

    def count_at_most(self, j: int) -> int:
        """#{i : φ(i) ≤ j}."""
        return sum(1 for v in self.values if v <= j)


def standard_inclusion(m: int, n: int) -> StrictMonotone:
    """ι: [m] → [n], i ↦ i."""
    if m > n:
        raise CategoryError(f"No inclusion [{m}] → [{n}]")
    return StrictMonotone(n, tuple(range(1, m + 1)))


def identity_map(n: int) -> StrictMonotone:
    return standard_inclusion(n, n)


def compose_maps(psi: StrictMonotone, phi: StrictMonotone) -> StrictMonotone:
    """ψ∘φ."""
    if phi.n != psi.m:
        raise CategoryError(f"Cannot compose {psi.label} after {phi.label}")
    return StrictMonotone(psi.n, tuple(psi(v) for v in phi.values))


def successor(phi: StrictMonotone, variant: str) -> StrictMonotone:
    """
    The map [m+1] → [n+1] used by the shift.

    Δ_str: φ⁺ with φ⁺(m+1) = n+1. Δ_≤: the inclusion ι_{m+1,n+1}, which
    acts the same way on zig-zags whose last rung is an identity pair.
    """
    if variant == "le":
        return standard_inclusion(phi.m + 1, phi.n + 1)
    return StrictMonotone(phi.n + 1, phi.values + (phi.n + 1,))


def coface(n: int) -> StrictMonotone:
    """θ_n: [n] → [n+1], i ↦ i."""
    return standard_inclusion(n, n + 1)


def monotone_maps(m: int, n: int, variant: str) -> List[StrictMonotone]:
    """Morphisms [m] → [n] of the chosen index category, in lexicographic order."""
    if variant not in VARIANTS:
        raise CategoryError(f"Unknown variant {variant!r}; expected one of {VARIANTS}")
    if m > n:
        return []
    if variant == "le":
        return [standard_inclusion(m, n)]
    return [StrictMonotone(n, values) for values in combinations(range(1, n + 1), m)]


def object_label(n: int) -> str:
    return f"[{n}]"


def index_category(N: int, variant: str = "le") -> FiniteCategory:
    """
    The full subcategory of Δ_str (variant "str") or Δ_≤ (variant "le") on [1..N].

    object_data maps "[n]" to n; morphism_data maps ids to StrictMonotone.

    Raises:
        CategoryError: N < 1 or unknown variant
    """
    if N < 1:
        raise CategoryError(f"Stage must be ≥ 1, got {N}")
    objects = [object_label(n) for n in range(1, N + 1)]
    records, morphism_data = [], {}
    for m in range(1, N + 1):
        for n in range(m, N + 1):
            for phi in monotone_maps(m, n, variant):
                records.append(Morphism(phi.label, object_label(m), object_label(n)))
                morphism_data[phi.label] = phi
    identity = {object_label(n): identity_map(n).label for n in range(1, N + 1)}

    def compose(second: str, first: str) -> str:
        return compose_maps(morphism_data[second], morphism_data[first]).label

    name = "Δ_str" if variant == "str" else "Δ_≤"
    object_data: Dict[str, int] = {object_label(n): n for n in range(1, N + 1)}
    return FiniteCategory.from_composition(objects, records, identity, compose, name=f"{name}^≤{N}",
                                           object_data=object_data, morphism_data=morphism_data)
