# -*- coding: utf-8 -*-
"""
Zig-zags and their morphisms
============================

A zig-zag of length n in 𝒟:

    Ȳ₀ —a₁→ Y₁ ←b₁— Ȳ₁ —a₂→ Y₂ ←b₂— ... —a_n→ Y_n ←b_n— Ȳ_n

Positions are numbered 0..2n: even position 2i holds the bar object Ȳ_i,
odd position 2i-1 holds the mid object Y_i. A zig-zag morphism has one
component per position.
"""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from evrard.budget import Budget
from evrard.categories.category import FiniteCategory
from evrard.errors import CategoryError


@dataclass(frozen=True)
class ZigZag:
    """
    Attributes:
        bars: Ȳ₀..Ȳ_n
        mids: Y₁..Y_n
        forward: a₁..a_n with a_i: Ȳ_{i-1} → Y_i
        backward: b₁..b_n with b_i: Ȳ_i → Y_i
    """
    bars: Tuple[str, ...]
    mids: Tuple[str, ...]
    forward: Tuple[str, ...]
    backward: Tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.mids)

    @property
    def start(self) -> str:
        return self.bars[0]

    @property
    def end(self) -> str:
        return self.bars[-1]

    @property
    def label(self) -> str:
        return "Z[" + ", ".join(f"{a}/{b}" for a, b in zip(self.forward, self.backward)) + "]"

    def positions(self) -> Tuple[str, ...]:
        """Objects in positional order Ȳ₀, Y₁, Ȳ₁, ..., Y_n, Ȳ_n."""
        result = [self.bars[0]]
        for i in range(self.n):
            result += [self.mids[i], self.bars[i + 1]]
        return tuple(result)

    def extend(self, a: str, mid: str, b: str, bar: str) -> "ZigZag":
        """Append Ȳ_n —a→ mid ←b— bar."""
        return ZigZag(self.bars + (bar,), self.mids + (mid,), self.forward + (a,), self.backward + (b,))

    def __str__(self) -> str:
        parts = [self.bars[0]]
        for i in range(self.n):
            parts.append(f"→{self.mids[i]}←{self.bars[i + 1]}")
        return "".join(parts)


def zigzag_from_arrows(D: FiniteCategory, forward: Sequence[str], backward: Sequence[str]) -> ZigZag:
    """
    Read the objects off the arrows.

    Raises:
        CategoryError: If lengths differ or endpoints do not match up
    """
    if len(forward) != len(backward) or not forward:
        raise CategoryError("A zig-zag needs as many forward as backward arrows, at least one")
    bars = [D.dom(forward[0])]
    mids = []
    for a, b in zip(forward, backward):
        if D.dom(a) != bars[-1] or D.cod(a) != D.cod(b):
            raise CategoryError(f"Arrows {a}, {b} do not continue the zig-zag at {bars[-1]}")
        mids.append(D.cod(a))
        bars.append(D.dom(b))
    return ZigZag(tuple(bars), tuple(mids), tuple(forward), tuple(backward))


def constant_zigzag(D: FiniteCategory, Y: str, n: int) -> ZigZag:
    """Y —id→ Y ←id— Y ... of length n."""
    identity = D.id(Y)
    return ZigZag((Y,) * (n + 1), (Y,) * n, (identity,) * n, (identity,) * n)


def validate_zigzag(D: FiniteCategory, Z: ZigZag) -> List[str]:
    """Endpoint problems of ``Z`` in ``D`` (empty when well formed)."""
    problems = []
    if len(Z.bars) != Z.n + 1 or len(Z.forward) != Z.n or len(Z.backward) != Z.n or Z.n < 1:
        return [f"shape of {Z.label}"]
    for i in range(Z.n):
        a, b = Z.forward[i], Z.backward[i]
        if not (D.has_morphism(a) and D.has_morphism(b)):
            problems.append(f"unknown arrow at rung {i + 1}")
            continue
        if D.dom(a) != Z.bars[i] or D.cod(a) != Z.mids[i]:
            problems.append(f"a{i + 1} endpoints")
        if D.dom(b) != Z.bars[i + 1] or D.cod(b) != Z.mids[i]:
            problems.append(f"b{i + 1} endpoints")
    return problems


def enumerate_zigzags(D: FiniteCategory, n: int, budget: Optional[Budget] = None) -> Iterator[ZigZag]:
    """
    Every zig-zag of length n, depth first in declaration order.

    Raises:
        BudgetExceeded: Too many zig-zags
    """
    def extend(partial: ZigZag) -> Iterator[ZigZag]:
        if partial.n == n:
            yield partial
            return
        for a in D.morphisms_from(partial.end):
            mid = D.cod(a)
            for b in D.morphisms_to(mid):
                if budget is not None:
                    budget.charge(1, f"zig-zags of length {n} in {D.name}")
                yield from extend(partial.extend(a, mid, b, D.dom(b)))

    for Y in D.objects:
        yield from extend(ZigZag((Y,), (), (), ()))


@dataclass(frozen=True)
class ZigZagMorphism:
    """
    Componentwise map between zig-zags of equal length.

    Attributes:
        source: Domain zig-zag
        target: Codomain zig-zag
        components: One morphism per position (t̄₀, t₁, t̄₁, ..., t_n, t̄_n)
    """
    source: ZigZag
    target: ZigZag
    components: Tuple[str, ...]

    @property
    def n(self) -> int:
        return self.source.n

    def bar(self, i: int) -> str:
        """t̄_i."""
        return self.components[2 * i]

    def mid(self, i: int) -> str:
        """t_i (1-based)."""
        return self.components[2 * i - 1]

    @property
    def label(self) -> str:
        return f"{self.source.label}⇒{self.target.label}[{','.join(self.components)}]"


def square_failures(D: FiniteCategory, t: ZigZagMorphism) -> List[str]:
    """
    Rungs where t_i∘a_i ≠ a′_i∘t̄_{i-1} or t_i∘b_i ≠ b′_i∘t̄_i.
    """
    failures = []
    S, T = t.source, t.target
    for i in range(1, S.n + 1):
        if D.compose(t.mid(i), S.forward[i - 1]) != D.compose(T.forward[i - 1], t.bar(i - 1)):
            failures.append(f"forward square {i}")
        if D.compose(t.mid(i), S.backward[i - 1]) != D.compose(T.backward[i - 1], t.bar(i)):
            failures.append(f"backward square {i}")
    return failures


def zigzag_morphism(D: FiniteCategory, source: ZigZag, target: ZigZag, components: Sequence[str]) -> ZigZagMorphism:
    """
    Build and check a zig-zag morphism.

    Raises:
        CategoryError: Wrong arity, wrong component endpoints, or a square fails
    """
    components = tuple(components)
    if source.n != target.n or len(components) != 2 * source.n + 1:
        raise CategoryError(f"Components do not fit {source.label} ⇒ {target.label}")
    for c, x, y in zip(components, source.positions(), target.positions()):
        if D.dom(c) != x or D.cod(c) != y:
            raise CategoryError(f"Component {c} is not a morphism {x} → {y}")
    t = ZigZagMorphism(source, target, components)
    failures = square_failures(D, t)
    if failures:
        raise CategoryError(f"{t.label} does not commute: {', '.join(failures)}")
    return t


def identity_zigzag_morphism(D: FiniteCategory, Z: ZigZag) -> ZigZagMorphism:
    return ZigZagMorphism(Z, Z, tuple(D.id(x) for x in Z.positions()))


def constant_zigzag_morphism(D: FiniteCategory, w: str, n: int) -> ZigZagMorphism:
    """The constant morphism between constant zig-zags, every component w."""
    return ZigZagMorphism(constant_zigzag(D, D.dom(w), n), constant_zigzag(D, D.cod(w), n), (w,) * (2 * n + 1))


def compose_zigzag_morphisms(D: FiniteCategory, second: ZigZagMorphism, first: ZigZagMorphism) -> ZigZagMorphism:
    """second∘first, componentwise."""
    return ZigZagMorphism(first.source, second.target,
                          tuple(D.compose(g, f) for g, f in zip(second.components, first.components)))


def enumerate_zigzag_morphisms(D: FiniteCategory, source: ZigZag, target: ZigZag,
                               budget: Optional[Budget] = None) -> Iterator[ZigZagMorphism]:
    """
    All morphisms source ⇒ target.

    Backtracks over positions t̄₀, t₁, t̄₁, ... and prunes at the first
    square that fails; every candidate component tried is charged.
    """
    n = source.n
    if n != target.n:
        return
    src, tgt = source.positions(), target.positions()

    def fits(partial: Tuple[str, ...], c: str) -> bool:
        p = len(partial)
        if p % 2 == 1:
            i = (p + 1) // 2
            return D.compose(c, source.forward[i - 1]) == D.compose(target.forward[i - 1], partial[-1])
        if p == 0:
            return True
        i = p // 2
        return D.compose(partial[-1], source.backward[i - 1]) == D.compose(target.backward[i - 1], c)

    def extend(partial: Tuple[str, ...]) -> Iterator[ZigZagMorphism]:
        p = len(partial)
        if p == 2 * n + 1:
            yield ZigZagMorphism(source, target, partial)
            return
        candidates = D.hom(src[p], tgt[p])
        if budget is not None:
            budget.charge(len(candidates), f"zig-zag morphisms in {D.name}")
        for c in candidates:
            if fits(partial, c):
                yield from extend(partial + (c,))

    yield from extend(())
