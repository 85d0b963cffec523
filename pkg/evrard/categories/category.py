# -*- coding: utf-8 -*-
"""
Finite categories, functors and natural transformations
=======================================================

Categories are given by total composition tables. Objects and morphisms are
opaque string ids; constructions generate readable ids and keep the decoded
components in ``object_data`` / ``morphism_data``.

Validators are exhaustive and return a ``CheckReport``; they never raise on
malformed input.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from evrard.budget import Budget
from evrard.errors import CategoryError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Morphism:
    """
    A morphism record.

    Attributes:
        id: Morphism id
        dom: Domain object id
        cod: Codomain object id
    """
    id: str
    dom: str
    cod: str


@dataclass
class Failure:
    """One violated law with the data that exhibits the violation."""
    law: str
    witness: Tuple[Any, ...] = ()
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'law': self.law, 'witness': [str(w) for w in self.witness], 'detail': self.detail}


@dataclass
class CheckReport:
    """
    Structured pass/fail evidence.

    ``passed`` is derived: a report passes exactly when it has no failures.
    Notes carry informational lines (certificate strength, skipped items).
    """
    subject: str
    failures: List[Failure] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, law: str, *witness: Any, detail: str = "") -> None:
        self.failures.append(Failure(law, tuple(witness), detail))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def absorb(self, other: "CheckReport", prefix: Optional[str] = None) -> None:
        """Copy the failures and notes of ``other`` into this report."""
        for failure in other.failures:
            law = f"{prefix}: {failure.law}" if prefix else failure.law
            self.failures.append(Failure(law, failure.witness, failure.detail))
        self.notes.extend(other.notes)

    def laws(self) -> List[str]:
        return [failure.law for failure in self.failures]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'subject': self.subject,
            'passed': self.passed,
            'failures': [failure.to_dict() for failure in self.failures],
            'notes': list(self.notes),
        }

    def summary(self, limit: int = 5) -> str:
        if self.passed:
            return f"{self.subject}: passed"
        lines = [f"{self.subject}: {len(self.failures)} failure(s)"]
        for failure in self.failures[:limit]:
            witness = ", ".join(str(w) for w in failure.witness)
            lines.append(f"  - {failure.law} ({witness}) {failure.detail}".rstrip())
        if len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more")
        return "\n".join(lines)


class FiniteCategory:
    """
    A finite category given by a composition table.

    Attributes:
        name: Display name
        objects: Ordered object ids
        records: Morphism records as given (duplicates kept for validation)
        morphisms: Morphism id -> record
        identity: Object id -> identity morphism id
        table: (g, f) -> g∘f, defined when cod(f) = dom(g)
        object_data: Optional decoding of generated object ids
        morphism_data: Optional decoding of generated morphism ids
    """

    def __init__(self, objects: Sequence[str], morphisms: Sequence[Morphism],
                 identity: Mapping[str, str], compose: Mapping[Tuple[str, str], str],
                 name: str = "", object_data: Optional[Mapping[str, Any]] = None,
                 morphism_data: Optional[Mapping[str, Any]] = None):
        self.name = name or "C"
        self.objects: List[str] = list(objects)
        self.records: List[Morphism] = list(morphisms)
        self.morphisms: Dict[str, Morphism] = {}
        for record in self.records:
            self.morphisms.setdefault(record.id, record)
        self.identity: Dict[str, str] = dict(identity)
        self.table: Dict[Tuple[str, str], str] = dict(compose)
        self.object_data: Dict[str, Any] = dict(object_data or {})
        self.morphism_data: Dict[str, Any] = dict(morphism_data or {})
        self._object_set = set(self.objects)
        self._hom: Optional[Dict[Tuple[str, str], List[str]]] = None
        self._out: Optional[Dict[str, List[str]]] = None
        self._in: Optional[Dict[str, List[str]]] = None
        self._signature = None
        self._identity_set = set(self.identity.values())

    @classmethod
    def from_composition(cls, objects: Sequence[str], morphisms: Sequence[Morphism],
                         identity: Mapping[str, str], compose_fn: Callable[[str, str], str],
                         name: str = "", object_data=None, morphism_data=None,
                         budget: Optional[Budget] = None) -> "FiniteCategory":
        """
        Build a category by evaluating ``compose_fn(g, f)`` on every composable pair.

        Args:
            objects: Object ids
            morphisms: Morphism records
            identity: Identity map
            compose_fn: Returns the id of g∘f
            budget: Optional budget; the composable pairs are spent as work

        Returns:
            FiniteCategory with a total table
        """
        outgoing: Dict[str, List[str]] = {x: [] for x in objects}
        for record in morphisms:
            outgoing.setdefault(record.dom, []).append(record.id)
        if budget is not None:
            budget.spend(sum(len(outgoing.get(f.cod, [])) for f in morphisms), f"composition table of {name}")
        table = {}
        for f in morphisms:
            for g in outgoing.get(f.cod, []):
                table[(g, f.id)] = compose_fn(g, f.id)
        category = cls(objects, morphisms, identity, table, name=name,
                       object_data=object_data, morphism_data=morphism_data)
        logger.debug("  Built category %s: %d objects, %d morphisms, %d composites",
                     category.name, len(category.objects), len(category.morphisms), len(table))
        return category

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    @property
    def num_objects(self) -> int:
        return len(self.objects)

    @property
    def num_morphisms(self) -> int:
        return len(self.morphisms)

    def has_object(self, x: str) -> bool:
        return x in self._object_set

    def has_morphism(self, m: str) -> bool:
        return m in self.morphisms

    def require_object(self, x: str) -> None:
        if x not in self._object_set:
            raise CategoryError(f"Unknown object {x!r} in {self.name}")

    def require_morphism(self, m: str) -> None:
        if m not in self.morphisms:
            raise CategoryError(f"Unknown morphism {m!r} in {self.name}")

    def dom(self, m: str) -> str:
        try:
            return self.morphisms[m].dom
        except KeyError:
            raise CategoryError(f"Unknown morphism {m!r} in {self.name}") from None

    def cod(self, m: str) -> str:
        try:
            return self.morphisms[m].cod
        except KeyError:
            raise CategoryError(f"Unknown morphism {m!r} in {self.name}") from None

    def id(self, x: str) -> str:
        try:
            return self.identity[x]
        except KeyError:
            raise CategoryError(f"Object {x!r} has no identity in {self.name}") from None

    def is_identity(self, m: str) -> bool:
        return m in self._identity_set

    def compose(self, g: str, f: str) -> str:
        """Return g∘f (f first)."""
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"Composite {g} ∘ {f} is not defined in {self.name}") from None

    def compose_all(self, *chain: str) -> str:
        """Compose ``chain`` written in application order: compose_all(f, g, h) = h∘g∘f."""
        if not chain:
            raise CategoryError("Empty composite")
        result = chain[0]
        for m in chain[1:]:
            result = self.compose(m, result)
        return result

    def _build_index(self) -> None:
        hom: Dict[Tuple[str, str], List[str]] = {}
        out: Dict[str, List[str]] = {x: [] for x in self.objects}
        into: Dict[str, List[str]] = {x: [] for x in self.objects}
        for m in self.morphisms.values():
            hom.setdefault((m.dom, m.cod), []).append(m.id)
            out.setdefault(m.dom, []).append(m.id)
            into.setdefault(m.cod, []).append(m.id)
        self._hom, self._out, self._in = hom, out, into

    def hom(self, x: str, y: str) -> List[str]:
        """Morphism ids from x to y, in declaration order."""
        if self._hom is None:
            self._build_index()
        return self._hom.get((x, y), [])

    def morphisms_from(self, x: str) -> List[str]:
        if self._out is None:
            self._build_index()
        return self._out.get(x, [])

    def morphisms_to(self, y: str) -> List[str]:
        if self._in is None:
            self._build_index()
        return self._in.get(y, [])

    def non_identity_morphisms(self) -> Iterator[str]:
        for m in self.morphisms:
            if not self.is_identity(m):
                yield m

    def signature(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        """Object and morphism ids; two categories with equal signatures are treated as the same."""
        if self._signature is None:
            self._signature = (tuple(self.objects), tuple(sorted(self.morphisms)))
        return self._signature

    def same_as(self, other: "FiniteCategory") -> bool:
        return self is other or self.signature() == other.signature()

    def to_digraph(self) -> nx.MultiDiGraph:
        """Directed multigraph of the non-identity morphisms."""
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(self.objects)
        for m in self.non_identity_morphisms():
            record = self.morphisms[m]
            graph.add_edge(record.dom, record.cod, key=m)
        return graph

    # ------------------------------------------------------------------
    # Subcategories
    # ------------------------------------------------------------------

    def subcategory(self, objects: Iterable[str], morphisms: Iterable[str], name: str = "") -> "FiniteCategory":
        """
        Restrict to the given objects and morphisms.

        The caller guarantees closure under identities and composition.
        """
        wanted = set(objects)
        keep_objects = [x for x in self.objects if x in wanted]
        keep = set(morphisms)
        records = [self.morphisms[m] for m in self.morphisms if m in keep]
        identity = {x: self.identity[x] for x in keep_objects}
        table = {(g, f): h for (g, f), h in self.table.items() if g in keep and f in keep}
        return FiniteCategory(
            keep_objects, records, identity, table, name=name or f"sub({self.name})",
            object_data={x: self.object_data[x] for x in keep_objects if x in self.object_data},
            morphism_data={m: self.morphism_data[m] for m in keep if m in self.morphism_data},
        )

    def full_subcategory(self, objects: Iterable[str], name: str = "") -> "FiniteCategory":
        keep = set(objects)
        morphisms = [m for m, r in self.morphisms.items() if r.dom in keep and r.cod in keep]
        return self.subcategory(keep, morphisms, name=name or f"full({self.name})")

    def __repr__(self) -> str:
        return f"FiniteCategory({self.name!r}, objects={self.num_objects}, morphisms={self.num_morphisms})"


class Functor:
    """
    A functor between finite categories.

    Attributes:
        source: Source category
        target: Target category
        obj_map: Source object id -> target object id
        mor_map: Source morphism id -> target morphism id
    """

    def __init__(self, source: FiniteCategory, target: FiniteCategory,
                 obj_map: Mapping[str, str], mor_map: Mapping[str, str], name: str = ""):
        self.source = source
        self.target = target
        self.obj_map: Dict[str, str] = dict(obj_map)
        self.mor_map: Dict[str, str] = dict(mor_map)
        self.name = name or f"{source.name}→{target.name}"

    def ob(self, x: str) -> str:
        try:
            return self.obj_map[x]
        except KeyError:
            raise CategoryError(f"{self.name} is not defined on object {x!r}") from None

    def mor(self, m: str) -> str:
        try:
            return self.mor_map[m]
        except KeyError:
            raise CategoryError(f"{self.name} is not defined on morphism {m!r}") from None

    def equals(self, other: "Functor") -> bool:
        """Exact equality of maps between the same source and target."""
        return (self.source.same_as(other.source) and self.target.same_as(other.target)
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map)

    def differences(self, other: "Functor") -> List[Tuple[str, str, Optional[str], Optional[str]]]:
        """List (kind, id, self value, other value) where the two maps disagree."""
        diffs = []
        for kind, mine, theirs in (('object', self.obj_map, other.obj_map),
                                   ('morphism', self.mor_map, other.mor_map)):
            for key in sorted(set(mine) | set(theirs)):
                if mine.get(key) != theirs.get(key):
                    diffs.append((kind, key, mine.get(key), theirs.get(key)))
        return diffs

    def restrict(self, subcategory: FiniteCategory, name: str = "") -> "Functor":
        """Restrict along a subcategory of the source with identical ids."""
        return Functor(
            subcategory, self.target,
            {x: self.obj_map[x] for x in subcategory.objects},
            {m: self.mor_map[m] for m in subcategory.morphisms},
            name=name or f"{self.name}|{subcategory.name}",
        )

    def __repr__(self) -> str:
        return f"Functor({self.name!r})"


class NatTransformation:
    """
    A natural transformation F ⇒ G.

    Attributes:
        F: Domain functor
        G: Codomain functor
        components: Source object id -> morphism id of the target
    """

    def __init__(self, F: Functor, G: Functor, components: Mapping[str, str], name: str = ""):
        self.F = F
        self.G = G
        self.components: Dict[str, str] = dict(components)
        self.name = name or f"{F.name}⇒{G.name}"

    @property
    def source(self) -> FiniteCategory:
        return self.F.source

    @property
    def target(self) -> FiniteCategory:
        return self.F.target

    def at(self, x: str) -> str:
        try:
            return self.components[x]
        except KeyError:
            raise CategoryError(f"{self.name} has no component at {x!r}") from None

    def __repr__(self) -> str:
        return f"NatTransformation({self.name!r})"


# ----------------------------------------------------------------------
# Validators
# ----------------------------------------------------------------------

def validate_category(C: FiniteCategory) -> CheckReport:
    """
    Check every category axiom exhaustively.

    Dangling ids, missing composites and wrong endpoints are reported as
    failures. Associativity runs over all composable triples.

    Args:
        C: Category to check

    Returns:
        CheckReport naming each violated law with a witness
    """
    report = CheckReport(f"category {C.name}")

    seen = set()
    for x in C.objects:
        if x in seen:
            report.fail("duplicate object", x)
        seen.add(x)
    seen = set()
    for record in C.records:
        if record.id in seen:
            report.fail("duplicate morphism", record.id)
        seen.add(record.id)
        if not C.has_object(record.dom) or not C.has_object(record.cod):
            report.fail("dangling endpoint", record.id, record.dom, record.cod)

    def well_formed(m: str) -> bool:
        record = C.morphisms.get(m)
        return record is not None and C.has_object(record.dom) and C.has_object(record.cod)

    for x in C.objects:
        i = C.identity.get(x)
        if i is None:
            report.fail("identity totality", x)
        elif i not in C.morphisms:
            report.fail("dangling identity", x, i)
        elif C.morphisms[i].dom != x or C.morphisms[i].cod != x:
            report.fail("identity endpoints", x, i)
    for x in C.identity:
        if not C.has_object(x):
            report.fail("dangling identity", x, C.identity[x])

    for (g, f), h in C.table.items():
        if g not in C.morphisms or f not in C.morphisms or h not in C.morphisms:
            report.fail("dangling composite", g, f, h)
            continue
        if C.morphisms[f].cod != C.morphisms[g].dom:
            report.fail("composition domain", g, f)
            continue
        if C.morphisms[h].dom != C.morphisms[f].dom or C.morphisms[h].cod != C.morphisms[g].cod:
            report.fail("composition endpoints", g, f, h)

    good = [m for m in C.morphisms if well_formed(m)]
    for f in good:
        for g in C.morphisms_from(C.morphisms[f].cod):
            if well_formed(g) and (g, f) not in C.table:
                report.fail("composition totality", g, f)

    for f in good:
        record = C.morphisms[f]
        left = C.identity.get(record.cod)
        right = C.identity.get(record.dom)
        if left in C.morphisms and C.table.get((left, f)) != f:
            report.fail("left unit law", left, f)
        if right in C.morphisms and C.table.get((f, right)) != f:
            report.fail("right unit law", f, right)

    for f in good:
        for g in C.morphisms_from(C.morphisms[f].cod):
            gf = C.table.get((g, f))
            if gf is None or not well_formed(g):
                continue
            for h in C.morphisms_from(C.morphisms[g].cod):
                hg = C.table.get((h, g))
                if hg is None:
                    continue
                lhs = C.table.get((h, gf))
                rhs = C.table.get((hg, f))
                if lhs != rhs:
                    report.fail("associativity", h, g, f, detail=f"{lhs} != {rhs}")

    logger.debug("  Validated %s: %d failure(s)", C.name, len(report.failures))
    return report


def validate_functor(F: Functor) -> CheckReport:
    """
    Check that F preserves endpoints, identities and composition.

    Returns:
        CheckReport; failures carry the offending morphism (pair)
    """
    report = CheckReport(f"functor {F.name}")
    S, T = F.source, F.target

    for x in S.objects:
        y = F.obj_map.get(x)
        if y is None:
            report.fail("object map totality", x)
        elif not T.has_object(y):
            report.fail("object map range", x, y)
    for m in S.morphisms:
        n = F.mor_map.get(m)
        if n is None:
            report.fail("morphism map totality", m)
        elif not T.has_morphism(n):
            report.fail("morphism map range", m, n)
    if not report.passed:
        return report

    for m, record in S.morphisms.items():
        n = T.morphisms[F.mor_map[m]]
        if n.dom != F.obj_map.get(record.dom):
            report.fail("dom preservation", m, n.id)
        if n.cod != F.obj_map.get(record.cod):
            report.fail("cod preservation", m, n.id)
    for x in S.objects:
        if F.mor_map.get(S.identity.get(x)) != T.identity.get(F.obj_map[x]):
            report.fail("identity preservation", x)
    if not report.passed:
        return report

    for (g, f), h in S.table.items():
        try:
            image = T.compose(F.mor_map[g], F.mor_map[f])
        except CategoryError:
            report.fail("composition preservation", g, f, detail="image not composable")
            continue
        if image != F.mor_map.get(h):
            report.fail("composition preservation", g, f, detail=f"{image} != {F.mor_map.get(h)}")
    return report


def validate_nat_trans(eta: NatTransformation) -> CheckReport:
    """
    Check component endpoints and every naturality square G(w)∘η_X = η_X′∘F(w).

    Returns:
        CheckReport; naturality failures name the morphism w
    """
    report = CheckReport(f"transformation {eta.name}")
    F, G = eta.F, eta.G
    if not (F.source.same_as(G.source) and F.target.same_as(G.target)):
        report.fail("shape mismatch", F.name, G.name)
        return report
    T = F.target
    for x in F.source.objects:
        c = eta.components.get(x)
        if c is None:
            report.fail("component totality", x)
        elif not T.has_morphism(c):
            report.fail("component range", x, c)
        elif T.dom(c) != F.obj_map.get(x) or T.cod(c) != G.obj_map.get(x):
            report.fail("component endpoints", x, c)
    if not report.passed:
        return report

    for w, record in F.source.morphisms.items():
        try:
            lhs = T.compose(G.mor(w), eta.components[record.dom])
            rhs = T.compose(eta.components[record.cod], F.mor(w))
        except CategoryError as exc:
            report.fail("naturality", w, detail=str(exc))
            continue
        if lhs != rhs:
            report.fail("naturality", w, detail=f"{lhs} != {rhs}")
    return report


def require_valid(report: CheckReport, what: str) -> None:
    """Raise ValidationError carrying ``report`` unless it passed."""
    if not report.passed:
        raise ValidationError(f"{what} is invalid:\n{report.summary()}", report)


# ----------------------------------------------------------------------
# Functor algebra
# ----------------------------------------------------------------------

def identity_functor(C: FiniteCategory) -> Functor:
    return Functor(C, C, {x: x for x in C.objects}, {m: m for m in C.morphisms}, name=f"id_{C.name}")


def constant_functor(C: FiniteCategory, D: FiniteCategory, obj: str, name: str = "") -> Functor:
    """The functor C → D sending everything to ``obj`` and its identity."""
    D.require_object(obj)
    return Functor(C, D, {x: obj for x in C.objects}, {m: D.id(obj) for m in C.morphisms},
                   name=name or f"const_{obj}")


def compose_functors(g: Functor, f: Functor, name: str = "") -> Functor:
    """
    Pointwise composite g∘f.

    Raises:
        CategoryError: If target of f is not the source of g
    """
    if not f.target.same_as(g.source):
        raise CategoryError(f"Cannot compose {g.name} after {f.name}: {f.target.name} is not {g.source.name}")
    return Functor(
        f.source, g.target,
        {x: g.obj_map[y] for x, y in f.obj_map.items()},
        {m: g.mor_map[n] for m, n in f.mor_map.items()},
        name=name or f"{g.name}∘{f.name}",
    )


def identity_transformation(F: Functor) -> NatTransformation:
    return NatTransformation(F, F, {x: F.target.id(F.obj_map[x]) for x in F.source.objects},
                             name=f"id_{F.name}")


def whisker_left(eta: NatTransformation, H: Functor) -> NatTransformation:
    """η·H: F∘H ⇒ G∘H."""
    return NatTransformation(compose_functors(eta.F, H), compose_functors(eta.G, H),
                             {x: eta.components[H.obj_map[x]] for x in H.source.objects},
                             name=f"{eta.name}·{H.name}")


def whisker_right(K: Functor, eta: NatTransformation) -> NatTransformation:
    """K·η: K∘F ⇒ K∘G."""
    return NatTransformation(compose_functors(K, eta.F), compose_functors(K, eta.G),
                             {x: K.mor_map[c] for x, c in eta.components.items()},
                             name=f"{K.name}·{eta.name}")


# ----------------------------------------------------------------------
# Standard constructions
# ----------------------------------------------------------------------

def pair_label(a: str, b: str) -> str:
    return f"({a},{b})"


def product_category(C: FiniteCategory, D: FiniteCategory, name: str = "") -> FiniteCategory:
    """
    The product C×D with componentwise composition.

    Object and morphism ids are "(a,b)"; the decoding maps them back to pairs.
    """
    objects = [pair_label(x, y) for x in C.objects for y in D.objects]
    records = []
    morphism_data = {}
    for f, rf in C.morphisms.items():
        for g, rg in D.morphisms.items():
            label = pair_label(f, g)
            records.append(Morphism(label, pair_label(rf.dom, rg.dom), pair_label(rf.cod, rg.cod)))
            morphism_data[label] = (f, g)
    identity = {pair_label(x, y): pair_label(C.id(x), D.id(y)) for x in C.objects for y in D.objects}

    def compose(second: str, first: str) -> str:
        f2, g2 = morphism_data[second]
        f1, g1 = morphism_data[first]
        return pair_label(C.compose(f2, f1), D.compose(g2, g1))

    return FiniteCategory.from_composition(
        objects, records, identity, compose, name=name or f"{C.name}×{D.name}",
        object_data={pair_label(x, y): (x, y) for x in C.objects for y in D.objects},
        morphism_data=morphism_data,
    )


def product_projection(P: FiniteCategory, C: FiniteCategory, D: FiniteCategory, side: int) -> Functor:
    """Projection of a ``product_category`` onto its first (side=0) or second (side=1) factor."""
    target = C if side == 0 else D
    return Functor(P, target,
                   {x: P.object_data[x][side] for x in P.objects},
                   {m: P.morphism_data[m][side] for m in P.morphisms},
                   name=f"pr{side + 1}")


def pairing_functor(F: Functor, G: Functor, product: FiniteCategory) -> Functor:
    """⟨F, G⟩: S → F.target × G.target for functors with a common source."""
    return Functor(F.source, product,
                   {x: pair_label(F.obj_map[x], G.obj_map[x]) for x in F.source.objects},
                   {m: pair_label(F.mor_map[m], G.mor_map[m]) for m in F.source.morphisms},
                   name=f"⟨{F.name},{G.name}⟩")


def end_inclusion(C: FiniteCategory, cylinder: FiniteCategory, end: str) -> Functor:
    """C → C×𝓘 at the end ``end`` ("0" or "1")."""
    return Functor(C, cylinder,
                   {x: pair_label(x, end) for x in C.objects},
                   {m: pair_label(m, f"id_{end}") for m in C.morphisms},
                   name=f"{C.name}×{{{end}}}")


def cylinder_functor(f: Functor, g: Functor, h: NatTransformation, interval: FiniteCategory = None) -> Functor:
    """
    The functor 𝒞₁×𝓘 → 𝒞₂ packaging h: f ⇒ g.

    (X,0) ↦ f(X), (X,1) ↦ g(X), (w, i) ↦ g(w)∘h_X.

    Raises:
        ValidationError: If h is not a valid transformation f ⇒ g
    """
    from evrard.categories.standard import interval_category

    report = validate_nat_trans(h)
    if not (h.F.equals(f) and h.G.equals(g)):
        report.fail("endpoints", h.F.name, h.G.name, detail=f"expected {f.name} ⇒ {g.name}")
    require_valid(report, f"transformation {h.name}")

    interval = interval or interval_category()
    C, D = f.source, f.target
    cylinder = product_category(C, interval, name=f"{C.name}×𝓘")
    obj_map = {}
    for x in C.objects:
        obj_map[pair_label(x, "0")] = f.ob(x)
        obj_map[pair_label(x, "1")] = g.ob(x)
    mor_map = {}
    for w, record in C.morphisms.items():
        mor_map[pair_label(w, "id_0")] = f.mor(w)
        mor_map[pair_label(w, "id_1")] = g.mor(w)
        mor_map[pair_label(w, "i")] = D.compose(g.mor(w), h.at(record.dom))
    return Functor(cylinder, D, obj_map, mor_map, name=f"F[{f.name},{g.name},{h.name}]")


def poset_category(elements: Sequence[str], relations: Iterable[Tuple[str, str]], name: str = "") -> FiniteCategory:
    """
    The category of a finite poset: one morphism x≤y per related pair.

    Identities are "id_x", relations "x≤y". The relation is closed
    reflexively and transitively with networkx.

    Raises:
        CategoryError: "not a poset" if the relation has a cycle between distinct elements
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for x, y in relations:
        if x not in graph or y not in graph:
            raise CategoryError(f"Relation ({x}, {y}) mentions an unknown element")
        if x != y:
            graph.add_edge(x, y)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [edge[0] for edge in nx.find_cycle(graph)]
        raise CategoryError(f"not a poset: cycle through {' ≤ '.join(cycle)}")
    closure = nx.transitive_closure_dag(graph)

    def arrow(x: str, y: str) -> str:
        return f"id_{x}" if x == y else f"{x}≤{y}"

    records = [Morphism(arrow(x, x), x, x) for x in elements]
    for x in elements:
        for y in elements:
            if closure.has_edge(x, y):
                records.append(Morphism(arrow(x, y), x, y))
    by_id = {r.id: r for r in records}

    def compose(g: str, f: str) -> str:
        return arrow(by_id[f].dom, by_id[g].cod)

    return FiniteCategory.from_composition(list(elements), records, {x: arrow(x, x) for x in elements},
                                           compose, name=name or "P")

