import numpy as np
import pytest

from evrard.categories.category import (
    FiniteCategory,
    Functor,
    Morphism,
    NatTransformation,
    compose_functors,
    constant_functor,
    cylinder_functor,
    end_inclusion,
    identity_functor,
    poset_category,
    product_category,
    require_valid,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from evrard.categories.corpus import poset_corpus, random_monotone_functor, random_nat_trans, random_poset
from evrard.categories.standard import (
    chain_category,
    discrete_category,
    interval_constants,
    square_cone,
    terminal_category,
    to_terminal,
)
from evrard.categories.universal import find_initial, find_terminal
from evrard.errors import CategoryError, ValidationError


def test_standard_categories_validate(interval, square, idempotent):
    for C in (terminal_category(), interval, discrete_category(["a", "b"]), chain_category(4), square,
              square_cone(), idempotent):
        report = validate_category(C)
        assert report.passed, report.summary()


def test_square_boundary_counts(square):
    assert square.num_objects == 4
    assert square.num_morphisms == 8


def test_product_of_intervals(interval):
    P = product_category(interval, interval)
    assert P.num_objects == 4
    assert P.num_morphisms == 9
    assert validate_category(P).passed
    assert P.compose("(i,id_1)", "(id_0,i)") == "(i,i)"


def test_missing_composite_is_reported(interval):
    table = dict(interval.table)
    del table[("i", "id_0")]
    broken = FiniteCategory(interval.objects, interval.records, interval.identity, table, name="broken")
    report = validate_category(broken)
    assert not report.passed
    assert "composition totality" in report.laws()
    assert "right unit law" in report.laws()


def test_wrong_composite_endpoints(interval):
    table = dict(interval.table)
    table[("i", "id_0")] = "id_0"
    broken = FiniteCategory(interval.objects, interval.records, interval.identity, table, name="broken")
    laws = validate_category(broken).laws()
    assert "composition endpoints" in laws


def test_non_associative_table():
    # (g∘g)∘g = h∘g = h but g∘(g∘g) = g∘h = g
    records = [Morphism("id_y", "y", "y"), Morphism("g", "y", "y"), Morphism("h", "y", "y")]
    table = {
        ("id_y", "id_y"): "id_y",
        ("g", "id_y"): "g", ("id_y", "g"): "g",
        ("h", "id_y"): "h", ("id_y", "h"): "h",
        ("g", "g"): "h", ("h", "h"): "h",
        ("g", "h"): "g", ("h", "g"): "h",
    }
    C = FiniteCategory(["y"], records, {"y": "id_y"}, table)
    report = validate_category(C)
    assert "associativity" in report.laws()


def test_dangling_identity_and_duplicate():
    C = FiniteCategory(["a", "a"], [Morphism("m", "a", "b")], {"a": "nope"}, {})
    laws = validate_category(C).laws()
    assert "duplicate object" in laws
    assert "dangling endpoint" in laws
    assert "dangling identity" in laws


def test_require_valid_raises_with_report(interval):
    table = dict(interval.table)
    del table[("id_1", "i")]
    broken = FiniteCategory(interval.objects, interval.records, interval.identity, table)
    with pytest.raises(ValidationError) as excinfo:
        require_valid(validate_category(broken), "category")
    assert not excinfo.value.report.passed


def test_validate_functor_catches_bad_maps(interval):
    point = terminal_category()
    bad = Functor(interval, point, {"0": "*"}, {"id_0": "id_*", "id_1": "id_*", "i": "id_*"})
    assert validate_functor(bad).laws() == ["object map totality"]
    swapped = Functor(interval, interval, {"0": "1", "1": "0"},
                      {"id_0": "id_1", "id_1": "id_0", "i": "i"})
    laws = validate_functor(swapped).laws()
    assert "dom preservation" in laws
    assert "cod preservation" in laws


def test_naturality_failure(interval):
    constants = interval_constants()
    assert validate_nat_trans(constants['transformation']).passed
    backwards = NatTransformation(constants['const1'], constants['const0'], {"0": "i", "1": "i"})
    assert "component endpoints" in validate_nat_trans(backwards).laws()


def test_compose_functors_requires_matching_categories(interval):
    point = terminal_category()
    f = to_terminal(interval)
    with pytest.raises(CategoryError):
        compose_functors(f, f)
    g = constant_functor(point, interval, "1")
    assert compose_functors(f, g).equals(identity_functor(point))


def test_cylinder_functor_packages_transformation():
    constants = interval_constants()
    F = cylinder_functor(constants['const0'], constants['const1'], constants['transformation'])
    assert validate_functor(F).passed
    assert F.mor("(id_0,i)") == "i"
    for end, G in (("0", constants['const0']), ("1", constants['const1'])):
        back = compose_functors(F, end_inclusion(G.source, F.source, end))
        assert back.equals(G)


def test_poset_rejects_cycle():
    with pytest.raises(CategoryError, match="not a poset"):
        poset_category(["a", "b"], [("a", "b"), ("b", "a")])


def test_poset_closure(square):
    chain = chain_category(3)
    assert chain.hom("0", "2") == ["0≤2"]
    assert chain.compose("1≤2", "0≤1") == "0≤2"
    assert square.hom("c", "d") == []


def test_universal_objects(interval, square):
    assert find_initial(interval).obj == "0"
    assert find_terminal(interval).obj == "1"
    assert find_terminal(interval).certificate == {"0": 1, "1": 1}
    assert not find_initial(square).found
    assert find_terminal(square_cone()).obj == "t"


def test_random_corpus_is_reproducible():
    first = [(P.num_objects, P.num_morphisms) for P in poset_corpus(seed=3, count=50)]
    second = [(P.num_objects, P.num_morphisms) for P in poset_corpus(seed=3, count=50)]
    assert first == second
    for P in poset_corpus(seed=3, count=50):
        assert validate_category(P).passed


def test_random_functors_and_transformations_validate():
    rng = np.random.default_rng(11)
    for _ in range(10):
        P = random_poset(rng, max_objects=5)
        Q = random_poset(rng, max_objects=5, with_minimum=True)
        F = random_monotone_functor(rng, P, Q)
        if F is not None:
            assert validate_functor(F).passed
        assert validate_nat_trans(random_nat_trans(rng, P)).passed
