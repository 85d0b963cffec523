from itertools import product

import pytest

from evrard.budget import Budget
from evrard.categories import validate_category, validate_functor
from evrard.errors import BudgetExceeded, CategoryError
from evrard.homology.chains import format_homology, homology_of_category
from evrard.paths.lambda_n import build_lambda_n, lambda_functor, lambda_phi, lambda_phi_morphism
from evrard.paths.simplex import (
    StrictMonotone,
    compose_maps,
    coface,
    index_category,
    monotone_maps,
    standard_inclusion,
    successor,
)
from evrard.paths.zigzag import (
    compose_zigzag_morphisms,
    constant_zigzag,
    enumerate_zigzag_morphisms,
    enumerate_zigzags,
    identity_zigzag_morphism,
    validate_zigzag,
    zigzag_from_arrows,
    zigzag_morphism,
)


def brute_force_count(D, n):
    morphisms = list(D.morphisms)
    count = 0
    for forward in product(morphisms, repeat=n):
        for backward in product(morphisms, repeat=n):
            try:
                zigzag_from_arrows(D, forward, backward)
            except CategoryError:
                continue
            count += 1
    return count


@pytest.fixture
def up(interval):
    """0 —i→ 1 ←id_1— 1"""
    return zigzag_from_arrows(interval, ["i"], ["id_1"])


class TestSimplex:

    @pytest.mark.parametrize("N, variant, expected", [
        (2, "str", 4), (2, "le", 3), (3, "str", 11), (3, "le", 6),
    ])
    def test_index_category_sizes(self, N, variant, expected):
        category = index_category(N, variant)
        assert category.num_morphisms == expected
        assert validate_category(category).passed

    def test_truncated_strict_index_has_a_loop(self):
        # two parallel maps [1] ⇉ [2] until [3] fills the loop in
        assert format_homology(homology_of_category(index_category(2, "str"), 1)) == "H0=Z H1=Z"
        assert format_homology(homology_of_category(index_category(3, "str"), 1)) == "H0=Z"
        assert format_homology(homology_of_category(index_category(2, "le"), 1)) == "H0=Z"

    def test_stage_ids_are_stable(self):
        small, big = index_category(2, "str"), index_category(3, "str")
        assert set(small.morphisms) <= set(big.morphisms)

    def test_maps(self):
        phi = StrictMonotone(3, (1, 3))
        assert phi.label == "[2]→[3]:1,3"
        assert compose_maps(successor(phi, "str"), coface(2)).values == (1, 3)
        assert successor(phi, "str").values == (1, 3, 4)
        assert successor(phi, "le") == standard_inclusion(3, 4)
        assert [f.values for f in monotone_maps(2, 3, "str")] == [(1, 2), (1, 3), (2, 3)]
        assert monotone_maps(3, 2, "str") == []

    def test_rejects_bad_maps(self):
        with pytest.raises(CategoryError):
            StrictMonotone(3, (2, 2))
        with pytest.raises(CategoryError):
            StrictMonotone(2, (1, 3))
        with pytest.raises(CategoryError):
            monotone_maps(1, 2, "lax")
        with pytest.raises(CategoryError):
            index_category(0)


class TestZigZags:

    @pytest.mark.parametrize("n, expected", [(1, 5), (2, 13), (3, 34)])
    def test_counts_on_interval(self, interval, n, expected):
        assert len(list(enumerate_zigzags(interval, n))) == expected

    @pytest.mark.parametrize("n", [1, 2])
    def test_counts_match_brute_force(self, interval, square, n):
        for D in (interval, square):
            assert len(list(enumerate_zigzags(D, n))) == brute_force_count(D, n)

    def test_shape(self, interval, up):
        assert up.positions() == ("0", "1", "1")
        assert up.label == "Z[i/id_1]"
        assert validate_zigzag(interval, up) == []
        assert constant_zigzag(interval, "0", 2).label == "Z[id_0/id_0, id_0/id_0]"
        with pytest.raises(CategoryError):
            zigzag_from_arrows(interval, ["i"], ["id_0"])

    def test_budget(self, interval):
        with pytest.raises(BudgetExceeded):
            list(enumerate_zigzags(interval, 3, budget=Budget(10)))

    def test_morphisms(self, interval, up):
        top = constant_zigzag(interval, "1", 1)
        t = zigzag_morphism(interval, up, top, ["i", "id_1", "id_1"])
        assert t.bar(0) == "i"
        assert list(enumerate_zigzag_morphisms(interval, up, top)) == [t]
        assert list(enumerate_zigzag_morphisms(interval, top, up)) == []
        assert compose_zigzag_morphisms(interval, identity_zigzag_morphism(interval, top), t) == t

    def test_non_commuting_square(self, idempotent):
        Z = constant_zigzag(idempotent, "x", 1)
        with pytest.raises(CategoryError, match="forward square 1"):
            zigzag_morphism(idempotent, Z, Z, ["e", "id_x", "e"])
        with pytest.raises(CategoryError):
            zigzag_morphism(idempotent, Z, Z, ["e", "e"])


class TestLambda:

    def test_placement(self, interval, up):
        assert lambda_phi(interval, StrictMonotone(2, (2,)), up).label == "Z[id_0/id_0, i/id_1]"
        assert lambda_phi(interval, StrictMonotone(2, (1,)), up).label == "Z[i/id_1, id_1/id_1]"
        with pytest.raises(CategoryError):
            lambda_phi(interval, StrictMonotone(3, (1, 2)), up)

    def test_functorial_in_phi(self, interval):
        for Z in enumerate_zigzags(interval, 1):
            for phi in monotone_maps(1, 2, "str"):
                for psi in monotone_maps(2, 3, "str"):
                    direct = lambda_phi(interval, compose_maps(psi, phi), Z)
                    stepwise = lambda_phi(interval, psi, lambda_phi(interval, phi, Z))
                    assert direct == stepwise

    def test_layers(self, interval):
        one = build_lambda_n(interval, 1)
        two = build_lambda_n(interval, 2)
        assert one.category.num_objects == 5
        assert two.category.num_objects == 13
        for layer in (one, two):
            assert validate_category(layer.category).passed
            assert validate_functor(layer.p0).passed
            assert validate_functor(layer.p1).passed
        for phi in monotone_maps(1, 2, "str"):
            assert validate_functor(lambda_functor(phi, one, two)).passed

    def test_morphism_image_is_a_morphism(self, interval, up):
        top = constant_zigzag(interval, "1", 1)
        t = zigzag_morphism(interval, up, top, ["i", "id_1", "id_1"])
        image = lambda_phi_morphism(interval, StrictMonotone(2, (2,)), t)
        assert image.components == ("i", "i", "i", "id_1", "id_1")
        zigzag_morphism(interval, image.source, image.target, image.components)

    def test_hosted_subcategory(self, interval, up):
        hosted = build_lambda_n(interval, 1, zigzags=[up, constant_zigzag(interval, "1", 1)])
        assert hosted.category.num_objects == 2
        assert hosted.category.num_morphisms == 3
        with pytest.raises(CategoryError):
            build_lambda_n(interval, 2, zigzags=[up])
