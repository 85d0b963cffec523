import networkx as nx
import pytest

from evrard.budget import Budget
from evrard.categories import (
    constant_functor,
    identity_functor,
    object_inclusion,
    terminal_category,
    to_terminal,
    validate_category,
    validate_functor,
)
from evrard.constructions import (
    CatValuedFunctor,
    comma_over,
    comma_under,
    decompose_functor,
    fiber,
    fiber_inclusion_over,
    fiber_inclusion_under,
    functor_from_lax_data,
    grothendieck,
    grothendieck_map,
    induced_over_map,
    induced_under_map,
    over_category,
    pullback_category,
    same_lax_data,
    under_category,
)
from evrard.errors import BudgetExceeded, CategoryError, ValidationError


def components(C):
    graph = nx.Graph()
    graph.add_nodes_from(C.objects)
    graph.add_edges_from((C.dom(m), C.cod(m)) for m in C.morphisms)
    return nx.number_connected_components(graph)


@pytest.fixture
def chain_family(interval):
    """F: 𝓘 → Cat with F(0) = *, F(1) = 𝓘 and F(i) picking 0."""
    point = terminal_category()
    return CatValuedFunctor(
        interval,
        {"0": point, "1": interval},
        {"id_0": identity_functor(point), "id_1": identity_functor(interval),
         "i": object_inclusion(interval, "0")},
        name="F",
    )


class TestComma:

    def test_under_categories_of_negative_control(self, disc2_to_interval):
        under0 = comma_under(disc2_to_interval, "0")
        under1 = comma_under(disc2_to_interval, "1")
        assert under0.category.objects == ["⟨a|id_0⟩", "⟨b|i⟩"]
        assert under1.category.objects == ["⟨b|id_1⟩"]
        assert components(under0.category) == 2
        assert components(under1.category) == 1
        assert under0.decode("⟨b|i⟩") == ("b", "i")
        assert under0.projection_j.ob("⟨b|i⟩") == "b"

    def test_over_category_of_negative_control(self, disc2_to_interval):
        over1 = comma_over(disc2_to_interval, "1")
        assert over1.category.objects == ["⟨a|i⟩", "⟨b|id_1⟩"]
        assert validate_category(over1.category).passed

    def test_comma_of_identity_has_universal_objects(self, interval):
        under = under_category(interval, "0")
        assert under.category.hom("⟨0|id_0⟩", "⟨1|i⟩") == ["⟨i|id_0⟩"]
        assert under.universal.obj == "⟨0|id_0⟩"
        over = over_category(interval, "0")
        assert over.category.objects == ["⟨0|id_0⟩"]
        assert over_category(interval, "1").universal.obj == "⟨1|id_1⟩"

    def test_induced_maps(self, disc2_to_interval):
        pull = induced_under_map(disc2_to_interval, "i")
        assert pull.obj_map == {"⟨b|id_1⟩": "⟨b|i⟩"}
        assert validate_functor(pull).passed
        push = induced_over_map(disc2_to_interval, "i")
        assert push.obj_map == {"⟨a|id_0⟩": "⟨a|i⟩"}
        assert validate_functor(push).passed

    def test_induced_map_rejects_foreign_comma(self, disc2_to_interval, id_interval):
        with pytest.raises(CategoryError):
            induced_under_map(disc2_to_interval, "i", under_source=comma_under(id_interval, "1"))

    def test_fibers_and_inclusions(self, disc2_to_interval, id_interval):
        assert fiber(disc2_to_interval, "0").objects == ["a"]
        inclusion = fiber_inclusion_under(disc2_to_interval, "0")
        assert inclusion.ob("a") == "⟨a|id_0⟩"
        assert validate_functor(inclusion).passed
        assert fiber_inclusion_over(id_interval, "1").ob("1") == "⟨1|id_1⟩"

    def test_projection_bracket(self, id_interval):
        comma = comma_under(id_interval, "0")
        bracket = comma.projection_bracket()
        assert bracket.ob("⟨1|i⟩") == "⟨1|i⟩"
        assert validate_functor(bracket).passed

    def test_unknown_base_object(self, disc2_to_interval):
        with pytest.raises(CategoryError):
            comma_under(disc2_to_interval, "2")

    def test_budget(self, disc2_to_interval):
        with pytest.raises(BudgetExceeded):
            comma_under(disc2_to_interval, "0", budget=Budget(1))

    def test_composition_table_spends_work(self, disc2_to_interval):
        # two objects, two identities, two composable pairs
        budget = Budget(None, work_limit=1)
        with pytest.raises(BudgetExceeded, match="composition table"):
            comma_under(disc2_to_interval, "0", budget=budget)
        assert budget.work_used == 2


class TestGrothendieck:

    def test_total_category_is_a_chain(self, chain_family):
        total = grothendieck(chain_family)
        C = total.category
        assert C.objects == ["(0,*)", "(1,0)", "(1,1)"]
        assert C.num_morphisms == 6
        assert validate_category(C).passed
        assert C.compose("(id_1,i|0)", "(i,id_0|*)") == "(i,i|*)"
        assert total.decode_morphism("(i,i|*)") == ("i", "i", "*")
        assert validate_functor(total.projection).passed

    def test_non_strict_family_is_rejected(self, chain_family, interval):
        chain_family.on_morphisms["id_1"] = constant_functor(interval, interval, "0")
        with pytest.raises(ValidationError) as excinfo:
            grothendieck(chain_family)
        assert "identity strictness" in excinfo.value.report.laws()

    def test_lax_data_round_trip(self, chain_family):
        total = grothendieck(chain_family)
        data = decompose_functor(total, total.projection)
        rebuilt = functor_from_lax_data(total, *data)
        assert rebuilt.equals(total.projection)
        assert same_lax_data(decompose_functor(total, rebuilt), data)

    def test_identity_family_induces_identity(self, chain_family):
        total = grothendieck(chain_family)
        alpha = {K: identity_functor(chain_family(K)) for K in chain_family.source.objects}
        assert grothendieck_map(alpha, total, total).equals(identity_functor(total.category))

    def test_budget(self, chain_family):
        with pytest.raises(BudgetExceeded):
            grothendieck(chain_family, budget=Budget(3))


class TestPullback:

    def test_pullback_along_point_is_fiber(self, disc2_to_interval, interval):
        result = pullback_category(disc2_to_interval, object_inclusion(interval, "0"))
        assert result.category.objects == ["(a;*)"]
        assert result.left.ob("(a;*)") == "a"

    def test_pullback_of_identities(self, id_interval):
        result = pullback_category(id_interval, id_interval)
        assert result.category.num_objects == 2
        assert result.category.num_morphisms == 3
        assert validate_category(result.category).passed

    def test_targets_must_agree(self, disc2_to_interval, interval):
        with pytest.raises(CategoryError):
            pullback_category(disc2_to_interval, to_terminal(interval))
