import pytest

from evrard.categories import (
    Functor,
    discrete_category,
    identity_functor,
    interval_constants,
    interval_identity,
    terminal_category,
    to_terminal,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from evrard.constructions import fiber
from evrard.errors import CategoryError, PreconditionError, TruncationError, ValidationError
from evrard.paths.homotopy import (
    EvrardHomotopy,
    check_evrard_homotopy,
    contraction_witness,
    homotopy_from_nat_trans,
    iq_homotopy_witness,
    witness_to_nat_trans_chain,
)
from evrard.paths.path_category import build_path_category, path_stage_inclusion
from evrard.paths.replacement import (
    build_replacement,
    check_replacement_identities,
    index_projection,
    replacement_stage_inclusion,
)
from evrard.paths.shift import (
    ell_Y,
    shift_functor,
    shift_preserves_fibers,
    theta1,
    theta2,
    u_dagger,
    u_dagger_up,
)
from evrard.paths.zigzag import constant_zigzag


@pytest.fixture(scope="module")
def strict_stages():
    f = identity_functor(terminal_category())
    g = interval_identity()
    return {
        'point': (build_replacement(f, 1, "str"), build_replacement(f, 2, "str")),
        'interval': (build_replacement(g, 1, "str"), build_replacement(g, 2, "str")),
    }


class TestPathCategory:

    def test_path_category_over_point(self):
        stage = build_path_category(terminal_category(), 2, "str", check_strictness=True)
        assert stage.category.num_objects == 2
        assert stage.category.num_morphisms == 4
        assert validate_category(stage.category).passed
        assert validate_functor(stage.p0).passed

    def test_projections_read_endpoints(self, interval):
        stage = build_path_category(interval, 2, "le", check_strictness=True)
        assert validate_category(stage.category).passed
        for which in (stage.p0, stage.p1):
            assert validate_functor(which).passed
        for o in stage.category.objects:
            n, Z = stage.decode(o)
            assert stage.p0.ob(o) == Z.start
            assert stage.p1.ob(o) == Z.end

    def test_stage_inclusion(self, interval):
        small = build_path_category(interval, 1, "le")
        big = build_path_category(interval, 2, "le")
        assert validate_functor(path_stage_inclusion(small, big)).passed
        with pytest.raises(CategoryError):
            path_stage_inclusion(big, small)

    def test_unknown_variant(self, interval):
        with pytest.raises(CategoryError):
            build_path_category(interval, 1, "lax")


class TestReplacement:

    @pytest.mark.parametrize("N, expected", [(1, 5), (2, 18)])
    def test_sizes_for_identity(self, id_interval, N, expected):
        stage = build_replacement(id_interval, N, "le")
        assert stage.category.num_objects == expected
        assert validate_category(stage.category).passed

    def test_negative_control_size(self, disc2_to_interval):
        assert build_replacement(disc2_to_interval, 1, "le").category.num_objects == 5

    def test_strict_identities(self, id_interval, disc2_to_interval):
        for f in (id_interval, disc2_to_interval):
            stage = build_replacement(f, 1, "le")
            assert check_replacement_identities(stage).passed

    def test_section_picks_constant_zigzags(self, id_interval, interval):
        stage = build_replacement(id_interval, 1, "le")
        assert stage.decode(stage.i.ob("0")) == ("0", 1, constant_zigzag(interval, "0", 1))
        assert stage.f_h.ob(stage.i.ob("1")) == "1"

    def test_inclusions_and_index_projection(self, id_interval):
        small = build_replacement(id_interval, 1, "le")
        big = build_replacement(id_interval, 2, "le", path=build_path_category(id_interval.target, 2, "le"))
        assert validate_functor(replacement_stage_inclusion(small, big)).passed
        assert validate_functor(index_projection(big)).passed
        with pytest.raises(CategoryError):
            replacement_stage_inclusion(big, small)

    def test_mismatched_prebuilt_path(self, id_interval):
        path = build_path_category(id_interval.target, 1, "le")
        with pytest.raises(CategoryError):
            build_replacement(id_interval, 2, "le", path=path)

    def test_rejects_invalid_functor(self, interval):
        swapped = Functor(interval, interval, {"0": "1", "1": "0"}, {"id_0": "id_1", "id_1": "id_0", "i": "i"})
        with pytest.raises(ValidationError):
            build_replacement(swapped, 1, "le")


class TestShift:

    def test_shift_and_theta(self, strict_stages):
        for small, big in strict_stages.values():
            shift = shift_functor(small, big)
            assert validate_functor(shift.functor).passed
            assert validate_nat_trans(shift.theta).passed
            assert shift_preserves_fibers(small, big, shift).passed

    def test_path_shift(self, interval):
        small = build_path_category(interval, 1, "str")
        big = build_path_category(interval, 2, "str")
        shift = shift_functor(small, big)
        assert validate_functor(shift.functor).passed
        assert validate_nat_trans(shift.theta).passed

    def test_u_daggers(self, strict_stages):
        small, big = strict_stages['interval']
        lower = u_dagger(small, big, "i")
        assert validate_functor(lower).passed
        assert lower.source.same_as(fiber(small.f_h, "0"))
        assert validate_functor(u_dagger_up(small, "i")).passed
        assert validate_nat_trans(theta1(small, big, "i")).passed
        assert validate_nat_trans(theta2(small, big, "i")).passed

    def test_ell(self, strict_stages):
        small, big = strict_stages['interval']
        for Y in ("0", "1"):
            result = ell_Y(small, big, Y)
            assert validate_functor(result.ell).passed
            assert validate_nat_trans(result.omega).passed
            assert result.triangle.passed

    def test_le_variant_has_no_successors(self, id_interval):
        small = build_replacement(id_interval, 1, "le")
        big = build_replacement(id_interval, 2, "le")
        assert validate_nat_trans(shift_functor(small, big).theta).passed
        with pytest.raises(PreconditionError):
            u_dagger(small, big, "i")
        with pytest.raises(PreconditionError):
            ell_Y(small, big, "1")

    def test_stages_must_be_consecutive(self, strict_stages):
        small, big = strict_stages['point']
        with pytest.raises(CategoryError):
            shift_functor(small, small)
        with pytest.raises(CategoryError):
            shift_functor(small, strict_stages['interval'][1])


class TestHomotopy:

    def test_transformation_gives_witness(self):
        constants = interval_constants()
        w = homotopy_from_nat_trans(constants['transformation'])
        assert check_evrard_homotopy(w).passed
        chain = witness_to_nat_trans_chain(w)
        assert len(chain.functors) == 3
        assert len(chain.transformations) == 2
        assert chain.functors[0].equals(constants['const0'])
        assert chain.functors[2].equals(constants['const1'])

    def test_wrong_endpoint_is_reported(self):
        constants = interval_constants()
        w = homotopy_from_nat_trans(constants['transformation'])
        bad = EvrardHomotopy(constants['const1'], constants['const1'], 1, w.H, w.host)
        report = check_evrard_homotopy(bad)
        assert report.laws() == ["p0 mismatch"]
        with pytest.raises(ValidationError):
            witness_to_nat_trans_chain(bad)

    @pytest.mark.parametrize("n", [1, 2])
    def test_contraction(self, interval, n):
        assert check_evrard_homotopy(contraction_witness(interval, n)).passed

    def test_iq_witness(self, id_interval):
        f = to_terminal(discrete_category(["a", "b"]))
        for g in (id_interval, f):
            stage = build_replacement(g, 1, "le")
            assert check_evrard_homotopy(iq_homotopy_witness(stage)).passed

    def test_iq_witness_needs_le(self, id_interval):
        with pytest.raises(TruncationError, match="standard inclusions"):
            iq_homotopy_witness(build_replacement(id_interval, 1, "str"))
