import pytest

from evrard.categories import (
    discrete_category,
    identity_functor,
    interval_category,
    object_inclusion,
    square_boundary_inclusion,
    to_terminal,
    validate_functor,
    validate_nat_trans,
)
from evrard.checks import (
    NO_COUNTEREXAMPLE,
    AdjointCheck,
    CheckItem,
    FibrationCheck,
    ReplacementCheck,
    ReplacementReport,
    TheoremBCheck,
    base_change,
    check_corollary_hypothesis,
    check_theorem_b_hypothesis,
    cobase_change,
    find_left_adjoint,
    find_right_adjoint,
    is_precofibred,
    is_prefibred,
    remark_probe,
    verify_evrard_replacement,
)
from evrard.budget import Budget
from evrard.errors import BudgetExceeded, CategoryError, PreconditionError


class TestAdjoints:

    def test_point_at_zero(self, interval):
        F = object_inclusion(interval, "0")
        right = find_right_adjoint(F)
        assert right.found
        assert validate_functor(right.adjoint).passed
        assert right.triangles.passed
        left = find_left_adjoint(F)
        assert not left.found
        assert left.witness == "1"
        with pytest.raises(CategoryError):
            left.unit_counit()

    def test_point_at_one(self, interval):
        F = object_inclusion(interval, "1")
        assert find_left_adjoint(F).found
        assert find_right_adjoint(F).witness == "0"

    def test_collapse_has_both_adjoints(self, interval):
        F = to_terminal(interval)
        right = find_right_adjoint(F)
        left = find_left_adjoint(F)
        assert right.adjoint.ob("*") == "1"
        assert left.adjoint.ob("*") == "0"
        unit, counit = right.unit_counit()
        assert validate_nat_trans(unit).passed
        assert validate_nat_trans(counit).passed
        assert right.to_dict()['triangle_identities']

    def test_negative_control_witnesses(self, disc2_to_interval):
        assert find_right_adjoint(disc2_to_interval).witness == "1"
        assert find_left_adjoint(disc2_to_interval).witness == "0"
        assert find_left_adjoint(disc2_to_interval).to_dict() == {
            'functor': disc2_to_interval.name, 'side': "left", 'found': False, 'witness': "0",
        }

    def test_check_rejects_unknown_side(self, id_interval):
        with pytest.raises(ValueError):
            AdjointCheck(id_interval, side="up")
        assert AdjointCheck(id_interval, side="left").run().found


class TestFibrations:

    def test_negative_control_is_neither(self, disc2_to_interval):
        pre = is_prefibred(disc2_to_interval)
        assert not pre.passed
        assert pre.witness == ("0", "⟨b|i⟩")
        co = is_precofibred(disc2_to_interval)
        assert co.witness == ("1", "⟨a|i⟩")
        with pytest.raises(PreconditionError):
            pre.adjoint_at("0")

    def test_identity_is_both(self, id_interval):
        report = FibrationCheck(id_interval).run()
        assert report['prefibred'].passed
        assert report['precofibred'].passed
        assert report['prefibred'].to_dict()['witness'] is None

    def test_base_change(self, id_interval):
        pull = base_change(id_interval, "i")
        assert pull.name == "i*"
        assert pull.ob("1") == "0"
        push = cobase_change(id_interval, "i")
        assert push.name == "i_*"
        assert push.ob("0") == "1"

    def test_base_change_needs_fibration(self, disc2_to_interval):
        with pytest.raises(PreconditionError):
            base_change(disc2_to_interval, "i")
        with pytest.raises(PreconditionError):
            cobase_change(disc2_to_interval, "i")

    def test_remark_probe(self, disc2_to_interval, id_interval):
        verdicts = remark_probe(disc2_to_interval)
        assert verdicts['prefibred'] == "confirmed: not prefibred (witness Y=0, d=⟨b|i⟩)"
        assert verdicts['precofibred'].startswith("confirmed: not precofibred")
        assert remark_probe(id_interval) == {'prefibred': NO_COUNTEREXAMPLE, 'precofibred': NO_COUNTEREXAMPLE}


class TestTheoremB:

    def test_negative_control_fails_in_degree_zero(self, disc2_to_interval):
        report = check_theorem_b_hypothesis(disc2_to_interval, 1)
        assert not report.passed
        [entry] = report.failures
        assert entry.v == "i"
        assert entry.failing_degrees() == [0]
        assert report.to_dict()['verdict'] == "fail"

    def test_frame(self, disc2_to_interval):
        frame = check_theorem_b_hypothesis(disc2_to_interval, 1).to_frame()
        assert list(frame.columns) == ['Morphism', 'From', 'To', 'Functor', 'Sizes', 'Result', 'Failing degrees']
        row = frame[frame['Morphism'] == "i"].iloc[0]
        assert row['Result'] == "FAIL"
        assert row['Failing degrees'] == "0"
        assert set(frame[frame['Morphism'] != "i"]['Result']) == {"forced"}

    def test_identity_passes(self, id_interval):
        assert check_theorem_b_hypothesis(id_interval, 1).passed
        assert check_theorem_b_hypothesis(id_interval, 1, dual=True).passed

    def test_corollary(self, id_interval, disc2_to_interval):
        assert check_corollary_hypothesis(id_interval, 1).passed
        with pytest.raises(PreconditionError):
            check_corollary_hypothesis(disc2_to_interval, 1)

    def test_loopy_target_needs_opt_in(self, idempotent):
        f = identity_functor(idempotent)
        with pytest.raises(PreconditionError):
            TheoremBCheck(f).run()
        report = TheoremBCheck(f, allow_loops=True).run()
        assert [entry.v for entry in report.entries] == ["e", "id_x"]

    def test_negative_degree_bound(self, id_interval):
        with pytest.raises(ValueError):
            check_theorem_b_hypothesis(id_interval, -1)


class TestReplacementVerdict:

    def test_verdict_order(self):
        report = ReplacementReport("f", 1, 1, "le")
        report.items.append(CheckItem('strict', "q∘i = id", True))
        assert report.verdict == "pass"
        report.unstable = ["q"]
        assert report.verdict == "unstable at 1"
        report.items.append(CheckItem('homology', "q is a homology isomorphism", False, answer="q"))
        assert report.verdict == "unstable at 1"
        assert not report.passed

    def test_stable_homology_failure_fails(self):
        report = ReplacementReport("f", 2, 1, "le", unstable=["q"])
        report.items.append(CheckItem('homology', "Theorem B hypothesis for f_h", False, answer="theorem B for f_h"))
        assert report.verdict == "fail"

    def test_strict_failure_beats_instability(self):
        report = ReplacementReport("f", 2, 1, "le", unstable=["q"])
        report.items.append(CheckItem('homology', "q is a homology isomorphism", False, answer="q"))
        report.items.append(CheckItem('strict', "q∘i = id", False))
        assert report.verdict == "fail"

    def test_rejects_bad_parameters(self, id_interval):
        with pytest.raises(ValueError):
            verify_evrard_replacement(id_interval, 0, 1)
        with pytest.raises(ValueError):
            ReplacementCheck(id_interval, max_stage=0)


@pytest.mark.slow
class TestReplacementEndToEnd:

    def test_negative_control_is_repaired(self, disc2_to_interval):
        report = verify_evrard_replacement(disc2_to_interval, 2, 1, "le", witnesses=False, stability=False)
        assert report.verdict == "pass"
        assert report.theorem_b.passed

    def test_collapse_of_two_points(self):
        f = to_terminal(discrete_category(["a", "b"]))
        report = verify_evrard_replacement(f, 1, 1, "le")
        assert report.verdict == "pass"
        assert all(report.to_dict()['sections'].values())
        assert "Section" in report.to_frame().columns

    def test_interval_is_already_fibrant_enough(self):
        report = ReplacementCheck(identity_functor(interval_category()), max_dim=1, max_stage=1).run()
        assert report.section_passed('strict')

    def test_strict_variant_is_unstable_at_two(self):
        # Δ_str truncated at [2] carries an H1 that [3] kills, and ℋ inherits it
        report = verify_evrard_replacement(to_terminal(interval_category()), 2, 1, "str")
        assert report.unstable == ["q"]
        assert report.verdict == "unstable at 2"
        assert report.section_passed('strict')
        assert report.section_passed('witness')
        [iq] = [item for item in report.items if item.name == "i∘q ∼ id"]
        assert iq.skipped
        assert "not a homology isomorphism" in iq.detail

    def test_square_into_cone_stops_at_the_budget(self):
        budget = Budget(20_000)
        with pytest.raises(BudgetExceeded):
            verify_evrard_replacement(square_boundary_inclusion(), 2, 1, "le", budget=budget,
                                      witnesses=False, stability=False)
        assert budget.used > budget.limit or budget.work_used > budget.work_limit
