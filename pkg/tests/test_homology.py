import numpy as np
import pytest

from evrard.categories import (
    NatTransformation,
    discrete_category,
    identity_functor,
    interval_constants,
    square_boundary_inclusion,
    to_terminal,
)
from evrard.budget import Budget
from evrard.errors import BudgetExceeded, TruncationError, ValidationError
from evrard.homology import (
    ChainComplex,
    IntMatrix,
    chain_complex,
    diagonal_form,
    eliminate,
    format_homology,
    homology,
    homology_of_category,
    induced_chain_map,
    integer_kernel,
    is_loop_free,
    is_quasi_iso,
    longest_chain,
    mapping_cone,
    nat_trans_homology_agreement,
    nerve,
    smith_normal_form,
    solvable_over_integers,
)


class TestSmith:

    def test_invariant_factors_of_diagonal(self):
        assert smith_normal_form(np.array([[2, 0], [0, 3]])) == [1, 6]

    def test_sparse_elimination_agrees(self):
        result = eliminate(IntMatrix.from_dense(np.array([[2, 0], [0, 3]])))
        assert result.rank == 2
        assert result.torsion == [6]

    def test_diagonal_form_reconstructs_input(self):
        A = np.array([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], dtype=object)
        form = diagonal_form(A)
        assert (form.S.dot(form.D).dot(form.T) == A).all()
        assert (form.S.dot(form.S_inv) == np.eye(3, dtype=object)).all()
        assert smith_normal_form(A) == [2, 6, 12]

    def test_kernel_and_solvability(self):
        A = np.array([[1, 1, 0]], dtype=object)
        kernel = integer_kernel(A)
        assert kernel.shape == (3, 2)
        assert not A.dot(kernel).any()
        assert not solvable_over_integers(np.array([[2]]), np.array([3]))
        assert solvable_over_integers(np.array([[2]]), np.array([4]))


class TestNerve:

    def test_interval_nerve_is_complete(self, interval):
        nv = nerve(interval, 2)
        assert nv.dims() == (2, 1, 0)
        assert nv.complete

    def test_square_boundary_nerve(self, square):
        nv = nerve(square, 2)
        assert nv.dims() == (4, 4, 0)
        assert longest_chain(square) == 1

    def test_loopy_category(self, idempotent):
        assert not is_loop_free(idempotent)
        assert longest_chain(idempotent) is None
        nv = nerve(idempotent, 3)
        assert nv.dims() == (1, 1, 1, 1)
        assert nv.truncated

    def test_boundaries_square_to_zero(self, square, idempotent):
        for C in (square, idempotent):
            assert chain_complex(nerve(C, 3)).check_boundary_squares().passed


class TestHomology:

    def test_reference_values(self, interval, square):
        assert format_homology(homology_of_category(interval, 1)) == "H0=Z"
        assert format_homology(homology_of_category(square, 1)) == "H0=Z H1=Z"
        assert format_homology(homology_of_category(discrete_category(["a", "b"]), 0)) == "H0=Z^2"

    def test_torsion(self):
        cx = ChainComplex("M(2)", {0: ["p"], 1: ["e"]}, {1: IntMatrix(1, 1, [(0, 0, 2)])}, top=1, complete=True)
        groups = homology(cx, 1)
        assert groups[0].torsion == [2]
        assert format_homology(groups) == "H0=Z/2"

    def test_truncated_top_degree(self, idempotent):
        cx = chain_complex(nerve(idempotent, 2))
        groups = homology(cx, 2)
        assert groups[2].truncated
        assert str(groups[2]).endswith("?")
        with pytest.raises(TruncationError):
            homology(cx, 3)

    def test_complete_complex_vanishes_above_top(self, interval):
        groups = homology(chain_complex(nerve(interval, 1)), 3)
        assert all(g.is_zero() for g in groups[1:])


class TestWorkBudget:

    def test_default_work_limit_scales_with_limit(self):
        assert Budget(10).work_limit == 1000
        assert Budget(None).work_limit is None
        with pytest.raises(ValueError):
            Budget(10, work_limit=0)

    def test_elimination_spends_work(self):
        matrix = IntMatrix.from_dense(np.array([[1, 1], [1, -1]]))
        assert eliminate(matrix, budget=Budget(None, work_limit=100)).rank == 2
        with pytest.raises(BudgetExceeded, match="elimination"):
            eliminate(matrix, budget=Budget(None, work_limit=1))

    def test_boundary_matrices_spend_work(self, square):
        budget = Budget(None, work_limit=5)
        with pytest.raises(BudgetExceeded, match="boundary"):
            homology_of_category(square, 1, budget=budget)

    def test_nerve_is_charged_before_it_is_built(self, square):
        budget = Budget(3)
        with pytest.raises(BudgetExceeded, match="dimension 1"):
            nerve(square, 2, budget=budget)
        assert budget.used == 4


class TestQuasiIso:

    def test_collapse_of_interval(self, interval):
        report = is_quasi_iso(to_terminal(interval), 1)
        assert report.passed
        assert "necessary, not sufficient" in report.notes[0]

    def test_negative_control_fails_in_degree_zero(self, disc2_to_interval):
        report = is_quasi_iso(disc2_to_interval, 1)
        assert not report.passed
        assert ("homology mismatch", (0,)) in [(f.law, f.witness) for f in report.failures]

    def test_cycle_into_cone_fails_in_degree_one(self):
        report = is_quasi_iso(square_boundary_inclusion(), 1)
        assert [f.witness for f in report.failures if f.law == "homology mismatch"] == [(1,)]

    def test_identity_cone_is_acyclic(self, square):
        chain_map = induced_chain_map(identity_functor(square), 2)
        assert chain_map.check_commutes().passed
        cone = mapping_cone(chain_map)
        assert all(g.is_zero() for g in homology(cone, 1))

    def test_transformation_agreement(self):
        constants = interval_constants()
        assert nat_trans_homology_agreement(constants['transformation'], 1).passed

    def test_agreement_rejects_invalid_transformation(self):
        constants = interval_constants()
        backwards = NatTransformation(constants['const1'], constants['const0'], {"0": "i", "1": "i"})
        with pytest.raises(ValidationError):
            nat_trans_homology_agreement(backwards, 1)
