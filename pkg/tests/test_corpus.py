import numpy as np
import pytest

from evrard.categories import identity_functor, validate_functor, validate_nat_trans
from evrard.categories.corpus import poset_corpus, random_nat_trans, random_poset
from evrard.checks import NO_COUNTEREXAMPLE, check_theorem_b_hypothesis, is_precofibred, is_prefibred, remark_probe
from evrard.homology import format_homology, homology_of_category, is_quasi_iso, nat_trans_homology_agreement
from evrard.paths import (
    build_lambda_n,
    build_replacement,
    ell_Y,
    shift_functor,
    shift_preserves_fibers,
    theta1,
    theta2,
)

CORPUS = poset_corpus(seed=2024, count=50)
SMALL_CORPUS = poset_corpus(seed=5, count=50, max_objects=4)
TINY_CORPUS = poset_corpus(seed=9, count=10, max_objects=3)


def names(posets):
    return [P.name for P in posets]


def test_corpus_is_large_enough():
    assert len(CORPUS) == 50
    assert len(set(names(CORPUS))) == 50


@pytest.mark.parametrize("P", CORPUS, ids=names(CORPUS))
def test_identity_fulfils_theorem_b(P):
    assert check_theorem_b_hypothesis(identity_functor(P), 1).passed


@pytest.mark.parametrize("seed", range(50))
def test_poset_with_minimum_is_acyclic(seed):
    P = random_poset(np.random.default_rng(seed), with_minimum=True)
    groups = homology_of_category(P, 3)
    assert format_homology(groups) == "H0=Z"
    assert [g.is_zero() for g in groups[1:]] == [True, True, True]


@pytest.mark.parametrize("seed", range(20))
def test_transformations_agree_on_homology(seed):
    rng = np.random.default_rng(100 + seed)
    P = random_poset(rng, max_objects=5)
    h = random_nat_trans(rng, P)
    assert validate_nat_trans(h).passed
    assert nat_trans_homology_agreement(h, 2).passed


@pytest.mark.parametrize("P", SMALL_CORPUS, ids=names(SMALL_CORPUS))
def test_end_projection_of_first_layer(P):
    layer = build_lambda_n(P, 1)
    assert is_quasi_iso(layer.p1, 1).passed
    assert is_quasi_iso(layer.p0, 1).passed


@pytest.mark.slow
@pytest.mark.parametrize("P", TINY_CORPUS, ids=names(TINY_CORPUS))
def test_end_projection_of_second_layer(P):
    layer = build_lambda_n(P, 2)
    assert is_quasi_iso(layer.p1, 1).passed


@pytest.mark.slow
@pytest.mark.parametrize("P", TINY_CORPUS[:5], ids=names(TINY_CORPUS[:5]))
def test_shift_witnesses(P):
    f = identity_functor(P)
    small, big = build_replacement(f, 1, "str"), build_replacement(f, 2, "str")
    shift = shift_functor(small, big)
    assert validate_functor(shift.functor).passed
    assert validate_nat_trans(shift.theta).passed
    assert shift_preserves_fibers(small, big, shift).passed
    for u in P.non_identity_morphisms():
        assert validate_nat_trans(theta1(small, big, u)).passed
        assert validate_nat_trans(theta2(small, big, u)).passed
    for Y in P.objects:
        result = ell_Y(small, big, Y)
        assert validate_nat_trans(result.omega).passed
        assert result.triangle.passed


@pytest.mark.slow
def test_remark_probe_on_replacement(id_interval):
    stage = build_replacement(id_interval, 2, "le")
    verdicts = remark_probe(stage.f_h)
    searches = {'prefibred': is_prefibred, 'precofibred': is_precofibred}
    for side, verdict in verdicts.items():
        report = searches[side](stage.f_h, stop_at_first=True)
        if report.passed:
            assert verdict == NO_COUNTEREXAMPLE
        else:
            Y, _ = report.witness
            assert Y in id_interval.target.objects
            assert verdict.startswith(f"confirmed: not {side} (witness Y={Y}")
