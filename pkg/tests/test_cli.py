import json
import os

import pandas as pd
import pytest

import evrard_cli

from evrard.categories import CheckReport
from evrard.errors import BudgetExceeded, CategoryError, InputError, TruncationError, ValidationError
from evrard.homology import is_quasi_iso
from evrard_cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_PASS, exit_code_for, main
from tests.conftest import corpus_file


def run_json(capsys, *argv):
    code = main(list(argv) + ["--json"])
    return code, json.loads(capsys.readouterr().out)


def test_exit_code_mapping():
    assert exit_code_for(ValidationError("bad", CheckReport("x"))) == EXIT_FAIL
    assert exit_code_for(CategoryError("bad")) == EXIT_INPUT
    assert exit_code_for(InputError("bad")) == EXIT_INPUT
    assert exit_code_for(BudgetExceeded("zig-zags", 11, 10)) == EXIT_BUDGET
    assert exit_code_for(TruncationError("deep")) == EXIT_FAIL


def test_validate(capsys):
    assert main(["validate", corpus_file("interval.json"), corpus_file("id_interval.json")]) == EXIT_PASS
    code, payload = run_json(capsys, "validate", corpus_file("broken_interval.json"))
    assert code == EXIT_FAIL
    assert payload['verdict'] == "fail"
    assert not payload['documents'][0]['passed']


def test_homology_json(capsys):
    code, payload = run_json(capsys, "homology", corpus_file("square_boundary.json"))
    assert code == EXIT_PASS
    assert payload['check'] == "homology"
    [result] = payload['results']
    assert result['text'] == "H0=Z H1=Z"
    assert result['degree_bound'] == 1


def test_missing_file(capsys):
    code, payload = run_json(capsys, "homology", corpus_file("nowhere.json"))
    assert code == EXIT_INPUT
    assert payload['kind'] == "InputError"


def test_wrong_document_type():
    assert main(["replace", corpus_file("interval.json")]) == EXIT_INPUT


def test_invalid_setting():
    assert main(["replace", corpus_file("id_interval.json"), "--max-stage", "0"]) == EXIT_INPUT


def test_replace_budget(capsys):
    code, payload = run_json(capsys, "replace", corpus_file("id_interval.json"), "--max-stage", "1", "--budget", "3")
    assert code == EXIT_BUDGET
    assert payload['exit_code'] == EXIT_BUDGET


def test_replace_writes_stage(capsys, tmp_path):
    out = str(tmp_path / "stage")
    code, payload = run_json(capsys, "replace", corpus_file("id_interval.json"), "--max-stage", "1",
                             "--output", out)
    assert code == EXIT_PASS
    assert payload['counts']['objects'] == 5
    assert sorted(os.listdir(out)) == ["f_h.json", "i.json", "q.json", "replacement.json", "source.json",
                                       "target.json"]
    assert main(["validate", os.path.join(out, "q.json")]) == EXIT_PASS


def test_raw_theorem_b(capsys):
    code, payload = run_json(capsys, "check-b", corpus_file("disc2_to_interval.json"), "--raw")
    assert code == EXIT_FAIL
    assert payload['verdict'] == "fail"
    assert [w['v'] for w in payload['witnesses']] == ["i"]
    assert main(["check-b", corpus_file("id_interval.json"), "--raw"]) == EXIT_PASS


def test_adjoint(capsys):
    code, payload = run_json(capsys, "adjoint", corpus_file("point_zero.json"), "--right")
    assert code == EXIT_PASS
    assert payload['objects'] == {"0": "*", "1": "*"}
    code, payload = run_json(capsys, "adjoint", corpus_file("point_zero.json"), "--left")
    assert code == EXIT_FAIL
    assert payload['witness'] == "1"


def test_corpus(capsys):
    code, payload = run_json(capsys, "corpus", "--seed", "7", "--count", "3")
    assert code == EXIT_PASS
    assert len(payload['rows']) == 3


def test_corpus_quasi_isomorphisms_share_the_budget(monkeypatch, capsys):
    caches = []

    def recording(F, k, cache=None):
        caches.append(cache)
        return is_quasi_iso(F, k, cache=cache)

    monkeypatch.setattr(evrard_cli, "is_quasi_iso", recording)
    code, _ = run_json(capsys, "corpus", "--seed", "7", "--count", "2", "--budget", "150000")
    assert code == EXIT_PASS
    assert len(caches) == 2
    assert all(cache is not None and cache.budget.limit == 150000 for cache in caches)
    assert caches[0].budget is caches[1].budget


@pytest.mark.slow
def test_replacement_check(capsys):
    code, payload = run_json(capsys, "check-b", corpus_file("disc2_to_terminal.json"), "--max-stage", "1")
    assert code == EXIT_PASS
    assert payload['check'] == "evrard-replacement"


@pytest.mark.slow
def test_replacement_check_exports_excel(capsys, tmp_path):
    path = tmp_path / "reports" / "disc2.xlsx"
    code, payload = run_json(capsys, "check-b", corpus_file("disc2_to_terminal.json"), "--max-stage", "1",
                             "--excel", str(path))
    assert code == EXIT_PASS
    sheets = pd.read_excel(path, sheet_name=None)
    assert list(sheets) == ["Summary", "Checks", "replacement"]
    assert sheets["Summary"]["Verdict"].tolist() == ["pass"]
    assert "Fibrant replacement" in sheets["Checks"]["Check"].tolist()
