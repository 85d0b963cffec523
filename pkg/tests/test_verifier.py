import pandas as pd
import pytest

from evrard.categories import discrete_category, to_terminal
from evrard_verifier import EvrardVerifier


def test_check_descriptions():
    table = EvrardVerifier.describe_checks()
    assert table['Check'].tolist() == ["Theorem B hypothesis", "Fibrant replacement", "Pre-(co)fibration probe",
                                       "Adjoint search"]
    replacement = table.set_index('Check').loc["Fibrant replacement"]
    assert "q∘i = id and f_h∘i = f" in replacement['Claims']


def test_raw_check_prints_its_claims(capsys, disc2_to_interval):
    report = EvrardVerifier(disc2_to_interval).check_raw()
    assert not report.passed
    out = capsys.readouterr().out
    assert "Every induced functor between comma categories is a homology isomorphism" in out
    assert "❌ Theorem B hypothesis: fail" in out


def test_unknown_check(disc2_to_interval):
    with pytest.raises(ValueError):
        EvrardVerifier(disc2_to_interval, verbose=False).check("sideways")


@pytest.mark.slow
def test_run_all_and_export(tmp_path):
    f = to_terminal(discrete_category(["a", "b"]))
    verifier = EvrardVerifier(f, max_stage=1, max_dim=1, variant="le", verbose=False)
    results = verifier.run_all()
    assert results['raw'].passed
    assert results['replacement'].verdict == "pass"
    assert results['homology']['Homology'].tolist() == ["H0=Z^2", "H0=Z"]

    path = tmp_path / "new" / "collapse.xlsx"
    verifier.export_results(results, str(path))
    sheets = pd.read_excel(path, sheet_name=None)
    assert list(sheets) == ["Summary", "Checks", "homology", "raw", "replacement"]
    assert sheets["Summary"]["Check"].tolist() == ["raw", "replacement"]
    assert sheets["Summary"]["Verdict"].tolist() == ["pass", "pass"]
