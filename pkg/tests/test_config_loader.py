import json

import pytest

from config_loader import (
    DocumentLoader,
    category_document,
    load_document,
    load_run_config,
    parse_category,
    read_json,
    save_category,
)
from evrard.categories import (
    FiniteCategory,
    Functor,
    NatTransformation,
    square_boundary,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from evrard.errors import InputError
from tests.conftest import CONFIG_PATH, corpus_file


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding='utf-8')
    return str(path)


class TestCategories:

    def test_poset_document(self):
        C = parse_category({'objects': ["a", "b", "c"], 'poset': True, 'relations': [["a", "b"], ["b", "c"]]})
        assert C.hom("a", "c") == ["a≤c"]
        assert validate_category(C).passed

    def test_poset_cycle_is_an_input_error(self):
        with pytest.raises(InputError, match="relations"):
            parse_category({'objects': ["a", "b"], 'poset': True, 'relations': [["a", "b"], ["b", "a"]]})

    def test_missing_composite_names_the_field(self):
        doc = read_json(corpus_file("interval.json"))
        doc['compose'] = [entry for entry in doc['compose'] if entry['after'] != "i"]
        with pytest.raises(InputError) as excinfo:
            parse_category(doc, "interval.json")
        assert excinfo.value.field == 'compose'
        assert "missing composite" in str(excinfo.value)

    def test_broken_table_loads_but_does_not_validate(self):
        C = load_document(corpus_file("broken_interval.json"))
        report = validate_category(C)
        assert not report.passed
        assert "composition endpoints" in report.laws()

    def test_saved_category_reloads(self, tmp_path):
        path = str(tmp_path / "square.json")
        save_category(path, square_boundary(), quiet=True)
        C = load_document(path)
        assert C.same_as(square_boundary())
        with open(path, encoding='utf-8') as f:
            first = f.read()
        save_category(path, C, quiet=True)
        with open(path, encoding='utf-8') as f:
            assert f.read() == first

    def test_save_creates_missing_folders(self, tmp_path):
        path = tmp_path / "output" / "nested" / "square.json"
        save_category(str(path), square_boundary(), quiet=True)
        assert path.exists()
        assert load_document(str(path)).same_as(square_boundary())

    def test_document_decoding_block(self):
        doc = category_document(square_boundary())
        assert doc['type'] == 'category'
        assert len(doc['objects']) == 4


class TestReferences:

    def test_functor_resolves_relative_files(self):
        F = load_document(corpus_file("point_zero.json"))
        assert isinstance(F, Functor)
        assert F.ob("*") == "0"
        assert validate_functor(F).passed

    def test_transformation_shares_categories(self):
        loader = DocumentLoader()
        h = loader.load(corpus_file("const0_to_const1.json"))
        assert isinstance(h, NatTransformation)
        assert h.F.source is h.G.source
        assert validate_nat_trans(h).passed

    def test_inline_documents(self, tmp_path):
        point = {'type': 'category', 'objects': ["*"], 'morphisms': [{'id': "id_*", 'dom': "*", 'cod': "*"}],
                 'identity': {"*": "id_*"}, 'compose': [{'after': "id_*", 'then': "id_*", 'equals': "id_*"}]}
        path = write(tmp_path, "f.json", {'type': 'functor', 'source': point, 'target': point,
                                          'objects': {"*": "*"}, 'morphisms': {"id_*": "id_*"}})
        F = load_document(path)
        assert isinstance(F.source, FiniteCategory)
        assert F.name == "f"

    def test_wrong_reference_type(self, tmp_path):
        path = write(tmp_path, "h.json", {'type': 'nat_trans', 'F': corpus_file("interval.json"),
                                          'G': corpus_file("interval.json"), 'components': {}})
        with pytest.raises(InputError, match="expected a Functor document"):
            load_document(path)


class TestErrors:

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError, match="file not found"):
            read_json(str(tmp_path / "nothing.json"))

    def test_invalid_json_reports_position(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"objects": [\n  "a",\n}', encoding='utf-8')
        with pytest.raises(InputError, match="line 3"):
            read_json(str(path))

    def test_unknown_type(self, tmp_path):
        with pytest.raises(InputError) as excinfo:
            load_document(write(tmp_path, "x.json", {'type': 'monad'}))
        assert excinfo.value.field == 'type'

    def test_missing_field(self, tmp_path):
        with pytest.raises(InputError) as excinfo:
            load_document(write(tmp_path, "x.json", {'type': 'category', 'morphisms': []}))
        assert excinfo.value.field == 'objects'


class TestRunConfig:

    def test_file_values_and_overrides(self):
        config, corpus = load_run_config(CONFIG_PATH, command="homology", max_dim=2, variant=None)
        assert config.max_dim == 2
        assert config.variant == "le"
        assert config.seed == 7
        assert corpus[0] == corpus_file("interval.json")

    def test_defaults_without_file(self):
        config, corpus = load_run_config(None)
        assert config.command == "validate"
        assert corpus == []

    def test_unknown_setting(self, tmp_path):
        path = write(tmp_path, "config.json", {'configuration': {'stage': 3}})
        with pytest.raises(InputError):
            load_run_config(path)

    def test_invalid_value(self):
        with pytest.raises(ValueError):
            load_run_config(None, max_stage=0)
