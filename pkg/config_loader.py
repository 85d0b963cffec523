# -*- coding: utf-8 -*-
"""
Module for loading categories, functors, transformations and run
configuration from JSON files
"""

import json
import os
from typing import Any, Dict, List, Optional, Tuple, Union

from evrard.categories.category import FiniteCategory, Functor, Morphism, NatTransformation, poset_category
from evrard.errors import CategoryError, InputError
from evrard.settings import RunConfig

Document = Union[FiniteCategory, Functor, NatTransformation]


def read_json(json_path: str) -> Dict[str, Any]:
    """
    Read a JSON document.

    Raises:
        InputError: File missing or not valid JSON (with line and column)
    """
    try:
        with open(json_path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        raise InputError("file not found", path=json_path) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                         path=json_path) from None


def write_json(json_path: str, data: Dict[str, Any]) -> None:
    """Write ``data`` so that reruns produce byte-identical files."""
    folder = os.path.dirname(json_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(json_path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=True)
        f.write("\n")


def _field(doc: Dict[str, Any], key: str, path: Optional[str], kind: type = None) -> Any:
    if key not in doc:
        raise InputError("missing field", path=path, field=key)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise InputError(f"expected {kind.__name__}, got {type(value).__name__}", path=path, field=key)
    return value


# ----------------------------------------------------------------------
# Categories
# ----------------------------------------------------------------------

def parse_category(doc: Dict[str, Any], path: Optional[str] = None) -> FiniteCategory:
    """
    Build a category from a ``"type": "category"`` document.

    A document with ``"poset": true`` gives ``"relations"`` (pairs [x, y]) or
    ``"morphisms"`` (records with dom/cod) and the table is derived; otherwise
    every composable pair must appear in ``"compose"``.

    Raises:
        InputError: Missing fields or composites
    """
    name = doc.get('name', os.path.splitext(os.path.basename(path))[0] if path else "")
    objects = [str(x) for x in _field(doc, 'objects', path, list)]
    if doc.get('poset', False):
        if 'relations' in doc:
            relations = [tuple(pair) for pair in _field(doc, 'relations', path, list)]
        else:
            relations = [(m['dom'], m['cod']) for m in doc.get('morphisms', [])]
        for pair in relations:
            if len(pair) != 2:
                raise InputError(f"relation {list(pair)} is not a pair", path=path, field='relations')
        try:
            return poset_category(objects, relations, name=name)
        except CategoryError as exc:
            raise InputError(str(exc), path=path, field='relations') from None

    records = []
    for i, m in enumerate(_field(doc, 'morphisms', path, list)):
        try:
            records.append(Morphism(str(m['id']), str(m['dom']), str(m['cod'])))
        except (KeyError, TypeError):
            raise InputError("morphism needs id, dom and cod", path=path, field=f"morphisms[{i}]") from None
    identity = {str(x): str(m) for x, m in _field(doc, 'identity', path, dict).items()}
    table = {}
    for i, entry in enumerate(_field(doc, 'compose', path, list)):
        try:
            table[(str(entry['after']), str(entry['then']))] = str(entry['equals'])
        except (KeyError, TypeError):
            raise InputError("compose entry needs after, then and equals", path=path,
                             field=f"compose[{i}]") from None
    for f in records:
        for g in records:
            if g.dom == f.cod and (g.id, f.id) not in table:
                raise InputError(f"missing composite {g.id}∘{f.id}", path=path, field='compose')
    return FiniteCategory(objects, records, identity, table, name=name)


def category_document(C: FiniteCategory) -> Dict[str, Any]:
    """The JSON document of C, with a ``"decoding"`` block for generated ids."""
    doc = {
        'type': 'category',
        'name': C.name,
        'objects': list(C.objects),
        'morphisms': [{'id': r.id, 'dom': r.dom, 'cod': r.cod} for r in C.morphisms.values()],
        'identity': dict(C.identity),
        'compose': [{'after': g, 'then': f, 'equals': h} for (g, f), h in sorted(C.table.items())],
    }
    if C.object_data or C.morphism_data:
        doc['decoding'] = {
            'objects': {o: _plain(v) for o, v in C.object_data.items()},
            'morphisms': {m: _plain(v) for m, v in C.morphism_data.items()},
        }
    return doc


def _plain(value: Any) -> Any:
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return getattr(value, 'label', str(value))


def save_category(json_path: str, C: FiniteCategory, quiet: bool = False) -> None:
    """Save a category, including the decoding of generated ids."""
    write_json(json_path, category_document(C))
    if not quiet:
        print(f"✅ Category saved to: {json_path}")


# ----------------------------------------------------------------------
# Functors and transformations
# ----------------------------------------------------------------------

class DocumentLoader:
    """
    Loads documents and resolves file references relative to the referring
    file. Every file is parsed once, so a functor and its transformation
    share the same category objects.
    """

    def __init__(self):
        self._cache: Dict[str, Document] = {}

    def load(self, json_path: str) -> Document:
        key = os.path.abspath(json_path)
        if key not in self._cache:
            doc = read_json(json_path)
            self._cache[key] = self.parse(doc, json_path)
        return self._cache[key]

    def parse(self, doc: Dict[str, Any], path: Optional[str] = None) -> Document:
        if not isinstance(doc, dict):
            raise InputError("document must be a JSON object", path=path)
        kind = doc.get('type', 'category')
        if kind == 'category':
            return parse_category(doc, path)
        if kind == 'functor':
            return self._parse_functor(doc, path)
        if kind == 'nat_trans':
            return self._parse_nat_trans(doc, path)
        raise InputError(f"unknown document type {kind!r}", path=path, field='type')

    def _reference(self, doc: Dict[str, Any], key: str, path: Optional[str], expected: type) -> Any:
        ref = _field(doc, key, path)
        if isinstance(ref, dict):
            entity = self.parse(ref, path)
        elif isinstance(ref, str):
            base = os.path.dirname(path) if path else ""
            entity = self.load(os.path.join(base, ref))
        else:
            raise InputError("expected a file reference or an inline document", path=path, field=key)
        if not isinstance(entity, expected):
            raise InputError(f"expected a {expected.__name__} document", path=path, field=key)
        return entity

    def _parse_functor(self, doc: Dict[str, Any], path: Optional[str]) -> Functor:
        source = self._reference(doc, 'source', path, FiniteCategory)
        target = self._reference(doc, 'target', path, FiniteCategory)
        obj_map = {str(k): str(v) for k, v in _field(doc, 'objects', path, dict).items()}
        mor_map = {str(k): str(v) for k, v in _field(doc, 'morphisms', path, dict).items()}
        name = doc.get('name', os.path.splitext(os.path.basename(path))[0] if path else "")
        return Functor(source, target, obj_map, mor_map, name=name)

    def _parse_nat_trans(self, doc: Dict[str, Any], path: Optional[str]) -> NatTransformation:
        F = self._reference(doc, 'F', path, Functor)
        G = self._reference(doc, 'G', path, Functor)
        components = {str(k): str(v) for k, v in _field(doc, 'components', path, dict).items()}
        return NatTransformation(F, G, components, name=doc.get('name', ""))


def load_document(json_path: str, loader: Optional[DocumentLoader] = None) -> Document:
    """
    Load a category, functor or natural transformation, dispatching on ``"type"``.

    Raises:
        InputError: Malformed document, naming the file and field
    """
    return (loader or DocumentLoader()).load(json_path)


def functor_document(F: Functor, source_ref: str, target_ref: str) -> Dict[str, Any]:
    return {
        'type': 'functor',
        'name': F.name,
        'source': source_ref,
        'target': target_ref,
        'objects': dict(F.obj_map),
        'morphisms': dict(F.mor_map),
    }


def save_functor(json_path: str, F: Functor, source_ref: str, target_ref: str, quiet: bool = False) -> None:
    """Save a functor whose categories live in the files ``source_ref`` / ``target_ref``."""
    write_json(json_path, functor_document(F, source_ref, target_ref))
    if not quiet:
        print(f"✅ Functor {F.name} saved to: {json_path}")


# ----------------------------------------------------------------------
# Run configuration
# ----------------------------------------------------------------------

def load_run_config(json_path: Optional[str] = None, **overrides) -> Tuple[RunConfig, List[str]]:
    """
    Load run configuration; keyword overrides that are not None win.

    Args:
        json_path: Path to ``evrard_config.json`` (optional)
        **overrides: RunConfig fields from the command line

    Returns:
        Tuple (config, corpus paths resolved against the config file)
    """
    values: Dict[str, Any] = {}
    corpus: List[str] = []
    if json_path:
        config = read_json(json_path)
        values.update(config.get('configuration', {}))
        base = os.path.dirname(json_path)
        corpus = [os.path.join(base, p) for p in config.get('corpus', [])]
    values.update({k: v for k, v in overrides.items() if v is not None})
    values.pop('description', None)
    try:
        return RunConfig(**values), corpus
    except TypeError as exc:
        raise InputError(str(exc), path=json_path) from None
