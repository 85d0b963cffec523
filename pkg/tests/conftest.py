import os

import pytest

from evrard.categories.category import FiniteCategory, Morphism
from evrard.categories.standard import (
    discrete_to_interval,
    interval_category,
    interval_identity,
    square_boundary,
)

CORPUS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")
CONFIG_PATH = os.path.join(os.path.dirname(CORPUS_DIR), "evrard_config.json")


def corpus_file(name):
    return os.path.join(CORPUS_DIR, name)


@pytest.fixture
def interval():
    return interval_category()


@pytest.fixture
def id_interval():
    return interval_identity()


@pytest.fixture
def disc2_to_interval():
    return discrete_to_interval()


@pytest.fixture
def square():
    return square_boundary()


@pytest.fixture
def idempotent():
    """One object x with a non-identity idempotent e."""
    records = [Morphism("id_x", "x", "x"), Morphism("e", "x", "x")]
    table = {
        ("id_x", "id_x"): "id_x",
        ("e", "id_x"): "e",
        ("id_x", "e"): "e",
        ("e", "e"): "e",
    }
    return FiniteCategory(["x"], records, {"x": "id_x"}, table, name="E")
