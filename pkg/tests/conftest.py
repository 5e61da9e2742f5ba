import json
import os

import pytest

from app.models.ortho_space import OrthoSpace, parse_space
from app.models.poset import Poset, parse_poset

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")

N_TEXT = "elements: 0 a b c d 1\ncovers: 0<a, 0<b, a<c, a<d, b<c, b<d, c<1, d<1\n"
DIAMOND_TEXT = "elements: 0 a b 1\ncovers: 0<a, 0<b, a<1, b<1\n"
CHAIN3_TEXT = "elements: x y z\ncovers: x<y, y<z\n"
PATH_TEXT = "points: a b c d\nedges: a-b, b-c, c-d\n"
EDGE_TEXT = "points: a b\nedges: a-b\n"


def load_golden(name: str):
    with open(os.path.join(GOLDEN_DIR, name), encoding="utf-8") as handle:
        return json.load(handle)


@pytest.fixture
def poset_n() -> Poset:
    """Bounded non-lattice: a and b have two minimal upper bounds c and d."""
    return parse_poset(N_TEXT)


@pytest.fixture
def diamond() -> Poset:
    return parse_poset(DIAMOND_TEXT)


@pytest.fixture
def chain3() -> Poset:
    return parse_poset(CHAIN3_TEXT)


@pytest.fixture
def antichain() -> Poset:
    return parse_poset("elements: a b")


@pytest.fixture
def path_space() -> OrthoSpace:
    return parse_space(PATH_TEXT)


@pytest.fixture
def edge_space() -> OrthoSpace:
    return parse_space(EDGE_TEXT)
