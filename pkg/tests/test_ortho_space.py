import pytest

from app.errors import NotOrthoclosedError, PosetParseError, SpaceError
from app.models.ortho_space import (
    OrthoSet,
    OrthoSpace,
    bases,
    closure,
    is_dacey_set,
    is_dacey_space,
    parse_space,
    perp,
    serialize_space,
)


def labels(space, masks):
    return [space.labels_of(mask) for mask in masks]


def test_perp_on_path(path_space):
    s = path_space
    assert s.labels_of(s.perp(s.mask_of("b"))) == ["a", "c"]
    assert s.labels_of(s.perp(s.mask_of("bd"))) == ["c"]
    assert s.perp(0) == s.full


def test_closure_on_path(path_space):
    s = path_space
    assert s.labels_of(s.closure(s.mask_of("b"))) == ["b"]
    assert s.labels_of(s.closure(s.mask_of("a"))) == ["a", "c"]
    assert s.closure(s.mask_of("ab")) == s.full


def test_logic_of_path_is_the_hexagon(path_space):
    logic = path_space.logic
    assert labels(path_space, logic.closed_sets) == [
        [], ["b"], ["c"], ["a", "c"], ["b", "d"], ["a", "b", "c", "d"],
    ]
    assert logic.ocompl == (5, 3, 4, 1, 2, 0)


def test_logic_of_single_edge(edge_space):
    assert labels(edge_space, edge_space.logic.closed_sets) == [[], ["a"], ["b"], ["a", "b"]]


def test_bases(path_space, edge_space):
    s = path_space
    assert labels(s, s.bases(s.mask_of("bd"))) == [["b"], ["d"]]
    assert list(s.bases(0)) == [0]
    assert labels(s, s.bases(s.full)) == [["a", "b"], ["b", "c"], ["c", "d"]]
    assert labels(edge_space, edge_space.bases(edge_space.full)) == [["a", "b"]]


def test_bases_reject_non_orthoclosed(path_space):
    with pytest.raises(NotOrthoclosedError):
        list(path_space.bases(path_space.mask_of("ab")))
    with pytest.raises(NotOrthoclosedError):
        path_space.dacey_set(path_space.mask_of("ab"))


def test_dacey_set_on_path(path_space):
    s = path_space
    verdict = s.dacey_set(s.mask_of("bd"))
    assert not verdict
    assert s.labels_of(verdict.basis) == ["b"]
    assert s.dacey_set(0)
    assert s.dacey_set(s.full)


def test_dacey_space(path_space, edge_space):
    verdict = path_space.dacey_space()
    assert not verdict
    # mirror image of ({b,d}, {b}) under a<->d, b<->c; the scan is smallest first
    assert path_space.labels_of(verdict.closed_set) == ["a", "c"]
    assert path_space.labels_of(verdict.basis) == ["c"]
    assert edge_space.dacey_space()


def test_empty_space():
    space = OrthoSpace((), ())
    assert space.logic.size == 1
    assert space.dacey_space()
    assert list(space.bases(0)) == [0]


def test_empty_set_is_always_closed():
    space = parse_space("points: a b c\nedges: a-c, b-c")
    assert space.closure(0) == 0
    assert space.orthoclosed_sets[0] == 0


def test_set_api(path_space):
    subset = OrthoSet(path_space, path_space.mask_of("b"))
    assert perp(path_space, subset).labels() == ["a", "c"]
    assert closure(path_space, subset).is_orthoclosed()
    assert [basis.labels() for basis in bases(path_space, subset)] == [["b"]]
    assert is_dacey_set(path_space, subset)
    assert not is_dacey_space(path_space)
    assert len(subset) == 1 and 1 in subset


def test_space_validation():
    with pytest.raises(SpaceError):
        OrthoSpace(("a", "b"), (0b10, 0b00))
    with pytest.raises(SpaceError):
        OrthoSpace(("a",), (0b1,))
    with pytest.raises(SpaceError):
        OrthoSpace.from_edges(["a"], [(0, 0)])


@pytest.mark.parametrize("text", [
    "points: a a",
    "points: a b\nedges: a-c",
    "points: a b\nedges: a-a",
    "points: a b\nedges: ab",
    "points: a-b c",
    "edges: a-b",
])
def test_parse_space_rejects_malformed_text(text):
    with pytest.raises(PosetParseError):
        parse_space(text)


def test_serialize_space(path_space):
    assert serialize_space(path_space) == "points: a b c d\nedges: a-b, b-c, c-d\n"
    assert serialize_space(OrthoSpace.from_edges(["a"], [])) == "points: a\nedges:\n"


def test_flipping_an_edge(edge_space):
    flipped = edge_space.with_edge_flipped(0, 1)
    assert flipped.edges() == []
    assert flipped.logic.size == 2
