import pytest

from app.errors import PosetError, PosetParseError
from app.models.poset import Poset, macneille, nonlattice_witness, parse_poset, serialize_poset


def test_parse_closes_transitively(chain3):
    x, y, z = (chain3.index[label] for label in "xyz")
    assert chain3.leq(x, z)
    assert not chain3.leq(z, x)
    assert chain3.less(x, y)
    assert not chain3.less(x, x)


def test_parse_accepts_semicolons_and_comments():
    poset = parse_poset("# two elements\nelements: a b; covers: a<b")
    assert poset.n == 2
    assert poset.leq(0, 1)


def test_parse_single_element_without_covers():
    poset = parse_poset("elements: a; covers:")
    assert poset.n == 1
    assert poset.is_chain()
    assert poset.is_lattice()


@pytest.mark.parametrize("text", [
    "elements: a a",
    "elements: a b\ncovers: a<c",
    "elements: a b\ncovers: a<",
    "elements: a b\ncovers: a<b<a",
    "elements: a b\ncovers: a<b, b<a",
    "covers: a<b",
    "elements:",
    "elements: a\nfoo: bar",
    "elements: a\nelements: b",
    "elements: a,b",
    "elements: a#b",
])
def test_parse_rejects_malformed_text(text):
    with pytest.raises(PosetParseError):
        parse_poset(text)


def test_hyphenated_element_labels_are_accepted():
    poset = parse_poset("elements: x-0 x-1\ncovers: x-0<x-1")
    assert poset.elements == ("x-0", "x-1")
    assert poset.leq(0, 1)
    assert parse_poset(serialize_poset(poset)).up == poset.up


def test_cycle_message_names_the_cycle():
    with pytest.raises(PosetParseError) as excinfo:
        parse_poset("elements: a b c\ncovers: a<b, b<c, c<a")
    assert "Cycle" in excinfo.value.detail


def test_serialize_emits_covers_only():
    poset = parse_poset("elements: x y z\ncovers: x<y, y<z, x<z")
    assert serialize_poset(poset) == "elements: x y z\ncovers: x<y, y<z\n"
    assert parse_poset(serialize_poset(poset)).up == poset.up


def test_from_matrix_checks_axioms():
    with pytest.raises(PosetError):
        Poset.from_matrix(["a", "b"], [[True, True], [True, True]])
    with pytest.raises(PosetError):
        Poset.from_matrix(["a", "b"], [[False, False], [False, True]])
    with pytest.raises(PosetError):
        Poset.from_matrix(
            ["a", "b", "c"],
            [[True, True, False], [False, True, True], [False, False, True]],
        )
    poset = Poset.from_matrix(["a", "b"], [[True, True], [False, True]])
    assert poset.covers() == [(0, 1)]


def test_bound_operators(diamond):
    a, b = diamond.index["a"], diamond.index["b"]
    assert diamond.lower_bounds(0) == diamond.full
    assert diamond.upper_bounds(0) == diamond.full
    assert diamond.labels_of(diamond.upper_bounds(diamond.mask_of("ab"))) == ["1"]
    assert diamond.labels_of(diamond.lower_bounds(diamond.mask_of("ab"))) == ["0"]
    assert diamond.elements[diamond.meet(a, b)] == "0"
    assert diamond.elements[diamond.join(a, b)] == "1"
    assert diamond.is_lattice()
    assert diamond.is_bounded()
    assert not diamond.is_chain()
    assert diamond.incomparable_pair() == (a, b)


def test_missing_join_in_n(poset_n):
    a, b = poset_n.index["a"], poset_n.index["b"]
    assert poset_n.elements[poset_n.meet(a, b)] == "0"
    assert poset_n.join(a, b) is None
    assert poset_n.missing_bound() == (a, b)
    assert not poset_n.is_lattice()
    assert poset_n.is_bounded()


def test_antichain_is_unbounded(antichain):
    assert antichain.bounds() is None
    assert antichain.bottom() is None
    assert antichain.top() is None
    assert not antichain.is_bounded()


def test_completion_sizes(chain3, poset_n, diamond):
    assert macneille(chain3).size == 3
    assert macneille(diamond).size == 4
    completion = macneille(poset_n)
    assert completion.size == 7
    assert not completion.is_surjective()
    assert [ideal.labels() for ideal in completion.closed_ideals][3] == ["0", "a", "b"]


def test_empty_set_is_not_a_closed_ideal(poset_n):
    assert poset_n.ideal_closure(0) == poset_n.mask_of("0")


def test_completion_meet_and_join(poset_n):
    completion = macneille(poset_n)
    a, b = completion.eta(poset_n.index["a"]), completion.eta(poset_n.index["b"])
    joined = completion.join((a, b))
    assert completion.closed_ideals[joined].labels() == ["0", "a", "b"]
    assert completion.meet((a, b)) == completion.eta(poset_n.index["0"])
    assert completion.meet(()) == completion.size - 1
    assert completion.join(()) == completion.eta(poset_n.index["0"])


def test_nonlattice_witness(poset_n, diamond):
    ideal = nonlattice_witness(poset_n)
    assert ideal.labels() == ["0", "a", "b"]
    assert ideal.is_closed()
    assert nonlattice_witness(diamond) is None


def test_derived_posets(chain3):
    dual = chain3.dual()
    assert dual.leq(2, 0)
    bounded = chain3.adjoin_bounds()
    assert bounded.elements == ("0", "x", "y", "z", "1")
    assert bounded.bounds() == (0, 4)
    with pytest.raises(PosetError):
        bounded.adjoin_bounds()
    permuted = chain3.permute((2, 1, 0))
    assert permuted.elements == ("z", "y", "x")
    assert permuted.leq(2, 0)
    assert chain3.sort_chain(chain3.full) == (0, 1, 2)
