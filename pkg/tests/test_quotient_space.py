import pytest

from app.errors import NotLowerSetError
from app.models.ortho_space import OrthoSet
from app.models.poset import parse_poset
from app.models.quotient_space import (
    Quotient,
    beta,
    classify,
    is_chain_type,
    principal_down,
    quotient_space,
    tau,
)


def test_quotients_of_the_diamond(diamond):
    qs = quotient_space(diamond)
    assert qs.ortho.points == ("0<a", "0<b", "0<1", "a<1", "b<1")
    assert qs.ortho.edges() == [(0, 3), (1, 4)]
    assert qs.logic.size == 6


def test_tau_and_beta(diamond):
    qs = quotient_space(diamond)
    assert qs.labels_of(qs.tau(diamond.mask_of("a"))) == ["0<a"]
    assert qs.labels_of(qs.beta(diamond.mask_of("a"))) == ["a<1"]
    assert qs.labels_of(qs.tau(diamond.mask_of("1"))) == ["0<1", "a<1", "b<1"]
    assert qs.tau(0) == 0
    assert tau(qs, [diamond.index["b"]]).labels() == ["0<b"]
    assert beta(qs, [diamond.index["0"]]).labels() == ["0<a", "0<b", "0<1"]


def test_principal_down_and_order(diamond):
    qs = quotient_space(diamond)
    whole = qs.quotient(diamond.index["0"], diamond.index["1"])
    assert qs.principal_down(whole) == qs.ortho.full
    assert principal_down(qs, Quotient(0, 1)).labels() == ["0<a"]
    assert qs.leq(0, whole)
    assert not qs.leq(whole, 0)
    assert qs.ortho.closure(1 << whole) == qs.principal_down(whole)


def test_chain_type(diamond, poset_n):
    qs = quotient_space(diamond)
    assert all(qs.is_chain_type(closed) for closed in qs.ortho.orthoclosed_sets)
    assert is_chain_type(qs, OrthoSet(qs.ortho, qs.ortho.mask_of(["0<a"])))
    # [0<a] and [a<1] touch at a, so their endpoints are not strictly separated
    assert not qs.is_chain_type(qs.ortho.mask_of(["0<a", "a<1"]))
    assert qs.labels_of(qs.maximal(qs.ortho.full)) == ["0<1"]

    qn = quotient_space(poset_n)
    pair = qn.ortho.mask_of(["0<a", "0<b"])
    assert qn.is_lower_set(pair)
    assert not qn.is_chain_type(pair)
    with pytest.raises(NotLowerSetError):
        qn.is_chain_type(qn.ortho.mask_of(["0<c"]))


def test_endpoints():
    chain = parse_poset("elements: w x y z\ncovers: w<x, x<y, y<z")
    qs = quotient_space(chain)
    lower = qs.down_closure(qs.ortho.mask_of(["w<x", "y<z"]))
    assert qs.labels_of(lower) == ["w<x", "y<z"]
    assert qs.is_chain_type(lower)
    assert [chain.elements[x] for x in qs.endpoints(lower)] == ["w", "x", "y", "z"]


def test_classify_diamond(diamond):
    result = classify(diamond)
    assert result.bounded and result.lattice and result.chain_type
    assert result.dacey and result.orthomodular
    assert not result.chain and not result.boolean
    assert result.lattice_agrees and result.chain_boolean_agrees
    assert result.hexagon is None
    assert result.nonlattice_ideal is None
    assert result.short_basis is None
    assert result.q_size == 5
    assert result.logic_size == 6


def test_classify_chain(chain3):
    result = classify(chain3)
    assert result.chain and result.boolean
    assert result.logic_size == 4
    assert result.disjoint_pair is None
    assert result.lattice_agrees


def test_classify_n(poset_n):
    result = classify(poset_n)
    qs = result.space
    assert result.bounded
    assert not result.lattice
    assert not result.chain_type
    assert not result.dacey
    assert not result.orthomodular
    assert result.hexagon is not None
    assert result.lattice_agrees
    assert qs.labels_of(result.dacey.closed_set) == ["0<a", "0<b"]
    assert qs.labels_of(result.dacey.basis) == ["0<a"]
    closed, basis = result.short_basis
    assert qs.labels_of(closed) == ["0<a", "0<b"]
    assert qs.labels_of(basis) == ["0<a"]
    first, second = result.disjoint_pair
    assert qs.labels_of(first) == ["a<c", "a<d", "a<1", "c<1", "d<1"]
    assert qs.labels_of(second) == ["0<b"]
    assert result.q_size == 13


def test_classify_unbounded_antichain(antichain):
    result = classify(antichain)
    assert result.q_size == 0
    assert result.logic_size == 1
    assert not result.bounded
    assert not result.chain
    assert result.boolean
    assert not result.chain_boolean_agrees
    assert result.disjoint_pair is None


def test_classify_one_element():
    result = classify(parse_poset("elements: 0"))
    assert result.q_size == 0
    assert result.chain and result.boolean and result.lattice and result.dacey
