import pytest

from app.errors import NotChainTypeError, NotLowerSetError, PosetError, UnboundedPosetError
from app.models.bridges import (
    EvenChain,
    even_chains,
    kalmbach,
    kalmbach_to_logic,
    logic_to_kalmbach,
    macneille_embedding,
    verify_kalmbach_isomorphism,
)
from app.models.ortho_lattice import find_hexagon, is_boolean, is_orthomodular, validate_ortholattice
from app.models.poset import parse_poset
from app.models.quotient_space import quotient_space


def chain_labels(lattice):
    return [chain.labels() for chain in lattice.chains]


def test_even_chains_of_the_diamond(diamond):
    assert sorted(even_chains(diamond), key=lambda c: (len(c), c)) == [
        (), (0, 1), (0, 2), (0, 3), (1, 3), (2, 3),
    ]


def test_kalmbach_of_the_diamond_is_mo2(diamond):
    lattice = kalmbach(diamond)
    assert lattice.size == 6
    assert chain_labels(lattice) == [[], ["0", "a"], ["0", "b"], ["0", "1"], ["a", "1"], ["b", "1"]]
    assert [lattice.labels[x] for x in lattice.ocompl] == [
        "{0,1}", "{a,1}", "{b,1}", "{}", "{0,a}", "{0,b}",
    ]
    assert validate_ortholattice(lattice).passed
    assert is_orthomodular(lattice)
    assert not is_boolean(lattice)
    assert find_hexagon(lattice) is None


def test_kalmbach_of_a_chain_is_boolean(chain3):
    lattice = kalmbach(chain3)
    assert lattice.size == 4
    assert is_boolean(lattice)


def test_kalmbach_of_one_element():
    lattice = kalmbach(parse_poset("elements: 0"))
    assert lattice.size == 1
    assert lattice.ocompl == (0,)


def test_kalmbach_needs_bounds(antichain):
    with pytest.raises(UnboundedPosetError):
        kalmbach(antichain)
    with pytest.raises(UnboundedPosetError):
        macneille_embedding(antichain)


def test_even_chain_validation(chain3):
    with pytest.raises(PosetError):
        EvenChain(chain3, (0,))
    with pytest.raises(PosetError):
        EvenChain(chain3, (1, 0))
    chain = EvenChain(chain3, (0, 1))
    assert chain.blocks() == [(0, 1)]
    assert chain.fits_in(EvenChain(chain3, (0, 2)))
    assert not EvenChain(chain3, (0, 2)).fits_in(chain)


def test_kalmbach_maps(diamond):
    qs = quotient_space(diamond)
    chain = EvenChain(diamond, (diamond.index["0"], diamond.index["1"]))
    assert kalmbach_to_logic(qs, chain) == qs.ortho.full
    assert logic_to_kalmbach(qs, qs.ortho.full).labels() == ["0", "1"]
    assert logic_to_kalmbach(qs, 0).members == ()
    single = qs.ortho.mask_of(["a<1"])
    assert logic_to_kalmbach(qs, single).labels() == ["a", "1"]


def test_logic_to_kalmbach_rejects_other_sets(poset_n):
    qs = quotient_space(poset_n)
    with pytest.raises(NotChainTypeError):
        logic_to_kalmbach(qs, qs.ortho.mask_of(["0<a", "0<b"]))
    with pytest.raises(NotLowerSetError):
        logic_to_kalmbach(qs, qs.ortho.mask_of(["0<c"]))


@pytest.mark.parametrize("text", [
    "elements: 0",
    "elements: 0 1\ncovers: 0<1",
    "elements: 0 a b 1\ncovers: 0<a, 0<b, a<1, b<1",
    "elements: 0 a b c 1\ncovers: 0<a, 0<b, 0<c, a<1, b<1, c<1",
    "elements: 0 a b c 1\ncovers: 0<a, a<b, b<1, 0<c, c<1",
    "elements: 0 a b c d 1\ncovers: 0<a, 0<b, a<c, b<c, c<d, d<1",
])
def test_kalmbach_isomorphism_on_lattices(text):
    poset = parse_poset(text)
    isomorphism = verify_kalmbach_isomorphism(poset)
    assert isomorphism.check, isomorphism.check
    assert len(isomorphism.table) == isomorphism.lattice.size == isomorphism.space.logic.size


def test_kalmbach_isomorphism_fails_on_n(poset_n):
    check = verify_kalmbach_isomorphism(poset_n).check
    assert not check
    assert check.law is not None


def test_macneille_embedding_of_n(poset_n):
    embedding = macneille_embedding(poset_n)
    assert embedding.verify()
    assert not embedding.is_surjective()
    ideal = embedding.completion.index[poset_n.mask_of("0ab")]
    assert embedding.space.labels_of(embedding(ideal)) == ["0<a", "0<b"]


def test_macneille_embedding_of_a_lattice_is_onto_its_completion(diamond):
    embedding = macneille_embedding(diamond)
    assert embedding.verify()
    assert embedding.completion.is_surjective()
    assert [embedding.space.labels_of(mask) for mask in embedding.image] == [
        [], ["0<a"], ["0<b"], ["0<a", "0<b", "0<1", "a<1", "b<1"],
    ]
