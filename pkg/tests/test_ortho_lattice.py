import pytest

from app.models.ortho_lattice import (
    OrthoLattice,
    boolean_algebra,
    chain_with_identity,
    find_hexagon,
    hexagon,
    is_boolean,
    is_distributive,
    is_orthomodular,
    validate_ortholattice,
)


def test_hexagon_fixture():
    lattice = hexagon()
    assert validate_ortholattice(lattice).passed
    verdict = is_orthomodular(lattice)
    assert not verdict
    x, y = verdict.witness
    assert lattice.leq(x, y)
    assert find_hexagon(lattice) == (0, 1, 2, 3, 4, 5)
    assert not is_boolean(lattice)
    assert not is_distributive(lattice)


@pytest.mark.parametrize("atoms", [0, 1, 2, 3])
def test_boolean_algebras(atoms):
    lattice = boolean_algebra(atoms)
    assert lattice.size == 1 << atoms
    assert validate_ortholattice(lattice).passed
    assert is_orthomodular(lattice)
    assert is_boolean(lattice)
    assert find_hexagon(lattice) is None
    assert is_distributive(lattice)


def test_chain_with_identity_fails_complement_laws():
    report = validate_ortholattice(chain_with_identity(3))
    assert not report.passed
    assert not report.checks["complement_meet"]
    assert not report.checks["zero_one"]
    assert report.checks["partial_order"]
    assert report.checks["lattice"]


def test_distributivity_respects_the_limit():
    assert is_distributive(hexagon(), limit=5) is None
    assert is_distributive(hexagon(), limit=6) is not None


def test_path_logic(path_space):
    logic = path_space.logic
    b, c, ac, bd = (logic.element(path_space.mask_of(x)) for x in ("b", "c", "ac", "bd"))
    assert logic.meet(b, c) == logic.bottom
    assert logic.join(b, c) == logic.top
    assert logic.ocompl[b] == ac
    assert is_orthomodular(logic).witness == (b, bd)
    assert find_hexagon(logic) == (logic.bottom, b, bd, c, ac, logic.top)
    assert is_boolean(logic).witness == (ac, bd)
    assert validate_ortholattice(logic).passed


def test_single_edge_logic_is_boolean(edge_space):
    logic = edge_space.logic
    assert logic.size == 4
    assert is_boolean(logic)
    assert is_orthomodular(logic)


def test_big_meet_and_join():
    lattice = boolean_algebra(2)
    assert lattice.big_meet(()) == lattice.top
    assert lattice.big_join(()) == lattice.bottom
    assert lattice.big_meet(range(lattice.size)) == lattice.bottom
    assert lattice.big_join((1, 2)) == lattice.top


def test_complements_are_not_unique_in_mo2():
    mo2 = OrthoLattice.from_relation(
        ["0", "a", "a'", "b", "b'", "1"],
        [("0", x) for x in ("a", "a'", "b", "b'")] + [(x, "1") for x in ("a", "a'", "b", "b'")],
        {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"},
    )
    assert validate_ortholattice(mo2).passed
    assert is_orthomodular(mo2)
    assert not is_boolean(mo2)
    assert find_hexagon(mo2) is None
    assert mo2.complements(1) == [2, 3, 4]


def test_with_ocompl_breaks_validation():
    lattice = boolean_algebra(1)
    broken = lattice.with_ocompl([0, 1])
    report = validate_ortholattice(broken)
    assert not report.checks["zero_one"]
    assert not report.passed
