import pytest

from app.errors import CapExceededError, UsageError
from app.models.harness import (
    OPERATIONS,
    THEOREMS,
    HarnessConfig,
    PosetCheck,
    check_space,
    theorem_harness,
    unbounded_counterexample,
)
from app.models.ortho_space import OrthoSpace
from app.settings import get_settings


@pytest.fixture(scope="module")
def small_run():
    return theorem_harness(4, HarnessConfig(), workers=1, graph_max=3)


def test_small_catalogue_verifies(small_run):
    assert small_run.ok, [d.detail for d in small_run.discrepancies]
    assert small_run.catalogue_size == 5
    assert small_run.graph_count == 8
    assert set(small_run.tallies) == set(THEOREMS)
    assert all(small_run.coverage[operation] for operation in OPERATIONS)


def test_tallies(small_run):
    equivalence = small_run.tallies["lattice_equivalence"]
    assert equivalence.total == equivalence.passed == 5
    assert equivalence.vacuous == 0
    # every bounded poset up to four elements is a lattice
    short_basis = small_run.tallies["short_basis"]
    assert short_basis.vacuous == 5
    assert small_run.tallies["graph_dacey_om"].total == 8
    assert small_run.tallies["coverage"].passed == 1


def test_outcomes_are_in_catalogue_order(small_run):
    sizes = [outcome.key[0] for outcome in small_run.outcomes]
    assert sizes == sorted(sizes)
    assert [outcome.q_size for outcome in small_run.outcomes][:3] == [0, 1, 3]


def test_unbounded_record():
    note = unbounded_counterexample()
    assert note["q_size"] == 0
    assert note["logic_size"] == 1
    assert note["chain"] is False
    assert note["boolean"] is True
    assert note["stated_logic_size"] == 2
    assert note["differs_from_stated"] is True


@pytest.mark.parametrize("mutation, n_max", [("ocompl", 2), ("adjacency", 3)])
def test_negative_controls_are_caught(mutation, n_max):
    result = theorem_harness(n_max, HarnessConfig(mutation=mutation), workers=1, graph_max=0)
    assert not result.ok
    assert result.mutation == mutation
    assert all(d.subject for d in result.discrepancies)


def test_non_lattice_check(poset_n):
    outcome = PosetCheck(poset_n, HarnessConfig()).run()
    assert outcome.discrepancies == []
    assert outcome.verdicts["lattice"] is False
    assert outcome.verdicts["dacey"] is False
    assert outcome.statuses["lattice_equivalence"] == "pass"
    assert outcome.statuses["short_basis"] == "pass"
    assert outcome.statuses["kalmbach_isomorphism"] == "vacuous"
    assert outcome.observations["macneille_surjective"] is False


def test_sampling_is_seeded(poset_n):
    config = HarnessConfig(exhaustive_max=0, sample_size=2, seed=11)
    first = PosetCheck(poset_n, config).run()
    second = PosetCheck(poset_n, config).run()
    assert first.statuses == second.statuses
    assert first.discrepancies == []


def test_check_space(path_space, edge_space):
    statuses, found = check_space(path_space)
    assert found == []
    assert set(statuses.values()) == {"pass"}
    statuses, found = check_space(OrthoSpace((), ()))
    assert found == []


def test_config():
    with pytest.raises(UsageError):
        HarnessConfig(mutation="everything")
    config = HarnessConfig.from_settings(get_settings(), seed=5, mutation=None)
    assert config.seed == 5
    assert config.mutation is None
    assert config.exhaustive_max == get_settings().exhaustive_max


def test_size_is_checked():
    with pytest.raises(CapExceededError):
        theorem_harness(0, HarnessConfig(), workers=1, graph_max=0)


def test_worker_count_does_not_change_the_outcome():
    serial = theorem_harness(5, HarnessConfig(), workers=1, graph_max=2)
    pooled = theorem_harness(5, HarnessConfig(), workers=3, graph_max=2)
    assert [o.text for o in pooled.outcomes] == [o.text for o in serial.outcomes]
    assert [o.statuses for o in pooled.outcomes] == [o.statuses for o in serial.outcomes]
    assert pooled.coverage == serial.coverage


def test_default_catalogue_size_verifies():
    result = theorem_harness(7, HarnessConfig(), workers=1, graph_max=5)
    assert result.ok, [d.detail for d in result.discrepancies]
    assert result.catalogue_size == 89
    assert result.graph_count == 53


def test_unique_complement_on_a_chain(chain3, diamond):
    check = PosetCheck(chain3, HarnessConfig())
    outcome = check.run()
    assert outcome.verdicts["boolean"] is True
    assert outcome.statuses["unique_complement"] == "pass"
    assert "complements" in outcome.covered
    outcome = PosetCheck(diamond, HarnessConfig()).run()
    assert outcome.statuses["unique_complement"] == "vacuous"
    assert "complements" not in outcome.covered


def test_membership_criterion(poset_n, diamond):
    for poset in (poset_n, diamond):
        assert PosetCheck(poset, HarnessConfig()).run().statuses["membership_criterion"] == "pass"


def test_coverage_follows_what_actually_ran(poset_n, diamond):
    lattice = PosetCheck(diamond, HarnessConfig()).run()
    assert {"meet", "join"} <= lattice.covered
    non_lattice = PosetCheck(poset_n, HarnessConfig()).run()
    assert "meet" not in non_lattice.covered
    assert "join" not in non_lattice.covered
