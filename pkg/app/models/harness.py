"""
Machine check of the structure theorems and their lemmas over the catalogue
of bounded posets and the catalogue of small graphs.

Failures are data: every broken law becomes a ``Discrepancy`` carrying the
poset (or space) in text form so it can be replayed from the command line.
"""
import itertools
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

import networkx as nx

from app.errors import OrthologicError, UsageError
from app.models.bitset import is_subset, iter_indices
from app.models.bridges import (
    even_chains,
    kalmbach,
    macneille_embedding,
    verify_kalmbach_isomorphism,
)
from app.models.enumeration import bounded_catalogue, canonical_key, check_size, graph_catalogue
from app.models.ortho_lattice import (
    OrthoLattice,
    find_hexagon,
    is_distributive,
    is_orthomodular,
    validate_ortholattice,
)
from app.models.ortho_space import OrthoSpace, serialize_space
from app.models.poset import Poset, macneille, parse_poset, serialize_poset
from app.models.quotient_space import classify, quotient_space
from app.settings import Settings, get_settings

logger = logging.getLogger(__name__)

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

MUTATIONS = ("adjacency", "ocompl")

# {∅, Q(P)} is often quoted for the 2-antichain, but Q(P) is empty there so ∅ = Q(P)
STATED_ANTICHAIN_LOGIC_SIZE = 2

THEOREMS = (
    "replay",
    "lattice_equivalence",
    "chain_boolean",
    "dacey_om",
    "hexagon",
    "logic_ortholattice",
    "boolean_distributive",
    "unique_complement",
    "nonlattice_witness",
    "short_basis",
    "disjoint_pair",
    "kalmbach_isomorphism",
    "kalmbach_orthomodular",
    "kalmbach_hexagon",
    "macneille_embedding",
    "galois_laws",
    "eta_embedding",
    "closure_axioms",
    "membership_criterion",
    "orthogonal_comparable",
    "orthoclosed_lower",
    "hereditary_orthogonality",
    "perp_decomposition",
    "tau_beta_perp",
    "tau_closure",
    "double_perp_down",
    "principal_down_dacey",
    "pair_perp_span",
    "merge_touching",
    "chain_type_dacey",
    "dacey_union",
    "dacey_criterion",
    "graph_dacey_om",
    "graph_hexagon",
    "graph_logic_ortholattice",
    "coverage",
)

GROUPED_CHECKS = {
    "kalmbach": ("kalmbach_isomorphism", "kalmbach_orthomodular", "kalmbach_hexagon"),
}

OPERATIONS = (
    "parse_poset",
    "bounds",
    "lower_bounds",
    "upper_bounds",
    "meet",
    "join",
    "is_lattice",
    "is_chain",
    "is_bounded",
    "macneille",
    "nonlattice_witness",
    "perp",
    "closure",
    "logic",
    "bases",
    "is_dacey_set",
    "is_dacey_space",
    "lattice_meet",
    "lattice_join",
    "big_meet",
    "big_join",
    "is_orthomodular",
    "find_hexagon",
    "is_boolean",
    "complements",
    "validate_ortholattice",
    "quotient_space",
    "tau",
    "beta",
    "principal_down",
    "is_chain_type",
    "classify",
    "kalmbach",
    "kalmbach_to_logic",
    "logic_to_kalmbach",
    "macneille_embedding",
)


@dataclass(frozen=True)
class HarnessConfig:
    exhaustive_max: int = 6
    sample_size: int = 64
    seed: int = 0
    distributivity_limit: int = 512
    mutation: Optional[str] = None

    def __post_init__(self):
        if self.mutation is not None and self.mutation not in MUTATIONS:
            raise UsageError(f"Unknown mutation {self.mutation!r}; expected one of {', '.join(MUTATIONS)}")

    @classmethod
    def from_settings(cls, settings: Settings, **overrides) -> "HarnessConfig":
        values = dict(
            exhaustive_max=settings.exhaustive_max,
            sample_size=settings.sample_size,
            seed=settings.seed,
            distributivity_limit=settings.distributivity_limit,
        )
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


@dataclass
class TheoremTally:
    total: int = 0
    passed: int = 0
    failed: int = 0
    vacuous: int = 0

    def add(self, status: str) -> None:
        self.total += 1
        if status == FAIL:
            self.failed += 1
            return
        self.passed += 1
        if status == VACUOUS:
            self.vacuous += 1


@dataclass(frozen=True)
class Discrepancy:
    theorem: str
    subject: str
    detail: str


@dataclass
class PosetOutcome:
    """Everything one worker learns about one poset."""

    key: Tuple[int, int]
    text: str
    verdicts: Dict[str, bool]
    logic_size: int
    q_size: int
    statuses: Dict[str, str] = field(default_factory=dict)
    discrepancies: List[Discrepancy] = field(default_factory=list)
    covered: Set[str] = field(default_factory=set)
    observations: Dict[str, bool] = field(default_factory=dict)


@dataclass
class HarnessResult:
    n_max: int
    catalogue_size: int
    graph_count: int
    mutation: Optional[str]
    tallies: Dict[str, TheoremTally]
    discrepancies: List[Discrepancy]
    outcomes: List[PosetOutcome]
    coverage: Dict[str, bool]
    observations: Dict[str, Tuple[int, int]]
    unbounded: Dict[str, object]

    @property
    def ok(self) -> bool:
        return not self.discrepancies


class PosetCheck:
    """Runs every per-poset check; one instance per poset."""

    def __init__(self, poset: Poset, config: HarnessConfig):
        self.poset = poset
        self.config = config
        self.text = serialize_poset(poset)
        self.rng = random.Random(f"{config.seed}:{self.text}")
        self.exhaustive = poset.n <= config.exhaustive_max
        self.statuses: Dict[str, str] = {}
        self.discrepancies: List[Discrepancy] = []
        self.covered: Set[str] = set()
        self.observations: Dict[str, bool] = {}

    # bookkeeping

    def record(self, theorem: str, failure: Optional[str], applicable: bool = True) -> None:
        if not applicable:
            self.statuses[theorem] = VACUOUS
            return
        if failure is None:
            self.statuses[theorem] = PASS
            return
        self.statuses[theorem] = FAIL
        self.discrepancies.append(Discrepancy(theorem, self.text, failure))
        logger.warning(f"Discrepancy in {theorem} on {self.text.strip()!r}: {failure}")

    def uses(self, *operations: str) -> None:
        """Mark operations in the coverage ledger; call where they are actually invoked."""
        self.covered.update(operations)

    def pick(self, count: int) -> Iterable[int]:
        """All instance indices, or a seeded sample above the exhaustive size."""
        if self.exhaustive or count <= self.config.sample_size:
            return range(count)
        return sorted(self.rng.sample(range(count), self.config.sample_size))

    def first_failure(self, instances: Iterable, test) -> Optional[str]:
        for instance in instances:
            failure = test(instance)
            if failure:
                return failure
        return None

    # setup

    def build(self) -> None:
        self.uses(
            "quotient_space", "logic", "classify", "bounds", "is_bounded", "is_lattice", "is_chain",
            "nonlattice_witness", "is_dacey_space", "is_orthomodular", "find_hexagon", "is_boolean",
            "is_chain_type", "validate_ortholattice",
        )
        poset = self.poset
        qs = quotient_space(poset)
        if self.config.mutation == "adjacency" and qs.size >= 2:
            qs = qs.with_ortho(qs.ortho.with_edge_flipped(0, 1))
        self.qs = qs
        self.logic = qs.logic
        self.judged: OrthoLattice = self.logic
        if self.config.mutation == "ocompl" and self.logic.size >= 2:
            ocompl = list(self.logic.ocompl)
            ocompl[self.logic.bottom], ocompl[self.logic.top] = self.logic.bottom, self.logic.top
            self.judged = self.logic.with_ocompl(ocompl)
        self.result = classify(poset, qs, self.judged)
        self.validation = validate_ortholattice(self.judged)
        self.bounds = poset.bounds()
        self.closed_sets = qs.ortho.orthoclosed_sets
        self._dacey: Dict[int, bool] = {}

    def is_dacey(self, mask: int) -> bool:
        self.uses("is_dacey_set")
        if mask not in self._dacey:
            self._dacey[mask] = self.qs.ortho.dacey_set(mask).holds
        return self._dacey[mask]

    def run(self) -> PosetOutcome:
        self.build()
        checks = [
            self.check_replay,
            self.check_lattice_equivalence,
            self.check_chain_boolean,
            self.check_dacey_om,
            self.check_hexagon,
            self.check_logic_ortholattice,
            self.check_boolean_distributive,
            self.check_unique_complement,
            self.check_nonlattice_witness,
            self.check_short_basis,
            self.check_disjoint_pair,
            self.check_kalmbach,
            self.check_macneille_embedding,
            self.check_galois_laws,
            self.check_eta_embedding,
            self.check_closure_axioms,
            self.check_membership_criterion,
            self.check_orthogonal_comparable,
            self.check_orthoclosed_lower,
            self.check_hereditary_orthogonality,
            self.check_perp_decomposition,
            self.check_tau_beta_perp,
            self.check_tau_closure,
            self.check_double_perp_down,
            self.check_principal_down_dacey,
            self.check_pair_perp_span,
            self.check_merge_touching,
            self.check_chain_type_dacey,
            self.check_dacey_union,
            self.check_dacey_criterion,
        ]
        for check in checks:
            name = check.__name__[len("check_"):]
            try:
                check()
            except OrthologicError as e:
                for theorem in GROUPED_CHECKS.get(name, (name,)):
                    if theorem not in self.statuses:
                        self.record(theorem, f"raised {type(e).__name__}: {e.detail}")
        result = self.result
        return PosetOutcome(
            key=canonical_key(self.poset),
            text=self.text,
            verdicts={
                "bounded": result.bounded,
                "lattice": result.lattice,
                "chain": result.chain,
                "chain_type": result.chain_type,
                "dacey": bool(result.dacey),
                "orthomodular": bool(result.orthomodular),
                "boolean": bool(result.boolean),
            },
            logic_size=result.logic_size,
            q_size=result.q_size,
            statuses=self.statuses,
            discrepancies=self.discrepancies,
            covered=self.covered,
            observations=self.observations,
        )

    # theorems

    def check_replay(self) -> None:
        self.uses("parse_poset")
        replayed = parse_poset(self.text)
        same = replayed.elements == self.poset.elements and replayed.up == self.poset.up
        self.record("replay", None if same else "text form does not reproduce the poset")

    def check_lattice_equivalence(self) -> None:
        result = self.result
        failure = None
        if not result.lattice_agrees:
            failure = f"verdicts disagree: {result.lattice_verdicts}"
        self.record("lattice_equivalence", failure, applicable=result.bounded)

    def check_chain_boolean(self) -> None:
        result = self.result
        failure = None
        if not result.chain_boolean_agrees:
            failure = f"chain={result.chain} but boolean={bool(result.boolean)} (witness {result.boolean.witness})"
        self.record("chain_boolean", failure, applicable=result.bounded)

    def check_dacey_om(self) -> None:
        result = self.result
        failure = None
        if bool(result.dacey) != bool(result.orthomodular):
            failure = f"dacey={bool(result.dacey)} but orthomodular={bool(result.orthomodular)}"
        self.record("dacey_om", failure)

    def check_hexagon(self) -> None:
        result = self.result
        failure = None
        if (result.hexagon is None) != bool(result.orthomodular):
            failure = f"hexagon={result.hexagon} but orthomodular={bool(result.orthomodular)}"
        self.record("hexagon", failure, applicable=self.validation.passed)

    def check_logic_ortholattice(self) -> None:
        lattice = self.judged
        if not self.validation.passed:
            self.record("logic_ortholattice", f"axioms fail: {self.validation.witnesses}")
            return
        self.uses("lattice_meet", "lattice_join", "big_meet", "big_join")
        everything = range(lattice.size)
        failure = None
        if lattice.big_meet(everything) != lattice.bottom or lattice.big_join(everything) != lattice.top:
            failure = "meet/join of all elements is not bottom/top"
        elif lattice.big_meet(()) != lattice.top or lattice.big_join(()) != lattice.bottom:
            failure = "empty meet/join is not top/bottom"
        else:
            size = lattice.size

            def set_ops_match(k: int) -> Optional[str]:
                x, y = divmod(k, size)
                if lattice.meet(x, y) != OrthoLattice.meet(lattice, x, y):
                    return f"set meet differs from order meet at {lattice.labels[x]}, {lattice.labels[y]}"
                if lattice.join(x, y) != OrthoLattice.join(lattice, x, y):
                    return f"set join differs from order join at {lattice.labels[x]}, {lattice.labels[y]}"
                return None

            failure = self.first_failure(self.pick(size * size), set_ops_match)
        self.record("logic_ortholattice", failure)

    def check_boolean_distributive(self) -> None:
        verdict = is_distributive(self.judged, self.config.distributivity_limit)
        if verdict is None or not self.validation.passed:
            self.record("boolean_distributive", None, applicable=False)
            return
        failure = None
        if bool(verdict) != bool(self.result.boolean):
            failure = f"distributive={bool(verdict)} but boolean={bool(self.result.boolean)}"
        self.record("boolean_distributive", failure)

    def check_unique_complement(self) -> None:
        judged = self.judged
        if not (self.result.boolean and self.validation.passed):
            self.record("unique_complement", None, applicable=False)
            return
        self.uses("complements")

        def unique(x: int) -> Optional[str]:
            found = judged.complements(x)
            if found != [judged.ocompl[x]]:
                return f"{judged.labels[x]} has complements {[judged.labels[y] for y in found]}"
            return None

        self.record("unique_complement", self.first_failure(range(judged.size), unique))

    def check_nonlattice_witness(self) -> None:
        result = self.result
        failure = None
        if (result.nonlattice_ideal is None) != result.lattice:
            failure = f"lattice={result.lattice} but witness={result.nonlattice_ideal}"
        self.record("nonlattice_witness", failure)

    def check_short_basis(self) -> None:
        result = self.result
        if not result.bounded or result.lattice:
            self.record("short_basis", None, applicable=False)
            return
        if result.short_basis is None:
            self.record("short_basis", "no τ(I) witness for a bounded non-lattice")
            return
        self.uses("bases", "closure")
        ortho, fmt = self.qs.ortho, self.qs.format_set
        closed, basis = result.short_basis
        failure = None
        if not ortho.is_orthoclosed(closed):
            failure = f"τ(I) = {fmt(closed)} is not orthoclosed"
        elif basis not in set(ortho.bases(closed)):
            failure = f"{fmt(basis)} is not a basis of {fmt(closed)}"
        elif ortho.closure(basis) == closed:
            failure = f"basis {fmt(basis)} closes back to {fmt(closed)}"
        self.record("short_basis", failure)

    def check_disjoint_pair(self) -> None:
        result = self.result
        if not result.bounded or result.chain:
            self.record("disjoint_pair", None, applicable=False)
            return
        if result.disjoint_pair is None:
            self.record("disjoint_pair", "no disjoint pair for a bounded non-chain")
            return
        ortho, fmt = self.qs.ortho, self.qs.format_set
        x, y = result.disjoint_pair
        failure = None
        if not (ortho.is_orthoclosed(x) and ortho.is_orthoclosed(y)):
            failure = f"{fmt(x)} or {fmt(y)} is not orthoclosed"
        elif x & y:
            failure = f"{fmt(x)} and {fmt(y)} intersect"
        elif is_subset(x, ortho.perp(y)):
            failure = f"{fmt(x)} is orthogonal to {fmt(y)}"
        self.record("disjoint_pair", failure)

    def check_kalmbach(self) -> None:
        result = self.result
        if not result.bounded:
            for theorem in ("kalmbach_isomorphism", "kalmbach_orthomodular", "kalmbach_hexagon"):
                self.record(theorem, None, applicable=False)
            return
        self.uses("kalmbach", "kalmbach_to_logic", "logic_to_kalmbach")
        lattice = kalmbach(self.poset)
        isomorphism = verify_kalmbach_isomorphism(self.poset, self.qs, lattice)
        validation = validate_ortholattice(lattice)
        orthomodular = is_orthomodular(lattice)
        hexagon = find_hexagon(lattice)
        if not result.lattice:
            self.observations["kalmbach_orthomodular"] = validation.passed and bool(orthomodular)
            self.observations["kalmbach_isomorphic"] = bool(isomorphism.check)
            for theorem in ("kalmbach_isomorphism", "kalmbach_orthomodular", "kalmbach_hexagon"):
                self.record(theorem, None, applicable=False)
            return
        check = isomorphism.check
        self.record(
            "kalmbach_isomorphism",
            None if check else f"law '{check.law}' fails at {check.witness}",
        )
        failure = None
        if not validation.passed:
            failure = f"K(P) axioms fail: {validation.witnesses}"
        elif not orthomodular:
            failure = f"K(P) not orthomodular at {orthomodular.witness}"
        self.record("kalmbach_orthomodular", failure)
        failure = None
        if (hexagon is None) != bool(orthomodular):
            failure = f"K(P) hexagon={hexagon} but orthomodular={bool(orthomodular)}"
        self.record("kalmbach_hexagon", failure, applicable=validation.passed)

    def check_macneille_embedding(self) -> None:
        if not self.result.bounded:
            self.record("macneille_embedding", None, applicable=False)
            return
        self.uses("macneille_embedding")
        embedding = macneille_embedding(self.poset, self.qs)
        check = embedding.verify()
        self.observations["macneille_surjective"] = embedding.is_surjective()
        self.record(
            "macneille_embedding",
            None if check else f"law '{check.law}' fails at {check.witness}",
        )

    # completion

    def check_galois_laws(self) -> None:
        self.uses("lower_bounds", "upper_bounds", "macneille")
        poset = self.poset
        fixed = {mask for mask in range(1 << poset.n) if poset.ideal_closure(mask) == mask}

        def galois(mask: int) -> Optional[str]:
            closed = poset.ideal_closure(mask)
            labels = poset.labels_of(mask)
            if not is_subset(mask, closed):
                return f"{labels} is not inside its closure"
            if poset.ideal_closure(closed) != closed:
                return f"closure of {labels} is not idempotent"
            upper = poset.upper_bounds(mask)
            if poset.upper_bounds(poset.lower_bounds(upper)) != upper:
                return f"X^↑↓↑ differs from X^↑ for {labels}"
            return None

        failure = self.first_failure(self.pick(1 << poset.n), galois)
        if failure is None:
            ideals = {ideal.members for ideal in macneille(poset).closed_ideals}
            if ideals != fixed:
                failure = f"completion has {len(ideals)} ideals, brute force finds {len(fixed)}"
        self.record("galois_laws", failure)

    def check_eta_embedding(self) -> None:
        poset = self.poset
        completion = macneille(poset)
        failure = None
        for x, y in itertools.product(range(poset.n), repeat=2):
            if completion.leq(completion.eta(x), completion.eta(y)) != poset.leq(x, y):
                failure = f"η does not reflect the order at {poset.elements[x]}, {poset.elements[y]}"
                break
        if failure is None and completion.is_surjective() != self.result.lattice:
            failure = f"η surjective={completion.is_surjective()} but lattice={self.result.lattice}"
        self.record("eta_embedding", failure)

    # orthogonality space

    def _closure_subjects(self) -> List[int]:
        """Every singleton, every pair and every orthoclosed set of Q(P)."""
        m = self.qs.ortho.m
        singles = [1 << i for i in range(m)]
        pairs = [(1 << i) | (1 << j) for i, j in itertools.combinations(range(m), 2)]
        return singles + pairs + list(self.closed_sets)

    def check_closure_axioms(self) -> None:
        ortho = self.qs.ortho
        m = ortho.m
        subjects = self._closure_subjects()

        def axioms(k: int) -> Optional[str]:
            self.uses("perp", "closure")
            mask = subjects[k]
            closed = ortho.closure(mask)
            if not is_subset(mask, closed):
                return f"{ortho.format_set(mask)} is not inside its closure"
            if ortho.closure(closed) != closed:
                return f"closure of {ortho.format_set(mask)} is not idempotent"
            if ortho.perp(ortho.perp(ortho.perp(mask))) != ortho.perp(mask):
                return f"X^⊥⊥⊥ differs from X^⊥ for {ortho.format_set(mask)}"
            members = list(iter_indices(mask))
            if len(members) == 2:
                i, j = members
                if ortho.perp(mask) != ortho.perp(1 << i) & ortho.perp(1 << j):
                    return f"perp of {ortho.format_set(mask)} is not the meet of the point perps"
                if not is_subset(ortho.closure(1 << i), closed):
                    return f"closure is not monotone on {ortho.format_set(mask)}"
            return None

        failure = self.first_failure(self.pick(len(subjects)), axioms)
        if failure is None and m <= 12:
            brute = {mask for mask in range(1 << m) if ortho.closure(mask) == mask}
            if brute != set(self.closed_sets):
                failure = f"{len(self.closed_sets)} orthoclosed sets, brute force finds {len(brute)}"
        self.record("closure_axioms", failure)

    def check_membership_criterion(self) -> None:
        """s ∈ X^⊥⊥ iff s is orthogonal to every point orthogonal to all of X; read off the rows."""
        ortho = self.qs.ortho
        subjects = self._closure_subjects()

        def membership(k: int) -> Optional[str]:
            mask = subjects[k]
            outside = [a for a in range(ortho.m) if is_subset(mask, ortho.adj[a])]
            closed = ortho.closure(mask)
            for s in range(ortho.m):
                expected = all(ortho.adj[s] >> a & 1 for a in outside)
                if bool(closed >> s & 1) != expected:
                    return (
                        f"{ortho.points[s]} {'is' if expected else 'is not'} orthogonal to "
                        f"{ortho.format_set(mask)}^⊥ but closure says otherwise"
                    )
            return None

        self.record("membership_criterion", self.first_failure(self.pick(len(subjects)), membership))

    def check_orthogonal_comparable(self) -> None:
        qs, poset = self.qs, self.poset
        cliques = [list(clique) for clique in nx.find_cliques(qs.ortho.graph)]

        def comparable(k: int) -> Optional[str]:
            points = set()
            for i in cliques[k]:
                points.update((qs.quotients[i].a, qs.quotients[i].b))
            for x, y in itertools.combinations(sorted(points), 2):
                if not poset.comparable(x, y):
                    return f"basis {qs.labels_of(sum(1 << i for i in cliques[k]))} has incomparable endpoints"
            return None

        self.record("orthogonal_comparable", self.first_failure(self.pick(len(cliques)), comparable))

    def check_orthoclosed_lower(self) -> None:
        qs = self.qs

        def lower(k: int) -> Optional[str]:
            closed = self.closed_sets[k]
            return None if qs.is_lower_set(closed) else f"{qs.format_set(closed)} is not a lower set"

        self.record("orthoclosed_lower", self.first_failure(self.pick(len(self.closed_sets)), lower))

    def check_hereditary_orthogonality(self) -> None:
        qs = self.qs
        ortho = qs.ortho

        def hereditary(i: int) -> Optional[str]:
            for u in iter_indices(qs.below[i]):
                for c in iter_indices(ortho.adj[i]):
                    if not ortho.orthogonal(u, c):
                        return (
                            f"{ortho.points[u]} <= {ortho.points[i]} ⊥ {ortho.points[c]} "
                            f"but {ortho.points[u]} is not orthogonal to {ortho.points[c]}"
                        )
            return None

        self.record("hereditary_orthogonality", self.first_failure(self.pick(qs.size), hereditary))

    def check_perp_decomposition(self) -> None:
        qs, poset = self.qs, self.poset
        ortho = qs.ortho

        def decomposition(i: int) -> Optional[str]:
            self.uses("perp", "tau", "beta")
            q = qs.quotients[i]
            name = ortho.points[i]
            for j, r in enumerate(qs.quotients):
                expected = poset.leq(q.b, r.a) or poset.leq(r.b, q.a)
                if ortho.orthogonal(i, j) != expected:
                    return f"orthogonality of {name} and {ortho.points[j]} contradicts the order"
            if ortho.perp(1 << i) != qs.tau(poset.down[q.a]) | qs.beta(poset.up[q.b]):
                return f"[{name}]^⊥ is not τ(x^↓) ∪ β(y^↑)"
            if qs.below[i] != qs.beta(poset.up[q.a]) & qs.tau(poset.down[q.b]):
                return f"[{name}]^↓ is not β(x^↑) ∩ τ(y^↓)"
            return None

        self.record("perp_decomposition", self.first_failure(self.pick(qs.size), decomposition))

    def _lower_sets(self) -> List[int]:
        return [mask for mask in range(1 << self.poset.n) if self.poset.is_down_set(mask)]

    def check_tau_beta_perp(self) -> None:
        qs, poset = self.qs, self.poset
        ortho = qs.ortho
        lower_bounded = poset.bottom() is not None
        upper_bounded = poset.top() is not None
        if not (lower_bounded or upper_bounded):
            self.record("tau_beta_perp", None, applicable=False)
            return
        lower_sets = self._lower_sets()
        full = poset.full

        def tau_beta_perp(k: int) -> Optional[str]:
            lower = lower_sets[k]
            if lower_bounded and ortho.perp(qs.tau(lower)) != qs.beta(poset.upper_bounds(lower)):
                return f"τ(I)^⊥ differs from β(I^↑) for I = {poset.labels_of(lower)}"
            upper = full & ~lower
            if upper_bounded and ortho.perp(qs.beta(upper)) != qs.tau(poset.lower_bounds(upper)):
                return f"β(F)^⊥ differs from τ(F^↓) for F = {poset.labels_of(upper)}"
            return None

        self.record("tau_beta_perp", self.first_failure(self.pick(len(lower_sets)), tau_beta_perp))

    def check_tau_closure(self) -> None:
        qs, poset = self.qs, self.poset
        if not self.result.bounded:
            self.record("tau_closure", None, applicable=False)
            return
        lower_sets = self._lower_sets()

        def tau_closure(k: int) -> Optional[str]:
            lower = lower_sets[k]
            if qs.ortho.closure(qs.tau(lower)) != qs.tau(poset.ideal_closure(lower)):
                return f"τ(I)^⊥⊥ differs from τ(I^↑↓) for I = {poset.labels_of(lower)}"
            return None

        self.record("tau_closure", self.first_failure(self.pick(len(lower_sets)), tau_closure))

    def check_double_perp_down(self) -> None:
        qs = self.qs

        def double_perp(i: int) -> Optional[str]:
            self.uses("closure", "principal_down")
            if qs.ortho.closure(1 << i) != qs.principal_down(i):
                return f"[{qs.ortho.points[i]}]^⊥⊥ differs from its principal down-set"
            return None

        self.record("double_perp_down", self.first_failure(self.pick(qs.size), double_perp))

    def check_principal_down_dacey(self) -> None:
        qs, poset = self.qs, self.poset
        ortho = qs.ortho

        def principal_down_dacey(i: int) -> Optional[str]:
            self.uses("bases", "principal_down")
            down = qs.principal_down(i)
            name = ortho.points[i]
            if not ortho.is_orthoclosed(down):
                return f"[{name}]^↓ is not orthoclosed"
            if not self.is_dacey(down):
                return f"[{name}]^↓ is not Dacey"
            q = qs.quotients[i]
            for basis in ortho.bases(down):
                steps = sorted((qs.quotients[j] for j in iter_indices(basis)),
                               key=lambda r: poset.height_key(r.a))
                chain = [steps[0].a] + [r.b for r in steps]
                if steps[0].a != q.a or steps[-1].b != q.b or any(
                    left.b != right.a for left, right in zip(steps, steps[1:])
                ):
                    return f"basis {ortho.format_set(basis)} of [{name}]^↓ is not a saturated chain {chain}"
            return None

        self.record("principal_down_dacey", self.first_failure(self.pick(qs.size), principal_down_dacey))

    def check_pair_perp_span(self) -> None:
        qs, poset = self.qs, self.poset
        ortho = qs.ortho
        if not self.result.lattice:
            self.record("pair_perp_span", None, applicable=False)
            return

        def pair_perp_span(k: int) -> Optional[str]:
            closed = self.closed_sets[k]
            for i, j in itertools.combinations(iter_indices(closed), 2):
                if ortho.orthogonal(i, j):
                    continue
                p, q = qs.quotients[i], qs.quotients[j]
                self.uses("meet", "join")
                low, high = poset.meet(p.a, q.a), poset.join(p.b, q.b)
                expected = qs.beta(poset.up[high]) | qs.tau(poset.down[low])
                if ortho.perp((1 << i) | (1 << j)) != expected:
                    return f"perp of {{{ortho.points[i]},{ortho.points[j]}}} is not β((b∨d)^↑) ∪ τ((a∧c)^↓)"
                if not closed >> qs.quotient(low, high) & 1:
                    return (
                        f"{qs.format_set(closed)} holds {ortho.points[i]}, {ortho.points[j]} "
                        f"but not {poset.elements[low]}<{poset.elements[high]}"
                    )
            return None

        self.record("pair_perp_span", self.first_failure(self.pick(len(self.closed_sets)), pair_perp_span))

    def check_merge_touching(self) -> None:
        qs, poset = self.qs, self.poset

        def merge(k: int) -> Optional[str]:
            closed = self.closed_sets[k]
            members = list(iter_indices(closed))
            for i, j in itertools.product(members, repeat=2):
                left, right = qs.quotients[i], qs.quotients[j]
                p, q2, q1, r = left.a, left.b, right.a, right.b
                if poset.leq(q1, q2) and poset.less(p, r) and not closed >> qs.quotient(p, r) & 1:
                    return (
                        f"{qs.format_set(closed)} holds {qs.ortho.points[i]}, {qs.ortho.points[j]} "
                        f"but not {poset.elements[p]}<{poset.elements[r]}"
                    )
            return None

        self.record("merge_touching", self.first_failure(self.pick(len(self.closed_sets)), merge))

    def check_chain_type_dacey(self) -> None:
        qs = self.qs
        ortho = qs.ortho
        chains = even_chains(self.poset)

        def chain_type(k: int) -> Optional[str]:
            self.uses("is_chain_type")
            chain = chains[k]
            tops = 0
            for a, b in zip(chain[0::2], chain[1::2]):
                tops |= 1 << qs.quotient(a, b)
            lower = qs.down_closure(tops)
            fmt = qs.format_set(lower)
            if not qs.is_chain_type(lower):
                return f"{fmt} is not of chain type"
            if not ortho.is_orthoclosed(lower):
                return f"chain-type set {fmt} is not orthoclosed"
            if not self.is_dacey(lower):
                return f"chain-type set {fmt} is not Dacey"
            if ortho.closure(qs.maximal(lower)) != lower:
                return f"max({fmt})^⊥⊥ differs from {fmt}"
            return None

        self.record("chain_type_dacey", self.first_failure(self.pick(len(chains)), chain_type))

    def check_dacey_union(self) -> None:
        ortho = self.qs.ortho
        closed_sets = self.closed_sets
        count = len(closed_sets)

        def union(k: int) -> Optional[str]:
            first, second = closed_sets[k // count], closed_sets[k % count]
            if not is_subset(first, ortho.perp(second)):
                return None
            joined = first | second
            if not ortho.is_orthoclosed(joined) or not self.is_dacey(first) or not self.is_dacey(second):
                return None
            if not self.is_dacey(joined):
                return f"{ortho.format_set(first)} ∪ {ortho.format_set(second)} is not Dacey"
            return None

        self.record("dacey_union", self.first_failure(self.pick(count * count), union))

    def check_dacey_criterion(self) -> None:
        ortho = self.qs.ortho

        def characterisation(k: int) -> Optional[str]:
            closed = self.closed_sets[k]
            perp = ortho.perp(closed)
            bases = list(ortho.bases(closed))
            equal = all(ortho.perp(basis) == perp for basis in bases)
            inside = all(is_subset(ortho.perp(basis), perp) for basis in bases)
            dacey = self.is_dacey(closed)
            if not dacey == equal == inside:
                return (
                    f"{ortho.format_set(closed)}: dacey={dacey}, "
                    f"B^⊥ = X^⊥ for all bases={equal}, B^⊥ ⊆ X^⊥ for all bases={inside}"
                )
            return None

        self.record("dacey_criterion", self.first_failure(self.pick(len(self.closed_sets)), characterisation))


def check_poset(poset: Poset, config: HarnessConfig) -> PosetOutcome:
    """Run every per-poset check; top-level so worker processes can pickle it."""
    return PosetCheck(poset, config).run()


def check_space(space: OrthoSpace) -> Tuple[Dict[str, str], List[Discrepancy]]:
    """Dacey ⟺ orthomodular and hexagon ⟺ not orthomodular on a standalone space."""
    subject = serialize_space(space)
    logic = space.logic
    dacey = space.dacey_space()
    orthomodular = is_orthomodular(logic)
    validation = validate_ortholattice(logic)
    statuses: Dict[str, str] = {}
    discrepancies: List[Discrepancy] = []

    def record(theorem: str, failure: Optional[str]) -> None:
        statuses[theorem] = FAIL if failure else PASS
        if failure:
            discrepancies.append(Discrepancy(theorem, subject, failure))
            logger.warning(f"Discrepancy in {theorem} on {subject.strip()!r}: {failure}")

    record(
        "graph_dacey_om",
        None if bool(dacey) == bool(orthomodular)
        else f"dacey={bool(dacey)} but orthomodular={bool(orthomodular)}",
    )
    hexagon = find_hexagon(logic)
    record(
        "graph_hexagon",
        None if (hexagon is None) == bool(orthomodular)
        else f"hexagon={hexagon} but orthomodular={bool(orthomodular)}",
    )
    record(
        "graph_logic_ortholattice",
        None if validation.passed else f"axioms fail: {validation.witnesses}",
    )
    return statuses, discrepancies


def unbounded_counterexample() -> Dict[str, object]:
    """The two-element antichain: not a chain, yet its (one-element) logic is Boolean."""
    antichain = Poset(("a", "b"), (0b01, 0b10))
    result = classify(antichain)
    return {
        "poset": serialize_poset(antichain),
        "q_size": result.q_size,
        "logic_size": result.logic_size,
        "chain": result.chain,
        "boolean": bool(result.boolean),
        "stated_logic_size": STATED_ANTICHAIN_LOGIC_SIZE,
        "differs_from_stated": result.logic_size != STATED_ANTICHAIN_LOGIC_SIZE,
    }


def theorem_harness(
    n_max: int,
    config: Optional[HarnessConfig] = None,
    workers: Optional[int] = None,
    graph_max: Optional[int] = None,
    allow_large: bool = False,
) -> HarnessResult:
    """
    Check every theorem on every bounded poset of size at most ``n_max``
    and every graph on at most ``graph_max`` vertices.

    Args:
        n_max: Largest poset size
        config: Sampling, seed and mutation; defaults come from the settings
        workers: Worker processes; 1 runs in-process
        graph_max: Largest graph size for the standalone Dacey check
        allow_large: Accept ``n_max`` up to the hard cap

    Returns:
        Per-theorem tallies, discrepancies, per-poset outcomes and the coverage ledger

    Raises:
        CapExceededError: If ``n_max`` is out of range
    """
    settings = get_settings()
    config = config if config is not None else HarnessConfig.from_settings(settings)
    workers = workers if workers is not None else settings.workers
    graph_max = graph_max if graph_max is not None else settings.graph_max

    check_size(n_max, allow_large)
    catalogue = bounded_catalogue(n_max, allow_large)
    logger.info(f"Checking {len(catalogue)} bounded posets of size <= {n_max} with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(check_poset, catalogue, itertools.repeat(config), chunksize=4))
    else:
        outcomes = [check_poset(poset, config) for poset in catalogue]
    outcomes.sort(key=lambda outcome: outcome.key)

    tallies = {theorem: TheoremTally() for theorem in THEOREMS}
    discrepancies: List[Discrepancy] = []
    covered: Set[str] = set()
    observations: Dict[str, Tuple[int, int]] = {}
    for outcome in outcomes:
        for theorem, status in outcome.statuses.items():
            tallies[theorem].add(status)
        discrepancies.extend(outcome.discrepancies)
        covered |= outcome.covered
        for name, seen in sorted(outcome.observations.items()):
            true_count, total = observations.get(name, (0, 0))
            observations[name] = (true_count + int(seen), total + 1)

    spaces = graph_catalogue(graph_max)
    logger.info(f"Checking {len(spaces)} graphs on at most {graph_max} vertices")
    for space in spaces:
        statuses, found = check_space(space)
        for theorem, status in statuses.items():
            tallies[theorem].add(status)
        discrepancies.extend(found)

    coverage = {operation: operation in covered for operation in OPERATIONS}
    missing = [operation for operation, seen in coverage.items() if not seen]
    tallies["coverage"].add(FAIL if missing else PASS)
    if missing:
        discrepancies.append(Discrepancy("coverage", "", f"operations never exercised: {', '.join(missing)}"))

    logger.info(f"Harness finished with {len(discrepancies)} discrepancies")
    return HarnessResult(
        n_max=n_max,
        catalogue_size=len(catalogue),
        graph_count=len(spaces),
        mutation=config.mutation,
        tallies=tallies,
        discrepancies=discrepancies,
        outcomes=outcomes,
        coverage=coverage,
        observations=observations,
        unbounded=unbounded_counterexample(),
    )
