"""
Finite ortholattices: axioms, orthomodularity, the hexagon and Booleanness.

An ``OrthoLattice`` is given by order rows (``up[x]`` is the bitset of the
elements above ``x``) and an orthocomplement map. Meets and joins are read
off the order, so structures that fail to be lattices can still be loaded
and examined. ``Logic`` is the set-based special case built from an
orthogonality space.
"""
import itertools
import logging
from functools import lru_cache
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from app.errors import PosetError
from app.models.bitset import from_indices, full_mask, is_subset, iter_indices
from app.models.poset import Poset, cover_pairs

if TYPE_CHECKING:
    from app.models.ortho_space import OrthoSpace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure; ``witness`` explains a failure."""

    holds: bool
    witness: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class ValidationReport:
    """Per-axiom results of ``validate_ortholattice``."""

    checks: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Tuple[int, ...]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def record(self, axiom: str, witness: Optional[Tuple[int, ...]]) -> None:
        self.checks[axiom] = witness is None
        if witness is not None:
            self.witnesses[axiom] = witness


class OrthoLattice:
    """A finite bounded poset with an orthocomplement map."""

    def __init__(self, labels: Sequence[str], up: Sequence[int], ocompl: Sequence[int]):
        if not (len(labels) == len(up) == len(ocompl)):
            raise PosetError("Labels, order rows and orthocomplement differ in length")
        self.labels = tuple(labels)
        self.up = tuple(up)
        self.ocompl = tuple(ocompl)
        self.size = len(self.labels)
        down = [0] * self.size
        for x, row in enumerate(self.up):
            for y in iter_indices(row):
                down[y] |= 1 << x
        self.down = tuple(down)
        self._by_up = {row: x for x, row in enumerate(self.up)}
        self._by_down = {row: x for x, row in enumerate(self.down)}
        full = full_mask(self.size)
        self.bottom = self._by_up.get(full)
        self.top = self._by_down.get(full)

    @classmethod
    def from_relation(
        cls,
        labels: Sequence[str],
        below: Iterable[Tuple[str, str]],
        ocompl: Mapping[str, str],
    ) -> "OrthoLattice":
        """Build from label pairs ``x < y`` (closed transitively) and an ocompl table."""
        index = {label: i for i, label in enumerate(labels)}
        order = Poset.from_covers(list(labels), [(index[x], index[y]) for x, y in below])
        return cls(labels, order.up, [index[ocompl[label]] for label in labels])

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def less(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def meet(self, x: int, y: int) -> Optional[int]:
        return self._by_down.get(self.down[x] & self.down[y])

    def join(self, x: int, y: int) -> Optional[int]:
        return self._by_up.get(self.up[x] & self.up[y])

    def big_meet(self, elements: Iterable[int]) -> Optional[int]:
        """Meet of a family; the empty family meets to top."""
        result = self.top
        for x in elements:
            if result is None:
                return None
            result = self.meet(result, x)
        return result

    def big_join(self, elements: Iterable[int]) -> Optional[int]:
        """Join of a family; the empty family joins to bottom."""
        result = self.bottom
        for x in elements:
            if result is None:
                return None
            result = self.join(result, x)
        return result

    def missing_bound(self) -> Optional[Tuple[int, int]]:
        for x in range(self.size):
            for y in range(x + 1, self.size):
                if self.meet(x, y) is None or self.join(x, y) is None:
                    return x, y
        return None

    def is_lattice(self) -> bool:
        return self.bottom is not None and self.top is not None and self.missing_bound() is None

    def complements(self, x: int) -> List[int]:
        return [
            y for y in range(self.size)
            if self.meet(x, y) == self.bottom and self.join(x, y) == self.top
        ]

    def covers(self) -> List[Tuple[int, int]]:
        return cover_pairs(self.up)

    def with_ocompl(self, ocompl: Sequence[int]) -> "OrthoLattice":
        """Same order, different orthocomplement."""
        return OrthoLattice(self.labels, self.up, ocompl)


class Logic(OrthoLattice):
    """
    The orthoclosed subsets of an orthogonality space.

    Meet is intersection and join is (X^⊥ ∩ Y^⊥)^⊥; elements are ordered by
    size and then by member indices, so the bottom comes first and the full
    point set last.
    """

    def __init__(self, space: "OrthoSpace", closed_sets: Sequence[int]):
        self.space = space
        self.closed_sets = tuple(closed_sets)
        self.index: Dict[int, int] = {members: i for i, members in enumerate(self.closed_sets)}
        up = [
            from_indices(j for j, other in enumerate(self.closed_sets) if is_subset(mine, other))
            for mine in self.closed_sets
        ]
        ocompl = [self.index[space.perp(members)] for members in self.closed_sets]
        labels = [space.format_set(members) for members in self.closed_sets]
        super().__init__(labels, up, ocompl)

    def element(self, members: int) -> int:
        """Index of an orthoclosed set."""
        return self.index[members]

    def meet(self, x: int, y: int) -> Optional[int]:
        return self.index.get(self.closed_sets[x] & self.closed_sets[y])

    def join(self, x: int, y: int) -> Optional[int]:
        perp = self.space.perp
        return self.index.get(perp(perp(self.closed_sets[x]) & perp(self.closed_sets[y])))


# decision procedures

def is_orthomodular(lattice: OrthoLattice) -> Verdict:
    """
    Check x <= y  =>  y = x ∨ (y ∧ x^⊥) over all comparable pairs.

    Returns:
        Verdict whose witness is the first failing pair (x, y); a pair lacking
        a meet or join also fails
    """
    for x in range(lattice.size):
        for y in iter_indices(lattice.up[x]):
            if y == x:
                continue
            inner = lattice.meet(y, lattice.ocompl[x])
            outer = lattice.join(x, inner) if inner is not None else None
            if outer != y:
                return Verdict(False, (x, y))
    return Verdict(True)


HEXAGON_LABELS = ("0", "a", "b", "b'", "a'", "1")


def _is_hexagon(lattice: OrthoLattice, six: Tuple[int, ...]) -> bool:
    """Whether (0', a, b, b^⊥, a^⊥, 1') spans a sub-ortholattice shaped like the hexagon."""
    if len(set(six)) != 6:
        return False
    zero, a, b, b_perp, a_perp, one = six
    ocompl = lattice.ocompl
    if (ocompl[zero], ocompl[one], ocompl[a], ocompl[b]) != (one, zero, a_perp, b_perp):
        return False
    if ocompl[a_perp] != a or ocompl[b_perp] != b:
        return False
    reference = hexagon()
    for i, j in itertools.product(range(6), repeat=2):
        if lattice.leq(six[i], six[j]) != reference.leq(i, j):
            return False
        if lattice.meet(six[i], six[j]) != six[reference.meet(i, j)]:
            return False
        if lattice.join(six[i], six[j]) != six[reference.join(i, j)]:
            return False
    return True


def find_hexagon(lattice: OrthoLattice) -> Optional[Tuple[int, ...]]:
    """
    Search for a sub-ortholattice isomorphic to the hexagon.

    Candidates come from strictly comparable a < b with b ∧ a^⊥ = 0; each
    candidate six-tuple is verified against the hexagon's full operation tables.

    Returns:
        (0', a, b, b^⊥, a^⊥, 1') or None
    """
    if lattice.bottom is None or lattice.top is None:
        return None
    for a in range(lattice.size):
        if a in (lattice.bottom, lattice.top):
            continue
        for b in iter_indices(lattice.up[a]):
            if b in (a, lattice.top):
                continue
            if lattice.meet(b, lattice.ocompl[a]) != lattice.bottom:
                continue
            six = (lattice.bottom, a, b, lattice.ocompl[b], lattice.ocompl[a], lattice.top)
            if _is_hexagon(lattice, six):
                return six
    return None


def is_boolean(lattice: OrthoLattice) -> Verdict:
    """Check a ∧ b = 0  =>  a <= b^⊥ for all pairs."""
    for a in range(lattice.size):
        for b in range(lattice.size):
            meet = lattice.meet(a, b)
            if meet is None:
                return Verdict(False, (a, b))
            if meet == lattice.bottom and not lattice.leq(a, lattice.ocompl[b]):
                return Verdict(False, (a, b))
    return Verdict(True)


def is_distributive(lattice: OrthoLattice, limit: Optional[int] = None) -> Optional[Verdict]:
    """
    Triple scan of x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z).

    Returns None when the lattice is larger than ``limit``.
    """
    if limit is not None and lattice.size > limit:
        logger.debug(f"Skipping distributivity scan on {lattice.size} elements (limit {limit})")
        return None
    meet, join = lattice.meet, lattice.join
    for x, y, z in itertools.product(range(lattice.size), repeat=3):
        yz = join(y, z)
        xy, xz = meet(x, y), meet(x, z)
        if yz is None or xy is None or xz is None:
            return Verdict(False, (x, y, z))
        if meet(x, yz) != join(xy, xz):
            return Verdict(False, (x, y, z))
    return Verdict(True)


def validate_ortholattice(lattice: OrthoLattice) -> ValidationReport:
    """
    Check every ortholattice axiom and (finite) completeness.

    Returns:
        Report with one entry per axiom and the first counterexample of each failure
    """
    report = ValidationReport()
    size = lattice.size
    ocompl = lattice.ocompl
    elements = range(size)

    def first(predicate, arity: int) -> Optional[Tuple[int, ...]]:
        for combo in itertools.product(elements, repeat=arity):
            if not predicate(*combo):
                return combo
        return None

    def order_axioms(x: int, y: int) -> bool:
        if not lattice.leq(x, x):
            return False
        if x != y and lattice.leq(x, y) and lattice.leq(y, x):
            return False
        return not lattice.leq(x, y) or is_subset(lattice.up[y], lattice.up[x])

    report.record("partial_order", first(order_axioms, 2))
    report.record("bounded", None if lattice.bottom is not None and lattice.top is not None else ())
    report.record("lattice", lattice.missing_bound())
    report.record("complete", None if report.checks["bounded"] and report.checks["lattice"] else ())
    bottom, top = lattice.bottom, lattice.top
    report.record("zero_one", None if bottom is not None and top is not None
                  and ocompl[bottom] == top and ocompl[top] == bottom else ())
    report.record("involution", first(lambda x: ocompl[ocompl[x]] == x, 1))
    report.record("antitone", first(
        lambda x, y: not lattice.leq(x, y) or lattice.leq(ocompl[y], ocompl[x]), 2
    ))

    def de_morgan_join(x: int, y: int) -> bool:
        joined = lattice.join(x, y)
        return joined is not None and ocompl[joined] == lattice.meet(ocompl[x], ocompl[y])

    def de_morgan_meet(x: int, y: int) -> bool:
        met = lattice.meet(x, y)
        return met is not None and ocompl[met] == lattice.join(ocompl[x], ocompl[y])

    report.record("de_morgan_join", first(de_morgan_join, 2))
    report.record("de_morgan_meet", first(de_morgan_meet, 2))
    report.record("complement_meet", first(lambda x: lattice.meet(x, ocompl[x]) == bottom, 1))
    report.record("complement_join", first(lambda x: lattice.join(x, ocompl[x]) == top, 1))
    if not report.passed:
        logger.debug(f"Ortholattice validation failed: {sorted(report.witnesses)}")
    return report


# fixtures

@lru_cache(maxsize=None)
def hexagon() -> OrthoLattice:
    """The six-element ortholattice 0 < a < b < 1, 0 < b' < a' < 1."""
    return OrthoLattice.from_relation(
        HEXAGON_LABELS,
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "b'"), ("b'", "a'"), ("a'", "1")],
        {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"},
    )


def boolean_algebra(atoms: int) -> OrthoLattice:
    """Powerset of ``atoms`` atoms with set complement."""
    size = 1 << atoms
    up = [from_indices(y for y in range(size) if is_subset(x, y)) for x in range(size)]
    ocompl = [x ^ (size - 1) for x in range(size)]
    labels = ["{" + ",".join(str(i) for i in iter_indices(x)) + "}" for x in range(size)]
    return OrthoLattice(labels, up, ocompl)


def chain_with_identity(length: int) -> OrthoLattice:
    """A chain whose 'orthocomplement' is the identity; fails the complement laws."""
    up = [full_mask(length) & ~full_mask(x) for x in range(length)]
    return OrthoLattice([str(x) for x in range(length)], up, list(range(length)))
