"""
The orthogonality space of proper quotients of a poset and the
classification built on top of it.

A quotient ``[a<b]`` is a strictly comparable pair. Two quotients
``[a<b]`` and ``[c<d]`` are orthogonal when ``b <= c`` or ``d <= a``;
``[a<b] <= [c<d]`` when ``c <= a`` and ``b <= d``.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from app.errors import NotLowerSetError
from app.models.bitset import from_indices, is_subset, iter_indices
from app.models.ortho_lattice import Logic, OrthoLattice, Verdict, find_hexagon, is_boolean, is_orthomodular
from app.models.ortho_space import DaceyVerdict, OrthoSet, OrthoSpace
from app.models.poset import DownSet, Poset, nonlattice_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Quotient:
    """A proper quotient ``[a<b]``; ``a`` and ``b`` are element indices."""

    a: int
    b: int

    def label(self, poset: Poset) -> str:
        return f"{poset.elements[self.a]}<{poset.elements[self.b]}"


class QuotientSpace:
    """
    Q(P) with its orthogonality and its order.

    Quotients are indexed lexicographically by ``(a, b)``. ``below[i]`` is
    the principal down-set of quotient ``i`` and ``above[i]`` its principal
    up-set, both as bitsets over quotient indices.
    """

    def __init__(self, poset: Poset, ortho: Optional[OrthoSpace] = None):
        self.poset = poset
        self.quotients: Tuple[Quotient, ...] = tuple(
            Quotient(a, b) for a in range(poset.n) for b in iter_indices(poset.up[a]) if b != a
        )
        self.index: Dict[Quotient, int] = {q: i for i, q in enumerate(self.quotients)}

        by_top = [0] * poset.n
        by_bottom = [0] * poset.n
        for i, q in enumerate(self.quotients):
            by_top[q.b] |= 1 << i
            by_bottom[q.a] |= 1 << i
        self._by_top = tuple(by_top)
        self._by_bottom = tuple(by_bottom)

        self.below = tuple(
            self.beta(poset.up[q.a]) & self.tau(poset.down[q.b]) for q in self.quotients
        )
        above = [0] * len(self.quotients)
        for i, row in enumerate(self.below):
            for j in iter_indices(row):
                above[j] |= 1 << i
        self.above = tuple(above)

        if ortho is None:
            labels = [q.label(poset) for q in self.quotients]
            ortho = OrthoSpace(tuple(labels), tuple(self._orthogonal_row(q) for q in self.quotients))
        self.ortho = ortho

    def _orthogonal_row(self, q: Quotient) -> int:
        # [a<b] ⊥ [c<d]  iff  d <= a or b <= c
        return self.tau(self.poset.down[q.a]) | self.beta(self.poset.up[q.b])

    @property
    def size(self) -> int:
        return len(self.quotients)

    @property
    def logic(self) -> Logic:
        return self.ortho.logic

    def with_ortho(self, ortho: OrthoSpace) -> "QuotientSpace":
        """Same quotients and order, a different orthogonality relation."""
        return QuotientSpace(self.poset, ortho)

    def quotient(self, a: int, b: int) -> int:
        return self.index[Quotient(a, b)]

    # τ and β

    def tau(self, elements: int) -> int:
        """Quotients whose top endpoint lies in ``elements``."""
        result = 0
        for x in iter_indices(elements):
            result |= self._by_top[x]
        return result

    def beta(self, elements: int) -> int:
        """Quotients whose bottom endpoint lies in ``elements``."""
        result = 0
        for x in iter_indices(elements):
            result |= self._by_bottom[x]
        return result

    def principal_down(self, i: int) -> int:
        return self.below[i]

    # order

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def is_lower_set(self, mask: int) -> bool:
        return all(is_subset(self.below[i], mask) for i in iter_indices(mask))

    def down_closure(self, mask: int) -> int:
        result = 0
        for i in iter_indices(mask):
            result |= self.below[i]
        return result

    def maximal(self, mask: int) -> int:
        return from_indices(i for i in iter_indices(mask) if self.above[i] & mask == 1 << i)

    def separated(self, i: int, j: int) -> bool:
        """``b < c`` or ``d < a`` for ``[a<b]``, ``[c<d]``."""
        p, q = self.quotients[i], self.quotients[j]
        return self.poset.less(p.b, q.a) or self.poset.less(q.b, p.a)

    def chain_type_violation(self, mask: int) -> Optional[Tuple[int, int]]:
        """
        First pair of distinct maximal quotients that is not orthogonal and
        strictly separated, or None when ``mask`` is of chain type.

        Raises:
            NotLowerSetError: If ``mask`` is not a lower set of Q(P)
        """
        if not self.is_lower_set(mask):
            raise NotLowerSetError(f"{self.ortho.format_set(mask)} is not a lower set of Q(P)")
        maxima = list(iter_indices(self.maximal(mask)))
        for k, i in enumerate(maxima):
            for j in maxima[k + 1:]:
                if not (self.ortho.orthogonal(i, j) and self.separated(i, j)):
                    return i, j
        return None

    def is_chain_type(self, mask: int) -> bool:
        return self.chain_type_violation(mask) is None

    def endpoints(self, mask: int) -> Tuple[int, ...]:
        """Endpoints of the maximal quotients of ``mask``, ascending."""
        points = 0
        for i in iter_indices(self.maximal(mask)):
            q = self.quotients[i]
            points |= (1 << q.a) | (1 << q.b)
        return self.poset.sort_chain(points)

    def format_set(self, mask: int) -> str:
        return self.ortho.format_set(mask)

    def labels_of(self, mask: int) -> List[str]:
        return self.ortho.labels_of(mask)


def quotient_space(poset: Poset) -> QuotientSpace:
    qs = QuotientSpace(poset)
    logger.debug(f"Q(P) of {poset.n}-element poset has {qs.size} quotients")
    return qs


def tau(qs: QuotientSpace, elements: Iterable[int]) -> OrthoSet:
    return OrthoSet(qs.ortho, qs.tau(from_indices(elements)))


def beta(qs: QuotientSpace, elements: Iterable[int]) -> OrthoSet:
    return OrthoSet(qs.ortho, qs.beta(from_indices(elements)))


def principal_down(qs: QuotientSpace, q: Quotient) -> OrthoSet:
    return OrthoSet(qs.ortho, qs.principal_down(qs.index[q]))


def is_chain_type(qs: QuotientSpace, subset: OrthoSet) -> bool:
    return qs.is_chain_type(subset.members)


# classification

@dataclass
class Classification:
    """
    Independent verdicts on a poset and on the logic of its quotient space.

    Nothing here is derived from another verdict; agreement between them is
    what the harness checks.
    """

    poset: Poset = field(repr=False)
    space: QuotientSpace = field(repr=False)
    bounded: bool
    lattice: bool
    chain: bool
    chain_type: bool
    dacey: DaceyVerdict
    orthomodular: Verdict
    boolean: Verdict
    hexagon: Optional[Tuple[int, ...]] = None
    missing_bound: Optional[Tuple[int, int]] = None
    incomparable: Optional[Tuple[int, int]] = None
    non_chain_type: Optional[int] = None
    nonlattice_ideal: Optional[DownSet] = None
    short_basis: Optional[Tuple[int, int]] = None
    disjoint_pair: Optional[Tuple[int, int]] = None

    @property
    def logic(self) -> Logic:
        return self.space.logic

    @property
    def logic_size(self) -> int:
        return self.space.logic.size

    @property
    def q_size(self) -> int:
        return self.space.size

    @property
    def lattice_verdicts(self) -> Dict[str, bool]:
        return {
            "lattice": self.lattice,
            "chain_type": self.chain_type,
            "dacey": bool(self.dacey),
            "orthomodular": bool(self.orthomodular),
        }

    @property
    def lattice_agrees(self) -> bool:
        return len(set(self.lattice_verdicts.values())) == 1

    @property
    def chain_boolean_agrees(self) -> bool:
        return self.chain == bool(self.boolean)


def _first_non_chain_type(qs: QuotientSpace) -> Optional[int]:
    for closed in qs.ortho.orthoclosed_sets:
        if not qs.is_lower_set(closed) or not qs.is_chain_type(closed):
            return closed
    return None


def short_basis_witness(qs: QuotientSpace, ideal: DownSet) -> Optional[Tuple[int, int]]:
    """
    For a closed ideal I with two maximal elements, the orthoclosed set τ(I)
    and its basis {[0<a]} whose closure falls short of τ(I).
    """
    bottom = qs.poset.bottom()
    maxima = list(iter_indices(ideal.maximal()))
    if bottom is None or len(maxima) < 2:
        return None
    return qs.tau(ideal.members), 1 << qs.quotient(bottom, maxima[0])


def disjoint_pair_witness(qs: QuotientSpace, pair: Tuple[int, int]) -> Optional[Tuple[int, int]]:
    """
    For incomparable a, b in a bounded poset: [a<1]^↓ and [0<b]^↓ meet in ∅
    although [a<1] is not orthogonal to [0<b].
    """
    bounds = qs.poset.bounds()
    if bounds is None:
        return None
    bottom, top = bounds
    a, b = pair
    return qs.principal_down(qs.quotient(a, top)), qs.principal_down(qs.quotient(bottom, b))


def classify(
    poset: Poset,
    qs: Optional[QuotientSpace] = None,
    judged: Optional[OrthoLattice] = None,
) -> Classification:
    """
    Classify a poset by every verdict the structure theorems relate.

    Args:
        poset: The poset to classify
        qs: Precomputed (or deliberately altered) quotient space of ``poset``
        judged: Ortholattice to test for orthomodularity, Booleanness and the
            hexagon in place of the logic of ``qs``

    Returns:
        Classification with all verdicts and their witnesses
    """
    qs = qs if qs is not None else quotient_space(poset)
    logic = qs.logic
    judged = judged if judged is not None else logic
    missing = poset.missing_bound()
    incomparable = poset.incomparable_pair()
    non_chain_type = _first_non_chain_type(qs)
    ideal = nonlattice_witness(poset)

    result = Classification(
        poset=poset,
        space=qs,
        bounded=poset.is_bounded(),
        lattice=missing is None,
        chain=incomparable is None,
        chain_type=non_chain_type is None,
        dacey=qs.ortho.dacey_space(),
        orthomodular=is_orthomodular(judged),
        boolean=is_boolean(judged),
        hexagon=find_hexagon(judged),
        missing_bound=missing,
        incomparable=incomparable,
        non_chain_type=non_chain_type,
        nonlattice_ideal=ideal,
    )
    if result.bounded and ideal is not None:
        result.short_basis = short_basis_witness(qs, ideal)
    if result.bounded and incomparable is not None:
        result.disjoint_pair = disjoint_pair_witness(qs, incomparable)
    logger.debug(
        f"Classified {poset.n}-element poset: lattice={result.lattice}, dacey={bool(result.dacey)}, "
        f"orthomodular={bool(result.orthomodular)}, logic={logic.size}"
    )
    return result

