"""
Bridges between the quotient-space logic and two classical lattice
constructions: the Kalmbach lattice of even chains and the Dedekind-MacNeille
completion.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from app.errors import NotChainTypeError, NotLowerSetError, PosetError, UnboundedPosetError
from app.models.bitset import from_indices, is_subset
from app.models.ortho_lattice import OrthoLattice
from app.models.poset import CompletionLattice, Poset, macneille
from app.models.quotient_space import QuotientSpace, quotient_space

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvenChain:
    """A chain x1 < x2 < ... < x2n of a bounded poset; stored ascending."""

    parent: Poset = field(repr=False, compare=False)
    members: Tuple[int, ...]

    def __post_init__(self):
        if len(self.members) % 2:
            raise PosetError(f"Chain {self.labels()} has odd length")
        for x, y in zip(self.members, self.members[1:]):
            if not self.parent.less(x, y):
                raise PosetError(f"{self.labels()} is not strictly ascending")

    @property
    def mask(self) -> int:
        return from_indices(self.members)

    def blocks(self) -> List[Tuple[int, int]]:
        """Consecutive pairs (x1, x2), (x3, x4), ..."""
        return list(zip(self.members[0::2], self.members[1::2]))

    def labels(self) -> List[str]:
        return [self.parent.elements[x] for x in self.members]

    def fits_in(self, other: "EvenChain") -> bool:
        """Every block of this chain lies inside some block of ``other``."""
        leq = self.parent.leq
        return all(
            any(leq(c, a) and leq(b, d) for c, d in other.blocks())
            for a, b in self.blocks()
        )


def even_chains(poset: Poset) -> List[Tuple[int, ...]]:
    """All chains of even length, by depth-first extension in ascending index order."""
    found: List[Tuple[int, ...]] = [()]

    def extend(chain: Tuple[int, ...], candidates: Sequence[int]) -> None:
        for y in candidates:
            longer = chain + (y,)
            if len(longer) % 2 == 0:
                found.append(longer)
            extend(longer, [z for z in candidates if poset.less(y, z)])

    extend((), range(poset.n))
    return found


class KalmbachLattice(OrthoLattice):
    """
    K(P): even chains ordered by block containment, with C ↦ C △ {0, 1}
    as orthocomplement. Bottom is ∅, top is {0, 1}.
    """

    def __init__(self, poset: Poset):
        bounds = poset.bounds()
        if bounds is None:
            raise UnboundedPosetError("The Kalmbach construction needs a bounded poset")
        self.poset = poset
        chains = sorted(even_chains(poset), key=lambda c: (len(c), c))
        self.chains: Tuple[EvenChain, ...] = tuple(EvenChain(poset, c) for c in chains)
        self.index: Dict[int, int] = {chain.mask: i for i, chain in enumerate(self.chains)}

        up = [
            from_indices(j for j, other in enumerate(self.chains) if mine.fits_in(other))
            for mine in self.chains
        ]
        bottom, top = bounds
        # one-element poset: K(P) is the one-element lattice {∅}
        flip = 0 if bottom == top else (1 << bottom) | (1 << top)
        ocompl = [self.index[chain.mask ^ flip] for chain in self.chains]
        labels = ["{" + ",".join(chain.labels()) + "}" for chain in self.chains]
        super().__init__(labels, up, ocompl)

    def element(self, members: Sequence[int]) -> int:
        return self.index[from_indices(members)]


def kalmbach(poset: Poset) -> KalmbachLattice:
    """
    Build K(P) for a bounded poset.

    Raises:
        UnboundedPosetError: If P lacks a least or a greatest element
    """
    lattice = KalmbachLattice(poset)
    logger.debug(f"K(P) of {poset.n}-element poset has {lattice.size} even chains")
    return lattice


def kalmbach_to_logic(qs: QuotientSpace, chain: EvenChain) -> int:
    """f(C): the union of the principal down-sets [x1<x2]^↓ ∪ ... ∪ [x2n-1<x2n]^↓."""
    result = 0
    for a, b in chain.blocks():
        result |= qs.principal_down(qs.quotient(a, b))
    return result


def logic_to_kalmbach(qs: QuotientSpace, mask: int) -> EvenChain:
    """
    g(X): the endpoints of the maximal quotients of X, ascending.

    Raises:
        NotChainTypeError: If X is not of chain type
    """
    violation = qs.chain_type_violation(mask)
    if violation is not None:
        i, j = violation
        raise NotChainTypeError(
            f"{qs.format_set(mask)} is not of chain type: "
            f"maximal quotients {qs.ortho.points[i]} and {qs.ortho.points[j]} are not separated"
        )
    return EvenChain(qs.poset, qs.endpoints(mask))


@dataclass(frozen=True)
class LawCheck:
    """Outcome of checking a family of laws; names the first broken law."""

    holds: bool
    law: Optional[str] = None
    witness: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class KalmbachIsomorphism:
    """The f/g correspondence between K(P) and the logic of Q(P)."""

    lattice: KalmbachLattice
    space: QuotientSpace
    table: List[Tuple[int, int]]
    check: LawCheck


def verify_kalmbach_isomorphism(
    poset: Poset,
    qs: Optional[QuotientSpace] = None,
    lattice: Optional[KalmbachLattice] = None,
) -> KalmbachIsomorphism:
    """
    Check that f and g are mutually inverse and preserve order and
    orthocomplement in both directions.

    Returns:
        The isomorphism table (chain index, logic index) and the law check;
        the table is partial when f leaves the logic
    """
    qs = qs if qs is not None else quotient_space(poset)
    lattice = lattice if lattice is not None else kalmbach(poset)
    logic = qs.logic
    table: List[Tuple[int, int]] = []

    def result(law: Optional[str] = None, *witness: int) -> KalmbachIsomorphism:
        return KalmbachIsomorphism(lattice, qs, table, LawCheck(law is None, law, tuple(witness)))

    image: List[int] = []
    for i, chain in enumerate(lattice.chains):
        closed = kalmbach_to_logic(qs, chain)
        if closed not in logic.index:
            return result("f lands in the logic", i)
        image.append(logic.index[closed])
        table.append((i, logic.index[closed]))

    if lattice.size != logic.size:
        return result("|K(P)| = |logic|", lattice.size, logic.size)
    if len(set(image)) != len(image):
        return result("f injective")

    for x, closed in enumerate(logic.closed_sets):
        try:
            chain = logic_to_kalmbach(qs, closed)
        except (NotChainTypeError, NotLowerSetError, PosetError):
            return result("g defined on the logic", x)
        if chain.mask not in lattice.index:
            return result("g lands in K(P)", x)
        if image[lattice.index[chain.mask]] != x:
            return result("f(g(X)) = X", x)
    for i, chain in enumerate(lattice.chains):
        if logic_to_kalmbach(qs, logic.closed_sets[image[i]]).mask != chain.mask:
            return result("g(f(C)) = C", i)

    for i, j in itertools.product(range(lattice.size), repeat=2):
        if lattice.leq(i, j) != logic.leq(image[i], image[j]):
            return result("order preserved and reflected", i, j)
    for i in range(lattice.size):
        if image[lattice.ocompl[i]] != logic.ocompl[image[i]]:
            return result("orthocomplement preserved", i)
    return result()


@dataclass
class MacNeilleEmbedding:
    """τ restricted to closed ideals: I ↦ τ(I), an injective map into the logic."""

    completion: CompletionLattice
    space: QuotientSpace
    image: Tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.image[i]

    def verify(self) -> LawCheck:
        """
        Check injectivity, bounds, order, pairwise and whole-family meets and joins.
        """
        completion, logic, perp = self.completion, self.space.logic, self.space.ortho.perp
        image = self.image
        poset = completion.poset

        def logic_join(masks: Sequence[int]) -> int:
            union = 0
            for mask in masks:
                union |= mask
            return perp(perp(union))

        def logic_meet(masks: Sequence[int]) -> int:
            result = self.space.ortho.full
            for mask in masks:
                result &= mask
            return result

        for i, mask in enumerate(image):
            if mask not in logic.index:
                return LawCheck(False, "τ(I) orthoclosed", (i,))
        if len(set(image)) != len(image):
            return LawCheck(False, "injective")
        top = completion.index[poset.full]
        if image[top] != self.space.ortho.full:
            return LawCheck(False, "top preserved", (top,))
        if image[0] != 0:
            return LawCheck(False, "bottom preserved", (0,))
        for i, j in itertools.product(range(completion.size), repeat=2):
            if completion.leq(i, j) != is_subset(image[i], image[j]):
                return LawCheck(False, "order preserved and reflected", (i, j))
            if image[completion.meet((i, j))] != image[i] & image[j]:
                return LawCheck(False, "binary meet", (i, j))
            if image[completion.join((i, j))] != logic_join((image[i], image[j])):
                return LawCheck(False, "binary join", (i, j))
        everything = range(completion.size)
        if image[completion.meet(everything)] != logic_meet(image):
            return LawCheck(False, "meet of all ideals")
        if image[completion.join(everything)] != logic_join(image):
            return LawCheck(False, "join of all ideals")
        if image[completion.join(())] != logic_join(()):
            return LawCheck(False, "empty join")
        if image[completion.meet(())] != logic_meet(()):
            return LawCheck(False, "empty meet")
        return LawCheck(True)

    def is_surjective(self) -> bool:
        return len(self.image) == self.space.logic.size


def macneille_embedding(poset: Poset, qs: Optional[QuotientSpace] = None) -> MacNeilleEmbedding:
    """
    Map each closed ideal of the completion to τ(I).

    Raises:
        UnboundedPosetError: If P lacks a least or a greatest element
    """
    if not poset.is_bounded():
        raise UnboundedPosetError("The MacNeille embedding into the logic needs a bounded poset")
    qs = qs if qs is not None else quotient_space(poset)
    completion = macneille(poset)
    image = tuple(qs.tau(ideal.members) for ideal in completion.closed_ideals)
    logger.debug(
        f"Embedded {completion.size} closed ideals into a logic of {qs.logic.size} elements"
    )
    return MacNeilleEmbedding(completion, qs, image)

