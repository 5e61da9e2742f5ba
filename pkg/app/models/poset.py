"""
Finite posets, their bound operators and the Dedekind-MacNeille completion.

Elements are indexed densely 0..n-1; labels are only used for input and
output. Order rows are bitsets: ``up[x]`` holds every ``y`` with ``x <= y``.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from app.errors import PosetError, PosetParseError
from app.models.bitset import (
    from_indices,
    full_mask,
    intersection_closure,
    is_subset,
    iter_indices,
    lex_key,
    popcount,
)

logger = logging.getLogger(__name__)

ELEMENT_FORBIDDEN = frozenset("<,;:#")
POINT_FORBIDDEN = ELEMENT_FORBIDDEN | {"-"}


def cover_pairs(up: Sequence[int]) -> List[Tuple[int, int]]:
    """
    Transitive reduction of an order given by its up-set rows.

    Args:
        up: ``up[x]`` is the bitset of elements above or equal to ``x``

    Returns:
        Sorted list of covering pairs ``(x, y)``
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(up)))
    for x, row in enumerate(up):
        graph.add_edges_from((x, y) for y in iter_indices(row) if y != x)
    return sorted(nx.transitive_reduction(graph).edges())


@dataclass(frozen=True)
class Poset:
    """A finite nonempty poset."""

    elements: Tuple[str, ...]
    up: Tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if not self.elements:
            raise PosetError("A poset needs at least one element")
        if len(self.up) != len(self.elements):
            raise PosetError("Order rows do not match the element list")

    @classmethod
    def from_covers(cls, elements: Sequence[str], covers: Iterable[Tuple[int, int]]) -> "Poset":
        """Build the reflexive-transitive closure of a cover relation."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(elements)))
        graph.add_edges_from(covers)
        if not nx.is_directed_acyclic_graph(graph):
            cycle = [elements[u] for u, _ in nx.find_cycle(graph)]
            raise PosetParseError(f"Cycle detected in cover relation: {' < '.join(cycle + cycle[:1])}")
        closure = nx.transitive_closure_dag(graph)
        up = tuple((1 << x) | from_indices(closure.successors(x)) for x in range(len(elements)))
        return cls(tuple(elements), up)

    @classmethod
    def from_matrix(cls, elements: Sequence[str], leq: Sequence[Sequence[bool]]) -> "Poset":
        """Build a poset from a full order matrix, checking the poset axioms."""
        n = len(elements)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise PosetError(f"Order matrix must be {n}x{n}")
        up = tuple(from_indices(y for y in range(n) if leq[x][y]) for x in range(n))
        for x in range(n):
            if not leq[x][x]:
                raise PosetError(f"Relation is not reflexive at {elements[x]}")
            for y in iter_indices(up[x]):
                if y != x and up[y] >> x & 1:
                    raise PosetError(f"Relation is not antisymmetric: {elements[x]}, {elements[y]}")
                if not is_subset(up[y], up[x]):
                    raise PosetError(f"Relation is not transitive above {elements[x]} <= {elements[y]}")
        return cls(tuple(elements), up)

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @cached_property
    def down(self) -> Tuple[int, ...]:
        rows = [0] * self.n
        for x, row in enumerate(self.up):
            for y in iter_indices(row):
                rows[y] |= 1 << x
        return tuple(rows)

    @cached_property
    def index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.elements)}

    @cached_property
    def _by_down(self) -> Dict[int, int]:
        return {row: x for x, row in enumerate(self.down)}

    @cached_property
    def _by_up(self) -> Dict[int, int]:
        return {row: x for x, row in enumerate(self.up)}

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def less(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def mask_of(self, labels: Iterable[str]) -> int:
        try:
            return from_indices(self.index[label] for label in labels)
        except KeyError as e:
            raise PosetError(f"Unknown element {e.args[0]!r}")

    def labels_of(self, mask: int) -> List[str]:
        return [self.elements[i] for i in iter_indices(mask)]

    # bound operators

    def lower_bounds(self, mask: int) -> int:
        """X^↓: every element below all of X (the whole carrier for X = ∅)."""
        result = self.full
        for x in iter_indices(mask):
            result &= self.down[x]
        return result

    def upper_bounds(self, mask: int) -> int:
        """X^↑: every element above all of X (the whole carrier for X = ∅)."""
        result = self.full
        for x in iter_indices(mask):
            result &= self.up[x]
        return result

    def ideal_closure(self, mask: int) -> int:
        return self.lower_bounds(self.upper_bounds(mask))

    def bottom(self) -> Optional[int]:
        return self._by_up.get(self.full)

    def top(self) -> Optional[int]:
        return self._by_down.get(self.full)

    def bounds(self) -> Optional[Tuple[int, int]]:
        bottom, top = self.bottom(), self.top()
        if bottom is None or top is None:
            return None
        return bottom, top

    def is_bounded(self) -> bool:
        return self.bounds() is not None

    def meet(self, x: int, y: int) -> Optional[int]:
        """Greatest lower bound of x and y, or None."""
        return self._by_down.get(self.down[x] & self.down[y])

    def join(self, x: int, y: int) -> Optional[int]:
        """Least upper bound of x and y, or None."""
        return self._by_up.get(self.up[x] & self.up[y])

    def missing_bound(self) -> Optional[Tuple[int, int]]:
        """First pair (in index order) lacking a meet or a join."""
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if self.meet(x, y) is None or self.join(x, y) is None:
                    return x, y
        return None

    def is_lattice(self) -> bool:
        return self.missing_bound() is None

    def incomparable_pair(self) -> Optional[Tuple[int, int]]:
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not self.comparable(x, y):
                    return x, y
        return None

    def is_chain(self) -> bool:
        return self.incomparable_pair() is None

    # down-sets

    def is_down_set(self, mask: int) -> bool:
        return all(is_subset(self.down[x], mask) for x in iter_indices(mask))

    def maximal(self, mask: int) -> int:
        return from_indices(x for x in iter_indices(mask) if self.up[x] & mask == 1 << x)

    def height_key(self, x: int) -> int:
        """Strictly increasing along <; sorts any chain ascending."""
        return popcount(self.down[x])

    def sort_chain(self, mask: int) -> Tuple[int, ...]:
        return tuple(sorted(iter_indices(mask), key=self.height_key))

    # derived posets

    def covers(self) -> List[Tuple[int, int]]:
        return cover_pairs(self.up)

    def dual(self) -> "Poset":
        return Poset(self.elements, self.down)

    def permute(self, order: Sequence[int], labels: Optional[Sequence[str]] = None) -> "Poset":
        """Re-index so that new element i is old element ``order[i]``."""
        position = {old: new for new, old in enumerate(order)}
        up = tuple(
            from_indices(position[y] for y in iter_indices(self.up[old])) for old in order
        )
        new_labels = tuple(labels) if labels is not None else tuple(self.elements[old] for old in order)
        return Poset(new_labels, up)

    def adjoin_bounds(self, bottom_label: str = "0", top_label: str = "1") -> "Poset":
        """Add a new least element at index 0 and a new greatest element at the end."""
        if bottom_label in self.index or top_label in self.index or bottom_label == top_label:
            raise PosetError(f"Bound labels {bottom_label!r}/{top_label!r} clash with the carrier")
        n = self.n
        top_bit = 1 << (n + 1)
        up = [full_mask(n + 2)]
        up.extend((row << 1) | top_bit for row in self.up)
        up.append(top_bit)
        return Poset((bottom_label,) + self.elements + (top_label,), tuple(up))

    def to_graph(self) -> nx.DiGraph:
        """Strict order as a networkx digraph over element indices."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        for x in range(self.n):
            graph.add_edges_from((x, y) for y in iter_indices(self.up[x]) if y != x)
        return graph


@dataclass(frozen=True)
class DownSet:
    """An order ideal of a poset."""

    parent: Poset = field(repr=False, compare=False)
    members: int

    def __post_init__(self):
        if not self.parent.is_down_set(self.members):
            raise PosetError(f"{self.parent.labels_of(self.members)} is not downward closed")

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __len__(self) -> int:
        return popcount(self.members)

    def maximal(self) -> int:
        return self.parent.maximal(self.members)

    def is_closed(self) -> bool:
        return self.parent.ideal_closure(self.members) == self.members

    def labels(self) -> List[str]:
        return self.parent.labels_of(self.members)


@dataclass(frozen=True)
class CompletionLattice:
    """
    The Dedekind-MacNeille completion: closed ideals I = I^↑↓ ordered by inclusion.
    """

    poset: Poset = field(repr=False)
    closed_ideals: Tuple[DownSet, ...]

    @cached_property
    def index(self) -> Dict[int, int]:
        return {ideal.members: i for i, ideal in enumerate(self.closed_ideals)}

    @property
    def size(self) -> int:
        return len(self.closed_ideals)

    @cached_property
    def up(self) -> Tuple[int, ...]:
        masks = [ideal.members for ideal in self.closed_ideals]
        return tuple(
            from_indices(j for j, other in enumerate(masks) if is_subset(mine, other)) for mine in masks
        )

    def leq(self, i: int, j: int) -> bool:
        return is_subset(self.closed_ideals[i].members, self.closed_ideals[j].members)

    def eta(self, x: int) -> int:
        """Index of the principal ideal x^↓."""
        return self.index[self.poset.down[x]]

    def meet(self, indices: Iterable[int]) -> int:
        members = self.poset.full
        for i in indices:
            members &= self.closed_ideals[i].members
        return self.index[members]

    def join(self, indices: Iterable[int]) -> int:
        members = 0
        for i in indices:
            members |= self.closed_ideals[i].members
        return self.index[self.poset.ideal_closure(members)]

    def is_surjective(self) -> bool:
        """True iff every closed ideal is principal, i.e. P is a complete lattice."""
        principal = {self.poset.down[x] for x in range(self.poset.n)}
        return all(ideal.members in principal for ideal in self.closed_ideals)

    def covers(self) -> List[Tuple[int, int]]:
        return cover_pairs(self.up)


def macneille(poset: Poset) -> CompletionLattice:
    """
    Dedekind-MacNeille completion of a finite poset.

    Closed ideals are exactly the intersections of principal ideals (the empty
    intersection being the whole carrier), so they are generated as the
    intersection closure of the rows x^↓.

    Args:
        poset: The poset to complete

    Returns:
        The completion, ideals sorted by size then members
    """
    family = intersection_closure(poset.down, poset.full)
    ideals = tuple(DownSet(poset, members) for members in sorted(family, key=lex_key))
    logger.debug(f"Completion of {poset.n}-element poset has {len(ideals)} closed ideals")
    return CompletionLattice(poset, ideals)


def nonlattice_witness(poset: Poset) -> Optional[DownSet]:
    """First closed ideal with at least two maximal elements, or None for lattices."""
    for ideal in macneille(poset).closed_ideals:
        if popcount(ideal.maximal()) >= 2:
            return ideal
    return None


# text format

def _logical_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.extend(part.strip() for part in stripped.split(";") if part.strip())
    return lines


def check_labels(labels: Sequence[str], what: str, forbidden: frozenset = ELEMENT_FORBIDDEN) -> None:
    seen = set()
    for label in labels:
        if forbidden & set(label):
            raise PosetParseError(f"Invalid {what} label {label!r}")
        if label in seen:
            raise PosetParseError(f"Duplicate {what} label {label!r}")
        seen.add(label)


def split_header(text: str, carrier_key: str, relation_key: str) -> Tuple[List[str], List[str]]:
    """
    Split ``<carrier_key>: ...`` / ``<relation_key>: ...`` text into labels and relation items.

    Shared by the poset and the orthogonality space formats.
    """
    carrier: Optional[List[str]] = None
    relation: List[str] = []
    seen_relation = False
    for line in _logical_lines(text):
        key, colon, value = line.partition(":")
        key = key.strip().lower()
        if not colon:
            raise PosetParseError(f"Expected '<key>: <values>', got {line!r}")
        if key == carrier_key:
            if carrier is not None:
                raise PosetParseError(f"Repeated '{carrier_key}:' line")
            carrier = value.split()
        elif key == relation_key:
            if seen_relation:
                raise PosetParseError(f"Repeated '{relation_key}:' line")
            seen_relation = True
            relation = [item.strip() for item in value.split(",") if item.strip()]
        else:
            raise PosetParseError(f"Unknown key {key!r}")
    if carrier is None:
        raise PosetParseError(f"Missing '{carrier_key}:' line")
    return carrier, relation


def parse_poset(text: str) -> Poset:
    """
    Parse the ``elements:`` / ``covers:`` poset format.

    Args:
        text: Poset description; ``;`` may stand in for a newline

    Returns:
        The reflexive-transitive closure of the declared covers

    Raises:
        PosetParseError: On duplicate or unknown labels, malformed pairs, cycles
            or an empty carrier
    """
    elements, items = split_header(text, "elements", "covers")
    if not elements:
        raise PosetParseError("Empty poset: 'elements:' lists no labels")
    check_labels(elements, "element")
    index = {label: i for i, label in enumerate(elements)}
    covers = []
    for item in items:
        low, sep, high = item.partition("<")
        low, high = low.strip(), high.strip()
        if not sep or not low or not high or "<" in high:
            raise PosetParseError(f"Malformed cover pair {item!r}")
        for label in (low, high):
            if label not in index:
                raise PosetParseError(f"Cover pair {item!r} references unknown label {label!r}")
        covers.append((index[low], index[high]))
    return Poset.from_covers(elements, covers)


def serialize_poset(poset: Poset) -> str:
    """Emit the poset in text form; covers are the transitive reduction in index order."""
    covers = ", ".join(f"{poset.elements[x]}<{poset.elements[y]}" for x, y in poset.covers())
    covers_line = f"covers: {covers}" if covers else "covers:"
    return f"elements: {' '.join(poset.elements)}\n{covers_line}\n"
