"""
Orthogonality spaces: the ⊥ operator, the ⊥⊥ closure, orthoclosed sets,
bases and Dacey tests.

A space is a simple loopless graph; ``adj[x]`` is the bitset of points
orthogonal to ``x``.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from app.errors import NotOrthoclosedError, PosetParseError, SpaceError
from app.models.bitset import (
    from_indices,
    full_mask,
    intersection_closure,
    is_subset,
    iter_indices,
    lex_key,
    popcount,
)
from app.models.ortho_lattice import Logic
from app.models.poset import POINT_FORBIDDEN, check_labels, split_header

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DaceyVerdict:
    """Result of a Dacey test; on failure names the closed set and a short basis."""

    holds: bool
    closed_set: Optional[int] = None
    basis: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class OrthoSpace:
    """A finite set of points with a symmetric irreflexive orthogonality."""

    points: Tuple[str, ...]
    adj: Tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.adj) != len(self.points):
            raise SpaceError("Adjacency rows do not match the point list")
        for x, row in enumerate(self.adj):
            if row >> x & 1:
                raise SpaceError(f"Orthogonality is not irreflexive at {self.points[x]}")
            if row >> len(self.points):
                raise SpaceError(f"Adjacency row of {self.points[x]} refers to unknown points")
            for y in iter_indices(row):
                if not self.adj[y] >> x & 1:
                    raise SpaceError(f"Orthogonality is not symmetric: {self.points[x]}, {self.points[y]}")

    @classmethod
    def from_edges(cls, points: Sequence[str], edges: Iterable[Tuple[int, int]]) -> "OrthoSpace":
        rows = [0] * len(points)
        for x, y in edges:
            if x == y:
                raise SpaceError(f"Point {points[x]} cannot be orthogonal to itself")
            rows[x] |= 1 << y
            rows[y] |= 1 << x
        return cls(tuple(points), tuple(rows))

    @classmethod
    def from_graph(cls, graph: nx.Graph) -> "OrthoSpace":
        nodes = list(graph.nodes)
        position = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges([str(node) for node in nodes],
                              [(position[u], position[v]) for u, v in graph.edges])

    @property
    def m(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return full_mask(self.m)

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.m))
        for x, row in enumerate(self.adj):
            graph.add_edges_from((x, y) for y in iter_indices(row) if y > x)
        return graph

    def orthogonal(self, x: int, y: int) -> bool:
        return bool(self.adj[x] >> y & 1)

    def edges(self) -> List[Tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.adj) for y in iter_indices(row) if y > x]

    def perp(self, mask: int) -> int:
        """X^⊥: the points orthogonal to every member of X (all points for X = ∅)."""
        result = self.full
        for x in iter_indices(mask):
            result &= self.adj[x]
        return result

    def closure(self, mask: int) -> int:
        return self.perp(self.perp(mask))

    def is_orthoclosed(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def is_pairwise_orthogonal(self, mask: int) -> bool:
        return all(is_subset(mask & ~(1 << x), self.adj[x]) for x in iter_indices(mask))

    @cached_property
    def orthoclosed_sets(self) -> Tuple[int, ...]:
        """
        Every orthoclosed set, smallest first.

        X = X^⊥⊥ is the intersection of the point perps {y}^⊥ over y in X^⊥,
        so the closed sets are the intersection closure of the adjacency rows.
        """
        family = intersection_closure(self.adj, self.full)
        return tuple(sorted(family, key=lex_key))

    @cached_property
    def logic(self) -> Logic:
        logic = Logic(self, self.orthoclosed_sets)
        logger.debug(f"Logic of {self.m}-point space has {logic.size} elements")
        return logic

    def bases(self, mask: int) -> Iterator[int]:
        """
        Maximal pairwise orthogonal subsets of an orthoclosed set.

        Raises:
            NotOrthoclosedError: If ``mask`` is not orthoclosed
        """
        if not self.is_orthoclosed(mask):
            raise NotOrthoclosedError(f"{self.format_set(mask)} is not orthoclosed")
        if mask == 0:
            yield 0
            return
        cliques = nx.find_cliques(self.graph.subgraph(iter_indices(mask)))
        yield from sorted((from_indices(clique) for clique in cliques), key=lex_key)

    def dacey_set(self, mask: int) -> DaceyVerdict:
        """Whether every basis B of X satisfies B^⊥⊥ = X; names a failing basis."""
        for basis in self.bases(mask):
            if self.closure(basis) != mask:
                return DaceyVerdict(False, mask, basis)
        return DaceyVerdict(True)

    def dacey_space(self) -> DaceyVerdict:
        for closed in self.orthoclosed_sets:
            verdict = self.dacey_set(closed)
            if not verdict:
                return verdict
        return DaceyVerdict(True)

    def with_edge_flipped(self, x: int, y: int) -> "OrthoSpace":
        """Copy with the orthogonality of x and y toggled."""
        rows = list(self.adj)
        rows[x] ^= 1 << y
        rows[y] ^= 1 << x
        return OrthoSpace(self.points, tuple(rows))

    def labels_of(self, mask: int) -> List[str]:
        return [self.points[i] for i in iter_indices(mask)]

    def mask_of(self, labels: Iterable[str]) -> int:
        index = {label: i for i, label in enumerate(self.points)}
        try:
            return from_indices(index[label] for label in labels)
        except KeyError as e:
            raise SpaceError(f"Unknown point {e.args[0]!r}")

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"


@dataclass(frozen=True)
class OrthoSet:
    """A subset of an orthogonality space."""

    parent: OrthoSpace = field(repr=False, compare=False)
    members: int

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> x & 1)

    def __len__(self) -> int:
        return popcount(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter_indices(self.members)

    def labels(self) -> List[str]:
        return self.parent.labels_of(self.members)

    def is_orthoclosed(self) -> bool:
        return self.parent.is_orthoclosed(self.members)


def perp(space: OrthoSpace, subset: OrthoSet) -> OrthoSet:
    return OrthoSet(space, space.perp(subset.members))


def closure(space: OrthoSpace, subset: OrthoSet) -> OrthoSet:
    return OrthoSet(space, space.closure(subset.members))


def logic(space: OrthoSpace) -> Logic:
    return space.logic


def bases(space: OrthoSpace, subset: OrthoSet) -> Iterator[OrthoSet]:
    for basis in space.bases(subset.members):
        yield OrthoSet(space, basis)


def is_dacey_set(space: OrthoSpace, subset: OrthoSet) -> DaceyVerdict:
    return space.dacey_set(subset.members)


def is_dacey_space(space: OrthoSpace) -> DaceyVerdict:
    return space.dacey_space()


def parse_space(text: str) -> OrthoSpace:
    """
    Parse the ``points:`` / ``edges: x-y, ...`` format.

    Raises:
        PosetParseError: On duplicate or unknown labels, malformed or reflexive edges
    """
    points, items = split_header(text, "points", "edges")
    check_labels(points, "point", POINT_FORBIDDEN)
    index = {label: i for i, label in enumerate(points)}
    edges = []
    for item in items:
        left, sep, right = item.partition("-")
        left, right = left.strip(), right.strip()
        if not sep or not left or not right or "-" in right:
            raise PosetParseError(f"Malformed edge {item!r}")
        for label in (left, right):
            if label not in index:
                raise PosetParseError(f"Edge {item!r} references unknown point {label!r}")
        if left == right:
            raise PosetParseError(f"Edge {item!r} would make {left!r} orthogonal to itself")
        edges.append((index[left], index[right]))
    return OrthoSpace.from_edges(points, edges)


def serialize_space(space: OrthoSpace) -> str:
    edges = ", ".join(f"{space.points[x]}-{space.points[y]}" for x, y in space.edges())
    return f"points: {' '.join(space.points)}\n" + (f"edges: {edges}\n" if edges else "edges:\n")
