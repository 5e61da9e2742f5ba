"""
Finite posets and graphs up to isomorphism.

Posets are generated by adding a new maximal element above each down-set
of every smaller poset and kept in canonical form: among all orderings of
the carrier that sort elements by an isomorphism-invariant key (which is a
linear extension), the one whose strict upper-triangle order matrix is
lexicographically least.
"""
import itertools
import logging
import string
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from app.errors import CapExceededError, UsageError
from app.models.bitset import full_mask, iter_indices, popcount
from app.models.ortho_space import OrthoSpace
from app.models.poset import Poset
from app.settings import get_settings

logger = logging.getLogger(__name__)

FILTERS = ("all", "bounded", "lattice", "chain")


def _invariant_keys(poset: Poset) -> List[tuple]:
    base = [(popcount(poset.down[x]), popcount(poset.up[x])) for x in range(poset.n)]
    return [
        (
            base[x],
            tuple(sorted(base[y] for y in iter_indices(poset.down[x]) if y != x)),
            tuple(sorted(base[y] for y in iter_indices(poset.up[x]) if y != x)),
        )
        for x in range(poset.n)
    ]


def _encode(poset: Poset, order: Sequence[int]) -> int:
    code = 0
    for i, j in itertools.combinations(range(len(order)), 2):
        code = (code << 1) | poset.less(order[i], order[j])
    return code


def _candidate_orders(poset: Poset) -> Iterator[Tuple[int, ...]]:
    keys = _invariant_keys(poset)
    ranked = sorted(range(poset.n), key=lambda x: keys[x])
    blocks = [list(group) for _, group in itertools.groupby(ranked, key=lambda x: keys[x])]
    for choice in itertools.product(*(itertools.permutations(block) for block in blocks)):
        yield tuple(itertools.chain.from_iterable(choice))


def _canonical(poset: Poset) -> Tuple[int, Tuple[int, ...]]:
    return min((_encode(poset, order), order) for order in _candidate_orders(poset))


def canonical_order(poset: Poset) -> Tuple[int, ...]:
    """The carrier ordering that yields the canonical form."""
    return _canonical(poset)[1]


def canonical_key(poset: Poset) -> Tuple[int, int]:
    """Size and minimal encoding; equal exactly for isomorphic posets."""
    return poset.n, _canonical(poset)[0]


def canonical_form(poset: Poset, labels: Optional[Sequence[str]] = None) -> Poset:
    """Re-index ``poset`` into canonical order; labels travel with their elements unless given."""
    return poset.permute(canonical_order(poset), labels)


def default_labels(n: int) -> Tuple[str, ...]:
    return tuple(string.ascii_lowercase[:n])


def _extensions(poset: Poset) -> Iterator[Poset]:
    """Every poset obtained by adding one new maximal element above some down-set."""
    n = poset.n
    new_bit = 1 << n
    for below in range(1 << n):
        if not poset.is_down_set(below):
            continue
        up = tuple(row | new_bit if below >> x & 1 else row for x, row in enumerate(poset.up))
        yield Poset(default_labels(n + 1), up + (new_bit,))


@lru_cache(maxsize=None)
def _all_posets(n: int) -> Tuple[Poset, ...]:
    if n == 1:
        return (Poset(default_labels(1), (1,)),)
    found: Dict[Tuple[int, int], Poset] = {}
    for smaller in _all_posets(n - 1):
        for candidate in _extensions(smaller):
            code, order = _canonical(candidate)
            if (n, code) not in found:
                found[(n, code)] = candidate.permute(order, default_labels(n))
    logger.debug(f"Found {len(found)} posets on {n} elements")
    return tuple(found[key] for key in sorted(found))


def _bounded_posets(n: int) -> Tuple[Poset, ...]:
    if n == 1:
        return (Poset(("0",), (1,)),)
    if n == 2:
        return (Poset.from_covers(("0", "1"), [(0, 1)]),)
    adjoined = (poset.adjoin_bounds() for poset in _all_posets(n - 2))
    return tuple(sorted((canonical_form(poset) for poset in adjoined), key=canonical_key))


@dataclass(frozen=True)
class PosetCatalogue:
    """One canonical representative per isomorphism class of a given size and filter."""

    n: int
    filter: str
    posets: Tuple[Poset, ...]

    def __iter__(self) -> Iterator[Poset]:
        return iter(self.posets)

    def __len__(self) -> int:
        return len(self.posets)


def check_size(n: int, allow_large: bool = False) -> None:
    """
    Raises:
        CapExceededError: If ``n`` is outside 1..cap (1..hard cap with ``allow_large``)
    """
    settings = get_settings()
    limit = settings.hard_cap if allow_large else settings.cap
    if n < 1 or n > limit:
        hint = "" if allow_large or n < 1 else " (pass --allow-large to go up to the hard cap)"
        raise CapExceededError(f"Poset size {n} is outside 1..{limit}{hint}")
    if n > settings.cap:
        logger.warning(f"Size {n} is above the default cap {settings.cap}; expect a long run")


def enumerate_posets(n: int, filter: str = "all", allow_large: bool = False) -> PosetCatalogue:
    """
    Enumerate the posets on ``n`` elements up to isomorphism.

    Args:
        n: Carrier size
        filter: One of ``all``, ``bounded``, ``lattice``, ``chain``
        allow_large: Accept sizes up to the hard cap

    Returns:
        Catalogue sorted by canonical key

    Raises:
        CapExceededError: If ``n`` is out of range
        UsageError: For an unknown filter
    """
    if filter not in FILTERS:
        raise UsageError(f"Unknown filter {filter!r}; expected one of {', '.join(FILTERS)}")
    check_size(n, allow_large)
    if filter == "bounded":
        posets = _bounded_posets(n)
    elif filter == "lattice":
        posets = tuple(poset for poset in _bounded_posets(n) if poset.is_lattice())
    elif filter == "chain":
        posets = tuple(poset for poset in _all_posets(n) if poset.is_chain())
    else:
        posets = _all_posets(n)
    logger.info(f"Catalogue of {filter} posets on {n} elements has {len(posets)} members")
    return PosetCatalogue(n, filter, posets)


def bounded_catalogue(n_max: int, allow_large: bool = False) -> List[Poset]:
    """Every bounded poset with at most ``n_max`` elements, smallest first."""
    posets: List[Poset] = []
    for n in range(1, n_max + 1):
        posets.extend(enumerate_posets(n, "bounded", allow_large))
    return posets


# labelled oracle

def labeled_posets(n: int) -> Iterator[Poset]:
    """
    Every partial order on the labelled carrier 0..n-1, by backtracking over
    the pairs column by column and pruning as soon as a column breaks
    transitivity.
    """
    pairs = [(i, j) for j in range(n) for i in range(j)]
    less = [0] * n

    def transitive_up_to(j: int) -> bool:
        for x in range(j + 1):
            for y in iter_indices(less[x]):
                if less[y] & ~less[x] & full_mask(j + 1):
                    return False
        return True

    def assign(k: int) -> Iterator[Poset]:
        if k == len(pairs):
            yield Poset(tuple(str(x) for x in range(n)), tuple(less[x] | 1 << x for x in range(n)))
            return
        i, j = pairs[k]
        column_done = k + 1 == len(pairs) or pairs[k + 1][1] != j
        for relation in (None, (i, j), (j, i)):
            if relation is not None:
                low, high = relation
                less[low] |= 1 << high
            if not column_done or transitive_up_to(j):
                yield from assign(k + 1)
            if relation is not None:
                less[low] &= ~(1 << high)

    yield from assign(0)


def count_isomorphism_classes(posets: Sequence[Poset]) -> int:
    """
    Orbit count by pairwise ``nx.is_isomorphic`` on the strict order digraphs,
    compared only within buckets of equal (in, out) degree sequence.
    """
    buckets: Dict[Tuple[Tuple[int, int], ...], List[nx.DiGraph]] = defaultdict(list)
    for poset in posets:
        graph = poset.to_graph()
        invariant = tuple(sorted((graph.in_degree(v), graph.out_degree(v)) for v in graph))
        bucket = buckets[invariant]
        if not any(nx.is_isomorphic(graph, other) for other in bucket):
            bucket.append(graph)
    return sum(len(bucket) for bucket in buckets.values())


# graphs

def enumerate_graphs(n: int) -> List[OrthoSpace]:
    """
    Every simple graph on ``n`` vertices up to isomorphism, as an orthogonality space.

    Raises:
        CapExceededError: Above 7 vertices, the extent of the networkx graph atlas
    """
    if n < 0 or n > 7:
        raise CapExceededError(f"Graph catalogue covers 0..7 vertices, not {n}")
    spaces = [
        OrthoSpace.from_graph(graph)
        for graph in nx.graph_atlas_g()
        if graph.number_of_nodes() == n
    ]
    logger.debug(f"Found {len(spaces)} graphs on {n} vertices")
    return spaces


def graph_catalogue(n_max: int) -> List[OrthoSpace]:
    spaces: List[OrthoSpace] = []
    for n in range(n_max + 1):
        spaces.extend(enumerate_graphs(n))
    return spaces

