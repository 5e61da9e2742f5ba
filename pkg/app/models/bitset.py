"""
Small helpers for sets of indices encoded as Python integers.
"""
from typing import Iterable, Iterator, Set, Tuple


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_indices(mask: int) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_indices(mask: int) -> Tuple[int, ...]:
    return tuple(iter_indices(mask))


def lex_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """Deterministic order on sets: by size, then by ascending members."""
    return bin(mask).count("1"), to_indices(mask)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(small: int, big: int) -> bool:
    return small & ~big == 0


def full_mask(n: int) -> int:
    return (1 << n) - 1


def intersection_closure(generators: Iterable[int], top: int) -> Set[int]:
    """
    Close a family of sets under intersection.

    The result holds ``top`` (the empty intersection) and every intersection
    of a subfamily of ``generators``. Closed sets of a Galois closure are
    exactly such intersections, so this enumerates them without scanning the
    whole powerset.
    """
    family = {top}
    for generator in generators:
        family |= {generator & member for member in family}
    return family
