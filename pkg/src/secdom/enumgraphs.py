"""Exhaustive enumeration of small graphs, used by the experiment harness and
the oracle test suites.

Graphs on n vertices are encoded as bitmasks over the C(n,2) edge slots in
lexicographic (u,v) order.  Isomorphism deduplication works by orbit marking:
the first mask seen in each orbit is the class representative.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator

from .graphs import Graph, build_graph


def edge_slots(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int) -> Graph:
    slots = edge_slots(n)
    return build_graph(n, [slots[i] for i in range(len(slots)) if (mask >> i) & 1])


def _slot_permutations(n: int) -> list[list[int]]:
    """For each vertex permutation, the induced permutation of edge slots."""
    slots = edge_slots(n)
    index = {pair: i for i, pair in enumerate(slots)}
    out = []
    for perm in permutations(range(n)):
        out.append(
            [index[tuple(sorted((perm[u], perm[v])))] for u, v in slots]
        )
    return out


def connected_graphs(n: int, up_to_iso: bool = False) -> Iterator[Graph]:
    """All connected graphs on n labeled vertices, in mask order.

    With up_to_iso=True, one representative per isomorphism class (the least
    mask in its orbit order of discovery).
    """
    nslots = n * (n - 1) // 2
    slot_perms = _slot_permutations(n) if up_to_iso else None
    seen: set[int] = set()
    for mask in range(1 << nslots):
        if up_to_iso:
            if mask in seen:
                continue
            for sp in slot_perms:
                image = 0
                rest = mask
                while rest:
                    low = rest & -rest
                    image |= 1 << sp[low.bit_length() - 1]
                    rest ^= low
                seen.add(image)
        G = graph_from_mask(n, mask)
        if G.is_connected():
            yield G
