"""Exact maximum-clique enumeration (Bron-Kerbosch with pivoting)."""

from __future__ import annotations

from collections.abc import Iterator, Sequence


def maximal_cliques(neighbours: Sequence[frozenset[int]]) -> Iterator[tuple[int, ...]]:
    """Yield every maximal clique as a sorted vertex tuple.

    ``neighbours[v]`` is the adjacency set of vertex ``v``; the graph is
    undirected and loop-free.  The enumeration order is deterministic:
    candidates are expanded in increasing vertex order and the pivot is the
    smallest vertex with the most candidate neighbours.
    """

    def expand(clique: list[int], cand: set[int], excl: set[int]) -> Iterator[tuple[int, ...]]:
        if not cand and not excl:
            yield tuple(sorted(clique))
            return
        pivot = max(sorted(cand | excl), key=lambda u: len(cand & neighbours[u]))
        for v in sorted(cand - neighbours[pivot]):
            yield from expand(clique + [v], cand & neighbours[v], excl & neighbours[v])
            cand.remove(v)
            excl.add(v)

    if neighbours:
        yield from expand([], set(range(len(neighbours))), set())


def maximum_cliques(neighbours: Sequence[frozenset[int]]) -> tuple[int, list[tuple[int, ...]]]:
    """Return ``(size, cliques)``: all cliques of maximum size, sorted."""
    best = 0
    found: list[tuple[int, ...]] = []
    for clique in maximal_cliques(neighbours):
        if len(clique) > best:
            best = len(clique)
            found = [clique]
        elif len(clique) == best:
            found.append(clique)
    return best, sorted(found)
