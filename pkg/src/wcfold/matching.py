"""Maximum matching for bipartite graphs on integer nodes split by parity.

Kuhn's augmenting-path algorithm.  Node labels are chain indices; every edge
must join an odd and an even index, which is exactly the structure contact
graphs have on the square lattice.  Iteration order is fixed (sorted nodes,
sorted adjacency) so the returned matching is deterministic.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable


def maximum_bipartite_matching(edges: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
    """Return a maximum matching as a set of (min, max) index pairs."""
    adj: dict[int, list[int]] = defaultdict(list)
    for i, j in edges:
        if (i + j) % 2 == 0:
            raise ValueError(f"edge {(i, j)} does not join opposite parities")
        odd, even = (i, j) if i % 2 else (j, i)
        adj[odd].append(even)
    for nbrs in adj.values():
        nbrs.sort()

    match: dict[int, int] = {}  # both directions

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in adj[u]:
            if v in visited:
                continue
            visited.add(v)
            w = match.get(v)
            if w is None or try_augment(w, visited):
                match[v] = u
                match[u] = v
                return True
        return False

    for u in sorted(adj):
        if u not in match:
            try_augment(u, set())

    return {(min(u, v), max(u, v)) for u, v in match.items() if u < v}
