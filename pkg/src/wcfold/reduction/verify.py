"""Gadget-level verification by exhaustive search.

Isolated straight sections must fold straight: the hairpinned single-chain
form of a flex or rigid double strand has the antiparallel zipper as its
unique optimal folding.  This is checked exactly with the solver at sizes
where exhaustive search is feasible.
"""

from __future__ import annotations

from ..model import Chain
from ..solver import exact_solve
from ..walks import canonical_moves
from .gadgets import hairpinned_gadget_chain

STRAIGHTNESS_LIMIT = 24


def straight_hairpin_points(length: int) -> tuple[tuple[int, int], ...]:
    """The straight antiparallel embedding of a hairpinned double strand."""
    half = length // 2
    bottom = [(x, 0) for x in range(half)]
    top = [(x, 1) for x in range(half - 1, -1, -1)]
    return tuple(bottom + top)


def verify_straightness(kind: str, periods: int, *, limit: int = STRAIGHTNESS_LIMIT,
                        workers: int = 1) -> bool:
    """True iff the straight embedding is the unique optimal folding of the
    hairpinned gadget chain, established by exhaustive search."""
    seq = hairpinned_gadget_chain(kind, periods)
    if len(seq) > limit:
        raise ValueError(
            f"{kind} x {periods} gives a {len(seq)}-base chain, beyond the "
            f"exhaustive-search limit {limit}"
        )
    chain = Chain(seq)
    report = exact_solve(chain, max_length=limit, force=True, workers=workers)
    if report.optimal_count != 1:
        return False
    rep = report.representatives[0]
    return canonical_moves(rep.points) == canonical_moves(straight_hairpin_points(len(seq)))
