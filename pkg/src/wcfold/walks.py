"""Canonical self-avoiding walk enumeration on the square lattice.

One representative per orbit of the 8 lattice symmetries: the first step is
+x and the first non-straight step, if any, is a left turn.  Straight walks
have a mirror symmetry and still appear exactly once, so the enumeration
counts symmetry classes directly.
"""

from __future__ import annotations

from typing import Iterator

from .model import Folding, Point

# Fixed direction order: east, north, west, south.  This pins the
# deterministic depth-first emission order everywhere.
DIRS: tuple[Point, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))

_MOVE_CHAR = {(1, 0): "R", (-1, 0): "L", (0, 1): "U", (0, -1): "D"}
_CHAR_MOVE = {v: k for k, v in _MOVE_CHAR.items()}


def enumerate_foldings(length: int) -> Iterator[Folding]:
    """Yield every self-avoiding walk of `length` nodes once per symmetry
    orbit, in deterministic depth-first order."""
    for cells in enumerate_walk_points(length):
        yield Folding(cells)


def enumerate_walk_points(length: int) -> Iterator[tuple[Point, ...]]:
    """Same as enumerate_foldings but yields raw point tuples (cheaper)."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if length == 1:
        yield ((0, 0),)
        return
    path: list[Point] = [(0, 0), (1, 0)]
    occupied = {(0, 0), (1, 0)}

    def extend(turned: bool) -> Iterator[tuple[Point, ...]]:
        if len(path) == length:
            yield tuple(path)
            return
        x, y = path[-1]
        # Until the first turn the walk may only go straight or turn left.
        candidates = DIRS if turned else ((1, 0), (0, 1))
        for dx, dy in candidates:
            nxt = (x + dx, y + dy)
            if nxt in occupied:
                continue
            path.append(nxt)
            occupied.add(nxt)
            yield from extend(turned or dy != 0)
            occupied.remove(nxt)
            path.pop()

    yield from extend(False)


def is_straight(points) -> bool:
    """True when all points lie on one lattice line."""
    pts = list(points)
    if len(pts) <= 2:
        return True
    xs = {p[0] for p in pts}
    ys = {p[1] for p in pts}
    return len(xs) == 1 or len(ys) == 1


def orbit_weight(points) -> int:
    """Number of distinct walks (up to translation) in this walk's symmetry
    orbit: 4 for straight walks, 8 otherwise."""
    return 4 if is_straight(points) else 8


def points_to_moves(points) -> str:
    """Encode a walk as absolute moves over {R, L, U, D} from its first node."""
    pts = list(points)
    out = []
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        out.append(_MOVE_CHAR[(x1 - x0, y1 - y0)])
    return "".join(out)


def moves_to_points(moves: str) -> tuple[Point, ...]:
    """Decode a move string; the first node is implicit at the origin."""
    x, y = 0, 0
    pts = [(0, 0)]
    for ch in moves.strip().upper():
        try:
            dx, dy = _CHAR_MOVE[ch]
        except KeyError:
            raise ValueError(f"invalid move character {ch!r}") from None
        x, y = x + dx, y + dy
        pts.append((x, y))
    return tuple(pts)


def canonical_moves(points) -> str:
    """Move string of the walk's canonical symmetry representative.

    Two walks are images of each other under the 8 lattice symmetries plus
    translation exactly when their canonical move strings are equal.
    """
    pts = list(points)
    if len(pts) < 2:
        return ""
    steps = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(pts, pts[1:])]

    def rotate_to_east(seq):
        dx, dy = seq[0]
        # Rotation matrix sending the first step to (1, 0).
        out = []
        for sx, sy in seq:
            out.append((sx * dx + sy * dy, -sx * dy + sy * dx))
        return out

    a = rotate_to_east(steps)
    b = [(sx, -sy) for sx, sy in a]  # mirror across the walk's initial axis
    for cand in (a, b):
        for sx, sy in cand:
            if sy == 1:
                return "".join(_MOVE_CHAR[s] for s in cand)
            if sy == -1:
                break
        else:
            return "".join(_MOVE_CHAR[s] for s in cand)  # straight walk
    raise AssertionError("one of the two mirrors must turn left first")
