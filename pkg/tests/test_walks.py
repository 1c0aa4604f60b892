import pytest

from wcfold.walks import (
    canonical_moves,
    enumerate_walk_points,
    is_straight,
    moves_to_points,
    orbit_weight,
    points_to_moves,
)

# Self-avoiding walk counts on the square lattice, by number of steps.
SAW_COUNTS = {1: 4, 2: 12, 3: 36, 4: 100, 5: 284, 6: 780, 7: 2172}


def test_single_node():
    assert list(enumerate_walk_points(1)) == [((0, 0),)]


def test_two_nodes_single_walk():
    assert list(enumerate_walk_points(2)) == [((0, 0), (1, 0))]


def test_three_nodes():
    walks = list(enumerate_walk_points(3))
    assert len(walks) == 2
    assert {points_to_moves(w) for w in walks} == {"RR", "RU"}


def test_four_nodes():
    walks = list(enumerate_walk_points(4))
    assert len(walks) == 5
    assert {points_to_moves(w) for w in walks} == {"RRR", "RRU", "RUL", "RUU", "RUR"}


@pytest.mark.parametrize("steps", sorted(SAW_COUNTS))
def test_orbit_weights_reproduce_saw_counts(steps):
    total = sum(orbit_weight(w) for w in enumerate_walk_points(steps + 1))
    assert total == SAW_COUNTS[steps]


def test_first_step_east_first_turn_north():
    for walk in enumerate_walk_points(6):
        moves = points_to_moves(walk)
        assert moves[0] == "R"
        turns = moves.lstrip("R")
        if turns:
            assert turns[0] == "U"


def test_walks_are_distinct_orbits():
    walks = list(enumerate_walk_points(6))
    canon = {canonical_moves(w) for w in walks}
    assert len(canon) == len(walks)


def test_canonical_moves_identifies_symmetric_images():
    walk = ((0, 0), (0, 1), (-1, 1), (-1, 2))  # some rotated/reflected walk
    rotated = ((0, 0), (1, 0), (1, -1), (2, -1))
    assert canonical_moves(walk) == canonical_moves(rotated)


def test_moves_round_trip():
    pts = ((0, 0), (1, 0), (1, 1), (0, 1), (0, 2))
    assert moves_to_points(points_to_moves(pts)) == pts


def test_moves_reject_bad_char():
    with pytest.raises(ValueError):
        moves_to_points("RQ")


def test_is_straight():
    assert is_straight(((0, 0), (1, 0), (2, 0)))
    assert not is_straight(((0, 0), (1, 0), (1, 1)))
