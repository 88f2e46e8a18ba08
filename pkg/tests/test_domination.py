import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridlock.domination import (
    MODE_GENERAL,
    MODE_INDEPENDENT,
    Solution,
    VerificationError,
    construct_central_columns,
    dominated_cells,
    dominated_mask,
    is_dominating,
    is_general_position,
)
from gridlock.geometry import BoardSize, GridPoint, PointSet
from oracles import naive_dominated, naive_general_position


def pts(*pairs):
    return [GridPoint(x, y) for x, y in pairs]


def test_empty_and_singleton_dominate_only_themselves():
    board = BoardSize(4)
    assert len(dominated_cells(board, [])) == 0
    only = dominated_cells(board, pts((2, 3)))
    assert only.points() == (GridPoint(2, 3),)


def test_two_points_dominate_their_line():
    board = BoardSize(4)
    got = dominated_cells(board, pts((1, 1), (2, 2)))
    assert set(got.points()) == set(pts((1, 1), (2, 2), (3, 3), (4, 4)))


def test_exterior_points_contribute_lines_but_not_membership():
    board = BoardSize(3)
    # both dominators sit outside; their line crosses the middle row
    got = dominated_cells(board, pts((0, 2), (4, 2)))
    assert set(got.points()) == set(pts((1, 2), (2, 2), (3, 2)))


def test_duplicate_points_are_ignored():
    board = BoardSize(4)
    a = dominated_cells(board, pts((1, 1), (2, 2)))
    b = dominated_cells(board, pts((1, 1), (2, 2), (1, 1)))
    assert a == b


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_dominated_cells_matches_triple_loop(data):
    n = data.draw(st.integers(min_value=1, max_value=6))
    board = BoardSize(n)
    k = data.draw(st.integers(min_value=0, max_value=4))
    chosen = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            ),
            min_size=k,
            max_size=k,
            unique=True,
        )
    )
    points = pts(*chosen)
    got = set(dominated_cells(board, points).points())
    assert got == naive_dominated(n, points)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_general_position_matches_naive(data):
    n = data.draw(st.integers(min_value=2, max_value=7))
    chosen = data.draw(
        st.lists(
            st.tuples(
                st.integers(min_value=1, max_value=n),
                st.integers(min_value=1, max_value=n),
            ),
            min_size=0,
            max_size=5,
            unique=True,
        )
    )
    points = pts(*chosen)
    assert is_general_position(points) == naive_general_position(points)


def test_general_position_rejects_repeats():
    assert not is_general_position(pts((1, 1), (1, 1)))


def test_dominated_mask_requires_matching_board():
    s = PointSet.of(BoardSize(3), pts((1, 1)))
    with pytest.raises(ValueError):
        dominated_mask(BoardSize(4), s)


def test_full_grid_dominates_itself():
    board = BoardSize(3)
    assert is_dominating(board, pts(*[(x, y) for x in range(1, 4) for y in range(1, 4)]))


class TestSolution:
    def test_verified_accepts_a_known_set(self):
        # the four corners dominate the 3x3 board: edges plus diagonals
        sol = Solution.verified(
            BoardSize(3), MODE_INDEPENDENT, pts((1, 1), (3, 1), (1, 3), (3, 3))
        )
        assert sol.size == 4
        assert sol.points == tuple(
            sorted(pts((1, 1), (3, 1), (1, 3), (3, 3)), key=lambda p: (p.y, p.x))
        )

    def test_verified_rejects_non_dominating(self):
        with pytest.raises(VerificationError, match="not dominating"):
            Solution.verified(BoardSize(3), MODE_GENERAL, pts((1, 1), (2, 2)))

    def test_verified_rejects_collinear_in_independent_mode(self):
        board = BoardSize(5)
        cols = construct_central_columns(board)
        with pytest.raises(VerificationError, match="collinear"):
            Solution.verified(board, MODE_INDEPENDENT, cols.points)

    def test_verified_rejects_out_of_frame_points(self):
        with pytest.raises(VerificationError, match="outside"):
            Solution.verified(BoardSize(3), MODE_GENERAL, pts((0, 1), (1, 1), (4, 4)))

    def test_verified_rejects_bad_mode_and_margin(self):
        with pytest.raises(VerificationError):
            Solution.verified(BoardSize(3), "both", pts((1, 1)))
        with pytest.raises(VerificationError):
            Solution.verified(BoardSize(3), MODE_GENERAL, pts((1, 1)), margin=-1)

    def test_json_round_trip(self):
        sol = Solution.verified(
            BoardSize(3), MODE_INDEPENDENT, pts((1, 1), (3, 1), (1, 3), (3, 3))
        )
        again = Solution.from_json(sol.to_json())
        assert again == sol

    def test_json_round_trip_with_margin(self):
        # a 3-point exterior solution for the 2x2 board
        sol = Solution.verified(
            BoardSize(2),
            MODE_INDEPENDENT,
            pts((1, 0), (1, 2), (3, 2)),
            margin=1,
            provenance="search",
        )
        data = sol.to_json_dict()
        assert data["margin"] == 1
        assert Solution.from_json_dict(json.loads(json.dumps(data))) == sol

    def test_loader_rejects_tampered_payloads(self):
        sol = Solution.verified(
            BoardSize(3), MODE_INDEPENDENT, pts((1, 1), (3, 1), (1, 3), (3, 3))
        )
        data = sol.to_json_dict()
        data["points"] = data["points"][:-1]
        with pytest.raises(VerificationError):
            Solution.from_json_dict(data)
        bad_size = sol.to_json_dict()
        bad_size["size"] = 5
        with pytest.raises(VerificationError, match="declared size"):
            Solution.from_json_dict(bad_size)
        with pytest.raises(VerificationError):
            Solution.from_json_dict({"kind": "torus"})
        with pytest.raises(VerificationError):
            Solution.from_json("{not json")


@pytest.mark.parametrize("n", range(3, 65))
def test_central_columns_construction(n):
    board = BoardSize(n)
    sol = construct_central_columns(board)
    assert sol.size == 2 * board.half_up
    assert sol.mode == MODE_GENERAL
    # verification already ran in the factory; double-check the claim
    assert is_dominating(board, sol.points)


def test_central_columns_rejects_tiny_boards():
    with pytest.raises(ValueError):
        construct_central_columns(BoardSize(2))
