import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridlock.geometry import (
    ALL_TRANSFORMS,
    BoardSize,
    GridPoint,
    PointSet,
    SymmetryTransform,
    apply_symmetry,
    canonical_form,
    collinear,
    grid_line_points,
    line_through,
    orbit_images,
    primitive_direction,
)
from oracles import cross

points_in_8 = st.builds(
    GridPoint, st.integers(min_value=-8, max_value=16), st.integers(min_value=-8, max_value=16)
)


def test_board_indexing_round_trip():
    board = BoardSize(5)
    for i in range(board.cell_count):
        assert board.index_of(board.point_at(i)) == i
    with pytest.raises(ValueError):
        board.index_of(GridPoint(0, 1))
    with pytest.raises(ValueError):
        board.point_at(25)


def test_board_rejects_nonpositive_side():
    with pytest.raises(ValueError):
        BoardSize(0)


@given(points_in_8, points_in_8, points_in_8)
def test_collinear_matches_cross_product(a, b, c):
    assert collinear(a, b, c) == (cross(a, b, c) == 0)


def test_collinear_degenerate_cases():
    p = GridPoint(3, 3)
    assert collinear(p, p, GridPoint(1, 1))
    assert collinear(p, GridPoint(1, 1), p)


@given(points_in_8, points_in_8)
def test_primitive_direction_is_primitive_and_canonical(a, b):
    if a == b:
        with pytest.raises(ValueError):
            primitive_direction(a, b)
        return
    d = primitive_direction(a, b)
    from math import gcd

    assert gcd(abs(d.dx), abs(d.dy)) == 1
    # canonical: dx > 0, or dx == 0 and dy > 0
    assert d.dx > 0 or (d.dx == 0 and d.dy > 0)
    assert primitive_direction(b, a) == d
    assert cross(a, b, GridPoint(a.x + d.dx, a.y + d.dy)) == 0


def test_grid_line_points_diagonal():
    board = BoardSize(4)
    d = primitive_direction(GridPoint(1, 1), GridPoint(2, 2))
    pts = grid_line_points(board, GridPoint(1, 1), d)
    assert pts == tuple(GridPoint(i, i) for i in range(1, 5))


def test_line_through_collects_every_collinear_cell():
    board = BoardSize(6)
    a, b = GridPoint(1, 1), GridPoint(3, 2)
    pts = line_through(board, a, b)
    assert a in pts and b in pts
    assert GridPoint(5, 3) in pts
    for p in pts:
        assert collinear(a, b, p)
    # no cell on the line is missing
    expected = {
        GridPoint(x, y)
        for x in range(1, 7)
        for y in range(1, 7)
        if cross(a, b, GridPoint(x, y)) == 0
    }
    assert set(pts) == expected


def test_point_set_membership_and_order():
    board = BoardSize(3)
    s = PointSet.of(board, [GridPoint(3, 1), GridPoint(1, 2), GridPoint(3, 1)])
    assert len(s) == 2
    assert s.points() == (GridPoint(3, 1), GridPoint(1, 2))


def test_symmetry_transforms_are_bijections():
    board = BoardSize(5)
    s = PointSet.of(board, [GridPoint(1, 2), GridPoint(4, 5), GridPoint(3, 3)])
    for t in ALL_TRANSFORMS:
        img = apply_symmetry(board, t, s)
        assert len(img) == len(s)
    ident = apply_symmetry(board, SymmetryTransform.IDENTITY, s)
    assert ident == s


def test_rot90_four_times_is_identity():
    board = BoardSize(6)
    s = PointSet.of(board, [GridPoint(2, 1), GridPoint(5, 4)])
    img = s
    for _ in range(4):
        img = apply_symmetry(board, SymmetryTransform.ROT90, img)
    assert img == s


def test_symmetry_preserves_collinearity():
    board = BoardSize(7)
    trio = [GridPoint(1, 1), GridPoint(3, 2), GridPoint(5, 3)]
    s = PointSet.of(board, trio)
    for t in ALL_TRANSFORMS:
        a, b, c = apply_symmetry(board, t, s).points()
        assert collinear(a, b, c)


def test_canonical_form_constant_on_orbit():
    board = BoardSize(5)
    s = PointSet.of(board, [GridPoint(1, 2), GridPoint(2, 5), GridPoint(4, 4)])
    canon = canonical_form(board, s)
    for t in ALL_TRANSFORMS:
        assert canonical_form(board, apply_symmetry(board, t, s)) == canon


def test_orbit_size_divides_eight():
    board = BoardSize(4)
    full = PointSet.of(board, [GridPoint(x, y) for x in range(1, 5) for y in range(1, 5)])
    assert len(orbit_images(board, full)) == 1
    asym = PointSet.of(board, [GridPoint(1, 1), GridPoint(2, 3), GridPoint(4, 2)])
    assert 8 % len(orbit_images(board, asym)) == 0
    center = PointSet.of(BoardSize(3), [GridPoint(2, 2)])
    assert len(orbit_images(BoardSize(3), center)) == 1


@settings(max_examples=30)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_orbit_images_are_closed_under_the_group(n, data):
    board = BoardSize(n)
    k = data.draw(st.integers(min_value=1, max_value=min(4, board.cell_count)))
    idx = data.draw(
        st.lists(
            st.integers(min_value=0, max_value=board.cell_count - 1),
            min_size=k,
            max_size=k,
            unique=True,
        )
    )
    s = PointSet.of_indices(board, idx)
    orbit = set(orbit_images(board, s))
    for t in ALL_TRANSFORMS:
        for img in list(orbit):
            assert apply_symmetry(board, t, img) in orbit
