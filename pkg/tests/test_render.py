"""Rendering: ASCII grids, structural SVG, matplotlib figure files."""

import re

import pytest

from gridlock.bounds import bound_report
from gridlock.domination import Solution, construct_central_columns, dominated_cells
from gridlock.geometry import BoardSize, GridPoint
from gridlock.render import (
    RenderSpec,
    render_ascii,
    render_solution_ascii,
    render_solution_svg,
    render_svg,
    save_board_figure,
    save_bounds_figure,
)


def diag_solution():
    # corners plus center dominate the 3 x 3 board
    return Solution.verified(
        BoardSize(3),
        "general",
        [GridPoint(1, 1), GridPoint(3, 1), GridPoint(1, 3), GridPoint(3, 3)],
    )


class TestAscii:
    def test_empty_board(self):
        art = render_ascii(BoardSize(2), [])
        assert art == ". .\n. ."

    def test_points_mark_o_rows_top_down(self):
        art = render_ascii(BoardSize(3), [GridPoint(1, 1), GridPoint(3, 2)])
        assert art.splitlines() == ["o . .", ". . o", ". . ."]

    def test_mask_marks_dominated_cells(self):
        board = BoardSize(3)
        pts = [GridPoint(1, 1), GridPoint(3, 3)]
        art = render_ascii(board, pts, show_mask=True)
        # the main diagonal is the span of the two points
        assert art.splitlines() == ["o . .", ". + .", ". . o"]

    def test_counts_match_the_mask(self):
        board = BoardSize(4)
        pts = [GridPoint(1, 1), GridPoint(2, 2), GridPoint(1, 2)]
        art = render_ascii(board, pts, show_mask=True)
        mask = dominated_cells(board, pts)
        assert art.count("o") == len(pts)
        assert art.count("+") == len(mask) - len(pts)
        assert art.count(".") == board.cell_count - len(mask)

    def test_solution_wrapper(self):
        sol = diag_solution()
        assert render_solution_ascii(sol) == render_ascii(sol.board, sol.points)


class TestSvg:
    def test_structural_element_counts(self):
        board = BoardSize(5)
        sol = construct_central_columns(board)
        svg = render_solution_svg(sol)
        assert svg.count("<rect") == board.cell_count
        assert svg.count("<circle") == sol.size
        assert svg.startswith("<svg ")
        assert svg.rstrip().endswith("</svg>")

    def test_mask_tints_without_changing_counts(self):
        sol = diag_solution()
        spec = RenderSpec(target="svg", show_mask=True)
        svg = render_solution_svg(sol, spec)
        assert svg.count("<rect") == 9
        assert svg.count("<circle") == 4
        dominated = dominated_cells(sol.board, list(sol.points))
        assert svg.count('class="cell dom"') == len(dominated)

    def test_lines_draw_one_segment_per_pair(self):
        sol = diag_solution()
        spec = RenderSpec(target="svg", show_lines=True)
        svg = render_solution_svg(sol, spec)
        assert svg.count("<line") == sol.size * (sol.size - 1) // 2

    def test_title_is_escaped(self):
        svg = render_svg(BoardSize(2), [], title="a<b&c>d")
        assert "<title>a&lt;b&amp;c&gt;d</title>" in svg

    def test_viewbox_scales_with_cell_px(self):
        svg = render_svg(BoardSize(3), [], RenderSpec(target="svg", cell_px=10))
        side = 3 * 10 + 2 * 5
        assert f'viewBox="0 0 {side} {side}"' in svg

    def test_spec_validation(self):
        with pytest.raises(ValueError, match="target"):
            RenderSpec(target="png")
        with pytest.raises(ValueError, match="cell_px"):
            RenderSpec(cell_px=2)


class TestFigures:
    def test_board_figure_writes_a_png(self, tmp_path):
        out = tmp_path / "board.png"
        save_board_figure(diag_solution(), str(out))
        data = out.read_bytes()
        assert data[:8] == b"\x89PNG\r\n\x1a\n"
        assert len(data) > 1000

    def test_bounds_figure_writes_a_png(self, tmp_path):
        rows = [bound_report(n).to_json_dict() for n in range(2, 9)]
        rows[0]["exact"] = 4  # the star series must accept partial exact data
        out = tmp_path / "bounds.png"
        save_bounds_figure(rows, str(out))
        assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_svg_figure_target_honored(self, tmp_path):
        out = tmp_path / "board.svg"
        save_board_figure(diag_solution(), str(out), show_mask=False)
        text = out.read_text()
        assert "<svg" in text


def test_ascii_round_trips_through_a_parse(rng):
    # the ASCII art is unambiguous: rebuild the point set from it
    board = BoardSize(6)
    from conftest import random_points

    pts = sorted(random_points(rng, 6, 5), key=lambda p: (p.y, p.x))
    art = render_ascii(board, pts)
    parsed = []
    for y, line in enumerate(art.splitlines(), start=1):
        for x, ch in enumerate(line.split(" "), start=1):
            if ch == "o":
                parsed.append(GridPoint(x, y))
    assert parsed == pts
