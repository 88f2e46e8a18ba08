"""Board rendering: ASCII for terminals, SVG for files and the web UI.

The SVG coordinate system puts cell (1,1) at the top left with y
growing downward, the usual orientation for printed figures.  Output is
structural: one rect per board cell, one circle per set point, so the
element counts are machine-checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .domination import Solution, dominated_cells
from .geometry import BoardSize, GridPoint


@dataclass(frozen=True)
class RenderSpec:
    target: str = "ascii"
    cell_px: int = 24
    show_mask: bool = False
    show_lines: bool = False

    def __post_init__(self) -> None:
        if self.target not in ("ascii", "svg"):
            raise ValueError(f"unknown render target {self.target!r}")
        if self.cell_px < 4:
            raise ValueError("cell_px must be at least 4")


def _mask(board: BoardSize, points: Sequence[GridPoint]) -> set[GridPoint]:
    return dominated_cells(board, points)


def render_ascii(
    board: BoardSize,
    points: Iterable[GridPoint],
    show_mask: bool = False,
) -> str:
    """Rows top to bottom; 'o' set point, '+' dominated cell, '.' empty."""
    pts = list(points)
    pset = set(pts)
    mask = _mask(board, pts) if show_mask else set()
    rows = []
    for y in range(1, board.n + 1):
        row = []
        for x in range(1, board.n + 1):
            p = GridPoint(x, y)
            if p in pset:
                row.append("o")
            elif p in mask:
                row.append("+")
            else:
                row.append(".")
        rows.append(" ".join(row))
    return "\n".join(rows)


def render_solution_ascii(solution: Solution, show_mask: bool = False) -> str:
    return render_ascii(solution.board, solution.points, show_mask)


def _svg_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
    )


def render_svg(
    board: BoardSize,
    points: Iterable[GridPoint],
    spec: RenderSpec | None = None,
    title: str | None = None,
) -> str:
    """An SVG document with n^2 cell rects and one circle per point.

    Dominated cells are tinted when spec.show_mask is set and the lines
    realizing the domination are drawn when spec.show_lines is set;
    neither changes the cell or marker element counts.
    """
    spec = spec or RenderSpec(target="svg")
    pts = list(points)
    pset = set(pts)
    n = board.n
    c = spec.cell_px
    pad = c // 2
    side = n * c + 2 * pad
    mask = _mask(board, pts) if (spec.show_mask or spec.show_lines) else set()
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {side} {side}" '
        f'width="{side}" height="{side}">'
    ]
    if title:
        out.append(f"<title>{_svg_escape(title)}</title>")
    out.append(
        "<style>.cell{stroke:#555;stroke-width:1;fill:#fff}"
        ".cell.dom{fill:#cfe8cf}.pt{fill:#1a3c8f}"
        ".ln{stroke:#8aa6d6;stroke-width:1.5;stroke-linecap:round}</style>"
    )
    # cells first, so markers and lines draw above them
    for y in range(1, n + 1):
        for x in range(1, n + 1):
            cls = "cell dom" if (spec.show_mask and GridPoint(x, y) in mask) else "cell"
            out.append(
                f'<rect class="{cls}" x="{pad + (x - 1) * c}" '
                f'y="{pad + (y - 1) * c}" width="{c}" height="{c}"/>'
            )
    if spec.show_lines:
        seen = set()
        for i, a in enumerate(pts):
            for b in pts[i + 1 :]:
                key = tuple(sorted([(a.x, a.y), (b.x, b.y)]))
                if key in seen:
                    continue
                seen.add(key)
                out.append(
                    f'<line class="ln" '
                    f'x1="{pad + (a.x - 1) * c + c / 2:g}" '
                    f'y1="{pad + (a.y - 1) * c + c / 2:g}" '
                    f'x2="{pad + (b.x - 1) * c + c / 2:g}" '
                    f'y2="{pad + (b.y - 1) * c + c / 2:g}"/>'
                )
    r = max(c // 3, 2)
    for p in pts:
        out.append(
            f'<circle class="pt" cx="{pad + (p.x - 1) * c + c / 2:g}" '
            f'cy="{pad + (p.y - 1) * c + c / 2:g}" r="{r}"/>'
        )
    out.append("</svg>")
    return "\n".join(out)


def render_solution_svg(
    solution: Solution, spec: RenderSpec | None = None
) -> str:
    label = (
        f"{solution.board.n}x{solution.board.n} {solution.mode} "
        f"dominating set of size {solution.size}"
    )
    return render_svg(solution.board, solution.points, spec, title=label)


# ----- matplotlib figures for the report path -----


def save_board_figure(solution: Solution, path: str, show_mask: bool = True) -> None:
    """Draw a board with its dominating set to an image file."""
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    n = solution.board.n
    fig, ax = plt.subplots(figsize=(max(3, n * 0.45),) * 2)
    mask = _mask(solution.board, solution.points) if show_mask else set()
    for y in range(1, n + 1):
        for x in range(1, n + 1):
            dom = GridPoint(x, y) in mask
            ax.add_patch(
                plt.Rectangle(
                    (x - 1, n - y),
                    1,
                    1,
                    facecolor="#cfe8cf" if dom else "white",
                    edgecolor="#555555",
                    linewidth=0.8,
                )
            )
    xs = [p.x - 0.5 for p in solution.points]
    ys = [n - p.y + 0.5 for p in solution.points]
    ax.plot(xs, ys, "o", color="#1a3c8f", markersize=max(4, 160 / n / 2))
    ax.set_xlim(0, n)
    ax.set_ylim(0, n)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    ax.set_title(
        f"n={n} {solution.mode} size={solution.size}", fontsize=10
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_bounds_figure(rows: Sequence[dict], path: str) -> None:
    """Plot lower/upper bound columns from bound-report rows."""
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, [r["trivialLower"] for r in rows], "s--", label="counting lower")
    ax.plot(ns, [r["phiLower"] for r in rows], "^-", label="totient lower")
    ax.plot(ns, [r["constructionUpper"] for r in rows], "o-", label="construction upper")
    exact = [(r["n"], r["exact"]) for r in rows if r.get("exact") is not None]
    if exact:
        ax.plot(
            [e[0] for e in exact], [e[1] for e in exact], "k*", markersize=10,
            label="exact minimum",
        )
    ax.set_xlabel("board side n")
    ax.set_ylabel("set size")
    ax.legend()
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
