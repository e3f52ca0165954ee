"""Matrix pattern plots for pipeline reports."""
from __future__ import annotations

import re
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .arith import Poly  # noqa: E402
from .linalg import Matrix  # noqa: E402

# 0: zero, 1: positive constant, 2: negative constant, 3: depends on q
_CMAP = ListedColormap(["#ffffff", "#4c72b0", "#dd8452", "#55a868"])
_ANNOTATE_MAX = 24


def _category(x) -> int:
    if not x:
        return 0
    if isinstance(x, Poly):
        if x.degree >= 1:
            return 3
        return 1 if x.lc > 0 else 2
    return 1 if x > 0 else 2


def _label(M: Matrix, x) -> str:
    if not x:
        return ""
    return M.ring.format(x).replace(" ", "")


def plot_matrix(M: Matrix, title: str = "", ax=None):
    """Draw the entry pattern of M; small matrices get their entries written in."""
    grid = [[_category(x) for x in r] for r in M.rows] or [[0] * max(M.ncols, 1)]
    if ax is None:
        w = min(12, 1.2 + 0.32 * max(M.ncols, 1))
        h = min(12, 1.0 + 0.32 * max(M.nrows, 1))
        _, ax = plt.subplots(figsize=(w, h))
    ax.imshow(grid, cmap=_CMAP, vmin=0, vmax=3, interpolation="nearest", aspect="equal")
    if M.ncols <= _ANNOTATE_MAX and M.nrows <= _ANNOTATE_MAX:
        for i, r in enumerate(M.rows):
            for j, x in enumerate(r):
                s = _label(M, x)
                if s:
                    ax.text(j, i, s, ha="center", va="center",
                            fontsize=5 if len(s) > 3 else 7)
    ax.set_xticks(range(0, M.ncols, 6 if M.ncols > 12 else 1))
    ax.set_yticks(range(0, M.nrows, 6 if M.nrows > 12 else 1))
    ax.tick_params(labelsize=6)
    if title:
        ax.set_title(f"{title}  ({M.nrows}x{M.ncols}, {M.ring.name})", fontsize=9)
    return ax


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", name.replace("'", "prime")).strip("_")


def render_report_figures(report, outdir, fmt: str = "png") -> list[Path]:
    """Write one pattern plot per matrix of ``report`` into ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, M in report.matrices.items():
        if M.nrows == 0 or M.ncols == 0:
            continue
        ax = plot_matrix(M, title=f"{report.pipeline}: {name}")
        fig = ax.figure
        fig.tight_layout()
        path = outdir / f"{_slug(report.pipeline)}.{_slug(name)}.{fmt}"
        fig.savefig(path, dpi=120, metadata={"Software": None} if fmt == "png" else None)
        plt.close(fig)
        paths.append(path)
    return paths
