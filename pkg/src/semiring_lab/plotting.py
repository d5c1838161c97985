"""PNG figures for audit reports and ideal lattices (headless backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402

from .auditor import verdict_matrix  # noqa: E402
from .ideals import _ss_bits  # noqa: E402
from .order import IdealFamily, covering_pairs  # noqa: E402

_CODES = {"": 0, "VACUOUS": 1, "PASS": 2, "FAIL": 3}
_COLORS = ["#ffffff", "#d9d9d9", "#74c476", "#de2d26"]


def verdict_heatmap(report: dict, path: str | Path, max_rows: int = 400) -> Path:
    """Claims (columns) against semirings (rows), coloured by verdict."""
    names, ids, grid = verdict_matrix(report)
    if len(names) > max_rows:
        # keep every semiring with a failure, then fill up in corpus order
        failing = [k for k, row in enumerate(grid) if "FAIL" in row]
        rest = [k for k in range(len(names)) if k not in set(failing)]
        keep = sorted((failing + rest)[:max_rows])
        names = [names[k] for k in keep]
        grid = [grid[k] for k in keep]
    data = np.array([[_CODES[v] for v in row] for row in grid], dtype=int)
    h = min(0.12 * len(names) + 2.0, 40.0)
    fig, ax = plt.subplots(figsize=(max(6.0, 0.22 * len(ids) + 2.0), h))
    ax.imshow(data, aspect="auto", interpolation="nearest", cmap=ListedColormap(_COLORS), vmin=0, vmax=3)
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids, rotation=90, fontsize=7)
    if len(names) <= 80:
        ax.set_yticks(range(len(names)))
        ax.set_yticklabels(names, fontsize=6)
    else:
        ax.set_yticks([])
        ax.set_ylabel(f"{len(names)} semirings")
    ax.legend(handles=[Patch(color=_COLORS[_CODES[k]], label=k) for k in ("PASS", "FAIL", "VACUOUS")],
              loc="upper left", bbox_to_anchor=(1.0, 1.0), fontsize=7, frameon=False)
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def _layout(fam: IdealFamily) -> dict[int, tuple[float, float]]:
    # rank = length of the longest chain below; members are sorted by size
    rank = [0] * len(fam)
    for i, j in sorted(covering_pairs(fam), key=lambda p: len(fam.members[p[0]])):
        rank[j] = max(rank[j], rank[i] + 1)
    levels: dict[int, list[int]] = {}
    for i, r in enumerate(rank):
        levels.setdefault(r, []).append(i)
    pos = {}
    for y, row in levels.items():
        for k, i in enumerate(row):
            pos[i] = (k - (len(row) - 1) / 2.0, float(y))
    return pos


def hasse_figure(fam: IdealFamily, path: str | Path, title: str | None = None) -> Path:
    """Hasse diagram of an ideal family; semisubtractive members are filled."""
    S = fam.owner
    pos = _layout(fam)
    fig, ax = plt.subplots(figsize=(6, 1.2 + 0.9 * (max(y for _, y in pos.values()) + 1)))
    for i, j in covering_pairs(fam):
        (x0, y0), (x1, y1) = pos[i], pos[j]
        ax.plot([x0, x1], [y0, y1], color="#636363", lw=1, zorder=1)
    for i, m in enumerate(fam.members):
        x, y = pos[i]
        ss = _ss_bits(S, m.bits)
        label = "{" + ",".join(S.label(e) for e in m) + "}"
        ax.text(x, y, label, ha="center", va="center", fontsize=8, zorder=2,
                bbox={"boxstyle": "round", "fc": "#c6dbef" if ss else "white", "ec": "#3182bd"})
    ax.set_axis_off()
    ax.margins(0.15)
    if title:
        ax.set_title(title, fontsize=9)
    out = Path(path)
    fig.savefig(out, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return out
