"""Matplotlib figures of bi-objective fronts.

The second objective goes on the x axis and the first on the y axis. SVG
output is made reproducible by fixing the id salt and dropping the date.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

POINTS_GID = "front-points"

STYLE = {
    "svg.hashsalt": "motsp",
    "svg.fonttype": "none",
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


class UnsupportedDimensionError(ValueError):
    pass


def _xy(fitness):
    pts = list(fitness)
    if any(len(p) != 2 for p in pts):
        raise UnsupportedDimensionError("scatter plots need exactly two objectives")
    xs = [p[1] for p in pts]
    ys = [p[0] for p in pts]
    return xs, ys


def _limits(values, pad=0.05):
    lo, hi = min(values), max(values)
    margin = (hi - lo) * pad or max(abs(lo) * pad, 1.0)
    return lo - margin, hi + margin


def _tick_label(v: float) -> str:
    return f"{v:.0f}" if abs(v) >= 100 else f"{v:.3g}"


def front_figure(fitness, labels=None, title=None):
    """Figure with one marker per front point and min/max ticks on both axes."""
    xs, ys = _xy(fitness)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 4))
        ax.plot(xs, ys, "o", ms=3, color="tab:blue", linestyle="none", gid=POINTS_GID)
        if xs:
            ax.set_xlim(*_limits(xs))
            ax.set_ylim(*_limits(ys))
            ax.set_xticks(sorted({min(xs), max(xs)}))
            ax.set_yticks(sorted({min(ys), max(ys)}))
            ax.set_xticklabels([_tick_label(v) for v in ax.get_xticks()])
            ax.set_yticklabels([_tick_label(v) for v in ax.get_yticks()])
        f1, f2 = labels if labels else ("f1", "f2")
        ax.set_xlabel(f"{f2} cost")
        ax.set_ylabel(f"{f1} cost")
        if title:
            ax.set_title(title)
        fig.tight_layout()
    return fig, ax


def _save(fig, path: Path) -> Path:
    with plt.rc_context(STYLE):
        fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def export_scatter_svg(record, path, labels=None) -> Path:
    fig, _ = front_figure(record.front_fitness, labels=labels,
                          title=f"Final front ({len(record.front)} points)")
    return _save(fig, Path(path))


def plot_comparison(records: dict, path) -> Path:
    """Overlay the final fronts of several runs, one colour per label."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.5, 4.5))
        markers = "os^Dv<>"
        for k, (label, rec) in enumerate(records.items()):
            xs, ys = _xy(rec.front_fitness)
            ax.plot(xs, ys, markers[k % len(markers)], ms=3, linestyle="none",
                    label=f"{label} ({len(xs)})", alpha=0.8)
        ax.set_xlabel("f2 cost")
        ax.set_ylabel("f1 cost")
        ax.legend(frameon=False)
        fig.tight_layout()
    return _save(fig, Path(path))
