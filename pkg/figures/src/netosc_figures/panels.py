"""Panel figures: one row per sample time, node index on the x axis.

Rendering is pyplot-free (object-oriented matplotlib only), so no global
state is touched and repeated invocations on the same inputs produce
identical files. SVG output gets a fixed hash salt and no date metadata
for the same reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib
import numpy as np
from matplotlib.figure import Figure

from .csvdata import TrajectoryTable, load_trajectory
from .errors import FigureValidationError

PANEL_HEIGHT_IN = 1.5
SINGLE_WIDTH_IN = 6.4
COMPARE_WIDTH_IN = 9.6
DPI = 150
LINE_KWARGS = {"linewidth": 1.0, "marker": ".", "markersize": 2.5, "color": "#1f77b4"}

_SVG_RC = {"svg.hashsalt": "netosc-figures"}


@dataclass(frozen=True)
class PanelSpec:
    """What to draw: which quantity, at which times, with which y range."""

    quantity: str
    times: tuple[float, ...]
    y_range: tuple[float, float] | None = None
    title: str = ""


def _resolve_times(table: TrajectoryTable, spec: PanelSpec) -> list[int]:
    if not spec.times:
        raise FigureValidationError("at least one panel time is required")
    if spec.quantity not in ("displacement", "velocity"):
        raise FigureValidationError(
            f"quantity must be 'displacement' or 'velocity', got {spec.quantity!r}"
        )
    indices = []
    for t in sorted(spec.times):
        index = table.time_index(t)
        if index is None:
            available = ", ".join(format(v, ".12g") for v in table.times)
            raise FigureValidationError(
                f"time {t:g} not present in the CSV; available times: {available}"
            )
        indices.append(index)
    return indices


def _draw_panel(ax, table: TrajectoryTable, spec: PanelSpec, index: int, **style) -> None:
    values = table.values(spec.quantity)[index]
    kwargs = {**LINE_KWARGS, **style}
    ax.plot(np.arange(table.n), values, **kwargs)
    ax.axhline(0.0, color="0.8", linewidth=0.6, zorder=0)
    ax.annotate(
        f"t = {format(table.times[index], '.12g')}",
        xy=(0.99, 0.92),
        xycoords="axes fraction",
        ha="right",
        va="top",
        fontsize=8,
    )
    ax.set_xlim(-0.5, table.n - 0.5)
    if spec.y_range is not None:
        ax.set_ylim(*spec.y_range)
    ax.tick_params(labelsize=7)


def build_figure(table: TrajectoryTable, spec: PanelSpec) -> Figure:
    """Stacked panels for one run, top to bottom in time order."""
    indices = _resolve_times(table, spec)
    rows = len(indices)
    fig = Figure(figsize=(SINGLE_WIDTH_IN, PANEL_HEIGHT_IN * rows + 0.6))
    axes = np.atleast_1d(fig.subplots(rows, 1, sharex=True))
    for ax, index in zip(axes, indices):
        _draw_panel(ax, table, spec, index)
        ax.set_ylabel(spec.quantity[:4], fontsize=8)
    axes[-1].set_xlabel("node", fontsize=9)
    if spec.title:
        fig.suptitle(spec.title, fontsize=10)
    fig.subplots_adjust(hspace=0.25, top=0.93 if spec.title else 0.97, bottom=0.35 / rows)
    return fig


def build_compare_figure(
    table_a: TrajectoryTable,
    table_b: TrajectoryTable,
    spec: PanelSpec,
    label_a: str = "A",
    label_b: str = "B",
) -> Figure:
    """Two-column panels: left run vs right run on a shared y range per row."""
    if table_a.n != table_b.n:
        raise FigureValidationError(
            f"node counts differ: {table_a.n} vs {table_b.n}"
        )
    if table_a.times.size != table_b.times.size or not np.allclose(
        table_a.times, table_b.times, rtol=1e-9, atol=1e-12
    ):
        raise FigureValidationError("time grids differ between the two CSV files")
    indices = _resolve_times(table_a, spec)
    rows = len(indices)
    fig = Figure(figsize=(COMPARE_WIDTH_IN, PANEL_HEIGHT_IN * rows + 0.6))
    axes = fig.subplots(rows, 2, sharex=True, squeeze=False)
    for row, index in enumerate(indices):
        left, right = axes[row]
        _draw_panel(left, table_a, spec, index)
        _draw_panel(right, table_b, spec, index, color="#d62728")
        left.set_ylabel(spec.quantity[:4], fontsize=8)
        if spec.y_range is None:
            low = min(left.get_ylim()[0], right.get_ylim()[0])
            high = max(left.get_ylim()[1], right.get_ylim()[1])
            left.set_ylim(low, high)
            right.set_ylim(low, high)
    axes[0, 0].set_title(label_a, fontsize=9)
    axes[0, 1].set_title(label_b, fontsize=9)
    for ax in axes[-1]:
        ax.set_xlabel("node", fontsize=9)
    if spec.title:
        fig.suptitle(spec.title, fontsize=10)
    fig.subplots_adjust(
        hspace=0.25, wspace=0.18, top=0.88 if spec.title else 0.92, bottom=0.35 / rows
    )
    return fig


def _save(fig: Figure, out_path: str | Path) -> Path:
    out = Path(out_path)
    save_kwargs = {"dpi": DPI}
    if out.suffix.lower() == ".svg":
        save_kwargs["metadata"] = {"Date": None}
        with matplotlib.rc_context(_SVG_RC):
            fig.savefig(out, **save_kwargs)
    else:
        fig.savefig(out, **save_kwargs)
    return out


def render(csv_path: str | Path, spec: PanelSpec, out_path: str | Path) -> Path:
    """Render stacked panels from one CSV to an image file."""
    table = load_trajectory(csv_path)
    return _save(build_figure(table, spec), out_path)


def render_compare(
    csv_a: str | Path,
    csv_b: str | Path,
    spec: PanelSpec,
    out_path: str | Path,
    label_a: str | None = None,
    label_b: str | None = None,
) -> Path:
    """Render a two-column comparison (csv_a left, csv_b right)."""
    table_a = load_trajectory(csv_a)
    table_b = load_trajectory(csv_b)
    fig = build_compare_figure(
        table_a,
        table_b,
        spec,
        label_a=label_a if label_a is not None else Path(csv_a).stem,
        label_b=label_b if label_b is not None else Path(csv_b).stem,
    )
    return _save(fig, out_path)
