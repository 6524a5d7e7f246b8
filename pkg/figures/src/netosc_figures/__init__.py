"""Render netosc trajectory CSVs as per-time panel figures.

Reads the `t,node,displacement,velocity` CSV emitted by the netosc CLI
and draws one panel per requested time (node index on x, quantity on y),
either stacked for a single run or in two columns to compare runs.
"""

from .csvdata import TrajectoryTable, load_trajectory
from .errors import CsvFormatError, FigureValidationError
from .panels import PanelSpec, render, render_compare

__version__ = "0.1.0"

__all__ = [
    "CsvFormatError",
    "FigureValidationError",
    "PanelSpec",
    "TrajectoryTable",
    "load_trajectory",
    "render",
    "render_compare",
]
