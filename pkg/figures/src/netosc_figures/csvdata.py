"""Loading of trajectory CSV files.

Expected layout, as written by `netosc run`:

    t,node,displacement,velocity
    0,0,0,-0.0353553390593
    0,1,0,-0.0353553390593
    ...

Rows are grouped by time in ascending order, and every time block must
cover nodes 0..n-1 exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import CsvFormatError

HEADER = "t,node,displacement,velocity"

# matching tolerance when locating a requested time on the grid; the CSV
# carries 12 significant digits
TIME_RTOL = 1e-9
TIME_ATOL = 1e-12


@dataclass(frozen=True)
class TrajectoryTable:
    """One run's samples as dense arrays: row = time, column = node."""

    times: np.ndarray
    displacement: np.ndarray
    velocity: np.ndarray

    @property
    def n(self) -> int:
        return self.displacement.shape[1]

    def values(self, quantity: str) -> np.ndarray:
        if quantity == "displacement":
            return self.displacement
        if quantity == "velocity":
            return self.velocity
        raise CsvFormatError(
            f"quantity must be 'displacement' or 'velocity', got {quantity!r}"
        )

    def time_index(self, t: float) -> int | None:
        """Grid index of time t, or None if absent."""
        hits = np.flatnonzero(np.isclose(self.times, t, rtol=TIME_RTOL, atol=TIME_ATOL))
        return int(hits[0]) if hits.size else None


def load_trajectory(csv_path: str | Path) -> TrajectoryTable:
    path = Path(csv_path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CsvFormatError(f"cannot read {path}: {exc}") from exc
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise CsvFormatError(f"{path}: first line must be the header '{HEADER}'")

    block_times: list[float] = []
    blocks: list[dict[int, tuple[float, float]]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != 4:
            raise CsvFormatError(f"{path}:{lineno}: expected 4 fields, got {len(fields)}")
        try:
            t = float(fields[0])
            node = int(fields[1])
            disp = float(fields[2])
            vel = float(fields[3])
        except ValueError as exc:
            raise CsvFormatError(f"{path}:{lineno}: {exc}") from exc
        if not block_times or t != block_times[-1]:
            if block_times and t <= block_times[-1]:
                raise CsvFormatError(
                    f"{path}:{lineno}: times must appear in ascending blocks"
                )
            block_times.append(t)
            blocks.append({})
        if node in blocks[-1]:
            raise CsvFormatError(f"{path}:{lineno}: duplicate node {node} at t={t}")
        blocks[-1][node] = (disp, vel)

    if not blocks:
        raise CsvFormatError(f"{path}: no data rows")
    n = len(blocks[0])
    expected = set(range(n))
    for t, block in zip(block_times, blocks):
        if set(block) != expected:
            raise CsvFormatError(
                f"{path}: time block t={t} does not cover nodes 0..{n - 1}"
            )

    displacement = np.array([[block[i][0] for i in range(n)] for block in blocks])
    velocity = np.array([[block[i][1] for i in range(n)] for block in blocks])
    return TrajectoryTable(
        times=np.array(block_times), displacement=displacement, velocity=velocity
    )
