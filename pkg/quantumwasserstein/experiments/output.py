"""CSV and SVG writers for experiment results.

Both writers are deterministic: fixed float formatting for CSV, and for SVG a
fixed hash salt with the date metadata removed.
"""

from pathlib import Path
from typing import Sequence

import matplotlib
import numpy as np
import pandas as pd
from matplotlib.figure import Figure

from quantumwasserstein.divergence import GapRecord
from quantumwasserstein.experiments.surface import SurfaceResult

FLOAT_FORMAT = "%.12g"

_GAP_COLUMNS = ["d_rho_omega", "d_omega_tau", "d_rho_tau", "gap"]


def records_to_frame(records: Sequence[GapRecord]) -> pd.DataFrame:
    """One row per record: provenance first, then the divergences and gap.

    Lattice records gain j, k, l columns and sweep records a sample-index
    column; the generic ``point``/``index`` fields are dropped when unused.
    """
    rows = []
    for record in records:
        row = {
            "dim": record.dim,
            "seed": record.seed,
            "sampler-tag": record.sampler_tag,
        }
        if record.point is not None:
            row.update(zip(("j", "k", "l"), record.point))
        if record.index is not None:
            row["sample-index"] = record.index
        row.update({column: getattr(record, column) for column in _GAP_COLUMNS})
        rows.append(row)
    frame = pd.DataFrame(rows)
    if "seed" in frame and frame["seed"].notna().all():
        frame["seed"] = frame["seed"].astype("uint64")
    return frame


def surface_to_frame(result: SurfaceResult) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "x": [p.x for p in result.points],
            "y": [p.y for p in result.points],
            "gap": [np.nan if p.gap is None else p.gap for p in result.points],
        }
    )


def write_csv(frame: pd.DataFrame, path: str | Path) -> Path:
    """Write with fixed float formatting; NaN becomes an empty field."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return path


def write_surface_svg(result: SurfaceResult, path: str | Path) -> Path:
    """Heatmap of the gap over (x, y) with a linear colour map."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context({"svg.hashsalt": "quantumwasserstein"}):
        figure = Figure(figsize=(5.0, 4.2))
        axes = figure.add_subplot()
        mesh = axes.pcolormesh(
            result.xs,
            result.ys,
            np.ma.masked_invalid(result.grid()),
            shading="nearest",
            cmap="viridis",
        )
        figure.colorbar(mesh, ax=axes, label="gap")
        axes.set_xlabel("x")
        axes.set_ylabel("y")
        axes.set_aspect("equal")
        axes.set_title(result.scenario)
        figure.savefig(path, format="svg", metadata={"Date": None})
    return path
