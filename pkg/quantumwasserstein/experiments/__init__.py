from quantumwasserstein.experiments.common import (
    LatticeSpec,
    SurfaceSpec,
    SweepSpec,
    run_work_items,
)
from quantumwasserstein.experiments.lattice import (
    lattice_points,
    lattice_scan,
    lattice_table,
)
from quantumwasserstein.experiments.output import (
    records_to_frame,
    surface_to_frame,
    write_csv,
    write_surface_svg,
)
from quantumwasserstein.experiments.surface import (
    SurfacePoint,
    SurfaceResult,
    build_scenario,
    gap_surface,
)
from quantumwasserstein.experiments.sweep import draw_sample, min_gap_sweep

__all__ = [
    "LatticeSpec",
    "SweepSpec",
    "SurfaceSpec",
    "SurfacePoint",
    "SurfaceResult",
    "run_work_items",
    "lattice_points",
    "lattice_scan",
    "lattice_table",
    "min_gap_sweep",
    "draw_sample",
    "gap_surface",
    "build_scenario",
    "records_to_frame",
    "surface_to_frame",
    "write_csv",
    "write_surface_svg",
]
