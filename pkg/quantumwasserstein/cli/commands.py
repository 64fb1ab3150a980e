"""Sub-command implementations. Each writes its outputs into ``args.out``,
prints the headline number and returns the written paths."""

import argparse
import logging
from pathlib import Path

from quantumwasserstein.bounds import hellinger_lower_bound
from quantumwasserstein.complexity import (
    resolve_channel,
    subadditivity_report,
    wasserstein_complexity,
)
from quantumwasserstein.cost import build_cost, resolve_observables
from quantumwasserstein.divergence import divergence, triangle_gap
from quantumwasserstein.experiments import (
    LatticeSpec,
    SurfaceSpec,
    SweepSpec,
    gap_surface,
    lattice_scan,
    lattice_table,
    min_gap_sweep,
    records_to_frame,
    surface_to_frame,
    write_csv,
    write_surface_svg,
)
from quantumwasserstein.qubit import sufficient_condition_rate
from quantumwasserstein.states.common import ObservableSet
from quantumwasserstein.states.sampling import RngStream
from quantumwasserstein.states.serialization import (
    dump_json,
    load_state,
    matrix_to_json,
)
from quantumwasserstein.transport import SolverConfig, solve_dual, solve_primal

_logger = logging.getLogger("quantumwasserstein.cli")


def _config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(gap_tol=args.solver_gap_tol, backend=args.backend)


def _observables(args: argparse.Namespace, dim: int) -> ObservableSet:
    rng = RngStream(seed=args.seed).generator()
    return resolve_observables(args.cost, dim, rng)


def _write_json(data: dict, args: argparse.Namespace, name: str) -> Path:
    path = Path(args.out) / name
    path.parent.mkdir(parents=True, exist_ok=True)
    dump_json(data, path)
    return path


def cmd_dist(args: argparse.Namespace) -> list[Path]:
    rho, omega = load_state(args.rho), load_state(args.omega)
    c = build_cost(_observables(args, rho.dim), not args.no_transpose)
    result = solve_primal(rho, omega, c, _config(args))
    print(f"D^2 = {result.squared_distance:.10g}")
    print(f"D = {result.distance:.10g}")
    print(f"duality gap = {result.duality_gap:.3e} ({result.status})")
    data = {
        "squared_distance": result.squared_distance,
        "distance": result.distance,
        "duality_gap": result.duality_gap,
        "status": result.status,
        "iterations": result.iterations,
        "coupling": matrix_to_json(result.coupling.entries),
    }
    if args.dual:
        certified = solve_dual(rho, omega, c, _config(args))
        print(f"dual value = {certified.squared_distance:.10g}")
        data["dual_value"] = certified.squared_distance
        data["x"] = matrix_to_json(certified.x)
        data["y"] = matrix_to_json(certified.y)
    return [_write_json(data, args, "dist.json")]


def cmd_divergence(args: argparse.Namespace) -> list[Path]:
    rho, omega = load_state(args.rho), load_state(args.omega)
    a = _observables(args, rho.dim)
    value = divergence(rho, omega, a, _config(args), not args.no_transpose)
    print(f"d = {value.value:.10g}")
    data = {
        "divergence": value.value,
        "raw_squared": value.raw_squared,
        "cross": value.components[0],
        "self_rho": value.components[1],
        "self_omega": value.components[2],
    }
    if args.hellinger:
        bound = hellinger_lower_bound(rho, omega, a)
        print(f"Hellinger lower bound on D^2 = {bound:.10g}")
        data["hellinger_lower_bound"] = bound
    return [_write_json(data, args, "divergence.json")]


def cmd_triangle(args: argparse.Namespace) -> list[Path]:
    rho, omega, tau = (load_state(p) for p in (args.rho, args.omega, args.tau))
    record = triangle_gap(
        rho,
        omega,
        tau,
        _observables(args, rho.dim),
        _config(args),
        not args.no_transpose,
        seed=args.seed,
    )
    print(f"gap = {record.gap:.10g}")
    return [write_csv(records_to_frame([record]), Path(args.out) / "triangle.csv")]


def cmd_lattice(args: argparse.Namespace) -> list[Path]:
    spec = LatticeSpec.coarse(args.n_cpu) if args.coarse else LatticeSpec(
        n_cpu=args.n_cpu
    )
    if args.rho is None and args.tau is None:
        frame = lattice_table(args.seed, spec=spec, cfg=_config(args))
        print(frame.to_string(float_format="%.6g"))
        print(f"min gap = {frame.min().min():.10g}")
        return [write_csv(frame.reset_index(), Path(args.out) / "lattice-table.csv")]
    if args.rho is None or args.tau is None:
        raise ValueError("A lattice scan needs both --rho and --tau")
    rho, tau = load_state(args.rho), load_state(args.tau)
    min_gap, records = lattice_scan(
        rho,
        tau,
        _observables(args, rho.dim),
        spec,
        _config(args),
        not args.no_transpose,
    )
    print(f"min gap = {min_gap:.10g}")
    frame = records_to_frame(
        [r.model_copy(update={"seed": args.seed}) for r in records]
    )
    return [write_csv(frame, Path(args.out) / "lattice.csv")]


def cmd_sweep(args: argparse.Namespace) -> list[Path]:
    spec = SweepSpec(
        dim=args.dim or 2,
        samples=args.samples,
        observables_per_sample=args.observables,
        rank=args.rank,
        seed=args.seed,
        anchor=args.anchor,
        n_cpu=args.n_cpu,
    )
    min_gap, records = min_gap_sweep(spec, _config(args))
    print(f"min gap = {min_gap:.10g} over {len(records)} samples (dim {spec.dim})")
    path = Path(args.out) / f"sweep-dim{spec.dim}.csv"
    return [write_csv(records_to_frame(records), path)]


def cmd_surface(args: argparse.Namespace) -> list[Path]:
    spec = SurfaceSpec(
        scenario=args.scenario,
        grid_resolution=args.grid,
        seed=args.seed,
        observables=args.observables,
        n_cpu=args.n_cpu,
    )
    result = gap_surface(spec, _config(args))
    print(f"min gap = {result.min_gap:.10g} over {len(result.evaluated)} points")
    out = Path(args.out)
    return [
        write_csv(surface_to_frame(result), out / f"surface-{args.scenario}.csv"),
        write_surface_svg(result, out / f"surface-{args.scenario}.svg"),
    ]


def cmd_complexity(args: argparse.Namespace) -> list[Path]:
    phi = resolve_channel(args.channel, args.dim)
    a = _observables(args, phi.dim)
    options = {
        "use_transpose": not args.no_transpose,
        "seed": args.seed,
        "max_evaluations": args.max_evaluations,
        "n_cpu": args.n_cpu,
    }
    result = wasserstein_complexity(phi, a, args.restarts, _config(args), **options)
    print(f"C_W >= {result.value:.10g} (lower bound, {result.restarts_used} restarts)")
    data = {
        "lower_bound": result.value,
        "converged": result.converged,
        "restarts_used": result.restarts_used,
        "argmax_state": matrix_to_json(result.argmax_state),
        "restarts": [r.model_dump(exclude={"state"}) for r in result.restarts],
    }
    if args.then is not None:
        second = resolve_channel(args.then, phi.dim)
        report = subadditivity_report(
            phi, second, a, args.restarts, _config(args), **options
        )
        print(f"subadditivity slack = {report.slack:.6g}")
        data["subadditivity"] = {
            **report.model_dump(),
            "slack": report.slack,
            "warning": report.warning,
        }
    return [_write_json(data, args, "complexity.json")]


def cmd_sufficient(args: argparse.Namespace) -> list[Path]:
    rate = sufficient_condition_rate(args.samples, args.seed)
    print(f"condition holds for {rate:.4%} of {args.samples} triplets")
    data = {"samples": args.samples, "rate": rate}
    return [_write_json(data, args, "sufficient.json")]


COMMANDS = {
    "dist": cmd_dist,
    "divergence": cmd_divergence,
    "triangle": cmd_triangle,
    "lattice": cmd_lattice,
    "sweep": cmd_sweep,
    "surface": cmd_surface,
    "complexity": cmd_complexity,
    "sufficient": cmd_sufficient,
}
