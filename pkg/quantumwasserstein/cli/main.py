import argparse
import logging
import sys
import time
from typing import Sequence

from pydantic import ValidationError

from quantumwasserstein import __version__
from quantumwasserstein.cli.commands import COMMANDS
from quantumwasserstein.cli.manifest import RunManifest
from quantumwasserstein.errors import (
    ConcavityViolationError,
    ExperimentPointError,
    QuantumWassersteinError,
    SolverFailureError,
)

_logger = logging.getLogger("quantumwasserstein.cli")

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_SOLVER_FAILURE = 3

_SOLVER_ERRORS = (SolverFailureError, ConcavityViolationError)
_INPUT_ERRORS = (QuantumWassersteinError, ValidationError, OSError, ValueError)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--dim", type=int, default=None)
    common.add_argument(
        "--cost",
        default="symmetric",
        help="symmetric | pauli-products:<n> | random:<k> | file:<path>",
    )
    common.add_argument("--solver-gap-tol", type=float, default=1e-8)
    common.add_argument("--backend", choices=["cvxopt", "cvxpy"], default="cvxopt")
    common.add_argument(
        "--no-transpose",
        action="store_true",
        help="pair A_j with A_j instead of A_jᵀ on the second factor",
    )
    common.add_argument("--out", default="out", help="output directory")
    common.add_argument("--n-cpu", type=int, default=1, help="-1 uses all cores")
    common.add_argument("--quiet", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantumwasserstein",
        description="Quadratic quantum Wasserstein distances and experiments.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()

    dist = commands.add_parser("dist", parents=[common], help="transport cost D²")
    dist.add_argument("--rho", required=True)
    dist.add_argument("--omega", required=True)
    dist.add_argument("--dual", action="store_true", help="also print certificates")

    div = commands.add_parser("divergence", parents=[common], help="divergence d")
    div.add_argument("--rho", required=True)
    div.add_argument("--omega", required=True)
    div.add_argument("--hellinger", action="store_true")

    triangle = commands.add_parser("triangle", parents=[common], help="one gap")
    triangle.add_argument("--rho", required=True)
    triangle.add_argument("--omega", required=True)
    triangle.add_argument("--tau", required=True)

    lattice = commands.add_parser(
        "lattice",
        parents=[common],
        help="scan ω over the Bloch lattice; without states, the seeded table",
    )
    lattice.add_argument("--rho")
    lattice.add_argument("--tau")
    lattice.add_argument("--coarse", action="store_true", help="step 1/5 lattice")

    sweep = commands.add_parser("sweep", parents=[common], help="random triplets")
    sweep.add_argument("--samples", type=int, default=4000)
    sweep.add_argument("--rank", type=int, default=None)
    sweep.add_argument("--observables", type=int, default=3)
    sweep.add_argument(
        "--anchor", choices=["none", "omega-pure", "ends-pure"], default="none"
    )

    surface = commands.add_parser("surface", parents=[common], help="gap surface")
    surface.add_argument(
        "--scenario",
        choices=["c2-deterministic", "c4-deterministic", "c2-random", "c4-random"],
        required=True,
    )
    surface.add_argument("--grid", type=int, default=41)
    surface.add_argument("--observables", type=int, default=3)

    complexity = commands.add_parser(
        "complexity", parents=[common], help="Wasserstein complexity of a channel"
    )
    complexity.add_argument(
        "--channel",
        required=True,
        help="identity[:dim] | unitary:<file> | depolarizing:<p> | "
        "dephasing:<p> | amplitude-damping:<g> | file:<path>",
    )
    complexity.add_argument(
        "--then", default=None, help="second channel; adds a subadditivity report"
    )
    complexity.add_argument("--restarts", type=int, default=16)
    complexity.add_argument("--max-evaluations", type=int, default=600)

    sufficient = commands.add_parser(
        "sufficient", parents=[common], help="rate of the qubit sufficient condition"
    )
    sufficient.add_argument("--samples", type=int, default=100_000)

    replay = commands.add_parser("replay", help="re-run a recorded manifest")
    replay.add_argument("manifest")
    replay.add_argument("--quiet", action="store_true")
    return parser


def _configure_logging(quiet: bool) -> None:
    logging.basicConfig(level=logging.INFO)
    level = logging.WARNING if quiet else logging.INFO
    for name in (
        "quantumwasserstein",
        "quantumwasserstein.experiments",
        "quantumwasserstein.complexity",
        "quantumwasserstein.cli",
    ):
        logging.getLogger(name).setLevel(level)


def _exit_code(error: Exception) -> int:
    cause = error.cause if isinstance(error, ExperimentPointError) else error
    if isinstance(cause, _SOLVER_ERRORS):
        return EXIT_SOLVER_FAILURE
    return EXIT_INVALID_INPUT


def run(args: argparse.Namespace) -> int:
    """Run one sub-command and write its manifest next to the outputs."""
    params = {k: v for k, v in vars(args).items() if k != "command"}
    start = time.perf_counter()
    try:
        outputs = COMMANDS[args.command](args)
    except _SOLVER_ERRORS + _INPUT_ERRORS as e:
        _logger.error(f"{args.command} failed: {e}")
        return _exit_code(e)
    manifest = RunManifest(
        command=args.command,
        params=params,
        seed=args.seed,
        version=__version__,
        wall_time=time.perf_counter() - start,
        outputs=[path.name for path in outputs],
    )
    manifest.write(args.out)
    return EXIT_OK


def replay(path: str) -> int:
    try:
        manifest = RunManifest.read(path)
    except _INPUT_ERRORS as e:
        _logger.error(f"Cannot read manifest {path}: {e}")
        return EXIT_INVALID_INPUT
    if manifest.command not in COMMANDS:
        _logger.error(f"Manifest records unknown command {manifest.command!r}")
        return EXIT_INVALID_INPUT
    if manifest.version != __version__:
        _logger.warning(
            f"Manifest was written by version {manifest.version}, "
            f"running {__version__}"
        )
    _logger.info(f"Replaying {manifest.command} into {manifest.params['out']}")
    return run(argparse.Namespace(command=manifest.command, **manifest.params))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.quiet)
    if args.command == "replay":
        return replay(args.manifest)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
