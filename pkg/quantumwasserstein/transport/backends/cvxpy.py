"""Transport SDP through cvxpy's complex Hermitian variables.

Needs the optional ``cvxpy`` extra. The primal and the dual are posed as two
separate problems, so certificates never depend on a solver's sign convention
for equality multipliers.
"""

import logging

import numpy as np

from quantumwasserstein.cost import CostOperator
from quantumwasserstein.errors import SolverFailureError
from quantumwasserstein.states.common import DensityMatrix
from quantumwasserstein.transport.backends.common import SdpBackend
from quantumwasserstein.transport.common import SdpSolution, SolverConfig

try:
    import cvxpy as cp
except ImportError:  # pragma: no cover
    cp = None

_logger = logging.getLogger("quantumwasserstein.transport")


class CvxpyBackend(SdpBackend):
    def __init__(self, solver: str = None):
        if cp is None:
            raise ImportError(
                "The cvxpy backend needs the optional dependency: "
                "pip install quantumwasserstein[cvxpy]"
            )
        self._solver = solver

    def _status(self, problem: "cp.Problem") -> str:
        if problem.status == cp.OPTIMAL:
            return "optimal"
        elif problem.status == cp.OPTIMAL_INACCURATE:
            return "stalled"
        elif problem.status in cp.settings.INF_OR_UNB:
            return "infeasible-detected"
        return "max-iter"

    def _solve(self, problem: "cp.Problem") -> None:
        try:
            problem.solve(solver=self._solver)
        except cp.error.SolverError as e:
            raise SolverFailureError(f"cvxpy aborted: {e}", status="stalled") from e

    def _iterations(self, problem: "cp.Problem") -> int:
        stats = problem.solver_stats
        return int(stats.num_iters or 0) if stats is not None else 0

    def solve(
        self,
        rho: DensityMatrix,
        omega: DensityMatrix,
        c: CostOperator,
        cfg: SolverConfig,
    ) -> SdpSolution:
        d = c.dim
        identity = np.eye(d)

        pi = cp.Variable((d * d, d * d), hermitian=True)
        primal = cp.Problem(
            cp.Minimize(cp.real(cp.trace(c.entries @ pi))),
            [
                pi >> 0,
                cp.partial_trace(pi, [d, d], axis=1) == omega.entries,
                cp.partial_trace(pi, [d, d], axis=0) == c.dual_side(rho.entries),
            ],
        )
        self._solve(primal)

        x = cp.Variable((d, d), hermitian=True)
        y = cp.Variable((d, d), hermitian=True)
        dual_x = cp.transpose(x) if c.transposed else x
        slack = c.entries - cp.kron(y, identity) - cp.kron(identity, dual_x)
        dual = cp.Problem(
            cp.Maximize(
                cp.real(cp.trace(x @ rho.entries) + cp.trace(y @ omega.entries))
            ),
            [0.5 * (slack + slack.H) >> 0],
        )
        self._solve(dual)

        statuses = {self._status(primal), self._status(dual)}
        iterations = self._iterations(primal) + self._iterations(dual)
        _logger.debug(
            f"cvxpy finished with '{primal.status}'/'{dual.status}' "
            f"after {iterations} it"
        )
        for status in ("infeasible-detected", "max-iter", "stalled"):
            if status in statuses:
                break
        else:
            status = "optimal"

        if status == "infeasible-detected":
            return SdpSolution(
                status=status,
                primal_value=np.nan,
                dual_value=np.nan,
                iterations=iterations,
            )
        return SdpSolution(
            status=status,
            primal_value=float(primal.value),
            dual_value=float(dual.value),
            coupling=np.asarray(pi.value),
            x=np.asarray(x.value),
            y=np.asarray(y.value),
            iterations=iterations,
        )
