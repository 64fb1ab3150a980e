"""Transport SDP on cvxopt's primal-dual interior-point solver.

cvxopt only handles real symmetric cones, so each complex Hermitian n×n block
is embedded as the real symmetric 2n×2n block [[Re M, −Im M], [Im M, Re M]],
which is PSD exactly when M is. cvxopt's primal is the transport dual over the
hermitian_basis coordinates of X and Y; its dual variable Z recovers the
coupling as Π = (Z11 + Z22) + i(Z21 − Z12).
"""

import logging

import numpy as np
from cvxopt import matrix, solvers

from quantumwasserstein.cost import CostOperator
from quantumwasserstein.errors import SolverFailureError
from quantumwasserstein.states.common import DensityMatrix
from quantumwasserstein.states.operations import hermitian_basis
from quantumwasserstein.transport.backends.common import SdpBackend
from quantumwasserstein.transport.common import SdpSolution, SolverConfig

_logger = logging.getLogger("quantumwasserstein.transport")


def embed(m: np.ndarray) -> np.ndarray:
    return np.block([[m.real, -m.imag], [m.imag, m.real]])


def _unembed(z: np.ndarray) -> np.ndarray:
    n = z.shape[0] // 2
    z11, z12 = z[:n, :n], z[:n, n:]
    z21, z22 = z[n:, :n], z[n:, n:]
    return (z11 + z22) + 1j * (z21 - z12)


class CvxoptBackend(SdpBackend):
    def _terms(self, c: CostOperator) -> tuple[list[np.ndarray], list[np.ndarray]]:
        basis = [b.entries for b in hermitian_basis(c.dim)]
        identity = np.eye(c.dim, dtype=np.complex128)
        x_terms = [np.kron(identity, c.dual_side(b)) for b in basis]
        # Y = cI, X = −cI is in the kernel; Y's last diagonal unit is pinned to 0.
        y_terms = [np.kron(b, identity) for b in basis[: c.dim - 1] + basis[c.dim :]]
        return x_terms, y_terms

    def solve(
        self,
        rho: DensityMatrix,
        omega: DensityMatrix,
        c: CostOperator,
        cfg: SolverConfig,
    ) -> SdpSolution:
        d = c.dim
        basis = [b.entries for b in hermitian_basis(d)]
        y_basis = basis[: d - 1] + basis[d:]
        x_terms, y_terms = self._terms(c)

        objective = np.array(
            [-np.vdot(b, rho.entries).real for b in basis]
            + [-np.vdot(b, omega.entries).real for b in y_basis]
        )
        g = np.column_stack(
            [embed(t).reshape(-1, order="F") for t in x_terms + y_terms]
        )
        h = embed(c.entries)

        options = {
            "show_progress": False,
            "abstol": cfg.gap_tol,
            "reltol": cfg.gap_tol,
            "feastol": cfg.feas_tol,
            "maxiters": cfg.max_iter,
            "refinement": cfg.refinement,
        }
        try:
            sol = solvers.sdp(
                matrix(objective), Gs=[matrix(g)], hs=[matrix(h)], options=options
            )
        except (ArithmeticError, ValueError) as e:
            raise SolverFailureError(
                f"cvxopt aborted: {type(e).__name__}: {e}", status="stalled"
            ) from e
        iterations = int(sol.get("iterations") or 0)
        _logger.debug(f"cvxopt finished with '{sol['status']}' after {iterations} it")

        if sol["status"] in ("primal infeasible", "dual infeasible"):
            return SdpSolution(
                status="infeasible-detected",
                primal_value=np.nan,
                dual_value=np.nan,
                iterations=iterations,
            )

        coords = np.array(sol["x"]).ravel()
        z = np.array(sol["zs"][0])
        z = np.tril(z) + np.tril(z, -1).T

        x = sum(coef * b for coef, b in zip(coords[: d * d], basis))
        y = sum(coef * b for coef, b in zip(coords[d * d :], y_basis))

        if sol["status"] == "optimal":
            status = "optimal"
        elif iterations >= cfg.max_iter:
            status = "max-iter"
        else:
            status = "stalled"

        return SdpSolution(
            status=status,
            primal_value=float(np.sum(h * z)),
            dual_value=float(-objective @ coords),
            coupling=_unembed(z),
            x=x,
            y=y,
            iterations=iterations,
        )
