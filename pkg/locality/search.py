"""
Bloch-sphere search for a weak-locality measurement on a qubit A.

Every rank-1 projective qubit measurement is {|phi(theta, phi)>, |phi_perp>}.
A basis witnesses weak locality when both conditional B states equal rho_B;
its score is the worst Frobenius distance. A coarse grid is followed by
coordinate descent with step halving. Not finding a basis is only a
statement about the searched resolution.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from matcore.conf import resolve
from matcore.linalg import eig_hermitian, partial_trace
from matcore.operators import bloch_ket, bloch_ket_perp
from matcore.states import PureState

from .exceptions import UnsupportedDimension
from .measurement import MeasurementSet, conditional_states, outcome_residual

logger = logging.getLogger(__name__)

TWO_PI = 2 * np.pi


@dataclass(frozen=True)
class WeakLocalityVerdict:
    found: bool
    theta: float
    phi: float
    residual: float
    grid_resolution: int
    tol: float
    basis: tuple = None

    @property
    def trace_distance(self):
        """Worst-outcome trace distance equivalent of the residual (exact when B is a qubit)."""
        return self.residual / np.sqrt(2)


def basis_at(theta, phi):
    return PureState(bloch_ket(theta, phi)), PureState(bloch_ket_perp(theta, phi))


def _require_qubit_a(rho_ab):
    if not rho_ab.is_bipartite or rho_ab.dims[0] != 2:
        raise UnsupportedDimension(f"Weak-locality search needs a two-dimensional A subsystem, got dims {rho_ab.dims}")


def basis_residual(rho_ab, rho_b, theta, phi):
    """Worst conditional distance from rho_B for the basis at (theta, phi)."""
    measurement = MeasurementSet.projective((bloch_ket(theta, phi), bloch_ket_perp(theta, phi)))
    return outcome_residual(conditional_states(rho_ab, measurement), rho_b)


def grid_points(grid):
    """(theta, phi) pairs in lexicographic order: theta in [0, pi], phi in [0, 2 pi)."""
    thetas = np.linspace(0.0, np.pi, grid)
    phis = np.linspace(0.0, TWO_PI, grid, endpoint=False)
    return [(float(theta), float(phi)) for theta in thetas for phi in phis]


def score_grid(rho_ab, grid, jobs=1):
    """Residual at every grid point, in grid order whatever ``jobs`` is."""
    rho_b = partial_trace(rho_ab, 1)
    points = grid_points(grid)

    def score(point):
        return basis_residual(rho_ab, rho_b, *point)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            residuals = list(executor.map(score, points))
    else:
        residuals = [score(point) for point in points]
    return points, np.array(residuals)


def _lowest_tied(points, residuals, tie_tol):
    """Lowest (theta, phi) whose residual is within ``tie_tol`` of the minimum."""
    index = int(np.flatnonzero(residuals <= residuals.min() + tie_tol)[0])
    return points[index], float(residuals[index])


def refine(rho_ab, theta, phi, residual, step_theta, step_phi, iterations=None, tie_tol=None):
    """Coordinate descent from a grid point; both steps halve every iteration."""
    iterations = resolve(iterations, 'REFINE_ITERATIONS')
    tie_tol = resolve(tie_tol, 'TIE_TOL')
    rho_b = partial_trace(rho_ab, 1)
    for _ in range(iterations):
        for axis in ('theta', 'phi'):
            best = None
            for sign in (1.0, -1.0):
                if axis == 'theta':
                    candidate = (float(np.clip(theta + sign * step_theta, 0.0, np.pi)), phi)
                else:
                    candidate = (theta, float(np.mod(phi + sign * step_phi, TWO_PI)))
                score = basis_residual(rho_ab, rho_b, *candidate)
                if score < residual - tie_tol and (best is None or score < best[1]):
                    best = (candidate, score)
            if best is not None:
                (theta, phi), residual = best
        step_theta /= 2
        step_phi /= 2
    return theta, phi, residual


def weak_locality_search(rho_ab, tol=None, grid=None, jobs=None):
    """
    Look for a projective basis on A that leaves every conditional B state
    equal to rho_B.
    """
    _require_qubit_a(rho_ab)
    tol = resolve(tol, 'SEARCH_TOL')
    grid = resolve(grid, 'SEARCH_GRID')
    jobs = resolve(jobs, 'JOBS')
    tie_tol = resolve(None, 'TIE_TOL')
    if grid < 2:
        raise ValueError("Grid resolution must be at least 2")

    points, residuals = score_grid(rho_ab, grid, jobs)
    (theta, phi), residual = _lowest_tied(points, residuals, tie_tol)
    logger.debug("Best grid point theta=%.6f phi=%.6f residual=%.3g", theta, phi, residual)

    theta, phi, residual = refine(rho_ab, theta, phi, residual, np.pi / (grid - 1), TWO_PI / grid)
    found = residual < tol
    logger.info(
        "Weak-locality basis %s (residual %.3g at grid %d)",
        'found' if found else 'not found', residual, grid,
    )
    return WeakLocalityVerdict(
        found=found,
        theta=theta,
        phi=phi,
        residual=residual,
        grid_resolution=grid,
        tol=tol,
        basis=basis_at(theta, phi) if found else None,
    )


def strong_locality_violation(rho_ab, grid=None, jobs=None):
    """
    A rank-1 projective measurement on A that disturbs B as much as possible.

    For a qubit A this is the grid basis with the largest worst-outcome
    shift; otherwise the eigenbasis of rho_A.
    """
    grid = resolve(grid, 'SEARCH_GRID')
    jobs = resolve(jobs, 'JOBS')
    if rho_ab.dims[0] == 2:
        points, residuals = score_grid(rho_ab, grid, jobs)
        theta, phi = points[int(np.argmax(residuals))]
        return MeasurementSet.projective((bloch_ket(theta, phi), bloch_ket_perp(theta, phi)))
    _, vectors = eig_hermitian(partial_trace(rho_ab, 0))
    return MeasurementSet.projective(vectors.T)
