"""
Spectral radius solvers for nonnegative graph matrices and the p-spectral
radius.

The adjacency, signless Laplacian and A_alpha radii come from power
iteration on M + I, solved per connected component. The p-spectral radius
comes from the fixed-point iteration x_v <- s_G(v, x)^(1/(p-1)) with
seeded restarts.
"""

import itertools
import logging
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg, optimize

from app.errors import ConvergenceError, DomainError, UnsupportedSizeError
from app.models.graph import Graph
from app.models.spectral_result import PSpectralOptions, SpectralResult
from app.utils.graph_engine import components
from config import Config

logger = logging.getLogger(__name__)

MIN_DAMPING = 1.0 / 256


# Matrices

def degree_matrix(graph: Graph) -> np.ndarray:
    return np.diag(np.asarray(graph.degrees(), dtype=float))


def signless_laplacian(graph: Graph) -> np.ndarray:
    return degree_matrix(graph) + graph.adjacency_matrix()


def a_alpha_matrix(graph: Graph, alpha: float) -> np.ndarray:
    if not 0 <= alpha <= 1:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha * degree_matrix(graph) + (1 - alpha) * graph.adjacency_matrix()


# Weighted neighbour sums

def neighbor_weight_sum(graph: Graph, x: Sequence[float], v: int) -> float:
    """s_G(v, x): total weight of the neighbours of v"""
    row = graph.rows[v]
    return float(sum(x[u] for u in range(graph.n) if row >> u & 1))


def neighbor_weight_sums(graph: Graph, x: Sequence[float]) -> np.ndarray:
    return graph.adjacency_matrix() @ np.asarray(x, dtype=float)


def rayleigh_value(graph: Graph, x: Sequence[float]) -> float:
    """2 * sum over edges of x_i x_j"""
    vector = np.asarray(x, dtype=float)
    return float(vector @ graph.adjacency_matrix() @ vector)


# Power iteration

def _inverse_step(matrix: np.ndarray, x: np.ndarray, value: float) -> Optional[np.ndarray]:
    """One inverse-iteration step at the Rayleigh quotient, kept only if it stays nonnegative"""
    try:
        y = np.linalg.solve(matrix - value * np.eye(matrix.shape[0]), x)
    except np.linalg.LinAlgError:
        return None
    norm = np.linalg.norm(y)
    if not np.isfinite(norm) or norm == 0:
        return None
    y = y / norm
    if y.sum() < 0:
        y = -y
    if y.min() < -1e-9:
        return None
    y = np.clip(y, 0.0, None)
    return y / np.linalg.norm(y)


def _residual(matrix: np.ndarray, x: np.ndarray) -> Tuple[float, float]:
    mx = matrix @ x
    value = float(x @ mx)
    return value, float(np.max(np.abs(mx - value * x)))


def _perron_component(matrix: np.ndarray, tolerance: float, max_iterations: int,
                      restart_interval: int) -> Tuple[float, np.ndarray, float, int]:
    size = matrix.shape[0]
    if size == 1:
        return float(matrix[0, 0]), np.ones(1), 0.0, 0

    shifted = matrix + np.eye(size)
    x = np.full(size, 1.0 / math.sqrt(size))
    value, residual = _residual(matrix, x)
    if residual <= tolerance:
        return value, x, residual, 0

    for iteration in range(1, max_iterations + 1):
        y = shifted @ x
        x = y / np.linalg.norm(y)
        value, residual = _residual(matrix, x)
        if residual <= tolerance:
            return value, x, residual, iteration
        if restart_interval and iteration % restart_interval == 0:
            refined = _inverse_step(matrix, x, value)
            if refined is not None:
                refined_value, refined_residual = _residual(matrix, refined)
                if refined_residual < residual:
                    x, value, residual = refined, refined_value, refined_residual
                    if residual <= tolerance:
                        return value, x, residual, iteration

    raise ConvergenceError(
        f"Power iteration did not converge in {max_iterations} iterations",
        residual=residual, iterations=max_iterations,
        diagnostics={'value': value, 'size': size})


def solve_nonnegative(graph: Graph, matrix: np.ndarray, tolerance: Optional[float] = None,
                      max_iterations: Optional[int] = None, label: str = 'adjacency') -> SpectralResult:
    """Largest eigenvalue and nonnegative unit eigenvector, one component at a time"""
    tolerance = tolerance or Config.SOLVER_TOLERANCE
    if not tolerance > 0:
        raise DomainError(f"Tolerance must be positive, got {tolerance}")
    max_iterations = max_iterations or Config.SOLVER_MAX_ITERATIONS

    parts = components(graph)
    best = None
    total_iterations = 0
    for index, component in enumerate(parts):
        block = matrix[np.ix_(component, component)]
        value, vector, residual, iterations = _perron_component(
            block, tolerance, max_iterations, Config.RAYLEIGH_RESTART_INTERVAL)
        total_iterations += iterations
        # lowest index wins a tie
        if best is None or value > best[0] + tolerance:
            best = (value, vector, component, index)

    value, block_vector, component, index = best
    vector = np.zeros(graph.n)
    vector[component] = block_vector
    _, residual = _residual(matrix, vector)
    return SpectralResult(
        value=value, vector=vector, residual=residual, iterations=total_iterations,
        diagnostics={'matrix': label, 'component': index, 'components': len(parts)})


def adjacency_radius(graph: Graph, tolerance: Optional[float] = None) -> SpectralResult:
    return solve_nonnegative(graph, graph.adjacency_matrix(), tolerance, label='adjacency')


def signless_laplacian_radius(graph: Graph, tolerance: Optional[float] = None) -> SpectralResult:
    return solve_nonnegative(graph, signless_laplacian(graph), tolerance, label='signless')


def a_alpha_radius(graph: Graph, alpha: float, tolerance: Optional[float] = None) -> SpectralResult:
    result = solve_nonnegative(graph, a_alpha_matrix(graph, alpha), tolerance, label='a_alpha')
    result.diagnostics['alpha'] = alpha
    return result


# Dense oracles

def dense_radius(matrix: np.ndarray) -> float:
    return float(linalg.eigh(matrix, eigvals_only=True)[-1])


def batch_radii(stack: np.ndarray) -> np.ndarray:
    """Largest eigenvalue of each symmetric matrix in a (batch, n, n) stack"""
    return np.linalg.eigvalsh(stack)[:, -1]


# p-spectral radius

def _p_norm(x: np.ndarray, p: float) -> float:
    return float(np.sum(x ** p) ** (1.0 / p))


def _p_fixed_point(adjacency: np.ndarray, start: np.ndarray, options: PSpectralOptions) -> SpectralResult:
    p = options.p
    exponent = 1.0 / (p - 1.0)
    x = start / _p_norm(start, p)
    weight = 1.0
    previous = math.inf
    residual = math.inf
    value = 0.0

    for iteration in range(options.max_iterations + 1):
        s = adjacency @ x
        value = float(x @ s)
        residual = float(np.max(np.abs(value * x ** (p - 1.0) - s)))
        if residual <= options.tolerance:
            return SpectralResult(value=value, vector=x, residual=residual, iterations=iteration,
                                  diagnostics={'damping': weight})
        if residual >= previous * (1 - 1e-9) and weight > MIN_DAMPING:
            weight = max(weight / 2, MIN_DAMPING)
            logger.debug("p=%s: residual %.3e stalled at iteration %d, damping weight %.4f",
                         p, residual, iteration, weight)
        previous = residual

        top = s.max()
        target = (s / top) ** exponent
        target /= _p_norm(target, p)
        x = (1 - weight) * x + weight * target
        x /= _p_norm(x, p)

    raise ConvergenceError(
        f"p-spectral iteration did not converge in {options.max_iterations} iterations",
        residual=residual, iterations=options.max_iterations,
        diagnostics={'value': value, 'damping': weight})


def p_spectral_radius(graph: Graph, options: PSpectralOptions) -> SpectralResult:
    """
    lambda^(p)(G) = 2 max { sum_{ij in E} x_i x_j : ||x||_p = 1 }.
    Best stationary point over the uniform start and ``options.restarts``
    seeded random positive starts.
    """
    if not options.p > 1:
        raise DomainError(f"The p-spectral solver needs p > 1, got p={options.p}")
    n = graph.n
    if graph.edge_count == 0:
        return SpectralResult(value=0.0, vector=np.zeros(n), residual=0.0, iterations=0,
                              diagnostics={'p': options.p, 'restarts': 0, 'converged': 0,
                                           'heuristic_global': False})

    adjacency = graph.adjacency_matrix()
    rng = np.random.default_rng(options.seed)
    starts = [np.ones(n)] + [rng.uniform(0.05, 1.0, n) for _ in range(options.restarts)]

    best = None
    best_index = -1
    failures: List[float] = []
    total_iterations = 0
    for index, start in enumerate(starts):
        try:
            result = _p_fixed_point(adjacency, start, options)
        except ConvergenceError as e:
            logger.info("p=%s: start %d did not converge (residual %.3e)", options.p, index, e.residual)
            failures.append(e.residual)
            total_iterations += e.iterations
            continue
        total_iterations += result.iterations
        if best is None or result.value > best.value + 1e-12:
            best, best_index = result, index

    diagnostics = {
        'p': options.p,
        'restarts': len(starts),
        'converged': len(starts) - len(failures),
        'heuristic_global': options.heuristic_global,
    }
    if best is None:
        raise ConvergenceError(
            f"p-spectral iteration failed on all {len(starts)} starts",
            residual=min(failures), iterations=total_iterations, diagnostics=diagnostics)

    diagnostics.update({'best_start': best_index, 'damping': best.diagnostics.get('damping')})
    best.diagnostics = diagnostics
    best.iterations = total_iterations
    return best


def p_scaled_radius(graph: Graph, options: PSpectralOptions) -> float:
    """lambda^(p)(G) * n^(2/p), non-increasing in p"""
    return p_spectral_radius(graph, options).value * graph.n ** (2.0 / options.p)


def _simplex_grid(n: int, steps: int):
    for bars in itertools.combinations(range(steps + n - 1), n - 1):
        previous = -1
        point = []
        for bar in bars:
            point.append(bar - previous - 1)
            previous = bar
        point.append(steps + n - 2 - previous)
        yield np.asarray(point, dtype=float) / steps


def p_spectral_bruteforce(graph: Graph, p: float, steps: int = 40) -> float:
    """
    Grid search over y = x^p on the simplex, then an SLSQP polish of the
    best grid point on the sphere sum x^p = 1. Small n only.
    """
    if not p > 1:
        raise DomainError(f"p must exceed 1, got {p}")
    if graph.n > 5:
        raise UnsupportedSizeError(f"Brute-force p-spectral search is limited to n <= 5, got {graph.n}")
    adjacency = graph.adjacency_matrix()
    if graph.edge_count == 0:
        return 0.0

    best_value, best_x = -1.0, None
    for y in _simplex_grid(graph.n, steps):
        x = y ** (1.0 / p)
        value = float(x @ adjacency @ x)
        if value > best_value:
            best_value, best_x = value, x

    polished = optimize.minimize(
        lambda x: -float(x @ adjacency @ x),
        best_x,
        method='SLSQP',
        bounds=[(0.0, 1.0)] * graph.n,
        constraints=[{'type': 'eq', 'fun': lambda x: float(np.sum(np.abs(x) ** p)) - 1.0}],
        options={'ftol': 1e-14, 'maxiter': 500},
    )
    if polished.success:
        x = np.clip(polished.x, 0.0, None)
        x /= _p_norm(x, p)
        best_value = max(best_value, float(x @ adjacency @ x))
    return best_value


# Bounds

def nosal_bound(m: int) -> float:
    return math.sqrt(m)


def wilf_bound(n: int, r: int) -> float:
    return (1 - 1 / r) * n


def nikiforov_edge_bound(m: int, r: int) -> float:
    return math.sqrt(2 * m * (1 - 1 / r))


def p_turan_bound(n: int, r: int, p: float) -> float:
    return (1 - 1 / r) * n ** (2 - 2 / p)


def p_sandwich(n: int, m: int, p: float) -> Tuple[float, float]:
    """2m n^(-2/p) <= lambda^(p) <= (2m)^(1-1/p)"""
    return 2 * m * n ** (-2.0 / p), (2 * m) ** (1 - 1.0 / p)


def turan_radius_bounds(n: int, r: int) -> Tuple[float, float]:
    return (1 - 1 / r) * n - r / (4 * n), (1 - 1 / r) * n
