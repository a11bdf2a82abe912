"""
Exhaustive search over labeled graphs on a few vertices.

Edges are decided one at a time in graph6 column order, so a partial
assignment is a prefix of the graph6 bit string. Adding an edge that would
close a forbidden clique is pruned immediately. The first ``SHARD_EDGES``
decisions split the search into independent shards that run in a process
pool and are merged in shard order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from app.errors import DomainError, EmptyClassError, UnsupportedSizeError
from app.models.graph import CanonicalForm, Graph
from app.models.search import Objective, Predicate, SearchResult, SweepResult
from app.models.spectral_result import PSpectralOptions
from app.utils.graph_engine import canonical_form, contains_clique, is_connected, is_r_partite
from app.utils.spectral_engine import (a_alpha_radius, adjacency_radius, batch_radii, p_spectral_radius,
                                       signless_laplacian_radius)
from config import Config

logger = logging.getLogger(__name__)

Rows = Tuple[int, ...]


def edge_order(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs in graph6 bit order"""
    return [(i, j) for j in range(1, n) for i in range(j)]


def _check_size(n: int):
    if not 3 <= n <= Config.MAX_ENUMERATION_N:
        raise UnsupportedSizeError(
            f"Exhaustive enumeration covers 3 <= n <= {Config.MAX_ENUMERATION_N}, got n={n}")


def _leaves(rows: Sequence[int], edges: Sequence[Tuple[int, int]], start: int,
            clique_k: Optional[int]) -> Iterator[Rows]:
    """
    Every completion of ``rows`` over edges[start:] that stays K_k-free.
    Iterative backtracking: state 0 means the edge is still to be tried
    absent, 1 present, 2 both branches done.
    """
    rows = list(rows)
    total = len(edges)
    if start == total:
        yield tuple(rows)
        return
    state = [0] * total
    index = start
    while index >= start:
        if index == total:
            yield tuple(rows)
            index -= 1
            continue
        i, j = edges[index]
        if state[index] == 0:
            state[index] = 1
            index += 1
        elif state[index] == 1:
            state[index] = 2
            if clique_k is None or not contains_clique(rows, rows[i] & rows[j], clique_k - 2):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                index += 1
        else:
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
            state[index] = 0
            index -= 1


def _saturated(rows: Rows, n: int, k: int) -> bool:
    """Every non-edge closes a K_k"""
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] >> j & 1 and not contains_clique(rows, rows[i] & rows[j], k - 2):
                return False
    return True


def _accepts_leaf(rows: Rows, n: int, pred: Predicate, saturated_only: bool) -> bool:
    if saturated_only and pred.clique_free_k is not None and not _saturated(rows, n, pred.clique_free_k):
        return False
    if saturated_only and pred.clique_free_k is None and any(
            row != ((1 << n) - 1) & ~(1 << v) for v, row in enumerate(rows)):
        return False
    if not (pred.connected_only or pred.min_chromatic or pred.max_chromatic):
        return True
    graph = Graph(n, rows)
    if pred.connected_only and not is_connected(graph):
        return False
    if pred.max_chromatic is not None and not is_r_partite(graph, pred.max_chromatic):
        return False
    if pred.min_chromatic is not None and pred.min_chromatic > 1 and is_r_partite(graph, pred.min_chromatic - 1):
        return False
    return True


def _members(n: int, pred: Predicate, prefix: Rows, depth: int, saturated_only: bool) -> Iterator[Rows]:
    edges = edge_order(n)
    for rows in _leaves(prefix, edges, depth, pred.clique_free_k):
        if _accepts_leaf(rows, n, pred, saturated_only):
            if Config.DEBUG_CHECKS and not pred.accepts(Graph(n, rows)):
                raise AssertionError(f"Enumerated graph {rows} is outside {pred.describe()}")
            yield rows


def _shard_prefixes(n: int, pred: Predicate) -> Tuple[List[Rows], int]:
    edges = edge_order(n)
    depth = min(Config.SHARD_EDGES, len(edges))
    return list(_leaves([0] * n, edges[:depth], 0, pred.clique_free_k)), depth


def enumerate_graphs(n: int, pred: Predicate = Predicate(), saturated_only: bool = False) -> Iterator[Graph]:
    """
    Every labeled graph on n vertices in the class, in graph6 bit order.
    With ``saturated_only`` only graphs to which no edge can be added
    without creating the forbidden clique are produced.
    """
    _check_size(n)
    for rows in _members(n, pred, (0,) * n, 0, saturated_only):
        yield Graph(n, rows)


# Objective evaluation

def adjacency_stack(batch: Sequence[Rows], n: int) -> np.ndarray:
    rows = np.asarray(batch, dtype=np.int64)
    return ((rows[:, :, None] >> np.arange(n)) & 1).astype(float)


def dense_values(batch: Sequence[Rows], n: int, objective: Objective) -> np.ndarray:
    """Objective values of a batch of graphs (not for the p-spectral kind)"""
    a = adjacency_stack(batch, n)
    if objective.kind == 'edge_count':
        return a.sum(axis=(1, 2)) / 2
    if objective.kind == 'adjacency_radius':
        return batch_radii(a)
    d = a.sum(axis=2)[:, :, None] * np.eye(n)
    if objective.kind == 'signless_radius':
        return batch_radii(d + a)
    alpha = objective.alpha
    return batch_radii(alpha * d + (1 - alpha) * a)


def solve_objective(graph: Graph, objective: Objective, restarts: Optional[int] = None) -> float:
    """Objective value from the iterative solvers"""
    if objective.kind == 'edge_count':
        return float(graph.edge_count)
    if objective.kind == 'adjacency_radius':
        return adjacency_radius(graph).value
    if objective.kind == 'signless_radius':
        return signless_laplacian_radius(graph).value
    if objective.kind == 'a_alpha_radius':
        return a_alpha_radius(graph, objective.alpha).value
    options = PSpectralOptions(p=objective.p,
                               restarts=Config.P_RESTARTS if restarts is None else restarts,
                               seed=Config.RANDOM_SEED)
    return p_spectral_radius(graph, options).value


class _Leader:
    """Running maximum with every candidate inside the tolerance band"""

    def __init__(self, tolerance: float):
        self.tolerance = tolerance
        self.best = float('-inf')
        self.candidates: List[Tuple[float, Rows]] = []

    def offer(self, values: np.ndarray, batch: Sequence[Rows]):
        top = float(values.max())
        if top > self.best:
            self.best = top
            self.candidates = [(v, rows) for v, rows in self.candidates if v >= top - self.tolerance]
        for index in np.flatnonzero(values >= self.best - self.tolerance):
            self.candidates.append((float(values[index]), batch[index]))

    def absorb(self, best: float, candidates: List[Tuple[float, Rows]]):
        if best > self.best:
            self.best = best
        self.candidates = [(v, rows) for v, rows in self.candidates + candidates
                           if v >= self.best - self.tolerance]


@dataclass(frozen=True)
class _ShardTask:
    n: int
    pred: Predicate
    objective: Optional[Objective]
    prefix: Rows
    depth: int
    saturated_only: bool
    mode: str
    tolerance: float
    batch_size: int


def _run_shard(task: _ShardTask):
    members = _members(task.n, task.pred, task.prefix, task.depth, task.saturated_only)
    if task.mode == 'count':
        return sum(1 for _ in members)

    if task.mode == 'classes':
        classes: Dict[bytes, Rows] = {}
        examined = 0
        for rows in members:
            examined += 1
            form = canonical_form(Graph(task.n, rows))
            classes.setdefault(form.data, rows)
        return examined, classes

    leader = _Leader(task.tolerance)
    examined = 0
    batch: List[Rows] = []
    for rows in members:
        batch.append(rows)
        if len(batch) == task.batch_size:
            leader.offer(dense_values(batch, task.n, task.objective), batch)
            examined += len(batch)
            batch = []
    if batch:
        leader.offer(dense_values(batch, task.n, task.objective), batch)
        examined += len(batch)
    return examined, leader.best, leader.candidates


def _run_shards(n: int, pred: Predicate, objective: Optional[Objective], saturated_only: bool,
                mode: str, jobs: Optional[int]) -> list:
    _check_size(n)
    jobs = Config.JOBS if jobs is None else jobs
    prefixes, depth = _shard_prefixes(n, pred)
    tasks = [_ShardTask(n, pred, objective, prefix, depth, saturated_only, mode,
                        Config.WITNESS_TOLERANCE, Config.BATCH_SIZE) for prefix in prefixes]
    logger.info("n=%d, %s: %d shards on %d worker(s)", n, pred.describe(), len(tasks), jobs)
    if n == Config.MAX_ENUMERATION_N and jobs == 1:
        logger.warning("Enumerating n=%d on a single worker; --jobs spreads the shards", n)

    progress = dict(total=len(tasks), desc=f"n={n} {mode}", unit='shard', leave=False,
                    disable=None if Config.SHOW_PROGRESS else True)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(tqdm(executor.map(_run_shard, tasks), **progress))
    return [_run_shard(task) for task in tqdm(tasks, **progress)]


def _default_saturated(pred: Predicate, objective: Objective) -> bool:
    return objective.monotone and pred.closed_under_edge_addition and pred.clique_free_k is not None


def count(n: int, pred: Predicate = Predicate(), jobs: Optional[int] = None) -> int:
    """Number of labeled graphs on n vertices in the class"""
    return sum(_run_shards(n, pred, None, False, 'count', jobs))


def argmax(n: int, pred: Predicate, objective: Objective, jobs: Optional[int] = None,
           saturated_only: Optional[bool] = None) -> SearchResult:
    """
    Maximum of the objective over the class with every witness within
    WITNESS_TOLERANCE, one canonical form per isomorphism class.
    """
    if saturated_only is None:
        saturated_only = _default_saturated(pred, objective)
    tolerance = Config.WITNESS_TOLERANCE

    if objective.kind == 'p_radius':
        return _argmax_by_class(n, pred, objective, jobs, saturated_only)

    leader = _Leader(tolerance)
    examined = 0
    for shard_examined, best, candidates in _run_shards(n, pred, objective, saturated_only, 'dense', jobs):
        examined += shard_examined
        if shard_examined:
            leader.absorb(best, candidates)
    if not examined:
        raise EmptyClassError(f"No graph on {n} vertices is {pred.describe()}")

    classes: Dict[CanonicalForm, Rows] = {}
    for _, rows in leader.candidates:
        classes.setdefault(canonical_form(Graph(n, rows)), rows)
    if objective.kind == 'edge_count':
        witnesses = sorted(classes)
        return SearchResult(value=leader.best, witnesses=witnesses, examined=examined)

    solved = {form: solve_objective(Graph(n, rows), objective) for form, rows in classes.items()}
    value = max(solved.values())
    witnesses = sorted(form for form, v in solved.items() if v >= value - tolerance)
    logger.info("n=%d %s: max %s = %.12g, %d witness class(es) from %d graphs",
                n, pred.describe(), objective.label(), value, len(witnesses), examined)
    return SearchResult(value=value, witnesses=witnesses, examined=examined)


def _argmax_by_class(n: int, pred: Predicate, objective: Objective, jobs: Optional[int],
                     saturated_only: bool) -> SearchResult:
    """p-spectral objectives: one solve per isomorphism class, confirmed near the top"""
    classes: Dict[bytes, Rows] = {}
    examined = 0
    for shard_examined, shard_classes in _run_shards(n, pred, objective, saturated_only, 'classes', jobs):
        examined += shard_examined
        for data, rows in shard_classes.items():
            classes.setdefault(data, rows)
    if not examined:
        raise EmptyClassError(f"No graph on {n} vertices is {pred.describe()}")

    values = {}
    progress = dict(desc=f"n={n} {objective.label()}", unit='class', leave=False,
                    disable=None if Config.SHOW_PROGRESS else True)
    for data in tqdm(sorted(classes), **progress):
        values[data] = solve_objective(Graph(n, classes[data]), objective)
    top = max(values.values())
    for data, value in values.items():
        if value >= top - Config.NEAR_EXTREMAL_TOLERANCE:
            confirmed = solve_objective(Graph(n, classes[data]), objective, restarts=Config.P_CONFIRM_RESTARTS)
            values[data] = max(value, confirmed)
    value = max(values.values())
    witnesses = sorted(CanonicalForm(data) for data, v in values.items()
                       if v >= value - Config.WITNESS_TOLERANCE)
    logger.info("n=%d %s: max %s = %.12g over %d classes", n, pred.describe(), objective.label(),
                value, len(classes))
    return SearchResult(value=value, witnesses=witnesses, examined=examined)


def bound_sweep(n: int, pred: Predicate, check: Callable[[Graph, float], Tuple[float, bool]],
                objective: Objective = Objective.adjacency()) -> SweepResult:
    """
    Evaluate ``check(graph, value)`` on every graph of the class. The check
    returns how far the bound is exceeded (positive means violated) and
    whether the graph attains equality.
    """
    if objective.kind == 'p_radius':
        raise DomainError("Bound sweeps take batch-evaluated objectives, not the p-spectral radius")
    _check_size(n)
    tolerance = Config.WITNESS_TOLERANCE
    result = SweepResult()
    violations, equality = set(), set()

    def flush(batch: List[Rows]):
        values = dense_values(batch, n, objective)
        for rows, value in zip(batch, values):
            graph = Graph(n, rows)
            gap, attained = check(graph, float(value))
            result.worst_gap = max(result.worst_gap, gap)
            if gap > tolerance:
                violations.add(canonical_form(graph))
            elif attained:
                equality.add(canonical_form(graph))
        result.examined += len(batch)

    batch: List[Rows] = []
    for rows in _members(n, pred, (0,) * n, 0, False):
        batch.append(rows)
        if len(batch) == Config.BATCH_SIZE:
            flush(batch)
            batch = []
    if batch:
        flush(batch)
    if not result.examined:
        raise EmptyClassError(f"No graph on {n} vertices is {pred.describe()}")
    result.violations = sorted(violations)
    result.equality = sorted(equality)
    if violations:
        logger.warning("n=%d %s: %d bound violation class(es)", n, pred.describe(), len(violations))
    return result
