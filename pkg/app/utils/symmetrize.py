"""
Zykov symmetrization driven by the Perron vector, and Erdos degree
majorization with spectral weights.

Both operations never lower the adjacency radius and never raise the clique
or chromatic number; iterating either one ends at a complete multipartite
graph.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.errors import BudgetError, DomainError, PreconditionError
from app.models.graph import Graph
from app.models.trace import SymmetrizationTrace, TraceStep
from app.utils.graph_engine import complete_multipartite_parts, is_connected, require_non_adjacent
from app.utils.spectral_engine import adjacency_radius
from config import Config

logger = logging.getLogger(__name__)

METHODS = ('zykov', 'erdos')


def zykov_shift(graph: Graph, u: int, v: int) -> Graph:
    """Z_{u,v}(G): u loses its edges and becomes a twin of v"""
    require_non_adjacent(graph, u, v)
    rows = list(graph.rows)
    for t in range(graph.n):
        rows[t] &= ~(1 << u)
    target = rows[v]
    rows[u] = target
    rest = target
    while rest:
        low = rest & -rest
        rows[low.bit_length() - 1] |= 1 << u
        rest ^= low
    return graph.with_rows(rows)


def _weights(graph: Graph, x: Sequence[float], mask: Optional[int] = None) -> np.ndarray:
    """s(v, x) for every v, counting only neighbours inside ``mask``"""
    vector = np.asarray(x, dtype=float)
    sums = np.zeros(graph.n)
    for v in range(graph.n):
        row = graph.rows[v] if mask is None else graph.rows[v] & mask
        while row:
            low = row & -row
            sums[v] += vector[low.bit_length() - 1]
            row ^= low
    return sums


def spectral_zykov_step(graph: Graph, x: Sequence[float],
                        tolerance: float = None) -> Optional[Tuple[Graph, Tuple[int, int], str]]:
    """
    First non-adjacent pair (i, j), i < j, in lexicographic order whose
    weights differ: the lighter vertex becomes a twin of the heavier one.
    Pairs with equal weights but different neighbourhoods make j a twin of
    i. Returns None when every non-adjacent pair already consists of twins.
    """
    tolerance = Config.S_TOLERANCE if tolerance is None else tolerance
    s = _weights(graph, x)
    for i in range(graph.n):
        for j in range(i + 1, graph.n):
            if graph.has_edge(i, j):
                continue
            if abs(s[i] - s[j]) > tolerance:
                light, heavy = (i, j) if s[i] < s[j] else (j, i)
                return zykov_shift(graph, light, heavy), (light, heavy), 'shift'
            if graph.rows[i] != graph.rows[j]:
                return zykov_shift(graph, j, i), (j, i), 'tie'
    return None


def symmetrize_to_multipartite(graph: Graph, max_steps: Optional[int] = None) -> SymmetrizationTrace:
    if not is_connected(graph):
        raise PreconditionError("Symmetrization needs a connected graph")
    max_steps = graph.n * graph.n if max_steps is None else max_steps
    if max_steps < 1:
        raise DomainError(f"max_steps must be positive, got {max_steps}")

    trace = SymmetrizationTrace(initial_graph=graph)
    current = graph
    solved = adjacency_radius(current)
    seen = {current.rows}
    for _ in range(max_steps):
        outcome = spectral_zykov_step(current, solved.vector)
        if outcome is None:
            trace.final_graph = current
            trace.final_parts = complete_multipartite_parts(current)
            logger.info("Symmetrization finished after %d steps at parts %s",
                        len(trace.steps), trace.final_parts)
            return trace
        current, pair, tag = outcome
        after = adjacency_radius(current)
        trace.steps.append(TraceStep(tag, pair, solved.value, after.value))
        logger.debug("step %d: %s %s, radius %.12g -> %.12g",
                     len(trace.steps), tag, pair, solved.value, after.value)
        if current.rows in seen and not trace.repeated_graph:
            trace.repeated_graph = True
            logger.warning("Symmetrization revisited a graph after %d steps", len(trace.steps))
        seen.add(current.rows)
        solved = after

    if spectral_zykov_step(current, solved.vector) is None:
        trace.final_graph = current
        trace.final_parts = complete_multipartite_parts(current)
        return trace
    trace.final_graph = current
    raise BudgetError(f"Symmetrization did not finish within {max_steps} steps", trace)


# Degree majorization

def erdos_majorization_step(graph: Graph, x: Sequence[float], active: Sequence[int]) -> Tuple[Graph, int, List[int]]:
    """
    Inside the active set S: pick v with the largest weight counted within
    S (lowest index on ties), make S minus N_S(v) independent and join it
    completely to N_S(v). Edges leaving S are untouched.

    Returns the new graph, the pivot and N_S(v) (the next active set).
    """
    if not active:
        raise DomainError("The active set must be nonempty")
    mask = 0
    for v in active:
        mask |= 1 << v
    s = _weights(graph, x, mask)
    pivot = min(active, key=lambda v: (-s[v], v))
    inner = graph.rows[pivot] & mask
    outer = mask & ~inner

    rows = list(graph.rows)
    for v in range(graph.n):
        if outer >> v & 1:
            rows[v] = (rows[v] & ~mask) | inner
        elif inner >> v & 1:
            rows[v] |= outer
    next_active = [v for v in active if inner >> v & 1]
    return graph.with_rows(rows), pivot, next_active


def erdos_majorization(graph: Graph, x: Sequence[float] = None) -> Tuple[Graph, List[int]]:
    """
    Full descent with a fixed weight vector (the Perron vector by
    default). Returns the complete multipartite result and the sizes of
    the independent sets split off, in order.
    """
    x = adjacency_radius(graph).vector if x is None else x
    active = list(range(graph.n))
    current = graph
    sizes = []
    while active:
        current, pivot, next_active = erdos_majorization_step(current, x, active)
        sizes.append(len(active) - len(next_active))
        logger.debug("pivot %d splits off %d vertices", pivot, sizes[-1])
        active = next_active
    return current, sizes


def erdos_trace(graph: Graph) -> SymmetrizationTrace:
    """The majorization pipeline recorded step by step, for the CLI"""
    if not is_connected(graph):
        raise PreconditionError("Majorization needs a connected graph")
    solved = adjacency_radius(graph)
    trace = SymmetrizationTrace(initial_graph=graph)
    active = list(range(graph.n))
    current, before = graph, solved.value
    while active:
        current, pivot, active = erdos_majorization_step(current, solved.vector, active)
        after = adjacency_radius(current).value
        trace.steps.append(TraceStep('majorize', (pivot,), before, after))
        before = after
    trace.final_graph = current
    trace.final_parts = complete_multipartite_parts(current)
    return trace


def symmetrize(graph: Graph, method: str = 'zykov', max_steps: Optional[int] = None) -> SymmetrizationTrace:
    if method == 'zykov':
        return symmetrize_to_multipartite(graph, max_steps)
    if method == 'erdos':
        return erdos_trace(graph)
    raise DomainError(f"Unknown symmetrization method {method!r}, expected one of {', '.join(METHODS)}")
