"""
Exact combinatorial routines on bitrow graphs: clique number, chromatic
number, partiteness, connectivity and canonical labeling.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from app.errors import DomainError, PreconditionError, UnsupportedSizeError
from app.models.graph import CanonicalForm, Graph
from app.models.part_sizes import PartSizes
from app.utils.graph6 import graph6_decode, pack_bits
from config import Config

logger = logging.getLogger(__name__)


def build(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """Graph on n vertices with exactly the given edges"""
    return Graph.from_edges(n, edges)


# Cliques

def _color_classes(rows: Sequence[int], candidates: int) -> Tuple[List[int], List[int]]:
    """Greedy colouring of the candidate set; vertices listed class by class"""
    order, bounds = [], []
    color = 0
    uncolored = candidates
    while uncolored:
        color += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            available &= ~rows[v] & ~low
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _expand(rows: Sequence[int], size: int, candidates: int, best: List[int], target: int) -> bool:
    order, bounds = _color_classes(rows, candidates)
    for index in range(len(order) - 1, -1, -1):
        if size + bounds[index] <= best[0]:
            return False
        v = order[index]
        inside = candidates & rows[v]
        if inside:
            if _expand(rows, size + 1, inside, best, target):
                return True
        elif size + 1 > best[0]:
            best[0] = size + 1
            if target and best[0] >= target:
                return True
        candidates &= ~(1 << v)
    return False


def contains_clique(rows: Sequence[int], candidates: int, k: int) -> bool:
    """True iff the vertices of the candidate bitset span a clique of size k"""
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    if k == 1:
        return True
    best = [k - 1]
    return _expand(rows, 0, candidates, best, k)


def clique_number(graph: Graph) -> int:
    best = [0]
    _expand(graph.rows, 0, (1 << graph.n) - 1, best, 0)
    return best[0]


def has_clique(graph: Graph, k: int) -> bool:
    if k < 1:
        raise DomainError(f"Clique size must be at least 1, got {k}")
    return contains_clique(graph.rows, (1 << graph.n) - 1, k)


# Colouring

def _colorable(rows: Sequence[int], n: int, k: int) -> bool:
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    classes = [0] * k

    def assign(position: int, used: int) -> bool:
        if position == n:
            return True
        v = order[position]
        # a fresh colour is interchangeable with any other unused one
        for color in range(min(used + 1, k)):
            if not rows[v] & classes[color]:
                classes[color] |= 1 << v
                if assign(position + 1, max(used, color + 1)):
                    return True
                classes[color] &= ~(1 << v)
        return False

    return assign(0, 0)


def is_r_partite(graph: Graph, r: int) -> bool:
    if r < 1:
        raise DomainError(f"Number of parts must be at least 1, got {r}")
    if r >= graph.n:
        return True
    return _colorable(graph.rows, graph.n, r)


def chromatic_number(graph: Graph) -> int:
    if graph.edge_count == 0:
        return 1
    k = clique_number(graph)
    while not _colorable(graph.rows, graph.n, k):
        k += 1
    return k


# Connectivity

def components(graph: Graph) -> List[List[int]]:
    """Connected components, each sorted, ordered by smallest vertex"""
    seen = 0
    result = []
    for start in range(graph.n):
        if seen >> start & 1:
            continue
        reached = 1 << start
        frontier = reached
        while frontier:
            expanded = 0
            rest = frontier
            while rest:
                low = rest & -rest
                expanded |= graph.rows[low.bit_length() - 1]
                rest ^= low
            frontier = expanded & ~reached
            reached |= frontier
        seen |= reached
        result.append([v for v in range(graph.n) if reached >> v & 1])
    return result


def is_connected(graph: Graph) -> bool:
    return len(components(graph)) == 1


# Structure recognition

def complete_multipartite_parts(graph: Graph) -> Optional[PartSizes]:
    """
    Part sizes if the graph is complete multipartite with at least two parts.
    Non-adjacency must be an equivalence relation: every non-adjacent pair
    has identical neighbourhoods.
    """
    remaining = (1 << graph.n) - 1
    sizes = []
    full = (1 << graph.n) - 1
    while remaining:
        low = remaining & -remaining
        v = low.bit_length() - 1
        part = full & ~graph.rows[v]
        for u in range(graph.n):
            if part >> u & 1 and graph.rows[u] != graph.rows[v]:
                return None
        sizes.append(part.bit_count())
        remaining &= ~part
    if len(sizes) < 2:
        return None
    return PartSizes(tuple(sizes))


def is_complete_bipartite_plus_isolated(graph: Graph) -> bool:
    active = [v for v in range(graph.n) if graph.rows[v]]
    if not active:
        return False
    parts = complete_multipartite_parts(graph.induced(active))
    return parts is not None and parts.r == 2


# Canonical labeling

def _refined_colors(graph: Graph) -> List[int]:
    """Colour refinement started from degrees; colours are ranks of invariant signatures"""
    colors = graph.degrees()
    classes = len(set(colors))
    neighbors = [graph.neighbors(v) for v in range(graph.n)]
    while True:
        signatures = [(colors[v], tuple(sorted(colors[u] for u in neighbors[v])))
                      for v in range(graph.n)]
        palette = {signature: rank for rank, signature in enumerate(sorted(set(signatures)))}
        refined = [palette[signature] for signature in signatures]
        if len(palette) == classes:
            return refined
        colors, classes = refined, len(palette)


def canonical_form(graph: Graph) -> CanonicalForm:
    """
    Lexicographically smallest graph6 bit string over all labelings that
    list vertices in refined colour order. Branch and bound on prefixes:
    placing the k-th vertex fixes the next k bits of the string.
    """
    n = graph.n
    if n > Config.MAX_CANONICAL_N:
        raise UnsupportedSizeError(f"Canonical form is limited to n <= {Config.MAX_CANONICAL_N}, got {n}")

    colors = _refined_colors(graph)
    slots = sorted(colors)
    rows = graph.rows
    perm: List[int] = []
    best: List[Optional[List[int]]] = [None]

    def search(prefix: List[int], used: int):
        k = len(perm)
        if k == n:
            if best[0] is None or prefix < best[0]:
                best[0] = prefix
            return
        for v in range(n):
            if used >> v & 1 or colors[v] != slots[k]:
                continue
            candidate = prefix + [rows[perm[i]] >> v & 1 for i in range(k)]
            if best[0] is not None and candidate > best[0][:len(candidate)]:
                continue
            perm.append(v)
            search(candidate, used | 1 << v)
            perm.pop()

    search([], 0)
    return CanonicalForm(pack_bits(n, best[0]))


def canonical_graph(form: CanonicalForm) -> Graph:
    return graph6_decode(form.data)


def require_non_adjacent(graph: Graph, u: int, v: int):
    if u == v:
        raise PreconditionError(f"Vertices must differ, got u = v = {u}")
    if not (0 <= u < graph.n and 0 <= v < graph.n):
        raise PreconditionError(f"Vertices ({u}, {v}) outside [0, {graph.n})")
    if graph.has_edge(u, v):
        raise PreconditionError(f"Vertices {u} and {v} are adjacent")
