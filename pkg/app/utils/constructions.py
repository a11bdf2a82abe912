"""
Builders for the named graph families.

Labeling convention: multipartite blocks occupy consecutive index ranges in
the order the parts are given; the special vertices are documented on each
builder.
"""

from typing import List, Sequence

from app.errors import ConstructionError, DomainError
from app.models.graph import MAX_VERTICES, Graph
from app.models.part_sizes import PartSizes


def _blocks(sizes: Sequence[int]) -> List[List[int]]:
    blocks, start = [], 0
    for size in sizes:
        blocks.append(list(range(start, start + size)))
        start += size
    return blocks


def _join_blocks(rows: List[int], blocks: List[List[int]]):
    for a in range(len(blocks)):
        for b in range(a + 1, len(blocks)):
            for i in blocks[a]:
                for j in blocks[b]:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i


def _add_edge(rows: List[int], i: int, j: int):
    rows[i] |= 1 << j
    rows[j] |= 1 << i


def _remove_edge(rows: List[int], i: int, j: int):
    rows[i] &= ~(1 << j)
    rows[j] &= ~(1 << i)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"A cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_multipartite(parts: PartSizes) -> Graph:
    """K_{b_1,...,b_r} with blocks in non-decreasing size order"""
    sizes = sorted(parts.sizes)
    n = sum(sizes)
    rows = [0] * n
    _join_blocks(rows, _blocks(sizes))
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(PartSizes((a, b)))


def turan_parts(n: int, r: int) -> PartSizes:
    if r < 2 or r > n:
        raise DomainError(f"Turan part sizes need 2 <= r <= n, got r={r}, n={n}")
    q, s = divmod(n, r)
    return PartSizes.of([q] * (r - s) + [q + 1] * s)


def turan_graph(n: int, r: int) -> Graph:
    """T_r(n): n mod r parts of size ceil(n/r), the rest floor(n/r)"""
    if r < 1 or r > n:
        raise DomainError(f"Turan graph needs 1 <= r <= n, got r={r}, n={n}")
    if r == 1:
        return empty_graph(n)
    return complete_multipartite(turan_parts(n, r))


def turan_edge_count(n: int, r: int) -> int:
    if r == 1:
        return 0
    return turan_parts(n, r).edge_count()


def sk_graph(a: int, b: int) -> Graph:
    """
    SK_{a,b}: K_{a,b} with the edge between vertex 0 (first of the a-side)
    and vertex a (first of the b-side) subdivided by the new last vertex a+b.
    """
    if a < 1 or b < 1:
        raise DomainError(f"SK_{{a,b}} needs a, b >= 1, got a={a}, b={b}")
    n = a + b + 1
    if n > MAX_VERTICES:
        raise ConstructionError(f"SK_{{{a},{b}}} has {n} vertices, limit is {MAX_VERTICES}")
    rows = [0] * n
    _join_blocks(rows, _blocks([a, b]))
    _remove_edge(rows, 0, a)
    _add_edge(rows, 0, n - 1)
    _add_edge(rows, a, n - 1)
    return Graph(n, tuple(rows))


def lemma42_graph(parts: PartSizes) -> Graph:
    """
    K_{b_1,...,b_r} (blocks in the given order, b_3.. sorted) plus a vertex u:
    v is the first vertex of block 1, w the first vertex of block 2, u the
    last vertex. Edge vw is removed; u is joined to v, w and every vertex
    of blocks 3..r.
    """
    sizes = list(parts.sizes[:2]) + sorted(parts.sizes[2:])
    n = sum(sizes) + 1
    if n > MAX_VERTICES:
        raise ConstructionError(f"Construction needs {n} vertices, limit is {MAX_VERTICES}")
    blocks = _blocks(sizes)
    rows = [0] * n
    _join_blocks(rows, blocks)
    u, v, w = n - 1, blocks[0][0], blocks[1][0]
    _remove_edge(rows, v, w)
    _add_edge(rows, u, v)
    _add_edge(rows, u, w)
    for block in blocks[2:]:
        for t in block:
            _add_edge(rows, u, t)
    return Graph(n, tuple(rows))


def y_parts(n: int, r: int) -> PartSizes:
    """Part sizes of T_r(n-1), smallest first, so v and w sit in the two smallest parts"""
    if r < 2:
        raise DomainError(f"Y_r(n) needs r >= 2, got {r}")
    if n < 2 * r + 1:
        raise DomainError(f"Y_r(n) is defined for n >= 2r+1, got n={n}, r={r}")
    return turan_parts(n - 1, r).normalized()


def y_graph(n: int, r: int) -> Graph:
    return lemma42_graph(y_parts(n, r))


def brouwer_edge_count(n: int, r: int) -> int:
    return turan_edge_count(n, r) - n // r + 1


def erdos_family_graph(n: int, x1: int) -> Graph:
    """
    X = 0..floor(n/2)-1 split as X_1 = first x1 vertices, X_2 = the rest;
    Y = the remaining vertices, u = n-2 and v = n-1 adjacent.
    X is complete to Y minus {u, v}; u is joined to X_1 and v to X_2.
    """
    if n < 5:
        raise DomainError(f"The family needs n >= 5, got {n}")
    half = n // 2
    if not 0 <= x1 <= half:
        raise DomainError(f"Split size must be in [0, {half}], got {x1}")
    rows = [0] * n
    u, v = n - 2, n - 1
    for x in range(half):
        for y in range(half, n - 2):
            _add_edge(rows, x, y)
        _add_edge(rows, x, u if x < x1 else v)
    _add_edge(rows, u, v)
    return Graph(n, tuple(rows))


def erdos_edge_count(n: int) -> int:
    return (n - 1) ** 2 // 4 + 1


def split_graph(n: int, k: int) -> Graph:
    """S_{n,k}: clique on 0..k-1 joined to an independent set on k..n-1"""
    if not 1 <= k < n:
        raise DomainError(f"S_{{n,k}} needs 1 <= k < n, got n={n}, k={k}")
    rows = [0] * n
    for i in range(k):
        for j in range(i + 1, n):
            _add_edge(rows, i, j)
    return Graph(n, tuple(rows))
