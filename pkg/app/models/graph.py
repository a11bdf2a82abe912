from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple

import numpy as np

from app.errors import ConstructionError
from config import Config

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.
    rows[i] has bit j set iff {i, j} is an edge.
    """
    n: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ConstructionError(f"Vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.rows) != self.n:
            raise ConstructionError(f"Expected {self.n} adjacency rows, got {len(self.rows)}")
        if Config.DEBUG_CHECKS:
            self.validate()

    def __repr__(self):
        return f'<Graph n={self.n} m={self.edge_count}>'

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        if not 1 <= n <= MAX_VERTICES:
            raise ConstructionError(f"Vertex count must be in [1, {MAX_VERTICES}], got {n}")
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise ConstructionError(f"Edge ({i}, {j}) has an endpoint outside [0, {n})")
            if i == j:
                raise ConstructionError(f"Loop at vertex {i} is not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, (0,) * n)

    def validate(self):
        """Check symmetry and irreflexivity of the bitrows"""
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ConstructionError(f"Row {i} references vertices beyond n={self.n}")
            if row >> i & 1:
                raise ConstructionError(f"Row {i} has a loop")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ConstructionError(f"Adjacency is not symmetric at ({i}, {j})")
                rest ^= low

    # Basic queries

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> List[int]:
        row = self.rows[v]
        return [j for j in range(self.n) if row >> j & 1]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)
                if self.rows[i] >> j & 1]

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            matrix[i, j] = 1
            matrix[j, i] = 1
        return matrix

    # Derived graphs

    def induced(self, vertices: Sequence[int]) -> 'Graph':
        """Induced subgraph, vertices relabeled 0..k-1 in the given order"""
        index = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u, k in index.items():
                if self.rows[v] >> u & 1:
                    row |= 1 << k
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def delete_vertex(self, u: int) -> 'Graph':
        return self.induced([v for v in range(self.n) if v != u])

    def relabel(self, perm: Sequence[int]) -> 'Graph':
        """Vertex v of self becomes vertex perm[v] of the result"""
        rows = [0] * self.n
        for i, j in self.edges():
            rows[perm[i]] |= 1 << perm[j]
            rows[perm[j]] |= 1 << perm[i]
        return Graph(self.n, tuple(rows))

    def complement(self) -> 'Graph':
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.rows)))

    def with_rows(self, rows: Sequence[int]) -> 'Graph':
        return Graph(self.n, tuple(rows))

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {'n': self.n, 'edges': [list(edge) for edge in self.edges()]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Graph':
        return cls.from_edges(int(data['n']), [tuple(edge) for edge in data.get('edges', [])])


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 bytes of the canonically relabeled graph; equal iff isomorphic"""
    data: bytes

    @property
    def text(self) -> str:
        return self.data.decode('ascii')

    def __str__(self):
        return self.text
