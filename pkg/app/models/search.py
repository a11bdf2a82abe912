from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from app.errors import DomainError
from app.models.graph import CanonicalForm, Graph
from app.utils import graph_engine


@dataclass(frozen=True)
class Predicate:
    """
    Conjunction of graph-class constraints:
      clique_free_k   omega(G) < k
      min_chromatic   chi(G) >= k
      max_chromatic   chi(G) <= k (the r-partite class)
      connected_only  G connected
    The empty predicate accepts every graph.
    """
    clique_free_k: Optional[int] = None
    min_chromatic: Optional[int] = None
    max_chromatic: Optional[int] = None
    connected_only: bool = False

    def __post_init__(self):
        if self.clique_free_k is not None and self.clique_free_k < 2:
            raise DomainError(f"clique_free_k must be at least 2, got {self.clique_free_k}")
        for name in ('min_chromatic', 'max_chromatic'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise DomainError(f"{name} must be at least 1, got {value}")

    @classmethod
    def clique_free(cls, r: int, non_partite: bool = False, connected: bool = False) -> 'Predicate':
        """K_{r+1}-free, optionally also not r-partite"""
        return cls(clique_free_k=r + 1, min_chromatic=r + 1 if non_partite else None,
                   connected_only=connected)

    @classmethod
    def partite(cls, r: int) -> 'Predicate':
        return cls(clique_free_k=r + 1, max_chromatic=r)

    @property
    def is_empty(self) -> bool:
        return (self.clique_free_k is None and self.min_chromatic is None
                and self.max_chromatic is None and not self.connected_only)

    @property
    def closed_under_edge_addition(self) -> bool:
        """Apart from the clique bound, adding an edge never leaves the class"""
        return self.max_chromatic is None

    def __and__(self, other: 'Predicate') -> 'Predicate':
        def tighter(a, b, pick):
            if a is None:
                return b
            if b is None:
                return a
            return pick(a, b)

        return Predicate(
            clique_free_k=tighter(self.clique_free_k, other.clique_free_k, min),
            min_chromatic=tighter(self.min_chromatic, other.min_chromatic, max),
            max_chromatic=tighter(self.max_chromatic, other.max_chromatic, min),
            connected_only=self.connected_only or other.connected_only,
        )

    def accepts(self, graph: Graph) -> bool:
        if self.clique_free_k is not None and graph_engine.has_clique(graph, self.clique_free_k):
            return False
        if self.connected_only and not graph_engine.is_connected(graph):
            return False
        if self.max_chromatic is not None and not graph_engine.is_r_partite(graph, self.max_chromatic):
            return False
        if self.min_chromatic is not None and self.min_chromatic > 1:
            if graph_engine.is_r_partite(graph, self.min_chromatic - 1):
                return False
        return True

    def describe(self) -> str:
        terms = []
        if self.clique_free_k is not None:
            terms.append(f"K_{self.clique_free_k}-free")
        if self.min_chromatic is not None:
            terms.append(f"chi>={self.min_chromatic}")
        if self.max_chromatic is not None:
            terms.append(f"chi<={self.max_chromatic}")
        if self.connected_only:
            terms.append("connected")
        return ', '.join(terms) or 'all graphs'

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Predicate':
        return cls(**{key: data.get(key) for key in ('clique_free_k', 'min_chromatic', 'max_chromatic')},
                   connected_only=bool(data.get('connected_only', False)))


@dataclass(frozen=True)
class Objective:
    kind: str
    alpha: Optional[float] = None
    p: Optional[float] = None

    KINDS = ('edge_count', 'adjacency_radius', 'signless_radius', 'a_alpha_radius', 'p_radius')

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise DomainError(f"Unknown objective {self.kind!r}, expected one of {', '.join(self.KINDS)}")
        if self.kind == 'a_alpha_radius' and (self.alpha is None or not 0 <= self.alpha <= 1):
            raise DomainError(f"A_alpha objective needs alpha in [0, 1], got {self.alpha}")
        if self.kind == 'p_radius' and (self.p is None or not self.p > 1):
            raise DomainError(f"p-spectral objective needs p > 1, got {self.p}")

    @classmethod
    def edges(cls) -> 'Objective':
        return cls('edge_count')

    @classmethod
    def adjacency(cls) -> 'Objective':
        return cls('adjacency_radius')

    @classmethod
    def signless(cls) -> 'Objective':
        return cls('signless_radius')

    @classmethod
    def a_alpha(cls, alpha: float) -> 'Objective':
        return cls('a_alpha_radius', alpha=alpha)

    @classmethod
    def p_spectral(cls, p: float) -> 'Objective':
        return cls('p_radius', p=p)

    @property
    def is_dense(self) -> bool:
        """Evaluated in batches by a symmetric eigensolver"""
        return self.kind in ('adjacency_radius', 'signless_radius', 'a_alpha_radius')

    @property
    def monotone(self) -> bool:
        """
        Increases when an edge is added inside the component that attains
        the value. A_1 = D only sees the maximum degree, so it is excluded.
        """
        return not (self.kind == 'a_alpha_radius' and self.alpha >= 1)

    def label(self) -> str:
        if self.kind == 'a_alpha_radius':
            return f"a_alpha({self.alpha:g})"
        if self.kind == 'p_radius':
            return f"p_radius({self.p:g})"
        return self.kind

    def to_dict(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'alpha': self.alpha, 'p': self.p}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Objective':
        return cls(kind=data['kind'], alpha=data.get('alpha'), p=data.get('p'))


@dataclass
class SearchResult:
    """Maximum objective value over a class and its witnesses, one per isomorphism class"""
    value: float
    witnesses: List[CanonicalForm] = field(default_factory=list)
    examined: int = 0

    @property
    def unique(self) -> bool:
        return len(self.witnesses) == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'witnesses': [form.text for form in self.witnesses],
            'examined': self.examined,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SearchResult':
        return cls(value=float(data['value']),
                   witnesses=[CanonicalForm(text.encode('ascii')) for text in data.get('witnesses', [])],
                   examined=int(data.get('examined', 0)))


@dataclass
class SweepResult:
    """Outcome of checking a bound on every graph of a class"""
    examined: int = 0
    worst_gap: float = float('-inf')
    violations: List[CanonicalForm] = field(default_factory=list)
    equality: List[CanonicalForm] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'examined': self.examined,
            'worst_gap': self.worst_gap,
            'violations': [form.text for form in self.violations],
            'equality': [form.text for form in self.equality],
        }
