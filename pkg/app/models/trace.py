from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from app.models.graph import Graph
from app.models.part_sizes import PartSizes
from app.utils.graph6 import graph6_decode, graph6_encode


@dataclass(frozen=True)
class TraceStep:
    """One mutation: operation tag, the vertices it acted on, radius before and after"""
    tag: str
    vertices: Tuple[int, ...]
    radius_before: float
    radius_after: float

    @property
    def gain(self) -> float:
        return self.radius_after - self.radius_before

    def to_dict(self) -> Dict[str, Any]:
        return {
            'op': self.tag,
            'vertices': list(self.vertices),
            'lambda_before': float(self.radius_before),
            'lambda_after': float(self.radius_after),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TraceStep':
        return cls(tag=data['op'], vertices=tuple(data['vertices']),
                   radius_before=float(data['lambda_before']),
                   radius_after=float(data['lambda_after']))


@dataclass
class SymmetrizationTrace:
    initial_graph: Graph
    steps: List[TraceStep] = field(default_factory=list)
    final_graph: Optional[Graph] = None
    final_parts: Optional[PartSizes] = None
    repeated_graph: bool = False

    @property
    def completed(self) -> bool:
        return self.final_parts is not None

    def radii(self) -> List[float]:
        if not self.steps:
            return []
        return [self.steps[0].radius_before] + [step.radius_after for step in self.steps]

    def is_monotone(self, tolerance: float = 1e-9) -> bool:
        values = self.radii()
        return all(b >= a - tolerance for a, b in zip(values, values[1:]))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'initial': graph6_encode(self.initial_graph),
            'steps': [step.to_dict() for step in self.steps],
            'final': graph6_encode(self.final_graph) if self.final_graph is not None else None,
            'final_parts': list(self.final_parts.sizes) if self.final_parts is not None else None,
            'repeated_graph': self.repeated_graph,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SymmetrizationTrace':
        final = data.get('final')
        parts = data.get('final_parts')
        return cls(
            initial_graph=graph6_decode(data['initial']),
            steps=[TraceStep.from_dict(step) for step in data.get('steps', [])],
            final_graph=graph6_decode(final) if final else None,
            final_parts=PartSizes(tuple(parts)) if parts else None,
            repeated_graph=bool(data.get('repeated_graph', False)),
        )
