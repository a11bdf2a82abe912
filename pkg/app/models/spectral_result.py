from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import numpy as np

from app.errors import DomainError
from config import Config


@dataclass
class SpectralResult:
    """Radius value, nonnegative unit optimal vector and solver diagnostics"""
    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': float(self.value),
            'vector': [float(x) for x in self.vector],
            'residual': float(self.residual),
            'iterations': int(self.iterations),
            'diagnostics': dict(self.diagnostics),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SpectralResult':
        return cls(
            value=float(data['value']),
            vector=np.asarray(data['vector'], dtype=float),
            residual=float(data['residual']),
            iterations=int(data['iterations']),
            diagnostics=dict(data.get('diagnostics', {})),
        )


@dataclass(frozen=True)
class PSpectralOptions:
    """Settings for the p-spectral fixed-point solver"""
    p: float
    restarts: int = field(default_factory=lambda: Config.P_RESTARTS)
    max_iterations: int = field(default_factory=lambda: Config.P_MAX_ITERATIONS)
    tolerance: float = field(default_factory=lambda: Config.P_TOLERANCE)
    seed: Optional[int] = field(default_factory=lambda: Config.RANDOM_SEED)

    def __post_init__(self):
        if not self.p > 1:
            raise DomainError(f"The p-spectral solver needs p > 1, got p={self.p}")
        if self.restarts < 0:
            raise DomainError(f"Restart count must be nonnegative, got {self.restarts}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be positive, got {self.max_iterations}")
        if not self.tolerance > 0:
            raise DomainError(f"Tolerance must be positive, got {self.tolerance}")

    @property
    def heuristic_global(self) -> bool:
        """Below p = 2 the objective is not concave and restarts are the only safeguard"""
        return self.p < 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'restarts': self.restarts,
            'max_iterations': self.max_iterations,
            'tolerance': self.tolerance,
            'seed': self.seed,
        }
