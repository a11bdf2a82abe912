"""
Exception hierarchy for the spectral toolkit.

Every error carries the process exit code the CLI uses for it.
"""

from typing import Any, Dict, Optional


class SpectralToolkitError(ValueError):
    """Base class for all toolkit errors"""
    exit_code = 2

    def to_dict(self) -> Dict[str, Any]:
        return {'error': type(self).__name__, 'message': str(self)}


class ConstructionError(SpectralToolkitError):
    """Invalid input to a graph builder"""


class Graph6ParseError(SpectralToolkitError):
    """Malformed graph6 text"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.reason = message
        self.offset = offset

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result['offset'] = self.offset
        return result


class DomainError(SpectralToolkitError):
    """Parameter outside its documented domain"""


class UnsupportedSizeError(SpectralToolkitError):
    """Graph too large for an exact or exhaustive routine"""


class PreconditionError(SpectralToolkitError):
    """Operation called outside its precondition"""


class CatalogError(SpectralToolkitError):
    """Unknown theorem id"""


class EmptyClassError(SpectralToolkitError):
    """No graph satisfies the predicate"""
    exit_code = 1


class ConvergenceError(SpectralToolkitError):
    """Iterative solver did not reach its tolerance"""
    exit_code = 3

    def __init__(self, message: str, residual: float, iterations: int = 0,
                 diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.residual = residual
        self.iterations = iterations
        self.diagnostics = diagnostics or {}

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result.update({
            'residual': self.residual,
            'iterations': self.iterations,
            'diagnostics': self.diagnostics,
        })
        return result


class BudgetError(SpectralToolkitError):
    """Symmetrization step budget exhausted"""
    exit_code = 3

    def __init__(self, message: str, trace):
        super().__init__(message)
        self.trace = trace

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result['trace'] = self.trace.to_dict()
        return result
