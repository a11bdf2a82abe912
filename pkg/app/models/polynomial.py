from dataclasses import dataclass
from typing import Any, Dict, Iterable, Sequence, Tuple, Union

import sympy as sp

X = sp.Symbol('x')

Number = Union[int, sp.Rational]


def _trim(coefficients: Iterable[int]) -> Tuple[int, ...]:
    values = [int(c) for c in coefficients]
    while len(values) > 1 and values[-1] == 0:
        values.pop()
    return tuple(values) if values else (0,)


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial with exact integer coefficients, ascending degree"""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', _trim(self.coefficients))

    @classmethod
    def of(cls, coefficients: Iterable[int]) -> 'Polynomial':
        return cls(tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> 'Polynomial':
        return cls((value,))

    @classmethod
    def x(cls) -> 'Polynomial':
        return cls((0, 1))

    @classmethod
    def linear(cls, c: int) -> 'Polynomial':
        """x + c"""
        return cls((c, 1))

    @classmethod
    def from_sympy(cls, expression) -> 'Polynomial':
        poly = sp.Poly(expression, X)
        coefficients = poly.all_coeffs()[::-1]
        if any(not sp.sympify(c).is_integer for c in coefficients):
            raise ValueError(f"Polynomial has non-integer coefficients: {expression}")
        return cls(tuple(int(c) for c in coefficients))

    def to_sympy(self) -> sp.Poly:
        return sp.Poly(list(reversed(self.coefficients)), X, domain='ZZ')

    def __repr__(self):
        return f'Polynomial({sp.sstr(self.to_sympy().as_expr())})'

    def __str__(self):
        return sp.sstr(self.to_sympy().as_expr())

    @property
    def degree(self) -> int:
        return -1 if self.is_zero else len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0,)

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    # Ring operations

    def _coerce(self, other) -> 'Polynomial':
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        size = max(len(a), len(b))
        return Polynomial(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                                for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> 'Polynomial':
        return (-self) + other

    def __mul__(self, other) -> 'Polynomial':
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coefficients, other.coefficients
        product = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    product[i + j] += ca * cb
        return Polynomial(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'Polynomial':
        result = Polynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate_at(self, value: Number) -> sp.Rational:
        """Exact value at a rational point (Horner)"""
        point = sp.Rational(value)
        result = sp.Integer(0)
        for c in reversed(self.coefficients):
            result = result * point + c
        return result

    def __call__(self, value: Number) -> sp.Rational:
        return self.evaluate_at(value)

    def compose_linear(self, c: int) -> 'Polynomial':
        """P(x + c)"""
        result = Polynomial.constant(0)
        shift = Polynomial.linear(c)
        for coefficient in reversed(self.coefficients):
            result = result * shift + coefficient
        return result

    def derivative(self) -> 'Polynomial':
        return Polynomial(tuple(i * c for i, c in enumerate(self.coefficients))[1:] or (0,))

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {'coefficients': list(self.coefficients), 'degree': self.degree}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Polynomial':
        return cls(tuple(data['coefficients']))


def product(factors: Sequence[Polynomial]) -> Polynomial:
    result = Polynomial.constant(1)
    for factor in factors:
        result = result * factor
    return result
