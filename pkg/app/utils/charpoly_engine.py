"""
Exact characteristic polynomials for the near-Turan family and for
complete multipartite graphs, plus real root isolation.

All arithmetic here is over Python integers or sympy Rationals; the only
floating point value ever produced is the final refined root.
"""

import logging
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy as sp

from app.errors import DomainError, UnsupportedSizeError
from app.models.graph import Graph
from app.models.part_sizes import PartSizes
from app.models.polynomial import X, Polynomial, product
from config import Config

logger = logging.getLogger(__name__)

CASE_KINDS = ('case2', 'case3', 'case4')


# The two quintics of the near-Turan family

def f_quintic(a: int, b: int) -> Polynomial:
    """Characteristic-type quintic whose largest root is the radius of SK_{a,b}"""
    if a < 1 or b < 1:
        raise DomainError(f"F_{{a,b}} needs a, b >= 1, got a={a}, b={b}")
    ab = a * b
    return Polynomial.of([-2 * ab + 2 * a + 2 * b - 2,
                          3 * ab - 2 * a - 2 * b + 1,
                          0,
                          -(ab + 1),
                          0,
                          1])


def r_quintic(b1: int, b2: int) -> Polynomial:
    if b1 < 1 or b2 < 1:
        raise DomainError(f"R_{{b1,b2}} needs b1, b2 >= 1, got b1={b1}, b2={b2}")
    return Polynomial.of([3 * (b1 - 1) * (b2 - 1),
                          2 * b1 + 2 * b2 - 3 * b1 * b2 - 1,
                          -(b1 * b2 + b1 + b2 - 3),
                          b1 * b2 + 1,
                          b1 + b2 + 1,
                          1])


def r_quintic_determinant(b1: int, b2: int) -> Polynomial:
    """R_{b1,b2} from its 5x5 determinant definition"""
    if b1 < 1 or b2 < 1:
        raise DomainError(f"R_{{b1,b2}} needs b1, b2 >= 1, got b1={b1}, b2={b2}")
    m = sp.Matrix([
        [X + 1, 1, 0, b1 - 1, 0],
        [1, X + 1, 0, 0, b2 - 1],
        [0, 0, X + 1, b1 - 1, b2 - 1],
        [1, 0, 1, X + b1 - 1, 0],
        [0, 1, 1, 0, X + b2 - 1],
    ])
    return Polynomial.from_sympy(sp.expand(m.det(method='berkowitz')))


def f_parts(parts: PartSizes) -> Polynomial:
    """
    Quotient polynomial of lemma42_graph(parts), built by the recurrence

        F_{b1,b2,b3}    = (x+b3) F_{b1,b2} - b3 R_{b1,b2}
        F_{b1,...,br}   = (x+br) F_{b1,...,b(r-1)} - br prod_{3<=i<r}(x+bi) R_{b1,b2}
    """
    b = parts.sizes
    b1, b2 = b[0], b[1]
    result = f_quintic(b1, b2)
    r_poly = r_quintic(b1, b2)
    for k in range(2, len(b)):
        between = product([Polynomial.linear(bi) for bi in b[2:k]])
        result = Polynomial.linear(b[k]) * result - b[k] * between * r_poly
    return result


def quotient_matrix(parts: PartSizes) -> sp.Matrix:
    """
    Equitable quotient of lemma42_graph(parts) over the cells
    (v, w, u, B1 - v, B2 - w, B3, ..., Br).
    """
    b = parts.sizes
    b1, b2, rest = b[0], b[1], list(b[2:])
    rows = [
        [0, 0, 1, 0, b2 - 1] + rest,
        [0, 0, 1, b1 - 1, 0] + rest,
        [1, 1, 0, 0, 0] + rest,
        [0, 1, 0, 0, b2 - 1] + rest,
        [1, 0, 0, b1 - 1, 0] + rest,
    ]
    for i in range(len(rest)):
        others = [0 if j == i else bj for j, bj in enumerate(rest)]
        rows.append([1, 1, 1, b1 - 1, b2 - 1] + others)
    return sp.Matrix(rows)


def f_parts_determinant(parts: PartSizes) -> Polynomial:
    matrix = quotient_matrix(parts)
    return Polynomial.from_sympy(matrix.charpoly(X).as_expr())


# Rebalancing differences

def _shifted(kind: str, parts: Tuple[int, int, int]) -> Tuple[int, int, int]:
    if kind not in CASE_KINDS:
        raise DomainError(f"Unknown difference kind {kind!r}, expected one of {', '.join(CASE_KINDS)}")
    if len(parts) != 3 or any(int(b) < 1 for b in parts):
        raise DomainError(f"Differences are taken at three positive parts, got {tuple(parts)}")
    b1, b2, b3 = (int(b) for b in parts)
    if kind == 'case2':
        shifted = (b1 + 1, b2 - 1, b3)
    elif kind == 'case3':
        shifted = (b1 + 1, b2, b3 - 1)
    else:
        shifted = (b1 - 1, b2, b3 + 1)
    if min(shifted) < 1:
        raise DomainError(f"The {kind} move empties a part of {tuple(parts)}")
    return shifted


def case_difference(kind: str, parts: Tuple[int, int, int]) -> Polynomial:
    """F at the moved parts minus F at the given parts, both from the recurrence"""
    shifted = _shifted(kind, parts)
    return f_parts(PartSizes(shifted)) - f_parts(PartSizes(tuple(parts)))


def printed_case_difference(kind: str, parts: Tuple[int, int, int]) -> Polynomial:
    """The same differences in their closed expanded (or factored) form"""
    _shifted(kind, parts)
    b1, b2, b3 = (int(b) for b in parts)
    if kind == 'case2':
        x = Polynomial.x()
        bracket = (x - 1) * Polynomial.linear(2) * Polynomial.linear(b3) + b3 * (x * x - 3)
        return (b1 - b2 + 1) * (x - 1) * bracket
    if kind == 'case3':
        return Polynomial.of([
            5 * b1 * b2 - 5 * b1 - 5 * b2 * b3 + 5 * b3,
            6 * b2 * b3 - 6 * b1 * b2 + 4 * b1 - 4 * b2 - 4 * b3 + 4,
            b2 * b3 - b1 * b2 - b1 + b2 + b3,
            2 * (b2 * (b1 - b3 + 1) + 1),
            b1 - b3 + 2,
        ])
    return Polynomial.of([
        -5 * b1 * b2 + 5 * b1 + 5 * b2 * b3 + 10 * b2 - 5 * b3 - 10,
        6 * b1 * b2 - 6 * b2 * b3 - 4 * b1 - 8 * b2 + 4 * b3 + 4,
        b1 * b2 - b2 * b3 + b1 - b3 - 3 * b2 - 2,
        2 * b2 * (b3 - b1 + 1) - 2,
        b3 - b1,
    ])


def case_sample_points(kind: str, parts: Tuple[int, int, int], upper: int = 20) -> List[int]:
    """
    Integer points at which a difference is claimed negative: strictly
    above the stated threshold and above the balanced lower bound on the
    radius, up to ``upper``.
    """
    b1, b2, b3 = (int(b) for b in parts)
    if kind == 'case2':
        threshold = 1
    elif kind == 'case3':
        threshold = 2 * (b1 - 2)
    else:
        threshold = max(2 * (b3 - 1), 0)
    start = max(threshold, 2 * min(b1, b2, b3), 1) + 1
    return list(range(start, upper + 1))


# Complete multipartite closed forms

def charpoly_multipartite_adjacency(parts: PartSizes) -> Polynomial:
    t = parts.sizes
    n, r = parts.total, parts.r
    factors = [Polynomial.linear(ti) for ti in t]
    full = product(factors)
    correction = Polynomial.constant(0)
    for i, ti in enumerate(t):
        correction = correction + ti * product(factors[:i] + factors[i + 1:])
    return Polynomial.x() ** (n - r) * (full - correction)


def charpoly_multipartite_signless(parts: PartSizes) -> Polynomial:
    t = parts.sizes
    n = parts.total
    repeated = product([Polynomial.linear(ti - n) ** (ti - 1) for ti in t])
    factors = [Polynomial.linear(2 * ti - n) for ti in t]
    correction = Polynomial.constant(0)
    for i, ti in enumerate(t):
        correction = correction + ti * product(factors[:i] + factors[i + 1:])
    return repeated * (product(factors) - correction)


# Exact determinants

def _charpoly_of(matrix: sp.Matrix) -> Polynomial:
    return Polynomial.from_sympy(matrix.charpoly(X).as_expr())


def charpoly_exact(graph: Graph) -> Polynomial:
    """det(xI - A(G)) over the integers (division-free Berkowitz)"""
    if graph.n > Config.MAX_EXACT_CHARPOLY_N:
        raise UnsupportedSizeError(
            f"Exact characteristic polynomials are limited to n <= {Config.MAX_EXACT_CHARPOLY_N}, got n={graph.n}")
    return _charpoly_of(sp.Matrix(graph.adjacency_matrix(dtype=int).tolist()))


def charpoly_signless_exact(graph: Graph) -> Polynomial:
    if graph.n > Config.MAX_EXACT_CHARPOLY_N:
        raise UnsupportedSizeError(
            f"Exact characteristic polynomials are limited to n <= {Config.MAX_EXACT_CHARPOLY_N}, got n={graph.n}")
    a = sp.Matrix(graph.adjacency_matrix(dtype=int).tolist())
    d = sp.diag(*graph.degrees())
    return _charpoly_of(d + a)


# Root isolation

def sturm_sequence(poly: Polynomial) -> List[sp.Poly]:
    if poly.degree < 1:
        raise DomainError(f"Sturm sequences need a nonconstant polynomial, got {poly}")
    return sp.sturm(poly.to_sympy())


def _sign_changes(chain: Sequence[sp.Poly], point) -> int:
    values = [v for v in (p.eval(point) for p in chain) if v != 0]
    return sum(1 for a, b in zip(values, values[1:]) if (a > 0) != (b > 0))


def cauchy_bound(poly: Polynomial) -> sp.Rational:
    """Every real root lies in (-B, B)"""
    lead = abs(poly.leading)
    return 1 + max(sp.Rational(abs(c), lead) for c in poly.coefficients[:-1])


def sturm_root_count(poly: Polynomial, lo=None, hi=None,
                     chain: Optional[Sequence[sp.Poly]] = None) -> int:
    """Number of distinct real roots in (lo, hi]; open ends default to the Cauchy bound"""
    chain = chain if chain is not None else sturm_sequence(poly)
    bound = cauchy_bound(poly)
    lo = -bound if lo is None else sp.Rational(lo)
    hi = bound if hi is None else sp.Rational(hi)
    if lo >= hi:
        return 0
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


def largest_root(poly: Polynomial, tolerance: float = None) -> float:
    tolerance = Config.ROOT_TOLERANCE if tolerance is None else tolerance
    chain = sturm_sequence(poly)
    bound = cauchy_bound(poly)
    lo, hi = -bound, bound
    if _sign_changes(chain, lo) - _sign_changes(chain, hi) == 0:
        raise DomainError(f"{poly} has no real root")

    # invariant: the largest root lies in (lo, hi]
    width = sp.Rational(tolerance)
    v_hi = _sign_changes(chain, hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _sign_changes(chain, mid) - v_hi > 0:
            lo = mid
        else:
            hi = mid
            v_hi = _sign_changes(chain, hi)
    if poly.evaluate_at(hi) == 0:
        return float(hi)
    return float((lo + hi) / 2)


# Sweeps

def lemma42_compositions(max_total: int, min_r: int = 2, max_r: int = 4) -> Iterator[PartSizes]:
    """
    Ordered (b1, b2) with b1 <= b2 followed by a non-decreasing tail, total
    at most ``max_total``; these cover the family up to isomorphism.
    """
    for r in range(min_r, max_r + 1):
        for b1 in range(1, max_total + 1):
            for b2 in range(b1, max_total + 1):
                budget = max_total - b1 - b2
                if budget < r - 2:
                    break
                if r == 2:
                    yield PartSizes((b1, b2))
                    continue
                for tail in combinations_with_replacement(range(1, budget + 1), r - 2):
                    if sum(tail) <= budget:
                        yield PartSizes((b1, b2) + tail)


def _move(sizes: List[int], take: int, give: int) -> PartSizes:
    moved = list(sizes)
    moved[take] -= 1
    moved[give] += 1
    return PartSizes(tuple(moved))


def rebalancing_moves(parts: PartSizes) -> List[Tuple[str, PartSizes]]:
    """
    Every balancing move applicable to ``parts``:
      case1  two tail parts differing by >= 2 move one step together
      case2  b1 and b2 differing by >= 2 move one step together
      case3  |b1 - b2| <= 1 and a tail part exceeds b1 (or b2) by >= 2
      case4  |b1 - b2| <= 1 and a tail part is smaller than b1 (or b2)
    """
    b = list(parts.sizes)
    moves = []
    for i in range(2, len(b)):
        for j in range(2, len(b)):
            if i < j and abs(b[i] - b[j]) >= 2:
                big, small = (i, j) if b[i] > b[j] else (j, i)
                moves.append(('case1', _move(b, big, small)))
    if abs(b[0] - b[1]) >= 2:
        big, small = (0, 1) if b[0] > b[1] else (1, 0)
        moves.append(('case2', _move(b, big, small)))
    for k in (0, 1):
        for i in range(2, len(b)):
            if abs(b[0] - b[1]) <= 1 and b[k] <= b[i] - 2:
                moves.append(('case3', _move(b, i, k)))
            if abs(b[0] - b[1]) <= 1 and b[i] <= b[k] - 1:
                moves.append(('case4', _move(b, k, i)))
    return moves


def check_rebalancing(max_total: int, max_r: int = 4, margin: float = 1e-9) -> List[Dict[str, Any]]:
    """Radius before and after each move; a non-increase is recorded, never raised"""
    rows = []
    radius_cache: Dict[Tuple[int, ...], float] = {}

    def radius(p: PartSizes) -> float:
        if p.sizes not in radius_cache:
            radius_cache[p.sizes] = largest_root(f_parts(p))
        return radius_cache[p.sizes]

    for parts in lemma42_compositions(max_total, min_r=2, max_r=max_r):
        for case, moved in rebalancing_moves(parts):
            before, after = radius(parts), radius(moved)
            increased = after > before + margin
            if not increased:
                logger.info("Move %s from %s to %s does not increase the radius (%.12g -> %.12g)",
                            case, parts, moved, before, after)
            rows.append({
                'case': case,
                'before': str(parts),
                'after': str(moved),
                'radius_before': before,
                'radius_after': after,
                'increased': increased,
            })
    return rows


def check_identities(max_value: int) -> List[Dict[str, Any]]:
    """Exact identity grid; each row is one parameter point"""
    if max_value < 2:
        raise DomainError(f"Identity checks need max >= 2, got {max_value}")
    rows = []

    def record(name: str, params, holds: bool):
        rows.append({'identity': name, 'params': str(tuple(params)), 'holds': bool(holds)})

    x = Polynomial.x()
    for s in range(1, max_value):
        for t in range(s, max_value):
            lhs = f_quintic(s + 2, t + 2) - f_quintic(s + 1, t + 3)
            rhs = -(t - s + 1) * (x - 1) ** 2 * Polynomial.linear(2)
            record('f_shift', (s, t), lhs == rhs)

    for b1 in range(1, max_value + 1):
        for b2 in range(2, max_value + 1):
            lhs = r_quintic(b1 + 1, b2 - 1) - r_quintic(b1, b2)
            rhs = -(b1 - b2 + 1) * (x - 1) * (x * x - 3)
            record('r_shift', (b1, b2), lhs == rhs)

    for b1 in range(1, max_value + 1):
        for b2 in range(1, max_value + 1):
            record('r_determinant', (b1, b2), r_quintic(b1, b2) == r_quintic_determinant(b1, b2))

    for kind in CASE_KINDS:
        for b1 in range(1, max_value + 1):
            for b2 in range(1, max_value + 1):
                for b3 in range(1, max_value + 1):
                    try:
                        computed = case_difference(kind, (b1, b2, b3))
                    except DomainError:
                        continue
                    record(f'{kind}_expansion', (b1, b2, b3),
                           computed == printed_case_difference(kind, (b1, b2, b3)))

    for parts in lemma42_compositions(max_value + 2, max_r=4):
        record('quotient_recurrence', parts.sizes, f_parts(parts) == f_parts_determinant(parts))
    return rows
