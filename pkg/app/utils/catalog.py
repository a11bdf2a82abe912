"""
Theorem catalog: each entry checks one extremal statement on every
instance of a small parameter range and returns a VerificationReport.

Rows come in three shapes: an argmax over an enumerated class compared with
the predicted construction, a bound checked on every graph of a class, or
a sweep over a construction family that needs no enumeration.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.errors import CatalogError, DomainError, EmptyClassError
from app.models.graph import Graph
from app.models.part_sizes import PartSizes
from app.models.report import EMPTY_CLASS, OUT_OF_DOMAIN, ReportRow, VerificationReport
from app.models.search import Objective, Predicate, SearchResult
from app.models.spectral_result import PSpectralOptions
from app.utils import constructions
from app.utils.charpoly_engine import (charpoly_multipartite_adjacency, f_parts, f_quintic, largest_root,
                                       lemma42_compositions)
from app.utils.extremal_search import argmax, bound_sweep
from app.utils.graph6 import graph6_encode
from app.utils.graph_engine import (canonical_form, canonical_graph, complete_multipartite_parts,
                                    is_complete_bipartite_plus_isolated)
from app.utils.spectral_engine import (a_alpha_radius, adjacency_radius, nikiforov_edge_bound, nosal_bound,
                                       p_spectral_radius, p_turan_bound, signless_laplacian_radius,
                                       turan_radius_bounds, wilf_bound)
from config import Config

logger = logging.getLogger(__name__)

P_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    summary: str
    runner: Callable[..., Optional[ReportRow]]
    n_values: Tuple[int, ...]
    r_values: Tuple[int, ...] = (2,)
    uses_r: bool = True
    param: Optional[str] = None
    param_values: Tuple[float, ...] = ()

    def defaults(self) -> Dict[str, list]:
        result = {'n': list(self.n_values)}
        if self.uses_r:
            result['r'] = list(self.r_values)
        if self.param:
            result[self.param] = list(self.param_values)
        return result


# Helpers

def _text(graph: Graph) -> str:
    """Canonical graph6 where canonical labeling is affordable, labeled graph6 otherwise"""
    if graph.n <= Config.MAX_CANONICAL_N:
        return canonical_form(graph).text
    return graph6_encode(graph)


def _close(a: float, b: float, tolerance: float = None) -> bool:
    tolerance = Config.WITNESS_TOLERANCE if tolerance is None else tolerance
    return abs(a - b) <= tolerance


def _confirmed_p(graph: Graph, p: float) -> float:
    options = PSpectralOptions(p=p, restarts=Config.P_CONFIRM_RESTARTS, seed=Config.RANDOM_SEED)
    return p_spectral_radius(graph, options).value


def _search(row: ReportRow, n: int, pred: Predicate, objective: Objective,
            jobs: Optional[int]) -> Optional[SearchResult]:
    """Run the argmax into ``row``; None (and an empty_class flag) when the class is empty"""
    try:
        result = argmax(n, pred, objective, jobs=jobs)
    except EmptyClassError as e:
        row.flags.append(EMPTY_CLASS)
        row.note = str(e)
        return None
    row.found = result.value
    row.witnesses = [form.text for form in result.witnesses]
    row.unique = result.unique
    return result


def _argmax_row(theorem: str, n: int, r: Optional[int], param: Optional[float], pred: Predicate,
                objective: Objective, expected: float, expected_graphs: Sequence[Graph], mode: str,
                jobs: Optional[int], in_domain: bool = True, tolerance: float = None) -> ReportRow:
    """
    mode 'unique'    the witness set is the single class of the expected graph
         'contains'  every expected graph is among the witnesses
         'equal'     the witness set is exactly the expected classes
    """
    row = ReportRow(theorem=theorem, n=n, r=r, param=param)
    if not in_domain:
        row.flags.append(OUT_OF_DOMAIN)
    result = _search(row, n, pred, objective, jobs)
    if result is None or not in_domain:
        row.passed = result is not None
        return row

    row.expected = expected
    found = set(row.witnesses)
    wanted = {_text(graph) for graph in expected_graphs}
    if mode == 'unique':
        shape_ok = row.unique and found == wanted
    elif mode == 'contains':
        shape_ok = wanted <= found
    else:
        shape_ok = found == wanted
    row.passed = _close(row.found, expected, tolerance) and shape_ok
    return row


def _sweep_row(theorem: str, n: int, r: Optional[int], pred: Predicate,
               check: Callable[[Graph, float], Tuple[float, bool]],
               equality_ok: Callable[[Graph], bool], objective: Objective = Objective.adjacency()) -> ReportRow:
    row = ReportRow(theorem=theorem, n=n, r=r, expected=0.0)
    try:
        result = bound_sweep(n, pred, check, objective)
    except EmptyClassError as e:
        row.flags.append(EMPTY_CLASS)
        row.note = str(e)
        return row
    row.found = result.worst_gap
    row.witnesses = [form.text for form in result.equality]
    row.unique = len(result.equality) == 1
    bad_equality = [form.text for form in result.equality if not equality_ok(canonical_graph(form))]
    row.passed = result.holds and not bad_equality
    if result.violations:
        row.note = f"violated by {', '.join(form.text for form in result.violations)}"
    elif bad_equality:
        row.note = f"unexpected equality at {', '.join(bad_equality)}"
    return row


def _without_isolated(graph: Graph) -> Graph:
    return graph.induced([v for v in range(graph.n) if graph.rows[v]])


def _y_in_domain(n: int, r: int) -> bool:
    return n >= 2 * r + 1


# Edge extremal entries

def _mantel(n: int, r: int, param, jobs) -> ReportRow:
    return _argmax_row('mantel', n, 2, None, Predicate.clique_free(2), Objective.edges(),
                       n * n // 4, [constructions.turan_graph(n, 2)], 'unique', jobs)


def _turan(n: int, r: int, param, jobs) -> ReportRow:
    return _argmax_row('turan', n, r, None, Predicate.clique_free(r), Objective.edges(),
                       constructions.turan_edge_count(n, r), [constructions.turan_graph(n, r)], 'unique', jobs)


def _erdos_stability(n: int, r: int, param, jobs) -> ReportRow:
    family = [constructions.erdos_family_graph(n, x1) for x1 in range(1, n // 2)] if n >= 5 else []
    return _argmax_row('erdos_stability', n, 2, None, Predicate.clique_free(2, non_partite=True),
                       Objective.edges(), constructions.erdos_edge_count(n), family, 'contains', jobs)


def _brouwer(n: int, r: int, param, jobs) -> ReportRow:
    in_domain = _y_in_domain(n, r)
    expected = [constructions.y_graph(n, r)] if in_domain else []
    return _argmax_row('brouwer', n, r, None, Predicate.clique_free(r, non_partite=True), Objective.edges(),
                       constructions.brouwer_edge_count(n, r), expected, 'contains', jobs, in_domain=in_domain)


# Spectral entries

def _nosal_check(graph: Graph, value: float) -> Tuple[float, bool]:
    m = graph.edge_count
    gap = value - nosal_bound(m)
    return gap, m > 0 and _close(gap, 0.0)


def _nosal_edges(n: int, r: int, param, jobs) -> ReportRow:
    return _sweep_row('nosal_edges', n, 2, Predicate.clique_free(2), _nosal_check,
                      is_complete_bipartite_plus_isolated)


def _nikiforov_spectral(n: int, r: int, param, jobs) -> ReportRow:
    expected = constructions.turan_graph(n, r)
    return _argmax_row('nikiforov_spectral', n, r, None, Predicate.clique_free(r), Objective.adjacency(),
                       adjacency_radius(expected).value, [expected], 'unique', jobs)


def _flz_multipartite(n: int, r: int, param, jobs) -> ReportRow:
    expected = constructions.turan_graph(n, r)
    return _argmax_row('flz_multipartite', n, r, None, Predicate.partite(r), Objective.adjacency(),
                       adjacency_radius(expected).value, [expected], 'unique', jobs)


def _balanced_sk(n: int) -> Tuple[int, int]:
    a = (n - 1) // 2
    return a, n - 1 - a


def _lnw(n: int, r: int, param, jobs) -> ReportRow:
    expected = constructions.sk_graph(*_balanced_sk(n))
    return _argmax_row('lnw', n, 2, None, Predicate.clique_free(2, non_partite=True), Objective.adjacency(),
                       adjacency_radius(expected).value, [expected], 'unique', jobs)


def _main(n: int, r: int, param, jobs) -> ReportRow:
    in_domain = _y_in_domain(n, r)
    expected = constructions.y_graph(n, r) if in_domain else None
    value = adjacency_radius(expected).value if in_domain else None
    return _argmax_row('main', n, r, None, Predicate.clique_free(r, non_partite=True), Objective.adjacency(),
                       value, [expected] if expected else [], 'unique', jobs, in_domain=in_domain)


def _wilf(n: int, r: int, param, jobs) -> ReportRow:
    row = ReportRow(theorem='wilf', n=n, r=r, expected=wilf_bound(n, r))
    result = _search(row, n, Predicate.clique_free(r), Objective.adjacency(), jobs)
    if result is None:
        return row
    attained = _close(row.found, row.expected)
    turan = _text(constructions.turan_graph(n, r))
    row.passed = (row.found <= row.expected + Config.WITNESS_TOLERANCE
                  and attained == (n % r == 0)
                  and (not attained or row.witnesses == [turan]))
    return row


def _nikiforov_edges(n: int, r: int, param, jobs) -> ReportRow:
    def check(graph: Graph, value: float) -> Tuple[float, bool]:
        m = graph.edge_count
        gap = value - nikiforov_edge_bound(m, r)
        return gap, m > 0 and _close(gap, 0.0)

    def regular_r_partite(graph: Graph) -> bool:
        parts = complete_multipartite_parts(_without_isolated(graph))
        return parts is not None and parts.r == r and (r == 2 or len(set(parts.sizes)) == 1)

    return _sweep_row('nikiforov_edges', n, r, Predicate.clique_free(r), check, regular_r_partite)


def _degree_chain(n: int, r: int, param, jobs) -> ReportRow:
    def check(graph: Graph, value: float) -> Tuple[float, bool]:
        average = 2 * graph.edge_count / graph.n
        top = max(graph.degrees())
        return max(average - value, value - top), _close(value, average)

    def regular(graph: Graph) -> bool:
        return len(set(graph.degrees())) == 1

    return _sweep_row('degree_chain', n, None, Predicate(), check, regular)


def _lemma33(n: int, r: int, param, jobs) -> ReportRow:
    row = ReportRow(theorem='lemma33', n=n, r=None)
    if n < 3:
        row.flags.append(OUT_OF_DOMAIN)
        row.note = "SK_{a,b} needs a + b = n - 1 >= 2"
        return row
    values = {(a, n - 1 - a): largest_root(f_quintic(a, n - 1 - a)) for a in range(1, (n - 1) // 2 + 1)}
    row.found = max(values.values())
    best = [ab for ab, value in values.items() if _close(value, row.found)]
    balanced = _balanced_sk(n)
    row.expected = values[balanced]
    row.witnesses = [_text(constructions.sk_graph(a, b)) for a, b in best]
    row.unique = len(best) == 1
    row.passed = best == [balanced]
    return row


def _lemma42(n: int, r: int, param, jobs) -> ReportRow:
    row = ReportRow(theorem='lemma42', n=n, r=r)
    candidates = [parts for parts in lemma42_compositions(n - 1, min_r=r, max_r=r) if parts.total == n - 1]
    if not candidates:
        row.flags.append(EMPTY_CLASS)
        row.note = f"No composition of {n - 1} into {r} parts"
        return row
    values = {parts.sizes: largest_root(f_parts(parts)) for parts in candidates}
    row.found = max(values.values())
    best = [sizes for sizes, value in values.items() if _close(value, row.found)]
    row.witnesses = [_text(constructions.lemma42_graph(PartSizes(sizes))) for sizes in best]
    row.unique = len(best) == 1
    row.note = ' '.join(','.join(map(str, sizes)) for sizes in best)
    if not _y_in_domain(n, r):
        row.flags.append(OUT_OF_DOMAIN)
        row.passed = True
        return row
    expected = constructions.y_parts(n, r)
    row.expected = values[expected.sizes]
    row.passed = best == [expected.sizes]
    return row


def _turan_radius(n: int, r: int, param, jobs) -> Optional[ReportRow]:
    row = ReportRow(theorem='turan_radius', n=n, r=r)
    radius = largest_root(charpoly_multipartite_adjacency(constructions.turan_parts(n, r)))
    edges = constructions.turan_edge_count(n, r)
    lower, upper = turan_radius_bounds(n, r)
    row.found = radius
    row.expected = upper
    floor_ok = math.floor(n * radius / 2 + Config.WITNESS_TOLERANCE) == edges
    bounds_ok = lower - Config.WITNESS_TOLERANCE <= radius <= upper + Config.WITNESS_TOLERANCE
    row.unique = True
    row.passed = floor_ok and bounds_ok
    row.note = f"e={edges}, floor(n*lambda/2)={math.floor(n * radius / 2 + Config.WITNESS_TOLERANCE)}"
    return row


# Other matrices

def _hjz_signless(n: int, r: int, param, jobs) -> ReportRow:
    if r == 2:
        expected = [constructions.complete_bipartite(t, n - t) for t in range(1, n // 2 + 1)]
        return _argmax_row('hjz_signless', n, r, None, Predicate.clique_free(2), Objective.signless(),
                           float(n), expected, 'equal', jobs)
    turan = constructions.turan_graph(n, r)
    return _argmax_row('hjz_signless', n, r, None, Predicate.clique_free(r), Objective.signless(),
                       signless_laplacian_radius(turan).value, [turan], 'unique', jobs)


def _nikiforov_alpha(n: int, r: int, alpha: float, jobs) -> ReportRow:
    boundary = 1 - 1 / r
    on_boundary = abs(alpha - boundary) < 1e-12
    if alpha < boundary or on_boundary:
        expected = constructions.turan_graph(n, r)
    else:
        expected = constructions.split_graph(n, r - 1)
    row = _argmax_row('nikiforov_alpha', n, r, alpha, Predicate.clique_free(r), Objective.a_alpha(alpha),
                      a_alpha_radius(expected, alpha).value, [expected], 'unique', jobs,
                      in_domain=not on_boundary)
    if on_boundary:
        row.note = "alpha = 1 - 1/r; see alpha_boundary"
    return row


def _alpha_boundary(n: int, r: int, param, jobs) -> ReportRow:
    alpha = 1 - 1 / r
    bound = wilf_bound(n, r)
    expected = [constructions.complete_multipartite(PartSizes(sizes)) for sizes in _partitions(n, r)]
    row = _argmax_row('alpha_boundary', n, r, alpha, Predicate.clique_free(r), Objective.a_alpha(alpha),
                      bound, expected, 'equal', jobs)
    return row


def _partitions(total: int, parts: int, smallest: int = 1) -> Iterable[Tuple[int, ...]]:
    """Non-decreasing tuples of ``parts`` positive integers summing to ``total``"""
    if parts == 1:
        if total >= smallest:
            yield (total,)
        return
    for first in range(smallest, total // parts + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


# p-spectral entries

def _kang_nikiforov(n: int, r: int, p: float, jobs) -> ReportRow:
    expected = constructions.turan_graph(n, r)
    return _argmax_row('kang_nikiforov', n, r, p, Predicate.clique_free(r), Objective.p_spectral(p),
                       _confirmed_p(expected, p), [expected], 'unique', jobs, tolerance=P_TOLERANCE)


def _p_main(n: int, r: int, p: float, jobs) -> ReportRow:
    in_domain = _y_in_domain(n, r)
    expected = constructions.y_graph(n, r) if in_domain else None
    value = _confirmed_p(expected, p) if in_domain else None
    return _argmax_row('p_main', n, r, p, Predicate.clique_free(r, non_partite=True), Objective.p_spectral(p),
                       value, [expected] if expected else [], 'unique', jobs,
                       in_domain=in_domain, tolerance=P_TOLERANCE)


def _p_turan_bound(n: int, r: int, p: float, jobs) -> ReportRow:
    row = ReportRow(theorem='p_turan_bound', n=n, r=r, param=p, expected=p_turan_bound(n, r, p))
    result = _search(row, n, Predicate.clique_free(r), Objective.p_spectral(p), jobs)
    if result is None:
        return row
    attained = _close(row.found, row.expected, P_TOLERANCE)
    turan = _text(constructions.turan_graph(n, r))
    row.passed = (row.found <= row.expected + P_TOLERANCE
                  and attained == (n % r == 0)
                  and (not attained or row.witnesses == [turan]))
    return row


CATALOG: Dict[str, CatalogEntry] = {entry.id: entry for entry in [
    CatalogEntry('mantel', 'e <= floor(n^2/4) over triangle-free graphs, unique at T_2(n)',
                 _mantel, tuple(range(4, 8)), uses_r=False),
    CatalogEntry('turan', 'e <= e(T_r(n)) over K_{r+1}-free graphs, unique at T_r(n)',
                 _turan, tuple(range(4, 8)), (2, 3)),
    CatalogEntry('nosal_edges', 'lambda <= sqrt(m) over triangle-free graphs, equality only complete bipartite',
                 _nosal_edges, tuple(range(3, 7)), uses_r=False),
    CatalogEntry('nikiforov_spectral', 'lambda <= lambda(T_r(n)) over K_{r+1}-free graphs, unique',
                 _nikiforov_spectral, tuple(range(4, 8)), (2, 3)),
    CatalogEntry('flz_multipartite', 'lambda <= lambda(T_r(n)) over r-partite graphs, unique',
                 _flz_multipartite, tuple(range(4, 7)), (2, 3)),
    CatalogEntry('erdos_stability', 'e <= floor((n-1)^2/4)+1 over triangle-free non-bipartite graphs',
                 _erdos_stability, tuple(range(5, 8)), uses_r=False),
    CatalogEntry('lnw', 'lambda-argmax over triangle-free non-bipartite graphs is the balanced SK, unique',
                 _lnw, tuple(range(5, 8)), uses_r=False),
    CatalogEntry('lemma33', 'within SK_{a,b}, a + b = n - 1, the balanced split is the unique lambda-argmax',
                 _lemma33, tuple(range(5, 13)), uses_r=False),
    CatalogEntry('brouwer', 'e <= e(T_r(n)) - floor(n/r) + 1 over K_{r+1}-free non-r-partite graphs',
                 _brouwer, tuple(range(5, 8)), (2, 3)),
    CatalogEntry('lemma42', 'within the near-Turan family Y_r(n) is the unique lambda-argmax',
                 _lemma42, tuple(range(8, 12)), (3,)),
    CatalogEntry('main', 'lambda-argmax over K_{r+1}-free non-r-partite graphs is Y_r(n), unique',
                 _main, tuple(range(5, 8)), (2, 3)),
    CatalogEntry('kang_nikiforov', 'p-spectral argmax over K_{r+1}-free graphs is T_r(n), unique',
                 _kang_nikiforov, (6,), (3,), param='p', param_values=(1.5, 2.0, 3.0)),
    CatalogEntry('p_main', 'p-spectral argmax over K_{r+1}-free non-r-partite graphs is Y_r(n), unique',
                 _p_main, (6,), (2,), param='p', param_values=(1.5, 2.0, 3.0)),
    CatalogEntry('hjz_signless', 'q-argmax over K_{r+1}-free graphs: every K_{t,n-t} for r = 2, T_r(n) for r >= 3',
                 _hjz_signless, (6, 7), (2, 3)),
    CatalogEntry('nikiforov_alpha', 'A_alpha-argmax over K_{r+1}-free graphs: T_r(n) below 1 - 1/r, S_{n,r-1} above',
                 _nikiforov_alpha, (6,), (3,), param='alpha', param_values=(0.0, 0.25, 0.5, 0.9)),
    CatalogEntry('wilf', 'lambda <= (1 - 1/r) n over K_{r+1}-free graphs, equality only at T_r(n) with r | n',
                 _wilf, tuple(range(4, 8)), (2, 3)),
    CatalogEntry('nikiforov_edges', 'lambda <= sqrt(2m(1 - 1/r)) over K_{r+1}-free graphs',
                 _nikiforov_edges, tuple(range(4, 7)), (2, 3)),
    CatalogEntry('alpha_boundary', 'A_alpha at alpha = 1 - 1/r is at most (1 - 1/r) n, equality at complete r-partite',
                 _alpha_boundary, tuple(range(4, 7)), (2, 3)),
    CatalogEntry('p_turan_bound', 'lambda^(p) <= (1 - 1/r) n^(2 - 2/p), equality iff r | n at T_r(n)',
                 _p_turan_bound, (6,), (3,), param='p', param_values=(2.0, 3.0)),
    CatalogEntry('turan_radius', 'e(T_r(n)) = floor(n lambda(T_r(n)) / 2) and the two-sided radius bound',
                 _turan_radius, tuple(range(4, 21)), (2, 3, 4, 5)),
    CatalogEntry('degree_chain', '2m/n <= lambda <= max degree over all graphs, lower equality only if regular',
                 _degree_chain, tuple(range(3, 7)), uses_r=False),
]}


def get_entry(theorem_id: str) -> CatalogEntry:
    try:
        return CATALOG[theorem_id]
    except KeyError:
        raise CatalogError(f"Unknown theorem {theorem_id!r}; known: {', '.join(CATALOG)}") from None


def verify_theorem(theorem_id: str, n_values: Optional[Sequence[int]] = None,
                   r_values: Optional[Sequence[int]] = None, params: Optional[Sequence[float]] = None,
                   jobs: Optional[int] = None) -> VerificationReport:
    entry = get_entry(theorem_id)
    n_values = list(n_values) if n_values else list(entry.n_values)
    r_values = list(r_values) if r_values and entry.uses_r else list(entry.r_values)
    params = list(params) if params and entry.param else list(entry.param_values) or [None]
    if any(r < 2 for r in r_values):
        raise DomainError(f"r must be at least 2, got {r_values}")

    parameters = {'n': n_values}
    if entry.uses_r:
        parameters['r'] = r_values
    if entry.param:
        parameters[entry.param] = params
    report = VerificationReport(theorem=theorem_id, parameters=parameters)

    for n in n_values:
        for r in (r_values if entry.uses_r else [2]):
            if r > n:
                logger.info("%s: skipping r=%d > n=%d", theorem_id, r, n)
                continue
            for param in params:
                row = entry.runner(n, r, param, jobs)
                if row is None:
                    continue
                logger.info("%s n=%d r=%s param=%s: %s %s", theorem_id, n, row.r, param,
                            'pass' if row.passed else 'FAIL', ' '.join(row.flags))
                report.rows.append(row)

    if report.vacuous:
        logger.warning("%s: no instance in range, report passes vacuously", theorem_id)
    return report
