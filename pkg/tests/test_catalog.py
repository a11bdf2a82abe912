import pytest

from app.errors import CatalogError, DomainError
from app.models.report import EMPTY_CLASS, OUT_OF_DOMAIN, VACUOUS, VerificationReport
from app.utils import catalog, constructions
from app.utils.graph_engine import canonical_form


def _text(graph):
    return canonical_form(graph).text


def test_catalog_ids_and_defaults():
    assert {'mantel', 'turan', 'lnw', 'main', 'lemma33', 'lemma42', 'turan_radius'} <= set(catalog.CATALOG)
    assert catalog.get_entry('mantel').defaults() == {'n': [4, 5, 6, 7]}
    assert catalog.get_entry('kang_nikiforov').defaults() == {'n': [6], 'r': [3], 'p': [1.5, 2.0, 3.0]}
    with pytest.raises(CatalogError) as info:
        catalog.get_entry('fermat')
    assert info.value.exit_code == 2


def test_mantel():
    report = catalog.verify_theorem('mantel', [4, 5])
    assert report.passed
    assert [row.n for row in report.rows] == [4, 5]
    assert report.rows[1].witnesses == [_text(constructions.turan_graph(5, 2))]
    assert report.rows[1].found == 6


def test_turan():
    report = catalog.verify_theorem('turan', [5], [2, 3])
    assert report.passed
    assert [row.r for row in report.rows] == [2, 3]


def test_lnw_balanced_sk():
    report = catalog.verify_theorem('lnw', [5, 6])
    assert report.passed
    assert report.rows[1].witnesses == [_text(constructions.sk_graph(2, 3))]


def test_main_on_pentagon():
    report = catalog.verify_theorem('main', [5], [2])
    assert report.passed
    assert report.rows[0].witnesses == [_text(constructions.cycle_graph(5))]


@pytest.mark.slow
def test_main_at_seven_vertices():
    report = catalog.verify_theorem('main', [7], [3])
    assert report.passed
    assert report.rows[0].witnesses == [_text(constructions.y_graph(7, 3))]


def test_rows_without_a_verdict_fail_the_report():
    report = catalog.verify_theorem('main', [5], [3])
    row = report.rows[0]
    assert OUT_OF_DOMAIN in row.flags and EMPTY_CLASS in row.flags
    assert not row.counted
    assert not report.passed
    assert report.warnings == ['no_counted_rows']


def test_vacuous_report_passes():
    report = catalog.verify_theorem('turan', [4], [5])
    assert report.vacuous
    assert report.passed
    assert report.warnings == [VACUOUS]


def test_r_below_two_is_rejected():
    with pytest.raises(DomainError):
        catalog.verify_theorem('turan', [4], [1])


def test_lemma33_balanced_split():
    report = catalog.verify_theorem('lemma33')
    assert report.passed
    assert [row.n for row in report.rows] == list(range(5, 13))
    assert all(row.unique for row in report.rows)


def test_lemma42_prefers_y_graphs():
    report = catalog.verify_theorem('lemma42', [8, 9])
    assert report.passed
    for row in report.rows:
        assert row.note == ','.join(map(str, constructions.y_parts(row.n, 3).sizes))


def test_turan_radius_identity():
    report = catalog.verify_theorem('turan_radius')
    assert report.passed
    assert len(report.rows) == sum(1 for n in range(4, 21) for r in (2, 3, 4, 5) if r <= n)


def test_bound_sweeps():
    assert catalog.verify_theorem('nosal_edges', [4, 5]).passed
    assert catalog.verify_theorem('degree_chain', [4]).passed
    assert catalog.verify_theorem('nikiforov_edges', [5], [2]).passed


def test_signless_argmax_lists_every_complete_bipartite_graph():
    report = catalog.verify_theorem('hjz_signless', [6], [2])
    assert report.passed
    assert len(report.rows[0].witnesses) == 3


def test_wilf_equality_needs_divisibility():
    report = catalog.verify_theorem('wilf', [5, 6], [2])
    assert report.passed
    assert report.rows[0].found < report.rows[0].expected
    assert report.rows[1].found == pytest.approx(report.rows[1].expected)


def test_report_serialization():
    report = catalog.verify_theorem('mantel', [4])
    data = report.to_dict()
    assert data['pass'] is True
    assert data['parameters'] == {'n': [4]}
    assert data['rows'][0]['pass'] is True
    restored = VerificationReport.from_dict(data)
    assert restored.passed
    assert restored.rows[0].witnesses == report.rows[0].witnesses


@pytest.mark.parametrize('theorem_id, n_values, r_values, params', [
    ('nikiforov_spectral', [5], [2, 3], None),
    ('flz_multipartite', [5], [2, 3], None),
    ('erdos_stability', [5, 6], None, None),
    ('brouwer', [5], [2], None),
    ('alpha_boundary', [4, 5], [2], None),
    pytest.param('brouwer', [7], [3], None, marks=pytest.mark.slow),
    pytest.param('nikiforov_alpha', None, None, [0.25, 0.9], marks=pytest.mark.slow),
    pytest.param('kang_nikiforov', None, None, None, marks=pytest.mark.slow),
    pytest.param('p_main', None, None, None, marks=pytest.mark.slow),
    pytest.param('p_turan_bound', None, None, None, marks=pytest.mark.slow),
])
def test_entry_passes_on_small_instances(theorem_id, n_values, r_values, params):
    report = catalog.verify_theorem(theorem_id, n_values, r_values, params)
    assert report.passed, report.to_dict()
    assert [row for row in report.rows if row.counted]


@pytest.mark.slow
def test_a_alpha_argmax_switches_to_the_split_graph():
    report = catalog.verify_theorem('nikiforov_alpha', [6], [3], [0.25, 0.9])
    assert report.passed
    below, above = report.rows
    assert below.witnesses == [_text(constructions.turan_graph(6, 3))]
    assert above.param == pytest.approx(0.9)
    assert above.witnesses == [_text(constructions.split_graph(6, 2))]
