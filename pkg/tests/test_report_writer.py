import json

import pytest

from app.errors import DomainError
from app.models.report import EMPTY_CLASS, OUT_OF_DOMAIN, ReportRow, VerificationReport
from app.utils.formatting import format_number, rounded
from app.utils.report_writer import emit_report, emit_rows, render_text


@pytest.fixture
def report():
    return VerificationReport(theorem='mantel', parameters={'n': [4, 5]}, rows=[
        ReportRow(theorem='mantel', n=4, found=4.0, expected=4.0, witnesses=['CU'], unique=True, passed=True),
        ReportRow(theorem='mantel', n=5, found=6.0, expected=6.0, witnesses=['DFw'], unique=True, passed=True),
    ])


def test_format_number():
    assert format_number(None) == ''
    assert format_number(True) == 'true'
    assert format_number(7) == '7'
    assert format_number(2.449489742783178) == '2.449489743'
    assert format_number(6.0) == '6.000000000'
    assert format_number(0.0) == '0.000000000'
    assert format_number(12345678901.0) == '1.234567890e+10'
    assert format_number(1e-5) == '1.000000000e-05'
    assert format_number(2 ** 0.5, significant_digits=4) == '1.414'
    assert format_number('x') == 'x'


def test_rounded_walks_nested_values():
    data = rounded({'a': [1 / 3, 2], 'b': {'c': 0.1 + 0.2}, 'd': 'text'})
    assert data == {'a': [0.3333333333, 2], 'b': {'c': 0.3}, 'd': 'text'}


def test_csv_columns(report):
    lines = emit_report(report, 'csv').decode().splitlines()
    assert lines[0] == 'theorem,n,r,param,found,expected,witnesses,unique,pass'
    assert lines[2] == 'mantel,5,,,6.000000000,6.000000000,DFw,true,true'


def test_json_report(report):
    data = json.loads(emit_report(report, 'json'))
    assert data['pass'] is True
    assert data['warnings'] == []
    assert data['rows'][0]['pass'] is True
    assert data['rows'][1]['witnesses'] == ['DFw']


def test_text_summary(report):
    text = render_text(report)
    assert text.splitlines()[-1] == 'mantel: PASS (2 rows)'
    assert 'flags' in text.splitlines()[0]
    report.rows[0].passed = False
    assert emit_report(report).decode().splitlines()[-1] == 'mantel: FAIL (2 rows)'


def test_vacuous_report_text():
    assert render_text(VerificationReport(theorem='turan')) == 'turan: PASS (0 rows) [vacuous]\n'


def test_flagged_rows_do_not_count():
    report = VerificationReport(theorem='main', rows=[
        ReportRow(theorem='main', n=5, r=3, flags=[OUT_OF_DOMAIN, EMPTY_CLASS]),
        ReportRow(theorem='main', n=7, r=3, passed=True),
    ])
    assert report.passed
    report.rows[1].flags.append(OUT_OF_DOMAIN)
    assert not report.passed
    assert report.warnings == ['no_counted_rows']


def test_unknown_format(report):
    with pytest.raises(DomainError):
        emit_report(report, 'xml')
    with pytest.raises(DomainError):
        emit_rows([{'a': 1}], 'xml')


def test_emit_rows():
    rows = [{'parts': '1,4,2', 'case': 'case2', 'increased': True},
            {'parts': '2,2,1,4', 'case': 'case1', 'increased': False}]
    lines = emit_rows(rows, 'csv').decode().splitlines()
    assert lines == ['parts,case,increased', '"1,4,2",case2,true', '"2,2,1,4",case1,false']
    assert json.loads(emit_rows(rows, 'json'))[0]['increased'] is True
    assert emit_rows([], 'text') == b''
