"""Serialize verification reports as JSON, CSV or a plain-text table"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from app.errors import DomainError
from app.models.report import VerificationReport
from app.utils.formatting import format_number, rounded

FORMATS = ('json', 'csv', 'text')
CSV_COLUMNS = ['theorem', 'n', 'r', 'param', 'found', 'expected', 'witnesses', 'unique', 'pass']


def _frame(report: VerificationReport, with_flags: bool) -> pd.DataFrame:
    records = []
    for row in report.rows:
        record = {
            'theorem': row.theorem,
            'n': row.n,
            'r': '' if row.r is None else row.r,
            'param': format_number(row.param),
            'found': format_number(row.found),
            'expected': format_number(row.expected),
            'witnesses': ';'.join(row.witnesses),
            'unique': format_number(row.unique),
            'pass': format_number(row.passed),
        }
        if with_flags:
            record['flags'] = ','.join(row.flags)
        records.append(record)
    columns = CSV_COLUMNS + (['flags'] if with_flags else [])
    return pd.DataFrame.from_records(records, columns=columns)


def emit_report(report: VerificationReport, fmt: str = 'text') -> bytes:
    if fmt == 'json':
        return (json.dumps(rounded(report.to_dict()), indent=2) + '\n').encode('utf-8')
    if fmt == 'csv':
        return _frame(report, with_flags=False).to_csv(index=False, lineterminator='\n').encode('utf-8')
    if fmt == 'text':
        return render_text(report).encode('utf-8')
    raise DomainError(f"Unknown report format {fmt!r}, expected one of {', '.join(FORMATS)}")


def render_text(report: VerificationReport) -> str:
    lines: List[str] = []
    if report.rows:
        lines.append(_frame(report, with_flags=True).to_string(index=False))
    verdict = 'PASS' if report.passed else 'FAIL'
    summary = f"{report.theorem}: {verdict} ({len(report.rows)} rows)"
    if report.warnings:
        summary += f" [{', '.join(report.warnings)}]"
    lines.append(summary)
    return '\n'.join(lines) + '\n'


def emit_rows(rows: Sequence[Dict[str, Any]], fmt: str = 'text') -> bytes:
    """Plain record tables, used by the charpoly checks"""
    if fmt == 'json':
        return (json.dumps(rounded(list(rows)), indent=2) + '\n').encode('utf-8')
    frame = pd.DataFrame.from_records(
        [{key: format_number(value) for key, value in row.items()} for row in rows])
    if fmt == 'csv':
        return frame.to_csv(index=False, lineterminator='\n').encode('utf-8')
    if fmt == 'text':
        return (frame.to_string(index=False) + '\n').encode('utf-8') if rows else b''
    raise DomainError(f"Unknown report format {fmt!r}, expected one of {', '.join(FORMATS)}")
