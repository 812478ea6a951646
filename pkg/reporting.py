"""
Reporting Module
Report rows for verification sweeps and rendering of result tables as
JSON, CSV or aligned text
"""
import csv
import io
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import TIMEZONE
from validation import validate_format

logger = logging.getLogger(__name__)


@dataclass(order=True, frozen=True)
class CaseResult:
    """One checked case: both sides of an identity and whether they agree"""
    sort_key: Tuple = field(repr=False)
    case: str = field(compare=False)
    lhs: Any = field(compare=False)
    rhs: Any = field(compare=False)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_row(self) -> Dict[str, Any]:
        return {
            'case': self.case,
            'lhs': jsonable(self.lhs),
            'rhs': jsonable(self.rhs),
            'pass': self.passed,
        }


REPORT_COLUMNS = ('case', 'lhs', 'rhs', 'pass')


def make_case(sort_key: Tuple, case: str, lhs: Any, rhs: Any) -> CaseResult:
    return CaseResult(sort_key=tuple(sort_key), case=case, lhs=lhs, rhs=rhs)


def jsonable(value: Any) -> Any:
    """
    Convert a value for JSON output
    Integers become decimal strings; objects with to_json() serialize themselves
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def _flat(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(',', ':'))
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return ''
    return str(value)


def render_json(rows: Sequence[Dict[str, Any]]) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline"""
    return json.dumps(list(rows), indent=2, sort_keys=True) + '\n'


def render_csv(columns: Sequence[str], rows: Sequence[Dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_flat(row.get(column)) for column in columns])
    return buffer.getvalue()


def render_text(columns: Sequence[str], rows: Sequence[Dict[str, Any]],
                title: Optional[str] = None) -> str:
    """Aligned plain-text table with a timestamped header line"""
    cells = [[_flat(row.get(column)) for column in columns] for row in rows]
    widths = [len(column) for column in columns]
    for line in cells:
        widths = [max(width, len(cell)) for width, cell in zip(widths, line)]

    stamp = datetime.now(TIMEZONE).strftime('%Y-%m-%d %H:%M:%S %Z')
    out: List[str] = [f"# {title or 'results'} ({stamp})"]
    out.append('  '.join(column.ljust(width) for column, width in zip(columns, widths)).rstrip())
    out.append('  '.join('-' * width for width in widths))
    for line in cells:
        out.append('  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip())
    return '\n'.join(out) + '\n'


def render(fmt: str, columns: Sequence[str], rows: Sequence[Dict[str, Any]],
           title: Optional[str] = None) -> str:
    fmt = validate_format(fmt)
    if fmt == 'json':
        return render_json(rows)
    if fmt == 'csv':
        return render_csv(columns, rows)
    return render_text(columns, rows, title)


def render_report(fmt: str, results: Sequence[CaseResult], title: Optional[str] = None) -> str:
    """Render verification results sorted by case key"""
    rows = [result.to_row() for result in sorted(results)]
    return render(fmt, REPORT_COLUMNS, rows, title)


def write_output(text: str, path: Optional[str] = None) -> None:
    """Write to path (UTF-8) or to stdout"""
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as handle:
            handle.write(text)
        logger.info(f"💾 Wrote {len(text)} characters to {path}")
    else:
        print(text, end='')
