#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test script for report rows and output rendering
"""

import json

import pytest

from algebra.affine_weights import Weight
from algebra.qseries import QPoly
from reporting import (
    jsonable, make_case, render, render_csv, render_json, render_report, render_text,
    write_output
)
from validation import ValidationError

ROWS = [
    {'case': 'a', 'lhs': '1', 'rhs': '1', 'pass': True},
    {'case': 'b,c', 'lhs': {'0': '1'}, 'rhs': None, 'pass': False},
]

def test_case_results():
    """Cases compare by key and report pass/fail"""
    ok = make_case(('x', 2), 'x2', 3, 3)
    bad = make_case(('x', 1), 'x1', 3, 4)
    assert ok.passed
    assert not bad.passed
    assert sorted([ok, bad]) == [bad, ok]
    assert ok.to_row() == {'case': 'x2', 'lhs': '3', 'rhs': '3', 'pass': True}

def test_jsonable():
    """Big integers become strings and domain objects serialize themselves"""
    print("\n=== Testing JSON Conversion ===")

    test_cases = [
        (10 ** 30, '1' + '0' * 30, "Big integer"),
        (True, True, "Boolean kept"),
        (None, None, "None kept"),
        (QPoly({2: 3}), {'2': '3'}, "Polynomial"),
        (Weight(2, 1, -1), {'L0': 2, 'w1': 1, 'delta': -1}, "Weight"),
        ([1, (2, 3)], ['1', ['2', '3']], "Nested sequence"),
        ({1: 2}, {'1': '2'}, "Mapping"),
    ]

    for value, expected, description in test_cases:
        result = jsonable(value)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: {result}")
        assert result == expected

def test_render_json_round_trip():
    """Emitted JSON re-serializes byte-identically"""
    text = render_json(ROWS)
    assert text.endswith('\n')
    assert json.dumps(json.loads(text), indent=2, sort_keys=True) + '\n' == text

def test_render_csv():
    """CSV has a header, LF line ends and flattened cells"""
    text = render_csv(('case', 'lhs', 'rhs', 'pass'), ROWS)
    lines = text.split('\n')
    assert lines[0] == 'case,lhs,rhs,pass'
    assert lines[1] == 'a,1,1,true'
    assert lines[2] == '"b,c","{""0"":""1""}",,false'
    assert '\r' not in text

def test_render_text():
    """Text tables carry a titled header and aligned columns"""
    text = render_text(('case', 'pass'), ROWS, title='demo')
    lines = text.splitlines()
    assert lines[0].startswith('# demo (')
    assert lines[1].split() == ['case', 'pass']
    assert lines[3].split() == ['a', 'true']

def test_render_dispatch():
    """render() validates the format"""
    assert render('json', ('case',), []) == '[]\n'
    with pytest.raises(ValidationError):
        render('xml', ('case',), [])

def test_render_report_sorts_cases():
    """Reports list cases in key order"""
    results = [make_case(('z',), 'late', 1, 1), make_case(('a',), 'early', 1, 2)]
    rows = json.loads(render_report('json', results))
    assert [row['case'] for row in rows] == ['early', 'late']
    assert rows[0]['pass'] is False

def test_write_output(tmp_path, capsys):
    """Output goes to a UTF-8 file or to stdout"""
    target = tmp_path / 'out.txt'
    write_output('λ\n', str(target))
    assert target.read_text(encoding='utf-8') == 'λ\n'

    write_output('hello\n')
    assert capsys.readouterr().out == 'hello\n'

def main():
    """Run reporting tests that need no fixtures"""
    print("🧪 Running Reporting Tests")
    print("=" * 50)

    test_case_results()
    test_jsonable()
    test_render_json_round_trip()
    test_render_csv()
    test_render_text()
    test_render_dispatch()
    test_render_report_sorts_cases()

    print("\n✅ All reporting tests completed!")

if __name__ == "__main__":
    main()
