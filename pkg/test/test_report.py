import json

import pytest

from braidkit import CheckReport, Status, dump_json, format_reports, format_rows, summarize


@pytest.fixture
def reports() -> list:
    return [
        CheckReport('C11', 3, 0, Status.PASS, '2 identities verified', 5),
        CheckReport('N11', 3, 0, Status.FAIL, '∂(A[0,1]) = z_2^3: s1^4 != s1^6', 2),
        CheckReport('C15', 3, 0, Status.SKIP, 'requires 4 <= n <= 5', 0),
    ]


def test_format_rows():
    data = [{'a': 1, 'bb': 'x\ny'}]
    assert format_rows(data) == 'a  bb\n-  --\n1  x\n   y'


def test_format_reports(reports):
    text = format_reports(reports)
    lines = text.split('\n')
    assert lines[0].split() == ['check', 'n', 'seed', 'status', 'ms', 'witness']
    assert 'N11' in lines[3] and 'fail' in lines[3]
    assert lines[-1] == 'total 3, passed 1, failed 1, skipped 1'
    assert format_reports([]) == 'total 0, passed 0, failed 0, skipped 0'


def test_long_witness_is_wrapped():
    report = CheckReport('C0', 3, 0, Status.FAIL, 'x' * 200, 1)
    lines = format_reports([report]).split('\n')
    # 表头, 分隔线, 三行见证, 空行, 汇总.
    assert len(lines) == 7
    assert lines[2].endswith('x' * 96)
    assert lines[4].strip() == 'x' * 8


def test_summarize(reports):
    summary = summarize(reports)
    assert summary['version'] == 1
    assert (summary['total'], summary['passed'], summary['failed'], summary['skipped']) == (3, 1, 1, 1)
    assert summary['reports'][1] == {
        'check': 'N11',
        'n': 3,
        'seed': 0,
        'status': 'fail',
        'witness': '∂(A[0,1]) = z_2^3: s1^4 != s1^6',
        'elapsed_ms': 2,
    }


def test_dump_json(reports):
    text = dump_json(summarize(reports))
    assert '∂(A[0,1])' in text
    assert text.startswith('{\n    "version": 1')
    assert json.loads(text)['total'] == 3
