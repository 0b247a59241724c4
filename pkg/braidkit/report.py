__all__ = (
    'REPORT_VERSION',
    'dump_json', 'format_reports', 'format_rows', 'summarize',
)

import json
from collections import defaultdict
from typing import TYPE_CHECKING, Any, Dict, List, Sequence

from more_itertools import sliced

if TYPE_CHECKING:
    from .verifier import CheckReport

REPORT_VERSION = 1

# 文本表格中见证信息每行的最大宽度.
WITNESS_WIDTH = 96


def format_rows(data: List[dict]) -> str:
    """用更可读的形式展示数据, 单元格中的换行会拆成多行并与所在列对齐."""
    lens = defaultdict(int)
    for row in data:
        for k, v in row.items():
            lens[k] = max(max(map(len, str(v).split('\n'))), lens[k])
    lens = {k: max(len(k), v) for k, v in lens.items()}

    res = [
        '  '.join('{:<{}}'.format(k, v) for k, v in lens.items()),
        '  '.join('{:<{}}'.format('-' * v, v) for v in lens.values()),
    ]

    for row in data:
        cells = {k: str(v).split('\n') for k, v in row.items()}
        height = max(map(len, cells.values()))
        for line in range(height):
            res.append('  '.join(
                '{:<{}}'.format(cell[line] if line < len(cell) else '', lens[k])
                for k, cell in cells.items()
            ).rstrip())
    return '\n'.join(res)


def _wrap(text: str, width: int = WITNESS_WIDTH) -> str:
    return '\n'.join(sliced(text, width)) if text else ''


def format_reports(reports: Sequence['CheckReport']) -> str:
    rows = [
        {
            'check': report.check,
            'n': report.n,
            'seed': report.seed,
            'status': report.status.value,
            'ms': report.elapsed_ms,
            'witness': _wrap(report.witness),
        }
        for report in reports
    ]
    summary = summarize(reports)
    tail = (f"total {summary['total']}, passed {summary['passed']}, "
            f"failed {summary['failed']}, skipped {summary['skipped']}")
    return format_rows(rows) + '\n\n' + tail if rows else tail


def summarize(reports: Sequence['CheckReport']) -> Dict[str, Any]:
    """{version, total, passed, failed, skipped, reports}."""
    return {
        'version': REPORT_VERSION,
        'total': len(reports),
        'passed': sum(report.is_pass for report in reports),
        'failed': sum(report.is_fail for report in reports),
        'skipped': sum(report.is_skip for report in reports),
        'reports': [report.to_dict() for report in reports],
    }


def dump_json(data: Any) -> str:
    """四空格缩进, 保留非 ASCII 字符."""
    return json.dumps(data, indent=4, ensure_ascii=False)
