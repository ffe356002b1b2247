"""
评测报告的输入与输出

- 摘要文件: summarize 的 JSON 输出（取 selected 字段）或每行一个句子序号
- 报告: JSON（键排序，可复现）与 rich 对齐表格
"""

import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from rich.console import Console
from rich.table import Table

from evaluation.metrics import KeyphraseReport, SimilarityReport, macro_average
from ingest.normalizer import decode_utf8
from utils.errors import ParseError

logger = logging.getLogger(__name__)

Report = Union[KeyphraseReport, SimilarityReport]


def parse_summary_indices(text: str) -> List[int]:
    """
    解析摘要文件内容

    Raises:
        ParseError: 既不是带 selected 字段的 JSON，也不是每行一个整数
    """
    stripped = text.strip()
    if stripped.startswith('{'):
        try:
            payload = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise ParseError(e.lineno, f"invalid summary JSON: {e.msg}") from None
        summary = payload.get('summary', payload)
        selected = summary.get('selected') if isinstance(summary, dict) else None
        if not isinstance(selected, list) or not all(isinstance(i, int) for i in selected):
            raise ParseError(1, "summary JSON has no integer 'selected' list")
        return selected

    indices = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            indices.append(int(line.strip()))
        except ValueError:
            raise ParseError(line_no, f"expected a sentence index, got {line.strip()!r}") from None
    return indices


def load_summary_indices(path: Union[str, Path]) -> List[int]:
    """从文件读取摘要句子序号"""
    return parse_summary_indices(decode_utf8(Path(path).read_bytes()))


def build_report(per_document: Sequence[Tuple[str, Report]]) -> Dict:
    """逐文档结果 + 宏平均"""
    return {
        "documents": [{"id": doc_id, **asdict(report)} for doc_id, report in per_document],
        "macro_average": macro_average([r for _, r in per_document]),
    }


def report_to_json(report: Dict) -> str:
    """确定性 JSON（键排序）"""
    return json.dumps(report, ensure_ascii=False, indent=2, sort_keys=True) + "\n"


def _format_cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def render_report_table(report: Dict, title: str, console: Console):
    """将报告渲染为对齐表格"""
    documents = report.get("documents", [])
    if not documents:
        console.print(f"[yellow]{title}: no documents[/yellow]")
        return

    columns = [key for key in documents[0] if key != "id"]
    table = Table(title=title, show_lines=False)
    table.add_column("document", style="cyan")
    for column in columns:
        table.add_column(column, justify="right")

    for row in documents:
        table.add_row(row["id"], *(_format_cell(row[c]) for c in columns))

    average = report.get("macro_average", {})
    if len(documents) > 1 and average:
        table.add_row("macro average", *(_format_cell(average.get(c, "")) for c in columns), style="bold")

    console.print(table)
