"""Report rows and the CSV/JSON emission contract.

CSV is for humans and plots: 10 significant digits, LF endings, header
exactly x,observed,predicted,residual, empty fields where a function
has no predicted leading term. JSON is for regression comparison:
shortest round-trip floats and stable key order, so parse-and-re-emit
is byte-identical.
"""

import json
from dataclasses import dataclass

from .outcomes import VerificationOutcome

TABLE_HEADER = ("x", "observed", "predicted", "residual")


@dataclass(frozen=True)
class ReportRow:
    x: int
    columns: dict[str, float | int | None]


def format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, int):
        return str(v)
    return f"{v:.10g}"


def rows_to_csv(rows: list[ReportRow]) -> str:
    lines = [",".join(TABLE_HEADER)]
    for row in rows:
        cells = [str(row.x)] + [format_value(row.columns.get(name))
                                for name in TABLE_HEADER[1:]]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _row_payload(row: ReportRow) -> dict:
    payload: dict = {"x": row.x}
    for name in TABLE_HEADER[1:]:
        payload[name] = row.columns.get(name)
    return payload


def _outcome_payload(outcome: VerificationOutcome) -> dict:
    w = outcome.worst_witness
    return {
        "name": outcome.name,
        "range": list(outcome.range),
        "passed": outcome.passed,
        "worst_witness": None if w is None else {
            "input": w.input, "lhs": w.lhs, "rhs": w.rhs, "margin": w.margin,
        },
    }


def report_json(config: dict, rows: list[ReportRow],
                outcomes: list[VerificationOutcome]) -> str:
    payload = {
        "config": config,
        "rows": [_row_payload(r) for r in rows],
        "outcomes": [_outcome_payload(o) for o in outcomes],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
