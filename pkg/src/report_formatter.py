"""
Report formatter for the permutation-code CLI
"""

import json
import logging
from typing import Any, Dict, List, Sequence, Union

import pandas as pd

from .config import RunConfig
from .reports import Report

logger = logging.getLogger(__name__)

Reports = Union[Report, Sequence[Report]]


class ReportFormatter:
    """Renders reports as an aligned table, JSON or CSV"""

    def __init__(self, fmt: str = "table"):
        self.fmt = fmt

    def format(self, reports: Reports) -> str:
        """Serialise a single report or a list of reports"""
        single = isinstance(reports, Report)
        items: List[Report] = [reports] if single else list(reports)

        if self.fmt == "json":
            return self._to_json(items, single)
        if self.fmt == "csv":
            return self._to_csv(items)
        return self._to_table(items)

    def _to_json(self, items: List[Report], single: bool) -> str:
        if single:
            return items[0].model_dump_json(indent=2)
        return json.dumps([item.model_dump(mode="json") for item in items], indent=2)

    def _flat_rows(self, items: List[Report]) -> pd.DataFrame:
        """One row per report: nested lists removed, dicts flattened, empty sparse columns dropped"""
        rows: List[Dict[str, Any]] = []
        for item in items:
            rows.append(item.model_dump(mode="json", exclude=set(item.nested_fields)))
        frame = pd.json_normalize(rows, sep="_")
        sparse = {column for item in items for column in item.sparse_columns}
        empty = [c for c in frame.columns if c in sparse and frame[c].isna().all()]
        return frame.drop(columns=empty)

    def _to_csv(self, items: List[Report]) -> str:
        if not items:
            return ""
        return self._flat_rows(items).to_csv(index=False, lineterminator="\n").rstrip("\n")

    def _to_table(self, items: List[Report]) -> str:
        if not items:
            return ""
        lines = [item.summary_line() for item in items]
        if all(line is not None for line in lines):
            return "\n".join(lines)
        frame = self._flat_rows(items).fillna("")
        return frame.to_string(index=False)


def emit(reports: Reports, config: RunConfig) -> str:
    """Serialise reports in the configured output format"""
    text = ReportFormatter(config.format).format(reports)
    logger.debug(f"Emitted {config.format} output ({len(text)} chars)")
    return text
