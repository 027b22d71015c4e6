"""
Data Export Module
Serialises run reports and scan grids
"""

import csv
import json
from io import StringIO
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from logger import logger


def _plain(value: Any) -> Any:
    """JSON-safe form of numpy scalars, arrays and complex numbers"""
    if isinstance(value, np.ndarray):
        return _plain(value.tolist())
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, float) and not np.isfinite(value):
        return str(value)
    return value


class DataExporter:
    """Export reports in JSON, CSV or a Markdown table"""

    @staticmethod
    def to_json(data: Any, indent: Optional[int] = 2) -> str:
        """Deterministic JSON: sorted keys, numpy values converted"""
        return json.dumps(_plain(data), indent=indent, sort_keys=True)

    @staticmethod
    def to_csv(rows: Sequence[Sequence[Any]], header: Sequence[str]) -> str:
        """Export rows as CSV"""
        output = StringIO()
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return output.getvalue()

    @staticmethod
    def to_markdown(data: List[Dict[str, Any]]) -> str:
        """Export records as a Markdown table"""
        if not data:
            return ""

        keys = list(data[0].keys())
        lines = ["| " + " | ".join(keys) + " |", "|" + "|".join(["---"] * len(keys)) + "|"]
        for row in data:
            values = [_cell(row.get(k, "")) for k in keys]
            lines.append("| " + " | ".join(values) + " |")

        return "\n".join(lines)

    @staticmethod
    def write(text: str, path: Union[str, Path, None]) -> None:
        """Write to a file, or to stdout when no path is given"""
        if path is None:
            print(text)
            return
        Path(path).write_text(text + ("" if text.endswith("\n") else "\n"))
        logger.info(f"Wrote {path}")


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.3e}"
    if isinstance(value, bool):
        return "PASS" if value else "FAIL"
    return str(value)
