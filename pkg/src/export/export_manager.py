"""
Report export service for the Restriction Stability Toolkit.

Renders lists of row dicts (every value already a canonical string) as CSV,
JSON or a plain-text table, and either returns the text or writes it to disk.
The caller passes a configuration dict, as with the other services.

Usage example::

    mgr = ExportManager()
    result = mgr.export({
        "format": "csv",
        "columns": ["criterion", "d", "lhs", "rhs", "satisfied"],
        "rows": [report.to_row() for report in reports],
        "header": {"hypotheses": ["C integral, user-asserted"]},
        "output_path": "exports/sweep.csv",
    })
    if result["success"]:
        print("Exported to", result["files"])

CSV output puts the header block on leading ``#`` lines, then the mandatory
column row. JSON output is ``{"header": ..., "rows": [...]}`` with sorted
keys. Identical input gives byte-identical output.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from src.utils import messages

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "table")


def render_csv(rows: Sequence[Dict[str, Any]], columns: Sequence[str],
               header: Optional[Dict[str, Any]] = None) -> str:
    buffer = io.StringIO()
    for line in _header_lines(header):
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row.get(column, "") for column in columns])
    return buffer.getvalue()


def render_json(rows: Sequence[Dict[str, Any]], columns: Sequence[str],
                header: Optional[Dict[str, Any]] = None, extra: Optional[Dict[str, Any]] = None) -> str:
    document: Dict[str, Any] = {"header": header or {}, "rows": [
        {column: row.get(column, "") for column in columns} for row in rows
    ]}
    if extra:
        document.update(extra)
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_table(rows: Sequence[Dict[str, Any]], columns: Sequence[str],
                 header: Optional[Dict[str, Any]] = None) -> str:
    lines = list(_header_lines(header))
    if rows:
        frame = pd.DataFrame([[str(row.get(column, "")) for column in columns] for row in rows], columns=list(columns))
        lines.append(frame.to_string(index=False))
    else:
        lines.append("(no rows)")
    return "\n".join(lines) + "\n"


def _header_lines(header: Optional[Dict[str, Any]]) -> List[str]:
    lines: List[str] = []
    for key, value in (header or {}).items():
        if isinstance(value, (list, tuple)):
            lines.append(f"{key}:")
            lines.extend(f"  - {item}" for item in value)
        else:
            lines.append(f"{key}: {value}")
    return lines


class ExportManager:
    """Serialise report rows to CSV, JSON or table text.

    All export operations are driven by a single configuration dict passed to
    ``export()``.
    """

    def render(self, config: Dict[str, Any]) -> str:
        """Return the rendered text for *config* without touching the disk."""
        format_type = str(config.get("format", "table")).strip().lower()
        rows = config.get("rows", [])
        columns = config.get("columns") or (list(rows[0].keys()) if rows else [])
        header = config.get("header")
        if format_type == "csv":
            return render_csv(rows, columns, header)
        if format_type == "json":
            return render_json(rows, columns, header, config.get("extra"))
        if format_type == "table":
            return render_table(rows, columns, header)
        raise ValueError(messages.ExportMessages.unsupported_format.format(format=format_type))

    def export(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Render and, when ``output_path`` is set, write the result.

        Args:
            config: Dictionary containing export configuration:
                - format: "csv", "json" or "table"
                - rows: list of dicts of canonical strings
                - columns: column order (defaults to the first row's keys)
                - header: dict echoed before the rows
                - extra: additional top-level JSON keys
                - output_path: optional destination path

        Returns:
            Dict with 'success' (bool), 'message' (str), 'files' (list of
            paths) and 'text' (the rendering).
        """
        format_type = str(config.get("format", "table")).strip().lower()
        if format_type not in FORMATS:
            raise ValueError(messages.ExportMessages.unsupported_format.format(format=format_type))
        try:
            text = self.render(config)
            files: List[str] = []
            if config.get("output_path"):
                path = Path(config["output_path"])
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(text, encoding="utf-8", newline="")
                files.append(str(path))
                logger.info(messages.ExportMessages.written.format(path=path))
            return {
                "success": True,
                "message": f"Successfully exported to {', '.join(files)}" if files else "Rendered",
                "files": files,
                "text": text,
            }
        except OSError as e:
            logger.error(messages.ExportMessages.failed.format(error=e))
            return {
                "success": False,
                "message": messages.ExportMessages.failed.format(error=e),
                "files": [],
                "text": "",
            }
