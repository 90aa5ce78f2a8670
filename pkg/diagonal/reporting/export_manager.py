import json
import os
import logging
from typing import Dict, Any
from datetime import datetime

from ..exceptions import ConfigError
from .report_builder import ReportBuilder

logger = logging.getLogger(__name__)


class ExportManager:
    """
    Handles exporting reports to disk in various formats.
    """

    def export_to_json(self, report: Dict[str, Any], output_path: str):
        """
        Save report as JSON.
        """
        report_data = report.copy()
        report_data["generated_at"] = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        self._write(json.dumps(report_data, indent=4), output_path, "JSON")

    def export_to_txt(self, report: Dict[str, Any], output_path: str):
        """
        Save report as a formatted text file.
        """
        lines = []
        lines.append("# REPRODUCTION REPORT")
        lines.append(f"Generated on: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        lines.append(f"Subset: {'fast' if report.get('fast') else 'full'}")
        lines.append("")
        lines.extend(ReportBuilder().build_table(report))
        self._write("\n".join(lines), output_path, "Text")

    def _write(self, content: str, output_path: str, kind: str):
        try:
            os.makedirs(os.path.dirname(output_path) or ".", exist_ok=True)
            with open(output_path, 'w', encoding='utf-8') as f:
                f.write(content)
        except OSError as e:
            logger.error(f"Failed to export {kind} report: {e}")
            raise ConfigError(f"Cannot write report to {output_path}: {e}") from e
        logger.info(f"{kind} report saved to {output_path}")
