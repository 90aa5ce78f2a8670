import logging
import os
from typing import Optional

from diagonal.loaders import load_config
from diagonal.reporting import CheckEngine, ExportManager, ReportBuilder, default_checks
from diagonal.settings import Settings

logger = logging.getLogger(__name__)


class ReportService:
    """
    Coordinates the report: config -> checks -> report -> exports.
    """

    def __init__(self, config_path: Optional[str] = None, checks=None):
        self.config_path = config_path or Settings.REPORT_CONFIG
        self.checks = checks if checks is not None else default_checks()
        self.report_builder = ReportBuilder()
        self.export_manager = ExportManager()

    def run(self, fast: bool = False, output_dir: Optional[str] = None) -> dict:
        """
        Main entry point: run every enabled check and build the report.
        """
        config = load_config(self.config_path)
        logger.info(f"Running {'fast' if fast else 'full'} report with {self.config_path}")
        engine = CheckEngine(self.checks, config)
        results = engine.run(fast=fast)
        report = self.report_builder.build_final_report(results, fast=fast)

        if output_dir:
            self.export_manager.export_to_json(report, os.path.join(output_dir, "report.json"))
            self.export_manager.export_to_txt(report, os.path.join(output_dir, "report.txt"))
        return report
