from .check_base import Check
from .check_engine import CheckEngine
from .checks import default_checks
from .export_manager import ExportManager
from .report_builder import ReportBuilder
