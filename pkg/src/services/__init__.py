from .generator_service import OUTPUT_FORMATS, GeneratorService
from .analysis_service import CHECK_KINDS, AnalysisService
from .report_service import TABLES, ReportService

__all__ = [
    'GeneratorService', 'AnalysisService', 'ReportService',
    'OUTPUT_FORMATS', 'CHECK_KINDS', 'TABLES',
]
