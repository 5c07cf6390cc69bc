"""Derived documents: certificates, grade reports, item analysis."""
from .reports import (
    GRADE_REPORT_COLUMNS,
    Certificate,
    CertificateRow,
    GradeReport,
    GradeReportRow,
    ItemAnalysisReport,
    ItemReportRow,
    build_certificate,
    certificate_html,
    grade_report,
    grade_report_csv,
    item_analysis_report,
)

__all__ = [
    "GRADE_REPORT_COLUMNS",
    "Certificate",
    "CertificateRow",
    "GradeReport",
    "GradeReportRow",
    "ItemAnalysisReport",
    "ItemReportRow",
    "build_certificate",
    "certificate_html",
    "grade_report",
    "grade_report_csv",
    "item_analysis_report",
]
