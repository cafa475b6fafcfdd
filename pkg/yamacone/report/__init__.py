"""Report assembly and serialization."""

from yamacone.report.builder import (
    Report,
    classify_report,
    geometry_report,
    spectral_report,
    to_jsonable,
)
from yamacone.report.emit import (
    emit_portrait,
    portrait_csv,
    portrait_svg,
    report_json,
    trajectories_csv,
    write_text,
)

__all__ = [
    "Report",
    "classify_report",
    "emit_portrait",
    "geometry_report",
    "portrait_csv",
    "portrait_svg",
    "report_json",
    "spectral_report",
    "to_jsonable",
    "trajectories_csv",
    "write_text",
]
