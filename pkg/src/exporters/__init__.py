from .base import BaseReportExporter, file_stem, witness_summary
from .json_export import JsonExporter
from .text import TextExporter

EXPORTER_REGISTRY = {
    "text": TextExporter,
    "json": JsonExporter,
}

__all__ = [
    "BaseReportExporter",
    "EXPORTER_REGISTRY",
    "JsonExporter",
    "TextExporter",
    "file_stem",
    "witness_summary",
]
