"""
JSON Report Exporter

Renders certificates as JSON in the field order of the shipped certificate
schema (data/certificate.schema.json).
"""

import json

from criteria import Certificate

from .base import BaseReportExporter


class JsonExporter(BaseReportExporter):
    """Machine-readable certificates."""

    @property
    def format_name(self) -> str:
        return "json"

    @property
    def file_extension(self) -> str:
        return "json"

    def render_certificate(self, cert: Certificate) -> str:
        return cert.to_json()

    def render_report(self) -> str:
        report = {
            "certificates": [c.to_dict() for c in self.certificates],
            "summary": {
                "spaces": len(self.certificates),
                "verdicts": self.verdict_counts(),
                "unexpected": [c.space for c in self.unexpected()],
            },
        }
        return json.dumps(report, indent=2) + "\n"
