"""
Base Report Exporter Module

Provides the abstract base class for certificate report formats.
Each format (text, JSON) inherits from BaseReportExporter and implements
how a single certificate and a whole run are rendered.
"""

import io
import re
import zipfile
from abc import ABC, abstractmethod
from collections import Counter
from typing import Dict, List, Sequence

import pandas as pd

from criteria import Certificate

SUMMARY_COLUMNS = [
    "space",
    "family",
    "verdict",
    "expected",
    "route",
    "witness",
    "failed_condition",
    "honil_lower",
    "honil_upper",
    "facts",
    "repairs",
]


def witness_summary(cert: Certificate) -> str:
    """One-line description of the witness, empty if there is none."""
    data = cert.witness.to_dict() if cert.witness is not None else None
    if data is None:
        return ""
    if data["kind"] == "d2":
        return f"d {data['generator']} ~ {data['quadratic_part']}"
    if data["kind"] == "steenrod":
        return data["expansion"]
    return "facts: " + ", ".join(data["facts"])


def file_stem(cert: Certificate) -> str:
    """'AIII(2,3)' -> 'AIII_2_3'."""
    return re.sub(r"[^A-Za-z0-9]+", "_", cert.space).strip("_")


class BaseReportExporter(ABC):
    """
    Abstract base class for report formats.

    Takes the certificates of one run, in canonical order, and renders a
    combined report, one file per space and a summary table.

    To add a new format:
        1. Create a new file in src/exporters/ (e.g., markdown.py)
        2. Subclass BaseReportExporter
        3. Implement all abstract methods
        4. Register it in EXPORTER_REGISTRY in src/exporters/__init__.py
    """

    def __init__(self, certificates: Sequence[Certificate]):
        self.certificates: List[Certificate] = list(certificates)

    # ------------------------------------------------------------------ #
    #  Abstract methods                                                    #
    # ------------------------------------------------------------------ #

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Return the format name (e.g., 'text', 'json')."""

    @property
    @abstractmethod
    def file_extension(self) -> str:
        """Return the extension of rendered files, without the dot."""

    @abstractmethod
    def render_certificate(self, cert: Certificate) -> str:
        """Render one certificate."""

    @abstractmethod
    def render_report(self) -> str:
        """Render every certificate of the run as one document."""

    # ------------------------------------------------------------------ #
    #  Common methods                                                      #
    # ------------------------------------------------------------------ #

    def verdict_counts(self) -> Dict[str, int]:
        counts = Counter(c.verdict.value for c in self.certificates)
        return {verdict: counts[verdict] for verdict in sorted(counts)}

    def unexpected(self) -> List[Certificate]:
        """Certificates that are Inconclusive or disagree with the expected verdict."""
        return [c for c in self.certificates if not (c.definitive and c.as_expected)]

    def summary_frame(self) -> pd.DataFrame:
        """One row per certificate."""
        rows = []
        for cert in self.certificates:
            rows.append({
                "space": cert.space,
                "family": cert.family,
                "verdict": cert.verdict.value,
                "expected": cert.expected,
                "route": cert.route,
                "witness": witness_summary(cert),
                "failed_condition": cert.failed_condition or "",
                "honil_lower": cert.nilpotency.lower if cert.nilpotency else pd.NA,
                "honil_upper": cert.nilpotency.upper if cert.nilpotency else pd.NA,
                "facts": len(cert.facts),
                "repairs": len(cert.repairs),
            })
        frame = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
        return frame.astype({"honil_lower": "Int64", "honil_upper": "Int64"})

    def export(self) -> Dict[str, object]:
        """
        Export all report files.

        Returns:
            Dict mapping filename -> content (DataFrame for CSVs, str otherwise).
        """
        ext = self.file_extension
        files: Dict[str, object] = {f"report.{ext}": self.render_report()}
        for cert in self.certificates:
            files[f"spaces/{file_stem(cert)}.{ext}"] = self.render_certificate(cert)
        files["summary.csv"] = self.summary_frame()
        return files

    def export_zip(self) -> bytes:
        """Export all files as an in-memory ZIP archive."""
        files = self.export()
        buf = io.BytesIO()
        with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as zf:
            for filename, content in files.items():
                if isinstance(content, pd.DataFrame):
                    zf.writestr(filename, content.to_csv(index=False))
                else:
                    zf.writestr(filename, content)
        return buf.getvalue()
