"""
Plain-Text Report Exporter

Renders certificates as indented plain text, the format the CLI prints by
default. Output is deterministic: identical runs give identical bytes.
"""

from typing import List

from criteria import Certificate

from .base import BaseReportExporter, witness_summary


class TextExporter(BaseReportExporter):
    """Human-readable certificates."""

    @property
    def format_name(self) -> str:
        return "text"

    @property
    def file_extension(self) -> str:
        return "txt"

    def render_certificate(self, cert: Certificate) -> str:
        lines: List[str] = [f"space: {cert.space}  {cert.title}"]
        lines.append(f"verdict: {cert.verdict.value} (route: {cert.route})")
        if cert.failed_condition:
            lines.append(f"failed condition: {cert.failed_condition}")
        if not cert.as_expected:
            lines.append(f"expected: {cert.expected}")

        witness = witness_summary(cert)
        if witness:
            lines.append(f"witness: {witness}")
            data = cert.witness.to_dict()
            if data["kind"] == "steenrod":
                lines.append(
                    f"  term {data['term']} with coefficient {data['coefficient']} mod {data['prime']}, "
                    f"|a| = {data['degrees'][0]}, |b| = {data['degrees'][1]}"
                )
            elif data["kind"] == "fact":
                lines += [f"  {line}" for line in data["reasoning"]]

        if cert.conditions:
            lines.append("conditions:")
            for c in cert.conditions:
                cited = f" [{', '.join(c.facts)}]" if c.facts else ""
                lines.append(f"  {c.id}: {c.status.value}{cited}")
                lines.append(f"    {c.detail}")

        if cert.nilpotency is not None:
            n = cert.nilpotency
            lines.append(f"homotopy nilpotency: {n.lower} <= honil <= {n.upper}")
            lines += [f"  {line}" for line in n.justification]

        if cert.alternates:
            lines.append("alternates:")
            for alt in cert.alternates:
                lines.append(f"  {_alternate_line(alt)}")

        if cert.facts:
            lines.append("facts:")
            for f in cert.facts:
                lines.append(f"  {f.id}: {f.statement}")
                lines.append(f"    ({f.citation})")

        if cert.repairs:
            lines.append("repairs:")
            for r in cert.repairs:
                lines.append(
                    f"  {r.family} {r.polynomial}: {r.action} {r.term} "
                    f"(degree {r.degree}, expected {r.expected_degree})"
                )

        if cert.notes:
            lines.append("notes:")
            lines += [f"  {note}" for note in cert.notes]
        return "\n".join(lines) + "\n"

    def render_report(self) -> str:
        blocks = [self.render_certificate(c) for c in self.certificates]
        counts = ", ".join(f"{verdict}: {n}" for verdict, n in self.verdict_counts().items())
        footer = f"{len(self.certificates)} space(s); {counts}\n" if self.certificates else "0 space(s)\n"
        return "\n".join(blocks + [footer])


def _alternate_line(alt: dict) -> str:
    kind = alt.get("kind")
    if kind == "d2":
        return f"d {alt['generator']} ~ {alt['quadratic_part']}"
    if kind == "steenrod-recipe":
        state = "holds" if alt["holds"] else f"fails at {alt['failed_condition']}"
        return f"{alt['label']}: {state}"
    if kind == "rational":
        witness = alt.get("witness")
        found = f", d {witness['generator']} ~ {witness['quadratic_part']}" if witness else ""
        return f"rational route: {alt['verdict']}{found}"
    return str(alt)
