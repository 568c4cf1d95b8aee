"""
Loop Commutativity Certifier: Streamlit Web Interface

A web UI for browsing the space catalog, classifying single spaces and
whole catalogs, and downloading the resulting certificates. Wraps the
family and criteria classes with an interactive Streamlit frontend.

Run with:
    streamlit run app.py
"""

import os
import sys

import pandas as pd
import streamlit as st

# ---------------------------------------------------------------------------
#  Make the src/ package importable
# ---------------------------------------------------------------------------
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from criteria import Certificate, classify
from exporters import EXPORTER_REGISTRY, file_stem, witness_summary
from families import DEFAULT_MAX_PARAM, FAMILY_REGISTRY, Catalog, CatalogError, SelectorError


# ===================================================================== #
#  Helper functions                                                      #
# ===================================================================== #

@st.cache_resource
def load_catalog() -> Catalog:
    return Catalog.from_file()


def conditions_frame(cert: Certificate) -> pd.DataFrame:
    """Checklist of a certificate as a table."""
    rows = [
        {"condition": c.id, "status": c.status.value, "facts": ", ".join(c.facts), "detail": c.detail}
        for c in cert.conditions
    ]
    return pd.DataFrame(rows, columns=["condition", "status", "facts", "detail"])


def facts_frame(cert: Certificate) -> pd.DataFrame:
    rows = [{"id": f.id, "role": f.role, "statement": f.statement, "citation": f.citation} for f in cert.facts]
    return pd.DataFrame(rows, columns=["id", "role", "statement", "citation"])


def parameter_inputs(family) -> dict:
    """Sidebar widgets for the family's parameters, bounded by the catalog ranges."""
    params = {}
    for pname in family.parameter_names:
        bounds = family.parameter_ranges.get(pname, {})
        if "choices" in bounds:
            params[pname] = st.selectbox(pname, options=bounds["choices"])
        else:
            minimum = bounds.get("min", 1)
            params[pname] = st.number_input(pname, min_value=minimum, value=max(minimum, 2), step=1)
    return params


def run_all(catalog: Catalog, max_param: int) -> list:
    """Classify every catalog space up to max_param with a progress bar."""
    specs = catalog.spaces(max_param)
    progress = st.progress(0, text="Classifying...")
    certificates = []
    for i, spec in enumerate(specs, 1):
        certificates.append(classify(spec))
        progress.progress(int(100 * i / len(specs)), text=f"Classified {spec.label}")
    progress.progress(100, text="Done!")
    return certificates


# ===================================================================== #
#  Streamlit app                                                         #
# ===================================================================== #

def show_certificate(cert: Certificate, export_format: str) -> None:
    verdict_col, route_col, facts_col = st.columns(3)
    verdict_col.metric("Verdict", cert.verdict.value)
    route_col.metric("Route", cert.route)
    facts_col.metric("Facts consumed", len(cert.facts))
    st.caption(cert.title)

    if cert.failed_condition:
        st.warning(f"First failed or unavailable item: **{cert.failed_condition}**")
    witness = witness_summary(cert)
    if witness:
        st.markdown(f"**Witness:** `{witness}`")
    if cert.nilpotency is not None:
        st.markdown(f"**Homotopy nilpotency:** {cert.nilpotency.lower} <= honil <= {cert.nilpotency.upper}")
        for line in cert.nilpotency.justification:
            st.markdown(f"- {line}")

    st.markdown("**Conditions**")
    st.dataframe(conditions_frame(cert), use_container_width=True, hide_index=True)
    with st.expander(f"Facts ({len(cert.facts)})"):
        st.dataframe(facts_frame(cert), use_container_width=True, hide_index=True)
    if cert.repairs:
        with st.expander(f"Catalog repairs ({len(cert.repairs)})"):
            st.dataframe(pd.DataFrame([r.to_dict() for r in cert.repairs]), use_container_width=True, hide_index=True)
    if cert.model is not None:
        with st.expander("Minimal model"):
            st.code(cert.model.dump_text("minimal"))
    for note in cert.notes:
        st.caption(note)

    exporter = EXPORTER_REGISTRY[export_format]([cert])
    st.download_button(
        label=f"Download certificate ({export_format})",
        data=exporter.render_certificate(cert),
        file_name=f"{file_stem(cert)}.{exporter.file_extension}",
        mime="application/json" if export_format == "json" else "text/plain",
    )


def main():
    st.set_page_config(
        page_title="Loop Commutativity Certifier",
        page_icon=":infinity:",
        layout="wide",
    )

    # ------------------------------------------------------------------ #
    #  Header                                                             #
    # ------------------------------------------------------------------ #
    st.title("Loop Commutativity Certifier")
    st.markdown(
        "Decide with exact arithmetic whether the loop space of a Hermitian "
        "symmetric space or flag manifold fails to be homotopy commutative."
    )

    try:
        catalog = load_catalog()
    except CatalogError as exc:
        st.error(str(exc))
        return

    # ------------------------------------------------------------------ #
    #  Sidebar configuration                                              #
    # ------------------------------------------------------------------ #
    with st.sidebar:
        st.header("Configuration")
        family_name = st.selectbox("Family", options=list(FAMILY_REGISTRY.keys()))
        family = catalog.family(family_name)
        st.caption(family.description)
        params = parameter_inputs(family)

        export_format = st.selectbox("Export format", options=list(EXPORTER_REGISTRY.keys()))
        classify_clicked = st.button("Classify", type="primary", use_container_width=True)

        st.divider()
        max_param = st.slider("Largest parameter for 'classify all'", 3, 12, DEFAULT_MAX_PARAM)
        classify_all_clicked = st.button("Classify all", use_container_width=True)

    # ------------------------------------------------------------------ #
    #  Classification triggers                                            #
    # ------------------------------------------------------------------ #
    if classify_clicked:
        try:
            spec = family.space(**params)
        except SelectorError as exc:
            st.error(str(exc))
        else:
            st.session_state["certificate"] = classify(spec)

    if classify_all_clicked:
        st.session_state["certificates"] = run_all(catalog, max_param)

    # ------------------------------------------------------------------ #
    #  Main area                                                          #
    # ------------------------------------------------------------------ #
    if "certificate" not in st.session_state and "certificates" not in st.session_state:
        st.info("Choose a space in the sidebar and click **Classify** to get started.")

    if "certificate" in st.session_state:
        cert = st.session_state["certificate"]
        st.subheader(f"Certificate: {cert.space}")
        show_certificate(cert, export_format)

    if "certificates" in st.session_state:
        certificates = st.session_state["certificates"]
        exporter = EXPORTER_REGISTRY[export_format](certificates)
        st.subheader(f"Catalog run ({len(certificates)} spaces)")
        counts = exporter.verdict_counts()
        cols = st.columns(max(len(counts), 1))
        for col, (verdict, count) in zip(cols, counts.items()):
            col.metric(verdict, count)
        unexpected = exporter.unexpected()
        if unexpected:
            st.warning("Unexpected verdicts: " + ", ".join(c.space for c in unexpected))
        st.dataframe(exporter.summary_frame(), use_container_width=True, hide_index=True)
        st.download_button(
            label="Download everything (ZIP)",
            data=exporter.export_zip(),
            file_name=f"certificates_{exporter.format_name}.zip",
            mime="application/zip",
        )

    # ------------------------------------------------------------------ #
    #  About section                                                      #
    # ------------------------------------------------------------------ #
    st.divider()
    with st.expander("About this tool"):
        st.markdown("""
**Routes:**

- **rational**: build the Sullivan model of the homotopy fiber, minimize it and
  look for a differential with a nonzero quadratic part (CI, DIII, EVII, flag manifolds)
- **steenrod**: find an operation theta and spherical classes a, b with theta(x)
  containing a b, then check the four conditions (AIII, BDI, EIII)
- **known_result**: verdicts resting on catalog facts (CP^n; BDI when n + 1 is not a power of 2)

Every definitive verdict passes a soundness gate: each condition is either
checked by computation or backed by a cited fact.
""")


if __name__ == "__main__":
    main()
