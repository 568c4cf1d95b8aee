"""
Classification

Dispatches a space to its route, adds the rational cross-check for
known-result spaces and the homotopy-nilpotency bounds for flag manifolds,
and classifies whole catalogs with a thread pool while keeping the
canonical order.
"""

import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List

from families import Route, SpaceSpec

from .certificate import Certificate, NilpotencyBounds, Verdict, consumed_facts, fact_certificate, finalize
from .rational import rational_route
from .steenrod_route import steenrod_route

LOGGER = logging.getLogger(__name__)

NILPOTENCY_FACTS = ("zabrodsky-honil", "torus-honil")


def nilpotency_bounds(cert: Certificate) -> NilpotencyBounds:
    """honil = 2 for a flag manifold G/T whose loop space is not homotopy commutative."""
    witness = cert.witness.generator.name if cert.witness is not None else "the witness"
    return NilpotencyBounds(
        lower=2,
        upper=2,
        justification=(
            f"lower: d {witness} has a nonzero quadratic part, so Omega {cert.title} is not homotopy commutative",
            "upper: honil(Omega(G/T)) <= honil(T) + 1 = 2 with T a maximal torus",
        ),
    )


def _known_result(spec: SpaceSpec, reverse_ties: bool) -> Certificate:
    cert = fact_certificate(spec, "known_result")
    if spec.fiber is not None:
        rational = rational_route(spec, reverse_ties)
        summary = {
            "kind": "rational",
            "verdict": rational.verdict.value,
            "witness": rational.witness.to_dict() if rational.witness is not None else None,
            "failed_condition": rational.failed_condition,
        }
        cert = dataclasses.replace(cert, alternates=cert.alternates + (summary,))
    return cert


def classify(spec: SpaceSpec, reverse_ties: bool = False) -> Certificate:
    """Classify one space; the result has passed the soundness gate."""
    LOGGER.info("classifying %s via %s", spec.label, spec.route.value)
    if spec.route is Route.KNOWN_RESULT:
        cert = _known_result(spec, reverse_ties)
    elif spec.route is Route.RATIONAL:
        cert = rational_route(spec, reverse_ties)
    else:
        cert = steenrod_route(spec)

    if spec.nilpotency and cert.verdict is Verdict.NOT_HOMOTOPY_COMMUTATIVE:
        facts = consumed_facts(spec, [f.id for f in cert.facts] + list(NILPOTENCY_FACTS))
        cert = dataclasses.replace(cert, nilpotency=nilpotency_bounds(cert), facts=facts)

    cert = finalize(cert)
    LOGGER.info("%s: %s", spec.label, cert.verdict.value)
    return cert


def classify_all(specs: Iterable[SpaceSpec], jobs: int = 1, reverse_ties: bool = False) -> List[Certificate]:
    """Certificates for every spec, in input order regardless of jobs."""
    specs = list(specs)
    if jobs <= 1:
        return [classify(spec, reverse_ties) for spec in specs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda spec: classify(spec, reverse_ties), specs))
