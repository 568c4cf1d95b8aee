"""
Loop Commutativity Certifier

A command-line tool that decides, with exact arithmetic, whether loop
spaces of Hermitian symmetric spaces and flag manifolds fail to be homotopy
commutative, and emits a certificate for every verdict.

Usage:
    python src/main.py classify --all --max-param 8
    python src/main.py classify --space AIII --m 2 --n 3 --format json
    python src/main.py model --space CI --n 4 --stage minimal
    python src/main.py steenrod --m 2 --p 2 --op sq --k 1 --class 2
    python src/main.py primes --check-r2 --limit 100000
    python src/main.py catalog list

Exit status: 0 when every requested space reaches the expected definitive
verdict, 2 when one is Inconclusive or unexpected, 64 for usage errors and
1 for any other error.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

# Add the src directory to the path so we can import our modules
# This allows running the script from the project root directory
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pandas as pd

from criteria import Certificate, build_fiber_model, classify_all, minimal_model
from exporters import EXPORTER_REGISTRY
from families import (
    DEFAULT_MAX_PARAM,
    FAMILY_REGISTRY,
    Catalog,
    CatalogError,
    SelectorError,
    SpaceSpec,
)
from primes import DEFAULT_PRIME_CAP, choose_p, primes_in_interval, verify_r2
from steenrod import power_op_on_chern

LOGGER = logging.getLogger(__name__)

# Path helpers
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"
DEFAULT_SEED = 20240601

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNEXPECTED = 2
EXIT_USAGE = 64

PARAMETER_FLAGS = ("m", "n", "type", "rank")


@dataclass
class RunConfig:
    """
    Everything one invocation needs, built from the command line.

    Attributes:
        command: 'classify', 'model', 'steenrod', 'primes' or 'catalog'.
        family: Family selector (None with --all).
        params: Parameter selectors given on the command line.
        all_spaces: Classify every catalog space.
        max_param: Enumeration bound for --all.
        degree_bound: Override of every presentation's degree bound.
        prime_cap: Sieve cap.
        output_format: 'text' or 'json'.
        output: File to write instead of stdout.
        export_dir: Directory for the exporter's files.
        jobs: Worker threads for classify.
        log_level: Logging level name.
        catalog_path: Catalog file (None for the default).
        stage: Model stage, 'fiber' or 'minimal'.
        reverse_ties: Break minimization ties by reversed generator order.
        m: Rank m for the steenrod and primes commands.
        prime: Steenrod command prime.
        operation: 'sq' or 'p'.
        index: Operation index k.
        chern_class: Chern class index j.
        check_r2: Run the Ramanujan-prime check.
        limit: Upper limit of that check.
    """
    command: str
    family: Optional[str] = None
    params: Dict[str, object] = field(default_factory=dict)
    all_spaces: bool = False
    max_param: int = DEFAULT_MAX_PARAM
    degree_bound: Optional[int] = None
    prime_cap: int = DEFAULT_PRIME_CAP
    output_format: str = "text"
    output: Optional[str] = None
    export_dir: Optional[str] = None
    jobs: int = 1
    log_level: str = "WARNING"
    catalog_path: Optional[str] = None
    stage: str = "minimal"
    reverse_ties: bool = False
    m: Optional[int] = None
    prime: Optional[int] = None
    operation: str = "sq"
    index: int = 1
    chern_class: Optional[int] = None
    check_r2: bool = False
    limit: int = 100_000

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        def get(name, default=None):
            return getattr(args, name, default)

        return cls(
            command=args.command,
            family=get("space"),
            params={p: get(p) for p in PARAMETER_FLAGS if get(p) is not None},
            all_spaces=get("all", False),
            max_param=get("max_param", DEFAULT_MAX_PARAM),
            degree_bound=args.degree_bound,
            prime_cap=args.prime_cap,
            output_format=get("format", "text"),
            output=get("output"),
            export_dir=get("export_dir"),
            jobs=get("jobs", 1),
            log_level=args.log_level,
            catalog_path=args.catalog,
            stage=get("stage", "minimal"),
            reverse_ties=get("reverse_ties", False),
            m=get("m"),
            prime=get("p"),
            operation=get("op", "sq"),
            index=get("k", 1),
            chern_class=get("chern_class"),
            check_r2=get("check_r2", False),
            limit=get("limit", 100_000),
        )


class UsageExitParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ===================================================================== #
#  Argument parsing                                                      #
# ===================================================================== #

def _add_selectors(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--space", help="family: " + ", ".join(FAMILY_REGISTRY))
    parser.add_argument("--m", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--type", help="Lie type for FLAG (A, B, C, D)")
    parser.add_argument("--rank", type=int)


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=sorted(EXPORTER_REGISTRY), default="text")
    parser.add_argument("--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = UsageExitParser(prog="loopcomm", description="Certify non-commutativity of loop spaces.")
    parser.add_argument("--catalog", help="catalog file (default: $LOOPCOMM_CATALOG or data/catalog.json)")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    parser.add_argument("--degree-bound", type=int, help="override every presentation's degree bound")
    parser.add_argument("--prime-cap", type=int, default=DEFAULT_PRIME_CAP)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageExitParser)

    classify = sub.add_parser("classify", help="classify spaces and print certificates")
    _add_selectors(classify)
    _add_output(classify)
    classify.add_argument("--all", action="store_true", help="every catalog space")
    classify.add_argument("--max-param", type=int, default=DEFAULT_MAX_PARAM)
    classify.add_argument("--export-dir", help="write report, per-space files and summary.csv here")
    classify.add_argument("--jobs", type=int, default=1)
    classify.add_argument("--reverse-ties", action="store_true")

    model = sub.add_parser("model", help="print the Sullivan model of a space")
    _add_selectors(model)
    _add_output(model)
    model.add_argument("--stage", choices=["fiber", "minimal"], default="minimal")
    model.add_argument("--reverse-ties", action="store_true")

    steenrod = sub.add_parser("steenrod", help="Steenrod operation on a Chern class of BU(m)")
    steenrod.add_argument("--m", type=int, required=True)
    steenrod.add_argument("--p", type=int, required=True)
    steenrod.add_argument("--op", choices=["sq", "p"], default="sq", help="sq: Sq^{2k} (p = 2); p: P^k")
    steenrod.add_argument("--k", type=int, default=1)
    steenrod.add_argument("--class", dest="chern_class", type=int, required=True, help="j in c_j")
    _add_output(steenrod)

    primes = sub.add_parser("primes", help="primes in (m/2, m] and the Ramanujan-prime check")
    primes.add_argument("--m", type=int)
    primes.add_argument("--check-r2", action="store_true")
    primes.add_argument("--limit", type=int, default=100_000)
    primes.add_argument("--output")

    catalog = sub.add_parser("catalog", help="inspect the catalog")
    catalog_sub = catalog.add_subparsers(dest="catalog_command", required=True, parser_class=UsageExitParser)
    listing = catalog_sub.add_parser("list", help="families and facts with citations")
    listing.add_argument("--output")
    return parser


# ===================================================================== #
#  Helpers                                                               #
# ===================================================================== #

def emit(text: str, config: RunConfig) -> None:
    """Write text to config.output, or to stdout."""
    if config.output:
        directory = os.path.dirname(os.path.abspath(config.output))
        os.makedirs(directory, exist_ok=True)
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def resolve_family(name: Optional[str]) -> str:
    if not name:
        raise SelectorError("choose a family with --space (or --all)")
    for key in FAMILY_REGISTRY:
        if key.lower() == name.lower():
            return key
    raise SelectorError(f"unknown family {name!r}; known: {', '.join(FAMILY_REGISTRY)}")


def select_space(catalog: Catalog, config: RunConfig) -> SpaceSpec:
    """Validate the selectors against the catalog ranges and build the space."""
    family = catalog.family(resolve_family(config.family))
    return family.space(degree_bound=config.degree_bound, **config.params)


def write_export(files: Dict[str, object], export_dir: str) -> None:
    """Save exporter files, creating subdirectories as needed."""
    for filename, content in files.items():
        filepath = os.path.join(export_dir, filename)
        os.makedirs(os.path.dirname(filepath), exist_ok=True)
        if isinstance(content, pd.DataFrame):
            content.to_csv(filepath, index=False)
        else:
            with open(filepath, "w", encoding="utf-8") as f:
                f.write(content)


# ===================================================================== #
#  Commands                                                              #
# ===================================================================== #

def cmd_classify(config: RunConfig) -> int:
    """Classify the selected spaces; exit 0 only if all verdicts are definitive and expected."""
    catalog = Catalog.from_file(config.catalog_path, config.prime_cap)
    if config.all_spaces:
        if config.family or config.params:
            raise SelectorError("--all cannot be combined with --space or parameter selectors")
        specs = catalog.spaces(config.max_param, degree_bound=config.degree_bound)
    else:
        specs = [select_space(catalog, config)]

    certificates: List[Certificate] = classify_all(specs, config.jobs, config.reverse_ties)
    exporter = EXPORTER_REGISTRY[config.output_format](certificates)
    if len(certificates) == 1:
        emit(exporter.render_certificate(certificates[0]), config)
    else:
        emit(exporter.render_report(), config)
    if config.export_dir:
        write_export(exporter.export(), config.export_dir)

    unexpected = exporter.unexpected()
    for cert in unexpected:
        LOGGER.warning("%s: %s (expected %s)", cert.space, cert.verdict.value, cert.expected)
    return EXIT_UNEXPECTED if unexpected else EXIT_OK


def cmd_model(config: RunConfig) -> int:
    catalog = Catalog.from_file(config.catalog_path, config.prime_cap)
    spec = select_space(catalog, config)
    if config.stage == "fiber":
        model = build_fiber_model(spec)
    else:
        model = minimal_model(spec, config.reverse_ties)
    if config.output_format == "json":
        emit(json.dumps(model.to_dict(), indent=2) + "\n", config)
    else:
        emit(model.dump_text(config.stage), config)
    return EXIT_OK


def cmd_steenrod(config: RunConfig) -> int:
    p = config.prime
    if config.operation == "sq" and p != 2:
        raise SelectorError(f"--op sq needs --p 2, got {p}")
    if config.operation == "p" and p == 2:
        raise SelectorError("--op p needs an odd prime")
    expansion = power_op_on_chern(config.m, p, config.index, config.chern_class)
    if config.output_format == "json":
        emit(json.dumps(expansion.to_dict(), indent=2) + "\n", config)
    else:
        emit(expansion.describe() + "\n", config)
    return EXIT_OK


def cmd_primes(config: RunConfig) -> int:
    lines: List[str] = []
    status = EXIT_OK
    if config.m is None and not config.check_r2:
        raise SelectorError("primes needs --m or --check-r2")
    if config.m is not None:
        if config.m < 2:
            raise SelectorError(f"--m must be >= 2, got {config.m}")
        interval = primes_in_interval(config.m, config.prime_cap)
        lines.append(f"primes in ({config.m}/2, {config.m}]: {', '.join(map(str, interval)) or 'none'}")
        if config.m >= 3:
            choice = choose_p(config.m, config.prime_cap)
            alternates = ", ".join(map(str, choice.alternates)) or "none"
            lines.append(f"p = {choice.p} ({choice.justification.value}), k = {choice.k}, alternates: {alternates}")
    if config.check_r2:
        ok = verify_r2(config.limit, config.prime_cap)
        lines.append("OK" if ok else f"FAIL: some 11 <= m <= {config.limit} has fewer than 2 primes in (m/2, m]")
        status = EXIT_OK if ok else EXIT_UNEXPECTED
    emit("\n".join(lines) + "\n", config)
    return status


def cmd_catalog(config: RunConfig) -> int:
    catalog = Catalog.from_file(config.catalog_path, config.prime_cap)
    lines = [f"catalog {catalog.version} ({os.path.relpath(catalog.path, PROJECT_ROOT)})", "families:"]
    for name in FAMILY_REGISTRY:
        if name not in catalog.families:
            continue
        fam = catalog.family(name)
        ranges = ", ".join(
            f"{p} in {{{','.join(r['choices'])}}}" if "choices" in r else f"{p} >= {r.get('min', 1)}"
            for p, r in fam.parameter_ranges.items()
        )
        lines.append(f"  {name}: {fam.description} [{fam.route.value}]" + (f" ({ranges})" if ranges else ""))
        lines.append(f"    facts: {', '.join(fam.data.get('facts', ()))}")
    lines.append("facts:")
    for fact in catalog.facts.values():
        lines.append(f"  {fact.id} [{fact.role}]: {fact.statement}")
        lines.append(f"    {fact.citation}")
    if catalog.ledger:
        lines.append("typo ledger:")
        for entry in catalog.ledger:
            lines.append(f"  {entry.family} {entry.polynomial}: {entry.term} (degree {entry.degree}, expected {entry.expected_degree})")
    emit("\n".join(lines) + "\n", config)
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "model": cmd_model,
    "steenrod": cmd_steenrod,
    "primes": cmd_primes,
    "catalog": cmd_catalog,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the Loop Commutativity Certifier.

    Parses arguments, configures logging on stderr and routes to the
    selected command.
    """
    args = build_parser().parse_args(argv)
    config = RunConfig.from_args(args)
    logging.basicConfig(level=getattr(logging, config.log_level), format=LOG_FORMAT, stream=sys.stderr)

    try:
        return COMMANDS[config.command](config)
    except SelectorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CatalogError, ValueError, LookupError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
