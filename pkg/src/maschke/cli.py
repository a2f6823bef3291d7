"""Command-line front end: ``maschke <command> [flags]``.

Exit status is 0 when every executed claim passes, 1 on a failed claim or
an I/O error, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .certify import (
    CertificateReport,
    Claim,
    Pipeline,
    SingularPointFound,
    build_intersection_graph,
    independent_set_search,
    molien_coefficients,
    run_claims,
    smoothness_certificate,
)
from .exactfield import BadPrime, is_odd_prime

COMMANDS = (
    "verify-all",
    "group-order",
    "orbits",
    "disjoint",
    "smoothness",
    "molien",
    "export-lines",
    "search-independent",
)
EXPORTS = ("orbit160", "orbit192", "family96", "all352")

CLAIM_GROUPS = {
    "group-order": (
        "generators-involutive",
        "closure-order-ab",
        "closure-order-g31",
        "membership-ab-in-g31",
    ),
    "orbits": (
        "orbit-size-160",
        "orbit-size-192",
        "orbit-partition-352",
        "lines-on-surface",
        "family-96-orbit",
    ),
    "disjoint": ("family-96-disjoint",),
}

# degrees whose invariant dimension is asserted; others are only reported
MOLIEN_EXPECTED = {1: 0, 8: 1}


@dataclass
class CliConfig:
    command: str
    prime: int | None = None
    degree: int | None = None
    budget_ms: int | None = None
    workers: int = 1
    output: str | None = None
    format: str = "text"
    which: str | None = None
    target: int = 96


def _odd_prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if not is_odd_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not an odd prime")
    return p


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"{n} must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=_odd_prime)
    common.add_argument("--degree", type=int)
    common.add_argument("--budget-ms", type=_positive, dest="budget_ms")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--output")

    parser = argparse.ArgumentParser(prog="maschke", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    sub.add_parser("verify-all", parents=[common], help="run the full claim catalogue")
    sub.add_parser("group-order", parents=[common], help="closure orders and membership")
    sub.add_parser("orbits", parents=[common], help="line orbits and incidence")
    sub.add_parser("disjoint", parents=[common], help="disjointness of the 96-line family")
    sub.add_parser("smoothness", parents=[common], help="finite-field smoothness certificate")
    sub.add_parser("molien", parents=[common], help="dimension of invariants of a degree")
    exp = sub.add_parser("export-lines", parents=[common], help="write lines as JSON")
    exp.add_argument("which", choices=EXPORTS)
    srch = sub.add_parser("search-independent", parents=[common],
                          help="look for disjoint families among the 352 lines")
    srch.add_argument("--target", type=_positive, default=96)
    return parser


def parse_config(argv=None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(**vars(ns))


def _timed(cid: str, fn) -> Claim:
    import time

    t0 = time.perf_counter()
    status, witness = fn()
    return Claim(cid, status, witness, int((time.perf_counter() - t0) * 1000))


def _smoothness_report(pipe: Pipeline, prime: int | None) -> CertificateReport:
    if prime is None:
        return run_claims(pipe, ("smoothness",))

    def check():
        try:
            cert = smoothness_certificate(pipe.f, prime)
        except SingularPointFound as exc:
            return "fail", {"prime": prime, "outcome": "singular", "witness": list(exc.witness)}
        except BadPrime as exc:
            return "fail", {"prime": prime, "outcome": "bad-prime", "detail": str(exc)}
        return ("pass" if cert.complete else "fail"), cert.to_json()

    claim = _timed("smoothness", check)
    return CertificateReport([claim], prime=prime if claim.passed else None)


def _molien_report(pipe: Pipeline, degree: int) -> CertificateReport:
    def check():
        dims = molien_coefficients(pipe.closure_g31, degree)
        witness = {"degree": degree, "dimension": dims[degree], "series": dims}
        expected = MOLIEN_EXPECTED.get(degree)
        if expected is not None:
            witness["expected"] = expected
            return ("pass" if dims[degree] == expected else "fail"), witness
        return "pass", witness

    return CertificateReport([_timed(f"molien-degree-{degree}", check)])


def _search_report(pipe: Pipeline, target: int, budget_ms: int) -> CertificateReport:
    def check():
        lines = sorted(pipe.all_lines, key=lambda x: x.sort_key())
        graph = build_intersection_graph(lines, workers=pipe.workers)
        found = independent_set_search(graph, target, budget=budget_ms / 1000)
        witness = {
            "vertices": graph.order,
            "edges": graph.edge_count,
            "target": target,
            "budget_ms": budget_ms,
            "found": found,
        }
        return ("pass" if found is not None else "fail"), witness

    return CertificateReport([_timed("independent-set-search", check)])


def export_lines(pipe: Pipeline, which: str) -> list:
    """Lines of the chosen collection, serialized and sorted canonically."""
    chosen = {
        "orbit160": lambda: pipe.orbit160,
        "orbit192": lambda: pipe.orbit192,
        "family96": lambda: pipe.family96,
        "all352": lambda: pipe.all_lines,
    }[which]()
    return [ln.to_json() for ln in sorted(chosen, key=lambda x: x.sort_key())]


def _summary(claim: Claim) -> str:
    w = claim.witness
    if claim.id == "family-96-disjoint" and isinstance(w, dict) and "pairs_checked" in w:
        if w.get("passed"):
            return f"{w['pairs_checked']} pairs checked, all disjoint"
        if w.get("witness"):
            return f"meeting pair {w['witness']['pair']} after {w['pairs_checked']} pairs"
    if claim.id == "smoothness" and isinstance(w, dict) and "certificate" in w:
        c = w["certificate"]
        return f"p = {c['prime']}: {c['points_scanned']} points scanned, no singular point"
    text = json.dumps(w, separators=(",", ":"))
    return text if len(text) <= 120 else text[:117] + "..."


def render_text(report: CertificateReport) -> str:
    out = []
    for c in report.claims:
        out.append(f"{c.status.upper():4}  {c.id:<24} {c.millis:>7} ms  {_summary(c)}")
    passed = sum(c.passed for c in report.claims)
    out.append(f"{passed}/{len(report.claims)} claims passed")
    return "\n".join(out) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as fh:
            fh.write(text)


def run(config: CliConfig) -> int:
    if config.command not in COMMANDS:
        print(f"maschke: unknown command {config.command!r}", file=sys.stderr)
        return 2
    pipe = Pipeline(workers=config.workers)

    if config.command == "export-lines":
        data = export_lines(pipe, config.which)
        text = json.dumps(data, indent=1) + "\n"
        try:
            _emit(text, config.output)
        except OSError as exc:
            print(f"maschke: {exc}", file=sys.stderr)
            return 1
        if config.output is not None and config.format == "text":
            print(f"{config.which}: {len(data)} lines written to {config.output}")
        return 0

    if config.command == "verify-all":
        report = run_claims(pipe)
    elif config.command in CLAIM_GROUPS:
        report = run_claims(pipe, CLAIM_GROUPS[config.command])
    elif config.command == "smoothness":
        report = _smoothness_report(pipe, config.prime)
    elif config.command == "molien":
        degree = 8 if config.degree is None else config.degree
        if not 0 <= degree <= 12:
            print("maschke: --degree must lie in [0, 12]", file=sys.stderr)
            return 2
        report = _molien_report(pipe, degree)
    else:
        budget = 10_000 if config.budget_ms is None else config.budget_ms
        report = _search_report(pipe, config.target, budget)

    if config.format == "json":
        text = json.dumps(report.to_json(), indent=2) + "\n"
    else:
        text = render_text(report)
    try:
        _emit(text, config.output)
    except OSError as exc:
        print(f"maschke: {exc}", file=sys.stderr)
        return 1
    return 0 if report.all_passed else 1


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
