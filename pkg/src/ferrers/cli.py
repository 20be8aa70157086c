"""Command line interface.

    ferrers <command> <lambda> [--json] [--field P] [--budget N]

Commands: analyze, diagonals, certify, decompose, oracle, render.
Exit codes: 0 success, 1 internal inconsistency, 2 bad input,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from ferrers.certificate import VerificationReport, diagonal_certificate, sv_sums, verify_sv
from ferrers.ideal import (
    Polynomial,
    PrimeComponent,
    edge_generators,
    full_decomposition,
    minimal_decomposition,
)
from ferrers.invariants import InternalInconsistency, InvariantReport, invariant_report
from ferrers.oracle import (
    DEFAULT_BUDGET,
    EVIDENCE_NOTE,
    BudgetExceeded,
    membership_equality,
    variety_equal,
)
from ferrers.shape import Partition, PartitionError, diagonal_cells, mu, parse_partition

COMMANDS = ("analyze", "diagonals", "certify", "decompose", "oracle", "render")
FIELD_ORDERS = (2, 3, 5, 7)
RENDER_CAP = 40

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


class RenderTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class CliRequest:
    command: str
    lam: Partition
    machine_output: bool = False
    field_order: int = 2
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.field_order not in FIELD_ORDERS:
            raise ValueError(f"field order must be one of {FIELD_ORDERS}")
        if self.budget < 1:
            raise ValueError("budget must be >= 1")


def render_diagram(p: Partition) -> str:
    """Ferrers diagram with each cell labelled by its diagonal index mod 10."""
    if p.n > RENDER_CAP or p.m > RENDER_CAP:
        raise RenderTooLarge(f"diagram {p.n}x{p.m} exceeds the {RENDER_CAP}x{RENDER_CAP} rendering cap")
    rows = [
        "".join(str((r + s - 1) % 10) for s in range(1, part + 1))
        for r, part in enumerate(p.parts, start=1)
    ]
    return "\n".join(rows + [f"μ = {mu(p)}"])


# machine-readable reports ---------------------------------------------------


def _component_dict(comp: PrimeComponent) -> dict:
    return {"xPrefix": comp.x_prefix, "yPrefix": comp.y_prefix}


def analysis_dict(p: Partition) -> dict:
    report = invariant_report(p)
    return {
        "lambda": list(p.parts),
        "n": p.n,
        "m": p.m,
        "mu": report.mu,
        "k": report.k,
        "corners": list(report.corners),
        "ara": report.ara,
        "pd": report.pd,
        "cd": report.cd,
        "height": report.height,
        "isSTCI": report.is_stci,
        "generatorCount": report.generator_count,
        "generators": [str(g) for g in edge_generators(p)],
        "diagonals": [
            [f"x{c.row}*y{c.col}" for c in diagonal_cells(p, i)] for i in range(1, report.mu + 1)
        ],
        "minimalPrimes": [_component_dict(c) for c in minimal_decomposition(p)],
    }


def report_from_analysis(data: dict) -> InvariantReport:
    """Rebuild an :class:`InvariantReport` from ``analyze --json`` output."""
    return InvariantReport(
        lam=Partition(tuple(data["lambda"])),
        mu=data["mu"],
        ara=data["ara"],
        pd=data["pd"],
        cd=data["cd"],
        height=data["height"],
        k=data["k"],
        corners=tuple(data["corners"]),
        is_stci=data["isSTCI"],
        generator_count=data["generatorCount"],
    )


def verification_dict(p: Partition, report: VerificationReport) -> dict:
    cert = diagonal_certificate(p)
    return {
        "lambda": list(p.parts),
        "blocks": [[str(mono) for mono in block] for block in cert.blocks],
        "exponents": {str(mono): e for mono, e in sorted(cert.exponents.items())},
        "passed": report.passed,
        "condI": report.cond_i,
        "condII": report.cond_ii,
        "condIII": report.cond_iii,
        "uncovered": [str(mono) for mono in report.uncovered],
        "failures": [
            {"block": f.block, "pair": [str(f.p), str(f.p_prime)]} for f in report.failures
        ],
        "witnesses": [
            {
                "block": w.block,
                "pair": [str(w.p), str(w.p_prime)],
                "divider": str(w.divider),
                "dividerBlock": w.divider_block,
            }
            for w in report.witnesses
        ],
        "warnings": list(report.warnings),
    }


# text reports ---------------------------------------------------------------


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _analyze_text(p: Partition) -> str:
    r = invariant_report(p)
    return "\n".join(
        [
            f"lambda = {p}",
            f"n = {p.n}",
            f"m = {p.m}",
            f"mu = {r.mu}",
            f"ara = {r.ara}",
            f"pd = {r.pd}",
            f"cd = {r.cd}",
            f"height = {r.height}",
            f"k = {r.k}",
            "corners = " + ", ".join(map(str, r.corners)),
            f"generators = {r.generator_count}",
            "minimal primes = " + " ∩ ".join(str(c) for c in minimal_decomposition(p)),
            f"set-theoretic complete intersection: {_yes_no(r.is_stci)}",
        ]
    )


def _certify_text(p: Partition, report: VerificationReport) -> str:
    cert = diagonal_certificate(p)
    lines = [
        f"lambda = {p}",
        f"blocks = {cert.r}",
        f"(i)   blocks cover P: {'pass' if report.cond_i else 'FAIL'}",
        f"(ii)  first block is a singleton: {'pass' if report.cond_ii else 'FAIL'}",
        f"(iii) earlier divider for every pair: {'pass' if report.cond_iii else 'FAIL'}"
        f" ({len(report.witnesses)} pairs witnessed, {len(report.failures)} failed)",
    ]
    for f in report.failures:
        lines.append(f"  block {f.block}: nothing earlier divides ({f.p})*({f.p_prime})")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    lines.append(f"certificate: {'PASSED' if report.passed else 'FAILED'}")
    return "\n".join(lines)


def _decompose_text(p: Partition) -> str:
    minimal = set(minimal_decomposition(p))
    full = full_decomposition(p)
    width = max(len(str(c)) for c in full)
    lines = [f"lambda = {p}", f"full decomposition ({len(full)} components):"]
    for i, comp in enumerate(full, start=1):
        mark = "" if comp in minimal else "  redundant"
        lines.append(f"  {i:>2}  {str(comp):<{width}}  height {comp.height}{mark}")
    lines.append(f"minimal decomposition ({len(minimal)} components):")
    for comp in minimal_decomposition(p):
        lines.append(f"      {str(comp):<{width}}  height {comp.height}")
    return "\n".join(lines)


def _decompose_dict(p: Partition) -> dict:
    minimal = set(minimal_decomposition(p))
    return {
        "lambda": list(p.parts),
        "full": [
            dict(_component_dict(c), redundant=c not in minimal) for c in full_decomposition(p)
        ],
        "minimal": [_component_dict(c) for c in minimal_decomposition(p)],
    }


def _oracle(req: CliRequest) -> tuple[dict, bool]:
    p = req.lam
    dims = (p.n, p.m)
    var = variety_equal(
        [Polynomial.sum_of([g]) for g in edge_generators(p)],
        sv_sums(diagonal_certificate(p)),
        req.field_order,
        dims,
        req.budget,
    )
    full = membership_equality(p, full_decomposition(p), req.budget)
    minimal = membership_equality(p, minimal_decomposition(p), req.budget)
    data = {
        "lambda": list(p.parts),
        "fieldOrder": req.field_order,
        "variety": {
            "equal": var.equal,
            "pointsChecked": var.points_checked,
            "commonZeros": var.common_zeros,
            "counterexample": None if var.counterexample is None else list(var.counterexample.residues),
        },
        "membershipFull": {
            "equal": full.equal,
            "monomialsChecked": full.monomials_checked,
            "counterexample": None if full.counterexample is None else str(full.counterexample),
        },
        "membershipMinimal": {
            "equal": minimal.equal,
            "monomialsChecked": minimal.monomials_checked,
            "counterexample": None if minimal.counterexample is None else str(minimal.counterexample),
        },
        "note": EVIDENCE_NOTE,
    }
    return data, var.equal and full.equal and minimal.equal


def _oracle_text(data: dict) -> str:
    var = data["variety"]
    lines = [f"lambda = ({','.join(map(str, data['lambda']))})"]
    if var["equal"]:
        lines.append(
            f"zero sets over F_{data['fieldOrder']}: equal"
            f" ({var['pointsChecked']} points, {var['commonZeros']} common zeros)"
        )
    else:
        lines.append(f"zero sets over F_{data['fieldOrder']}: DIFFER at {var['counterexample']}")
    for key, label in (("membershipFull", "full"), ("membershipMinimal", "minimal")):
        entry = data[key]
        if entry["equal"]:
            lines.append(
                f"squarefree membership vs {label} decomposition: equal"
                f" ({entry['monomialsChecked']} monomials)"
            )
        else:
            lines.append(f"squarefree membership vs {label} decomposition: DIFFER at {entry['counterexample']}")
    lines.append(f"*** {EVIDENCE_NOTE} ***")
    return "\n".join(lines)


def _emit(out: TextIO, req: CliRequest, text: str, data: dict) -> None:
    if req.machine_output:
        out.write(json.dumps(data, ensure_ascii=False) + "\n")
    else:
        out.write(text + "\n")


def run(req: CliRequest, out: Optional[TextIO] = None) -> int:
    """Execute one request, writing its report to ``out``; return the exit status."""
    out = out or sys.stdout
    p = req.lam
    if req.command == "analyze":
        _emit(out, req, _analyze_text(p), analysis_dict(p))
    elif req.command == "diagonals":
        polys = [str(q) for q in sv_sums(diagonal_certificate(p))]
        _emit(out, req, "\n".join(polys), {"lambda": list(p.parts), "mu": len(polys), "polynomials": polys})
    elif req.command == "certify":
        report = verify_sv(diagonal_certificate(p))
        _emit(out, req, _certify_text(p, report), verification_dict(p, report))
        if not report.passed:
            return EXIT_INCONSISTENT
    elif req.command == "decompose":
        _emit(out, req, _decompose_text(p), _decompose_dict(p))
    elif req.command == "oracle":
        data, ok = _oracle(req)
        _emit(out, req, _oracle_text(data), data)
        if not ok:
            return EXIT_INCONSISTENT
    elif req.command == "render":
        diagram = render_diagram(p)
        _emit(out, req, diagram, {"lambda": list(p.parts), "mu": mu(p), "rows": diagram.splitlines()[:-1]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ferrers",
        description="Edge ideals of Ferrers graphs: invariants, diagonal generators, certificates.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("lam", metavar="lambda", help="comma-separated weakly decreasing parts, e.g. 6,4,4,2,1")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--field", type=int, default=2, choices=FIELD_ORDERS, help="field order for the oracle")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget for the oracle")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget < 1:
        print("error: --budget must be >= 1", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        lam = parse_partition(args.lam)
    except PartitionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    req = CliRequest(args.command, lam, args.json, args.field, args.budget)
    try:
        return run(req)
    except RenderTooLarge as exc:
        print(f"error: RenderTooLarge: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except BudgetExceeded as exc:
        print(f"error: BudgetExceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalInconsistency as exc:
        print(f"error: InternalInconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
