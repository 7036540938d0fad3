"""Command-line interface.

Subcommands: analyze, enumerate, hypergeom, verify, table1, table2.
Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource
limit.  All output is deterministic: identical inputs and flags produce
byte-identical reports at any worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import crosscheck
from .ages import age_spectrum, is_canonical, lambda_value, make_weights
from .classify import (
    ADDITIONAL_NINE,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_WEIGHT,
    FAMOUS_95,
    enumerate_canonical,
    load_table1,
)
from .ehrhart import DEFAULT_MAX_VISITS, LatticeContext, interior_points
from .errors import (
    ConjugationError,
    DimensionError,
    EmptyInput,
    MismatchError,
    OverlapError,
    RangeError,
    ResourceError,
    WellFormednessError,
    WPHodgeError,
)
from .hypergeom import (
    ParamMultiset,
    build_parameter_sets,
    cancel,
    conjecture_hodge,
    expanded_text,
    factored_text,
    operator_forms,
    verify_proposition,
)
from .report import Report, rat, render
from .toric import (
    load_table2,
    monomial_text,
    pencil_equation_text,
    quotient_presentation,
    table2_canonical_text,
    table2_record,
    table_row,
    validate_table2,
)

ENV_LIMIT = "WPHODGE_MAX_VISITS"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

_INPUT_ERRORS = (
    EmptyInput,
    RangeError,
    WellFormednessError,
    OverlapError,
    ConjugationError,
    DimensionError,
    ValueError,
)


def _default_limit() -> int:
    raw = os.environ.get(ENV_LIMIT)
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_MAX_VISITS


def _operator_section(form) -> dict:
    return {
        "degree": form.degree,
        "factored": factored_text(form),
        "expanded": expanded_text(form),
        "left_scalar": form.left_scalar,
        "right_scalar": form.right_scalar,
        "left_factors": [list(f) for f in form.left_factors],
        "right_factors": [list(f) for f in form.right_factors],
        "left_coefficients": list(form.expanded_left),
        "right_coefficients": list(form.expanded_right),
    }


def _profile_section(profile, conjectural: bool) -> dict:
    return {
        "alphas": [rat(q) for q in profile.alphas.entries],
        "betas": [rat(q) for q in profile.betas.entries],
        "p_values": list(profile.p_values),
        "p_plus": profile.p_plus,
        "p_minus": profile.p_minus,
        "weight": profile.weight,
        "hodge_vector": list(profile.hodge_vector),
        "hodge_labels": [
            f"h^{{{profile.weight - s},{s}}}" for s in range(profile.weight + 1)
        ],
        "conjectural": conjectural,
    }


def cmd_analyze(args) -> tuple[Report, int]:
    w = make_weights(args.weights)
    ctx = LatticeContext(w, max_visits=args.limit)
    spectrum = age_spectrum(w)
    canonical, certificate = is_canonical(w)
    lam = lambda_value(w)
    full, reduced = operator_forms(w)
    a, b = build_parameter_sets(w)
    _, _, common = cancel(a, b)
    prop = verify_proposition(w)
    pres = quotient_presentation(w)
    row = table_row(w)
    delta = interior_points(ctx, "delta")
    dual = interior_points(ctx, "dual")

    sections = {
        "ages": {
            "counts": list(spectrum.counts),
            "rank": spectrum.rank,
            "strict_residues": list(spectrum.strict_residues),
            "hodge_labels": [
                f"h^{{{w.dim - j},{j - 1}}}" for j in range(1, w.dim + 1)
            ],
            "canonical": canonical,
            "certificate": [
                {
                    "residue": c.residue,
                    "age": c.age,
                    "rep": [rat(x) for x in c.rep],
                }
                for c in certificate
            ],
        },
        "spectral": {
            "lambda": rat(lam.reduced),
            "numerator": lam.numerator,
            "denominator": lam.denominator,
        },
        "hypergeometric": {
            "parameter_count": len(a),
            "common_count": len(common),
            "operator": _operator_section(full),
            "operator_reduced": _operator_section(reduced),
            "profile": _profile_section(prop.profile, conjectural=False),
            "proposition_ok": prop.ok,
            "age_counts": list(prop.age_counts),
            "profile_vector": list(prop.hodge_vector),
        },
        "toric": {
            "ambient_weights": list(pres.ambient_weights),
            "diagonal_exponents": list(pres.diagonal_exponents),
            "pencil_exponents": list(pres.pencil_exponents),
            "group_order": pres.group_order,
            "hom_order": pres.hom_order,
            "invariant_factors": list(pres.invariant_factors),
            "action_weights": (
                list(pres.action_weights)
                if pres.action_weights is not None
                else None
            ),
            "pencil_equation": pencil_equation_text(row),
            "omega_numerator": monomial_text(row.omega_exponents),
        },
        "diagnostics": {
            "delta_interior_count": len(delta),
            "delta_interior_points": [[rat(x) for x in p] for p in delta],
            "dual_interior_count": len(dual),
            "dual_interior_points": [list(p) for p in dual],
            "dual_interior_flag": len(dual) > 1,
        },
    }
    report = Report(
        command="analyze",
        inputs={"weights": list(w.original)},
        sections=sections,
    )
    return report, EXIT_OK


def cmd_enumerate(args) -> tuple[Report, int]:
    records = enumerate_canonical(
        args.dim,
        max_weight=args.max_weight,
        max_degree=args.max_degree,
        jobs=args.jobs,
        max_candidates=args.limit,
    )
    quasi = [r for r in records if r.tag == FAMOUS_95]
    nine = [r for r in records if r.tag == ADDITIONAL_NINE]
    sections = {
        "summary": {
            "canonical": len(records),
            "quasismooth": len(quasi),
            "additional": len(nine),
            "line": (
                f"{len(records)} canonical ({len(quasi)} quasismooth, "
                f"{len(nine)} additional)"
            ),
        },
        "records": [
            {
                "weights": list(r.weights.weights),
                "degree": r.weights.degree,
                "tag": r.tag,
                "hodge": list(r.hodge.counts),
                "rank": r.hodge.rank,
                "general_xd_well_formed": r.general_xd_well_formed,
                "general_xd_quasismooth": r.general_xd_quasismooth,
            }
            for r in records
        ],
    }
    report = Report(
        command="enumerate",
        inputs={"dim": args.dim},
        sections=sections,
    )
    report.provenance["bounds"] = {
        "max_weight": args.max_weight,
        "max_degree": args.max_degree,
    }
    return report, EXIT_OK


def _parse_rationals(text: str) -> ParamMultiset:
    return ParamMultiset.of(Fraction(part) for part in text.split(","))


def cmd_hypergeom(args) -> tuple[Report, int]:
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None:
            raise ValueError("--alpha and --beta must be given together")
        if args.weights:
            raise ValueError("give either weights or --alpha/--beta, not both")
        alphas = _parse_rationals(args.alpha)
        betas = _parse_rationals(args.beta)
        profile = conjecture_hodge(alphas, betas)
        sections = {"profile": _profile_section(profile, conjectural=True)}
        inputs = {"alpha": args.alpha, "beta": args.beta}
    else:
        if not args.weights:
            raise ValueError("need weights or --alpha/--beta")
        w = make_weights(args.weights)
        prop = verify_proposition(w)
        sections = {
            "profile": _profile_section(prop.profile, conjectural=False),
            "cross_check": {
                "proposition_ok": prop.ok,
                "age_counts": list(prop.age_counts),
                "profile_vector": list(prop.hodge_vector),
            },
        }
        inputs = {"weights": list(w.original)}
    report = Report(command="hypergeom", inputs=inputs, sections=sections)
    return report, EXIT_OK


def cmd_verify(args) -> tuple[Report, int]:
    sections = {}
    failed = False
    if args.suite in ("ages", "ehrhart", "all"):
        result = crosscheck.run_sample_suite(args.suite, args.samples, args.seed)
        sections["sample"] = result
        failed = failed or bool(result["failures"])
    if args.suite in ("tables", "all"):
        result = crosscheck.run_tables_suite(jobs=args.jobs)
        sections["tables"] = result
        failed = failed or bool(result["failures"])
    report = Report(
        command="verify",
        inputs={"suite": args.suite, "samples": args.samples, "seed": args.seed},
        sections=sections,
        status="mismatch" if failed else "ok",
    )
    return report, EXIT_MISMATCH if failed else EXIT_OK


def cmd_table1(args) -> tuple[Report, int]:
    records = enumerate_canonical(3, jobs=args.jobs, max_candidates=args.limit)
    nine = [r.weights.weights for r in records if r.tag == ADDITIONAL_NINE]
    golden = [tuple(row) for row in load_table1()]
    ok = sorted(nine) == sorted(golden) and len(records) == 104
    lines = [",".join(str(x) for x in t) for t in golden]
    computed = [",".join(str(x) for x in t) for t in sorted(nine)]
    report = Report(
        command="table1",
        inputs={},
        sections={
            "golden": lines,
            "computed_sorted": computed,
            "canonical_total": len(records),
            "match": ok,
        },
        status="ok" if ok else "mismatch",
    )
    report.raw_text = "\n".join(lines) + "\n"
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_table2(args) -> tuple[Report, int]:
    golden = load_table2()
    try:
        rows = validate_table2(golden)
        failures = []
    except MismatchError as exc:
        rows = []
        failures = [
            {
                "row": exc.row,
                "column": exc.column,
                "expected": str(exc.expected),
                "got": str(exc.got),
            }
        ]
    records = []
    for rec in golden:
        weights = tuple(int(x) for x in rec["weights"].split(","))
        fib = tuple(int(x) for x in rec["fibration"].split(","))
        records.append(table2_record(table_row(make_weights(weights), fib)))
    text = table2_canonical_text(records)
    ok = not failures
    report = Report(
        command="table2",
        inputs={},
        sections={
            "records": records,
            "failures": failures,
            "row_reports": [
                {
                    "row": r.row,
                    "weights": list(r.weights),
                    "fibration_level": r.fibration_level,
                    "fibration_witness": r.fibration_witness,
                    "facet_genera": list(r.facet_genera),
                }
                for r in rows
            ],
        },
        status="ok" if ok else "mismatch",
    )
    report.raw_text = text
    return report, EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wphodge",
        description=(
            "Exact Hodge-number data of weighted projective spaces: age "
            "spectra, hypergeometric operators, Ehrhart cross-checks, "
            "canonical classification and table regeneration."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        p.add_argument("--output", metavar="PATH", default=None)
        p.add_argument(
            "--limit",
            type=int,
            default=_default_limit(),
            help="resource cap (candidate visits / enumeration candidates)",
        )
        p.set_defaults(fmt="text")

    p = sub.add_parser("analyze", help="full report for one weight tuple")
    p.add_argument("weights", nargs="+", type=int)
    add_common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="canonical tuples within bounds")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-weight", type=int, default=DEFAULT_MAX_WEIGHT)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("hypergeom", help="Hodge profile of parameters or weights")
    p.add_argument("weights", nargs="*", type=int)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    add_common(p)
    p.set_defaults(func=cmd_hypergeom)

    p = sub.add_parser("verify", help="cross-check suites")
    p.add_argument(
        "--suite", choices=["ages", "ehrhart", "tables", "all"], default="all"
    )
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table1", help="regenerate the nine-tuple golden table")
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="regenerate the quotient-presentation table")
    add_common(p)
    p.set_defaults(func=cmd_table2)

    return parser


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv) -> int:
    """Programmatic entry point used by the tests."""
    return main(list(argv))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.func(args)
    except ResourceError as exc:
        report = Report(
            command=args.command,
            inputs={},
            sections={"error": {"type": "ResourceError", "message": str(exc)}},
            status="resource-limit",
        )
        _emit(render(report, args.fmt), args.output)
        return EXIT_RESOURCE
    except MismatchError as exc:
        report = Report(
            command=args.command,
            inputs={},
            sections={
                "error": {
                    "type": "MismatchError",
                    "message": str(exc),
                    "row": exc.row,
                    "column": exc.column,
                }
            },
            status="mismatch",
        )
        _emit(render(report, args.fmt), args.output)
        return EXIT_MISMATCH
    except _INPUT_ERRORS as exc:
        payload = {"type": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, WellFormednessError):
            payload["index"] = exc.index
            payload["hcf"] = exc.hcf
        report = Report(
            command=args.command,
            inputs={},
            sections={"error": payload},
            status="input-error",
        )
        _emit(render(report, args.fmt), args.output)
        return EXIT_INPUT
    if args.fmt == "text" and report.raw_text is not None:
        _emit(report.raw_text, args.output)
    else:
        _emit(render(report, args.fmt), args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
