"""Cross-check suites: the three Hodge-vector routes must agree.

The age spectrum, the face inclusion-exclusion count and the parameter
profile are independently computable; their equality (together with the
rank identities and the interior-point reading of canonicity) is the
package's self-test surface.  Failures are returned as payload dicts, not
raised, so the CLI can report counterexamples.
"""

from __future__ import annotations

import random

from .ages import WeightTuple, age_spectrum, is_canonical, make_weights
from .classify import ADDITIONAL_NINE, enumerate_canonical, load_table1
from .ehrhart import LatticeContext, hodge_via_inclusion_exclusion, interior_points
from .errors import MismatchError, WPHodgeError
from .hypergeom import operator_forms, verify_proposition
from .toric import validate_table2


def random_weight_tuples(
    samples: int, seed: int, max_weight: int = 12, dims=(2, 3, 4, 5)
) -> list[WeightTuple]:
    """Deterministic sample of well-formed tuples: dimension uniform over
    ``dims``, weights uniform in [1, max_weight], redrawn until well-formed."""
    rng = random.Random(seed)
    out = []
    while len(out) < samples:
        n = rng.choice(dims)
        raw = [rng.randint(1, max_weight) for _ in range(n + 1)]
        try:
            out.append(make_weights(raw))
        except WPHodgeError:
            continue
    return out


def _payload(w: WeightTuple, check: str, **extra) -> dict:
    data = {"weights": list(w.original), "check": check}
    data.update(extra)
    return data


def triangle_check(w: WeightTuple) -> list[dict]:
    """Age spectrum vs inclusion-exclusion vs parameter profile, plus ranks."""
    failures = []
    spectrum = age_spectrum(w)
    via_faces = hodge_via_inclusion_exclusion(LatticeContext(w))
    if via_faces != spectrum.counts:
        failures.append(
            _payload(
                w,
                "ehrhart-triangle",
                ages=list(spectrum.counts),
                inclusion_exclusion=list(via_faces),
            )
        )
    prop = verify_proposition(w)
    if not prop.ok:
        failures.append(
            _payload(
                w,
                "profile-triangle",
                ages=list(prop.age_counts),
                profile=list(prop.hodge_vector),
            )
        )
    _, reduced = operator_forms(w)
    if not (spectrum.rank == reduced.degree == len(spectrum.strict_residues)):
        failures.append(
            _payload(
                w,
                "rank",
                rank=spectrum.rank,
                reduced_degree=reduced.degree,
                strict_count=len(spectrum.strict_residues),
            )
        )
    return failures


def reid_tai_check(w: WeightTuple) -> list[dict]:
    """Canonicity must equal the one-interior-point condition."""
    failures = []
    canonical, certificate = is_canonical(w)
    interior = interior_points(LatticeContext(w), "delta")
    a1 = age_spectrum(w).counts[0]
    if canonical != (len(interior) == 1):
        failures.append(
            _payload(
                w, "canonical-vs-interior",
                canonical=canonical, interior_count=len(interior),
            )
        )
    if 1 + (len(interior) - 1) != a1 or len(certificate) != a1 - 1:
        failures.append(
            _payload(
                w, "interior-count",
                interior_count=len(interior), age_one_count=a1,
                certificate_count=len(certificate),
            )
        )
    return failures


def palindromy_check(w: WeightTuple) -> list[dict]:
    """Spectrum palindromy and the age pairing k <-> d-k."""
    failures = []
    spectrum = age_spectrum(w)
    n = w.dim
    counts = spectrum.counts
    if any(counts[j] != counts[n - 1 - j] for j in range(n)):
        failures.append(_payload(w, "palindromy", counts=list(counts)))
    d = w.degree
    ages = {}
    for k in spectrum.strict_residues:
        ages[k] = sum(k * wi % d for wi in w.weights) // d
    for k in spectrum.strict_residues:
        if d - k not in ages or ages[k] + ages[d - k] != n + 1:
            failures.append(_payload(w, "age-pairing", residue=k))
            break
    return failures


def dual_interior_check(w: WeightTuple) -> list[dict]:
    """Diagnostic: the dual simplex should have a single interior point."""
    pts = interior_points(LatticeContext(w), "dual")
    if len(pts) != 1 or any(v != 0 for v in pts[0]):
        return [_payload(w, "dual-interior", count=len(pts))]
    return []


def run_sample_suite(suite: str, samples: int, seed: int) -> dict:
    """Run the per-tuple checks of one suite over the random sample."""
    tuples = random_weight_tuples(samples, seed)
    failures = []
    checks = 0
    for w in tuples:
        if suite in ("ages", "all"):
            failures.extend(palindromy_check(w))
            failures.extend(dual_interior_check(w))
            checks += 2
        if suite in ("ehrhart", "all"):
            failures.extend(triangle_check(w))
            failures.extend(reid_tai_check(w))
            checks += 2
    return {
        "samples": len(tuples),
        "seed": seed,
        "checks": checks,
        "failures": failures,
    }


def run_tables_suite(jobs: int = 1) -> dict:
    """Golden comparisons: enumeration vs table 1, regeneration vs table 2."""
    failures = []
    records = enumerate_canonical(3, jobs=jobs)
    nine = sorted(r.weights.weights for r in records if r.tag == ADDITIONAL_NINE)
    golden = sorted(tuple(row) for row in load_table1())
    if len(records) != 104:
        failures.append({"check": "table1-total", "count": len(records)})
    if nine != golden:
        failures.append(
            {
                "check": "table1-set",
                "computed": [list(t) for t in nine],
                "expected": [list(t) for t in golden],
            }
        )
    try:
        rows = validate_table2()
        table2 = [
            {
                "row": r.row,
                "weights": list(r.weights),
                "fibration_level": r.fibration_level,
                "fibration_witness": r.fibration_witness,
                "facet_genera": list(r.facet_genera),
            }
            for r in rows
        ]
    except MismatchError as exc:
        failures.append(
            {
                "check": "table2",
                "row": exc.row,
                "column": exc.column,
                "expected": str(exc.expected),
                "got": str(exc.got),
            }
        )
        table2 = []
    return {
        "canonical_total": len(records),
        "additional_nine": [list(t) for t in nine],
        "table2_rows": table2,
        "failures": failures,
    }
