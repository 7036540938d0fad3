"""Classification of weighted spaces by their general anticanonical member.

A weight tuple is canonical when its only age-1 strict residue is k = 1.
For the general hypersurface of degree e the two combinatorial tests are
containment of coordinate subspaces (well-formedness) and the cone
criterion for quasismoothness, both decided by counting weighted
monomials.  The enumerator sweeps ascending well-formed tuples inside
configurable bounds and tags each canonical one by whether its general
anticanonical member is quasismooth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from math import gcd
from multiprocessing import Pool

from .ages import AgeSpectrum, WeightTuple, age_spectrum, make_weights
from .errors import LinearConeNotice, ResourceError

FAMOUS_95 = "famous95"
ADDITIONAL_NINE = "additionalNine"
NON_CANONICAL = "nonCanonical"

DEFAULT_MAX_WEIGHT = 100
DEFAULT_MAX_DEGREE = 256
DEFAULT_MAX_CANDIDATES = 20_000_000


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A weighted hypersurface of the given degree (default anticanonical)."""

    weights: WeightTuple
    degree: int = 0

    def __post_init__(self):
        if self.degree == 0:
            object.__setattr__(self, "degree", self.weights.degree)
        if self.degree < 1:
            raise ValueError("hypersurface degree must be positive")


@dataclass(frozen=True)
class ClassificationRecord:
    weights: WeightTuple
    canonical: bool
    general_xd_well_formed: bool
    general_xd_quasismooth: bool
    quasismooth_witness: tuple[int, ...] | None
    hodge: AgeSpectrum
    tag: str


def monomials_of_degree(
    w: WeightTuple, e: int, support, exact_support: bool = False
) -> int:
    """Number of exponent vectors of weighted degree e on the given variables.

    With exact_support every supported variable must appear; otherwise the
    support is only an upper bound.  Counting is a one-dimensional subset-sum
    table over the supported weights.
    """
    if e < 0:
        raise ValueError("degree must be nonnegative")
    ws = [w.original[i] for i in sorted(set(support))]
    if exact_support:
        e -= sum(ws)
        if e < 0:
            return 0
    ways = [0] * (e + 1)
    ways[0] = 1
    for wi in ws:
        for v in range(wi, e + 1):
            ways[v] += ways[v - wi]
    return ways[e]


def has_monomial(w: WeightTuple, e: int, support, exact_support: bool = False) -> bool:
    """Existence version of monomials_of_degree (boolean reachability)."""
    if e < 0:
        return False
    ws = [w.original[i] for i in sorted(set(support))]
    if exact_support:
        e -= sum(ws)
        if e < 0:
            return False
    reach = [False] * (e + 1)
    reach[0] = True
    for wi in ws:
        for v in range(wi, e + 1):
            if reach[v - wi]:
                reach[v] = True
    return reach[e]


def general_hypersurface_well_formed(spec: HypersurfaceSpec) -> bool:
    """Whether a general member misses every codimension-2 coordinate subspace.

    For each pair i < j some degree-e monomial must omit both variables.
    """
    n1 = spec.weights.dim + 1
    indices = range(n1)
    for i, j in combinations(indices, 2):
        support = [t for t in indices if t not in (i, j)]
        if not has_monomial(spec.weights, spec.degree, support):
            return False
    return True


def general_hypersurface_quasismooth(
    spec: HypersurfaceSpec,
) -> tuple[bool, tuple[int, ...] | None]:
    """Cone criterion for quasismoothness of the general member.

    For every nonempty variable subset I either some degree-e monomial is
    supported inside I, or at least |I| distinct outside variables x_j admit
    a monomial (inside I) * x_j of degree e.  The general member must also
    be well-formed.  Returns (verdict, failing subset or None).
    """
    w = spec.weights
    e = spec.degree
    for i, wi in enumerate(w.original):
        if e == wi:
            raise LinearConeNotice(
                f"degree {e} equals weight at index {i}: linear cone"
            )
    if not general_hypersurface_well_formed(spec):
        return False, None
    n1 = w.dim + 1
    for size in range(1, n1 + 1):
        for subset in combinations(range(n1), size):
            if has_monomial(w, e, subset):
                continue
            outside = [j for j in range(n1) if j not in subset]
            extras = sum(
                1 for j in outside if has_monomial(w, e - w.original[j], subset)
            )
            if extras < size:
                return False, subset
    return True, None


def classify_weights(w: WeightTuple) -> ClassificationRecord:
    """Full classification record of one weight tuple at degree d."""
    spectrum = age_spectrum(w)
    canonical = spectrum.counts[0] == 1
    spec = HypersurfaceSpec(w)
    wf = general_hypersurface_well_formed(spec)
    qs, witness = general_hypersurface_quasismooth(spec)
    if not canonical:
        tag = NON_CANONICAL
    elif qs:
        tag = FAMOUS_95
    else:
        tag = ADDITIONAL_NINE
    return ClassificationRecord(
        weights=w,
        canonical=canonical,
        general_xd_well_formed=wf,
        general_xd_quasismooth=qs,
        quasismooth_witness=witness,
        hodge=spectrum,
        tag=tag,
    )


def _well_formed_ascending(t: tuple[int, ...]) -> bool:
    n1 = len(t)
    prefix = [0] * (n1 + 1)
    for i in range(n1):
        prefix[i + 1] = gcd(prefix[i], t[i])
    suffix = [0] * (n1 + 1)
    for i in range(n1 - 1, -1, -1):
        suffix[i] = gcd(suffix[i + 1], t[i])
    return all(gcd(prefix[i], suffix[i + 1]) == 1 for i in range(n1))


def _extra_age_one(t: tuple[int, ...], d: int) -> bool:
    """True when some residue other than 1 is strict of age 1 (early exit)."""
    for k in range(2, d):
        total = 0
        for wi in t:
            r = k * wi % d
            if r == 0:
                total = -1
                break
            total += r
        if total == d:
            return True
    return False


def _scan_chunk(args) -> tuple[list[tuple[int, ...]], int]:
    """Canonical well-formed ascending tuples with the given leading weight."""
    w0, n1, max_weight, max_degree, budget = args
    found = []
    visited = 0
    stack = [(w0,)]
    while stack:
        prefix = stack.pop()
        s = sum(prefix)
        if len(prefix) == n1:
            visited += 1
            if visited > budget:
                raise ResourceError(
                    f"enumeration exceeded {budget} candidate tuples"
                )
            if _well_formed_ascending(prefix) and not _extra_age_one(prefix, s):
                found.append(prefix)
            continue
        remaining = n1 - len(prefix)
        lo = prefix[-1]
        hi = min(max_weight, (max_degree - s) // remaining)
        for w in range(hi, lo - 1, -1):
            stack.append(prefix + (w,))
    return sorted(found), visited


def enumerate_canonical(
    dim: int,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    max_degree: int = DEFAULT_MAX_DEGREE,
    jobs: int = 1,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> list[ClassificationRecord]:
    """All canonical well-formed ascending (dim+1)-tuples within bounds.

    Candidates are deduplicated by ascending order, scanned with an
    early-exit residue test, and survivors are classified exactly.  The
    result is sorted lexicographically and independent of the worker count.
    """
    if dim < 2:
        raise ValueError("enumeration needs dimension >= 2")
    if max_weight < 1 or max_degree < 1:
        raise ValueError("bounds must be positive")
    n1 = dim + 1
    tasks = [
        (w0, n1, max_weight, max_degree, max_candidates)
        for w0 in range(1, min(max_weight, max_degree // n1) + 1)
    ]
    if jobs > 1:
        with Pool(jobs) as pool:
            results = pool.map(_scan_chunk, tasks)
    else:
        results = [_scan_chunk(t) for t in tasks]
    total_visited = sum(v for _, v in results)
    if total_visited > max_candidates:
        raise ResourceError(
            f"enumeration exceeded {max_candidates} candidate tuples"
        )
    tuples = sorted(t for chunk, _ in results for t in chunk)
    return [classify_weights(make_weights(t)) for t in tuples]


def load_table1() -> list[tuple[int, ...]]:
    """The nine golden weight quadruples, one per line, comma-separated."""
    text = resources.files("wphodge.data").joinpath("table1.expected").read_text()
    rows = []
    for line in text.strip().splitlines():
        rows.append(tuple(int(x) for x in line.strip().split(",")))
    return rows
