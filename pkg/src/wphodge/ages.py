"""Age arithmetic on the weight lattice of a weighted projective space.

For weights (w_0, ..., w_n) with d = sum(w_i), the residues k mod d act
diagonally on affine (n+1)-space.  Each residue has a unique representative
in the half-open unit box, an integral age (the coordinate sum of that
representative), and a strictness flag (no coordinate on a hyperplane).
The counts of strict residues by age form the Hodge vector of the
associated hypergeometric local system; everything here is exact integer
and rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import EmptyInput, RangeError, WellFormednessError


@dataclass(frozen=True)
class WeightTuple:
    """Validated well-formed weights, stored in ascending order.

    ``original`` preserves the order the weights were supplied in; display
    and coordinate-sensitive computations (quotient presentations) use it,
    everything permutation-invariant uses ``weights``.
    """

    weights: tuple[int, ...]
    original: tuple[int, ...]
    degree: int
    dim: int

    def __str__(self) -> str:
        return "(" + ",".join(str(w) for w in self.original) + ")"


@dataclass(frozen=True)
class BoxElement:
    """Unit-box representative of a residue class k mod d.

    ``rep`` holds the coordinates (k*w_i mod d)/d, each in [0, 1).
    ``age`` is their (integral) sum; ``strict`` means no coordinate is 0.
    """

    residue: int
    rep: tuple[Fraction, ...]
    age: int
    strict: bool


@dataclass(frozen=True)
class AgeSpectrum:
    """Counts of strict residues by age: counts[j-1] = #{k strict, age k = j}."""

    weights: WeightTuple
    strict_residues: tuple[int, ...]
    counts: tuple[int, ...]
    rank: int


@dataclass(frozen=True)
class SpectralValue:
    """The singular value prod(w_i^w_i) / d^d as an exact reduced rational."""

    numerator: int
    denominator: int
    reduced: Fraction


def make_weights(raw) -> WeightTuple:
    """Validate a list of positive integers as a well-formed weight tuple.

    Raises EmptyInput for fewer than two entries, RangeError for
    non-positive entries, and WellFormednessError (naming the omitted
    index) when the other n weights share a common factor.
    """
    original = tuple(int(w) for w in raw)
    if len(original) < 2:
        raise EmptyInput(f"need at least two weights, got {len(original)}")
    for w in original:
        if w < 1:
            raise RangeError(f"weights must be positive, got {w}")
    for i in range(len(original)):
        rest = original[:i] + original[i + 1 :]
        h = 0
        for w in rest:
            h = gcd(h, w)
        if h != 1:
            raise WellFormednessError(i, h, original)
    weights = tuple(sorted(original))
    return WeightTuple(
        weights=weights,
        original=original,
        degree=sum(weights),
        dim=len(weights) - 1,
    )


def box_element(w: WeightTuple, k: int) -> BoxElement:
    """Unit-box representative, age and strictness of the residue k."""
    d = w.degree
    if not 0 <= k < d:
        raise RangeError(f"residue {k} outside [0, {d})")
    parts = tuple(k * wi % d for wi in w.original)
    total = sum(parts)
    assert total % d == 0, "age must be integral"
    return BoxElement(
        residue=k,
        rep=tuple(Fraction(a, d) for a in parts),
        age=total // d,
        strict=all(a != 0 for a in parts),
    )


def strict_age_counts(weights: tuple[int, ...], d: int) -> list[int]:
    """Ages of strict residues as counts[j-1] = #{strict k : age(k) = j}.

    Pure integer arithmetic over the raw weights; the hot path of the
    enumeration module calls this without building a WeightTuple.
    """
    n = len(weights) - 1
    counts = [0] * n
    for k in range(1, d):
        total = 0
        strict = True
        for wi in weights:
            r = k * wi % d
            if r == 0:
                strict = False
                break
            total += r
        if strict:
            counts[total // d - 1] += 1
    return counts


def age_spectrum(w: WeightTuple) -> AgeSpectrum:
    """Strict-age spectrum of a weight tuple.

    counts[j-1] is the number of strict residues of age j; read as Hodge
    numbers via h^{n-j, j-1} = counts[j-1].
    """
    d = w.degree
    strict = []
    counts = [0] * w.dim
    for k in range(1, d):
        total = 0
        ok = True
        for wi in w.weights:
            r = k * wi % d
            if r == 0:
                ok = False
                break
            total += r
        if ok:
            strict.append(k)
            counts[total // d - 1] += 1
    return AgeSpectrum(
        weights=w,
        strict_residues=tuple(strict),
        counts=tuple(counts),
        rank=len(strict),
    )


def is_canonical(w: WeightTuple) -> tuple[bool, tuple[BoxElement, ...]]:
    """Whether the weighted space has canonical singularities.

    True iff the only strict residue of age 1 is k = 1.  The certificate
    lists the other age-1 strict residues; each is a box point strictly
    inside the fundamental simplex, witnessing a negative-discrepancy
    valuation.
    """
    d = w.degree
    extra = []
    for k in range(2, d):
        b = box_element(w, k)
        if b.strict and b.age == 1:
            extra.append(b)
    return (len(extra) == 0, tuple(extra))


def lambda_value(w: WeightTuple) -> SpectralValue:
    """Singular value of the hypergeometric operator, exactly reduced."""
    num = 1
    for wi in w.weights:
        num *= wi**wi
    den = w.degree ** w.degree
    return SpectralValue(numerator=num, denominator=den, reduced=Fraction(num, den))
