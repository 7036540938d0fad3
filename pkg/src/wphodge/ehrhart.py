"""Lattice-point counting on the fundamental simplex and its faces.

The weight lattice N contains the unit vectors e_i; they span a simplex in
the level-1 affine hyperplane.  Counting N-points strictly inside dilated
faces gives the open Ehrhart series of each face; the alternating sum of
its numerator coefficients over the face lattice reproduces the strict-age
counts.  This is the module's reason to exist: it is an oracle for the age
spectrum along a genuinely different route.

Every count decomposes a lattice point as (unit-box representative of its
residue class) + (nonnegative integer translate); translates at a fixed
level are compositions, counted exactly by stars and bars.  Coordinates
follow the order the weights were supplied in.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from .ages import WeightTuple
from .errors import ResourceError

DEFAULT_MAX_VISITS = 10**8


@dataclass(frozen=True)
class SimplexFace:
    """Face spanned by the unit vectors indexed by ``support`` (nonempty)."""

    support: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(sorted(set(self.support))))
        if not self.support:
            raise ValueError("a face needs a nonempty vertex set")

    @property
    def dim(self) -> int:
        return len(self.support) - 1


@dataclass(frozen=True)
class EhrhartPolynomialData:
    """Strict dilate counts and numerator coefficients of one face.

    strict_counts[k] is the number of N-points strictly inside the k-th
    dilate for k = 0..dim+1; phis[j-1] is the coefficient of t^j in
    (1-t)^(dim+1) times the open Ehrhart series, j = 1..dim+1.
    """

    face: SimplexFace
    strict_counts: tuple[int, ...]
    phis: tuple[int, ...]


@dataclass(frozen=True)
class LatticeContext:
    """Precomputed residue data for the weight lattice of one tuple.

    ``box[k]`` holds the integer box parts (k*w_i mod d) in input
    coordinate order; ages are their sums divided by d.  ``max_visits``
    caps the number of counted candidates per operation call.
    """

    weights: WeightTuple
    max_visits: int = DEFAULT_MAX_VISITS
    box: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    ages: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        d = self.weights.degree
        w = self.weights.original
        box = tuple(tuple(k * wi % d for wi in w) for k in range(d))
        object.__setattr__(self, "box", box)
        object.__setattr__(self, "ages", tuple(sum(b) // d for b in box))

    def level(self, v) -> Fraction:
        return sum(map(Fraction, v), Fraction(0))

    def membership(self, v) -> tuple[bool, int | None]:
        """Is the rational vector in N?  Returns (member, witness residue).

        v is in N exactly when d*v is integral and congruent mod Z^(n+1)
        to a multiple of (w_0/d, ..., w_n/d); the witness is that multiple.
        """
        d = self.weights.degree
        scaled = []
        for x in v:
            y = Fraction(x) * d
            if y.denominator != 1:
                return False, None
            scaled.append(y.numerator % d)
        target = tuple(scaled)
        for k in range(d):
            if self.box[k] == target:
                return True, k
        return False, None


def full_face(ctx: LatticeContext) -> SimplexFace:
    return SimplexFace(tuple(range(ctx.weights.dim + 1)))


def strict_count(ctx: LatticeContext, face: SimplexFace, k: int) -> int:
    """Number of N-points at level k strictly inside the dilated face.

    Counts v in N with l(v) = k, v_i > 0 on the face support and v_i = 0
    off it.  Each residue whose box part vanishes off the support
    contributes the compositions of the remaining level among the support
    coordinates (coordinates whose box part is 0 need a translate >= 1).
    """
    if k < 0:
        raise ValueError("dilation level must be nonnegative")
    d = ctx.weights.degree
    support = set(face.support)
    s = len(face.support)
    n1 = ctx.weights.dim + 1
    off = [i for i in range(n1) if i not in support]
    visits = 0
    total = 0
    for r in range(d):
        visits += 1
        parts = ctx.box[r]
        if any(parts[i] != 0 for i in off):
            continue
        zeros = sum(1 for i in face.support if parts[i] == 0)
        t = k - ctx.ages[r] - zeros
        if t < 0:
            continue
        here = comb(t + s - 1, s - 1)
        visits += here
        if visits > ctx.max_visits:
            raise ResourceError(
                f"strict_count exceeded {ctx.max_visits} candidate visits"
            )
        total += here
    return total


def ehrhart_data(ctx: LatticeContext, face: SimplexFace) -> EhrhartPolynomialData:
    """Strict counts for k = 0..dim+1 and the numerator coefficients.

    The numerator is the finite-difference convolution of the counts with
    (1-t)^(dim+1); the coefficient one step beyond the degree bound is
    computed and asserted to vanish.
    """
    f = face.dim
    counts = [strict_count(ctx, face, k) for k in range(f + 3)]
    phis = []
    for j in range(1, f + 3):
        phi = sum(
            (-1) ** i * comb(f + 1, i) * counts[j - i]
            for i in range(0, min(j, f + 1) + 1)
        )
        phis.append(phi)
    assert phis[f + 1] == 0, "open Ehrhart numerator must truncate"
    return EhrhartPolynomialData(
        face=face,
        strict_counts=tuple(counts[: f + 2]),
        phis=tuple(phis[: f + 1]),
    )


def _phi(data: EhrhartPolynomialData, j: int) -> int:
    if 1 <= j <= len(data.phis):
        return data.phis[j - 1]
    return 0


def all_faces(ctx: LatticeContext) -> list[SimplexFace]:
    n1 = ctx.weights.dim + 1
    faces = []
    for mask in range(1, 1 << n1):
        faces.append(SimplexFace(tuple(i for i in range(n1) if mask >> i & 1)))
    return faces


def hodge_via_inclusion_exclusion(ctx: LatticeContext) -> tuple[int, ...]:
    """Hodge vector (h^{n-1,0}, ..., h^{0,n-1}) by face inclusion-exclusion.

    Slot k-1 is the alternating sum over all faces, graded by codimension,
    of the numerator coefficients phi_{k-codim}; it must equal the number
    of strict residues of age k.
    """
    n = ctx.weights.dim
    data = [(n - f.dim, ehrhart_data(ctx, f)) for f in all_faces(ctx)]
    out = []
    for k in range(1, n + 1):
        h = 0
        for codim, d in data:
            h += (-1) ** codim * _phi(d, k - codim)
        out.append(h)
    return tuple(out)


def interior_points(ctx: LatticeContext, which: str = "delta"):
    """Lattice points strictly inside the simplex or its dual.

    "delta": all v in N at level 1 with every coordinate in (0, 1) --
    the strict box points of age 1, as tuples of Fractions (the point
    (w_0/d, ..., w_n/d) itself is among them).

    "dual": functionals m on the level-0 sublattice with all pairings
    <m, e_i> >= 0, returned as their pairing vectors.  The e_i - e
    generate the sublattice with the single relation sum(w_i (e_i - e)) = 0,
    so a functional is exactly an integer pairing vector orthogonal to the
    weights; the relation also bounds the search box.
    """
    d = ctx.weights.degree
    if which == "delta":
        pts = []
        for r in range(1, d):
            parts = ctx.box[r]
            if all(p != 0 for p in parts) and ctx.ages[r] == 1:
                pts.append(tuple(Fraction(p, d) for p in parts))
        return pts
    if which == "dual":
        w = ctx.weights.original
        lower = 0
        uppers = [(-lower * (d - wi)) // wi for wi in w]
        found = []
        for y in product(*[range(lower, u + 1) for u in uppers]):
            if sum(wi * yi for wi, yi in zip(w, y)) == 0:
                found.append(tuple(y))
        return found
    raise ValueError(f"unknown region {which!r}")
