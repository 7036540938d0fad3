"""Hypergeometric parameter multisets, operator factorization and Hodge profiles.

A weight tuple determines two parameter multisets of size d = sum(w_i):
the union of {k/w_i : 0 <= k < w_i} over i, and {k/d : 0 <= k < d}.
Cancelling the common part yields the local exponents of the reduced
operator; the profile p(k) = #{j : alpha_j < beta_k} - k of the cancelled
sets packages the Hodge numbers of the associated local system.

Operators are stored as lists of integer linear factors (c*D - r) resp.
(c*D + r) together with a scalar multiplier per summand, plus the expanded
integer coefficient vectors; the operator itself is left(D) - t*right(D).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .ages import WeightTuple, age_spectrum
from .errors import ConjugationError, OverlapError, RangeError


@dataclass(frozen=True)
class ParamMultiset:
    """Multiset of exact rationals in [0, 1), kept sorted ascending."""

    entries: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "ParamMultiset":
        entries = tuple(sorted(Fraction(v) for v in values))
        for q in entries:
            if not 0 <= q < 1:
                raise RangeError(f"parameter {q} outside [0, 1)")
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def counter(self) -> Counter:
        return Counter(self.entries)

    def intersection(self, other: "ParamMultiset") -> "ParamMultiset":
        return ParamMultiset.of((self.counter() & other.counter()).elements())

    def subtract(self, other: "ParamMultiset") -> "ParamMultiset":
        return ParamMultiset.of((self.counter() - other.counter()).elements())

    def conjugation_stable(self) -> bool:
        c = self.counter()
        return all(c[(1 - q) % 1] == m for q, m in c.items())


@dataclass(frozen=True)
class OperatorForm:
    """One hypergeometric operator left(D) - t*right(D) in integer form.

    left_factors are pairs (c, r) standing for (c*D - r); right_factors
    stand for (c*D + r).  Each summand carries an integer scalar: removing
    a factor (c, r) during reduction divides the summand by the monic
    (D - r/c), so the constant c survives as a multiplier.  The expanded
    coefficient vectors (ascending powers of D) include the scalars.
    """

    reduced: bool
    left_scalar: int
    left_factors: tuple[tuple[int, int], ...]
    right_scalar: int
    right_factors: tuple[tuple[int, int], ...]
    expanded_left: tuple[int, ...]
    expanded_right: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.left_factors)


@dataclass(frozen=True)
class HodgeProfile:
    """p-profile and Hodge vector of a cancelled parameter pair.

    hodge_vector[s] counts p^{-1}(p_plus - s), displayed as
    h^{weight - s, s}; for weight tuples this matches the age spectrum
    via counts[j-1] = hodge_vector[j-1].
    """

    alphas: ParamMultiset
    betas: ParamMultiset
    p_values: tuple[int, ...]
    p_plus: int
    p_minus: int
    weight: int
    hodge_vector: tuple[int, ...]


@dataclass(frozen=True)
class PropositionReport:
    """Side-by-side comparison of the age spectrum and the Hodge profile."""

    ok: bool
    age_counts: tuple[int, ...]
    hodge_vector: tuple[int, ...]
    profile: HodgeProfile


def build_parameter_sets(w: WeightTuple) -> tuple[ParamMultiset, ParamMultiset]:
    """The two size-d parameter multisets attached to a weight tuple."""
    d = w.degree
    a = [Fraction(k, wi) for wi in w.weights for k in range(wi)]
    b = [Fraction(k, d) for k in range(d)]
    return ParamMultiset.of(a), ParamMultiset.of(b)


def cancel(
    a: ParamMultiset, b: ParamMultiset
) -> tuple[ParamMultiset, ParamMultiset, ParamMultiset]:
    """Remove the common part: returns (alphas, betas, common)."""
    common = a.intersection(b)
    return a.subtract(common), b.subtract(common), common


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def expand_factors(
    factors, sign: int, scalar: int = 1
) -> tuple[int, ...]:
    """Expand scalar * prod (c*D + sign*r) into ascending coefficients."""
    poly = [scalar]
    for c, r in factors:
        poly = _poly_mul(poly, [sign * r, c])
    return tuple(poly)


def operator_forms(w: WeightTuple) -> tuple[OperatorForm, OperatorForm]:
    """The full operator and its reduction for a weight tuple.

    The full left summand is prod over i, 0 <= k < w_i of (w_i*D - k);
    the right summand is prod over 0 <= k < d of (d*D + k).  Reduction
    removes, per common parameter q, one left factor with root q and the
    right factor (d, d - k) for q = k/d (the right factors have roots
    -k/d, congruent to (d-k)/d mod 1).  Among left factors with equal
    root the lexicographically smallest pair is removed; the expanded
    polynomial does not depend on that choice.
    """
    d = w.degree
    left = sorted((wi, k) for wi in w.weights for k in range(wi))
    right = [(d, k) for k in range(d)]
    full = OperatorForm(
        reduced=False,
        left_scalar=1,
        left_factors=tuple(left),
        right_scalar=1,
        right_factors=tuple(right),
        expanded_left=expand_factors(left, -1),
        expanded_right=expand_factors(right, +1),
    )

    a, b = build_parameter_sets(w)
    common = a.intersection(b)
    red_left = list(left)
    red_right = list(right)
    left_scalar = 1
    right_scalar = 1
    for q in sorted(common.entries):
        for idx, (c, r) in enumerate(red_left):
            if Fraction(r, c) == q:
                left_scalar *= c
                del red_left[idx]
                break
        else:
            raise AssertionError(f"common parameter {q} missing on the left")
        k_hat = q.numerator * (d // q.denominator)
        pair = (d, (d - k_hat) % d)
        right_scalar *= d
        red_right.remove(pair)

    reduced = OperatorForm(
        reduced=True,
        left_scalar=left_scalar,
        left_factors=tuple(red_left),
        right_scalar=right_scalar,
        right_factors=tuple(red_right),
        expanded_left=expand_factors(red_left, -1, left_scalar),
        expanded_right=expand_factors(red_right, +1, right_scalar),
    )
    return full, reduced


def conjecture_hodge(alphas: ParamMultiset, betas: ParamMultiset) -> HodgeProfile:
    """Hodge profile of a disjoint, conjugation-stable parameter pair.

    p(k) = #{j : alpha_j < beta_k} - k over the ascending betas (0-based);
    the vector slot s holds card p^{-1}(p_plus - s), i.e. h^{weight-s, s}.
    """
    if set(alphas.entries) & set(betas.entries):
        shared = sorted(set(alphas.entries) & set(betas.entries))
        raise OverlapError(f"parameter sets overlap at {shared}")
    for name, ms in (("alpha", alphas), ("beta", betas)):
        if not ms.conjugation_stable():
            raise ConjugationError(f"{name} set not stable under q -> -q mod 1")
    if len(alphas) != len(betas):
        raise RangeError(
            f"need equally many parameters, got {len(alphas)} alphas "
            f"and {len(betas)} betas"
        )
    if not betas.entries:
        return HodgeProfile(alphas, betas, (), 0, 0, 0, ())

    a = alphas.entries
    p_values = []
    for k, beta in enumerate(betas.entries):
        below = sum(1 for q in a if q < beta)
        p_values.append(below - k)
    p_plus = max(p_values)
    p_minus = min(p_values)
    weight = p_plus - p_minus
    hodge = tuple(p_values.count(p_plus - s) for s in range(weight + 1))
    return HodgeProfile(
        alphas=alphas,
        betas=betas,
        p_values=tuple(p_values),
        p_plus=p_plus,
        p_minus=p_minus,
        weight=weight,
        hodge_vector=hodge,
    )


def hodge_profile_of_weights(w: WeightTuple) -> HodgeProfile:
    """Profile of the cancelled parameter sets of a weight tuple."""
    a, b = build_parameter_sets(w)
    alphas, betas, _ = cancel(a, b)
    return conjecture_hodge(alphas, betas)


def verify_proposition(w: WeightTuple) -> PropositionReport:
    """Compare the profile's Hodge vector with the age spectrum.

    The profile vector is padded with zeros to n slots; a failed
    comparison is a finding, not an error.
    """
    profile = hodge_profile_of_weights(w)
    counts = age_spectrum(w).counts
    padded = profile.hodge_vector + (0,) * (len(counts) - len(profile.hodge_vector))
    return PropositionReport(
        ok=padded == counts,
        age_counts=counts,
        hodge_vector=padded,
        profile=profile,
    )


def factored_text(form: OperatorForm) -> str:
    """Factored rendering: (c*D - r) tokens joined by '*', ' - t*' between summands."""
    left = [f"({c}*D - {r})" for c, r in form.left_factors]
    right = [f"({c}*D + {r})" for c, r in form.right_factors]
    if form.left_scalar != 1:
        left.insert(0, str(form.left_scalar))
    if form.right_scalar != 1:
        right.insert(0, str(form.right_scalar))
    return "*".join(left) + " - t*" + "*".join(right)


def poly_text(coeffs, var: str = "D") -> str:
    """Expanded rendering in descending powers with integer coefficients."""
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = coeffs[power]
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            body = str(mag)
        elif power == 1:
            body = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{power}" if mag == 1 else f"{mag}*{var}^{power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def expanded_text(form: OperatorForm) -> str:
    return f"{poly_text(form.expanded_left)} - t*({poly_text(form.expanded_right)})"
