"""Closed-form routes to the part-count polynomials.

Three independent alternatives to the lattice-fold oracle live here:

* product_qpoly: for weights of the shape "sum of all simple roots, plus
  extra copies of alpha_i on a sparse interior index set", the polynomial
  factors as q**(m+1) * (1+q)**(r-1-2L) * (2+2q+q**2)**L where L is the
  number of bumped indices and m the total number of extra copies.
* gf_coefficient: for the highest root of B/C/D at rank r, the polynomial
  is the x**r coefficient of a rational generating function whose
  denominator is 1 - (2+2q+q**2)x + (1+2q+q**2+q**3)x**2; implemented as
  the equivalent linear recurrence with family-specific numerators.
* explicit_qpoly: the same highest-root polynomial written directly as
  g_plus * beta_plus**e + g_minus * beta_minus**e with conjugate surds
  beta = ((q**2+2q+2) +/- q*s)/2, s*s = q*q + 4.  The surd parts must
  cancel identically; the implementation computes both conjugate terms in
  QuadExt and verifies the cancellation instead of assuming it.

check_bender_conditions verifies the hypotheses of the classical central
limit theorem for coefficient arrays of rational generating functions at
q = 1: the dominant denominator root is simple and no family numerator
vanishes there.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalCancellationFailure, InvalidSupport, RankTooSmall
from .polyring import QPoly, QuadExt, RatFunc, Root5
from .rootsys import Weight, validate_type_rank


@dataclass(frozen=True)
class SupportSpec:
    """A bump pattern over the all-ones weight of a rank-r system.

    entries is a tuple of (index, extra) pairs: index i in 1..rank gets
    extra additional copies of alpha_i on top of the base single copy.
    Placement rules enforced at construction:

    * indices strictly increasing and nonconsecutive (gaps of at least 2),
    * every extra count is a positive int,
    * type A: indices stay strictly inside [2, rank-1],
    * types B/C/D: rank >= 5 always, indices strictly inside [2, rank-3].
    """

    lie_type: str
    rank: int
    entries: tuple

    def __post_init__(self):
        validate_type_rank(self.lie_type, self.rank)
        entries = tuple((int(i), int(c)) for i, c in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.lie_type != "A" and self.rank < 5:
            raise InvalidSupport(
                f"type {self.lie_type} product-form weights need rank >= 5, got {self.rank}"
            )
        last = None
        hi = self.rank - 1 if self.lie_type == "A" else self.rank - 3
        for i, c in entries:
            if c < 1:
                raise InvalidSupport(f"extra count at index {i} must be >= 1, got {c}")
            if i < 2 or i > hi:
                raise InvalidSupport(
                    f"index {i} outside the allowed interior [2, {hi}] "
                    f"for type {self.lie_type} rank {self.rank}"
                )
            if last is not None and i - last < 2:
                raise InvalidSupport(f"indices {last} and {i} are consecutive")
            last = i

    @property
    def bump_count(self) -> int:
        """Number of bumped indices (L in the factored polynomial)."""
        return len(self.entries)

    @property
    def total_extra(self) -> int:
        """Total extra copies over the base weight (m in the exponent)."""
        return sum(c for _, c in self.entries)


def weight_of(spec: SupportSpec) -> Weight:
    """The weight a spec describes: all ones plus the extra copies."""
    v = [1] * spec.rank
    for i, c in spec.entries:
        v[i - 1] += c
    return tuple(v)


def product_qpoly(spec: SupportSpec) -> QPoly:
    """Closed product form of the part-count polynomial for spec's weight."""
    r, ell, m = spec.rank, spec.bump_count, spec.total_extra
    return (
        QPoly.term(1, m + 1)
        * QPoly((1, 1)) ** (r - 1 - 2 * ell)
        * QPoly((2, 2, 1)) ** ell
    )


def iter_support_specs(lie_type, rank, max_bumps=2, max_extra=3):
    """All valid specs with at most max_bumps bumped indices, each bumped by
    1..max_extra, in a fixed deterministic order."""
    validate_type_rank(lie_type, rank)
    if lie_type != "A" and rank < 5:
        return
    hi = rank - 1 if lie_type == "A" else rank - 3
    interior = range(2, hi + 1)
    for ell in range(max_bumps + 1):
        for idxs in itertools.combinations(interior, ell):
            if any(b - a < 2 for a, b in zip(idxs, idxs[1:])):
                continue
            for extras in itertools.product(range(1, max_extra + 1), repeat=ell):
                yield SupportSpec(lie_type, rank, tuple(zip(idxs, extras)))


# Generating-function route: P_r = (2+2q+q^2) P_{r-1} - (1+2q+q^2+q^3) P_{r-2}
# + N_r, with P_0 = P_{-1} = 0 and the family numerators below.
_GF_SHIFT1 = QPoly((2, 2, 1))
_GF_SHIFT2 = QPoly((1, 2, 1, 1))
_GF_NUMERATORS = {
    "B": {1: QPoly((0, 1)), 2: QPoly((0, -1, -1)), 3: QPoly((0, 0, 1))},
    "C": {1: QPoly((0, 1)), 2: QPoly((0, -1, -1))},
    "D": {4: QPoly((0, 1, 4, 6, 3, 1)), 5: QPoly((0, -1, -4, -6, -5, -3, -1))},
}

_gf_lock = threading.Lock()
_gf_cache = {t: [QPoly.zero()] for t in _GF_NUMERATORS}


def gf_coefficient(lie_type: str, rank: int) -> QPoly:
    """Highest-root part-count polynomial via the rational generating function.

    Defined for families B, C, D at every rank >= 0; below the family's Lie
    minimum the series terms are simply the recurrence's formal values.
    """
    if lie_type not in _GF_NUMERATORS:
        raise ValueError(f"generating-function route covers B, C, D, not {lie_type!r}")
    if rank < 0:
        raise ValueError("rank must be nonnegative")
    numerators = _GF_NUMERATORS[lie_type]
    with _gf_lock:
        seq = _gf_cache[lie_type]
        while len(seq) <= rank:
            k = len(seq)
            prev1 = seq[k - 1]
            prev2 = seq[k - 2] if k >= 2 else QPoly.zero()
            term = _GF_SHIFT1 * prev1 - _GF_SHIFT2 * prev2 + numerators.get(k, QPoly.zero())
            seq.append(term)
        return seq[rank]


def _half_surd(a_coeffs, b_coeffs, den_coeffs=None):
    """(A + B*s) / den as a QuadExt, with s*s = q*q + 4."""
    den = QPoly(den_coeffs) if den_coeffs is not None else QPoly.one()
    return QuadExt(RatFunc(QPoly(a_coeffs), den), RatFunc(QPoly(b_coeffs), den))


#: The conjugate surds beta = ((q^2 + 2q + 2) +/- q*s) / 2.  They satisfy
#: beta_plus + beta_minus = 2 + 2q + q^2 and
#: beta_plus * beta_minus = 1 + 2q + q^2 + q^3.
BETA_PLUS = _half_surd((1, 1, Fraction(1, 2)), (0, Fraction(1, 2)))
BETA_MINUS = _half_surd((1, 1, Fraction(1, 2)), (0, Fraction(-1, 2)))

# Family coefficients g at the surds, over the common denominator 2(q^2+4),
# and the rank shift in the exponent: value = g+ * beta+**(r-shift) + conj.
_EXPLICIT = {
    "B": (
        _half_surd((0, 4, 4, 5, 1, 1), (0, 2, 3, 1, 1), (8, 0, 2)),
        2,
        2,
    ),
    "C": (
        _half_surd((0, 4, 0, 1), (0, 0, 1), (8, 0, 2)),
        1,
        1,
    ),
    "D": (
        _half_surd((0, 4, 16, 25, 16, 10, 3, 1), (0, 2, 9, 12, 8, 3, 1), (8, 0, 2)),
        4,
        4,
    ),
}


def explicit_qpoly(lie_type: str, rank: int) -> QPoly:
    """Highest-root part-count polynomial from the conjugate-surd formulas.

    Type A is the plain product q*(1+q)**(rank-1).  For B/C/D both conjugate
    terms are computed independently in the quadratic extension; the surd
    part must cancel and the rational part must clear its denominator, and
    either failure raises InternalCancellationFailure.
    """
    if lie_type == "A":
        if rank < 1:
            raise RankTooSmall("type A needs rank >= 1")
        return QPoly.q() * QPoly((1, 1)) ** (rank - 1)
    if lie_type not in _EXPLICIT:
        raise ValueError(f"unknown family {lie_type!r}")
    g_plus, shift, min_rank = _EXPLICIT[lie_type]
    if rank < min_rank:
        raise RankTooSmall(
            f"explicit formula for type {lie_type} starts at rank {min_rank}, got {rank}"
        )
    e = rank - shift
    total = g_plus * BETA_PLUS ** e + g_plus.conjugate() * BETA_MINUS ** e
    if not total.b.is_zero:
        raise InternalCancellationFailure(
            f"surd part survived for {lie_type}{rank}: {total.b}"
        )
    if not total.a.is_polynomial:
        raise InternalCancellationFailure(
            f"denominator survived for {lie_type}{rank}: {total.a}"
        )
    return total.a.as_qpoly()


@dataclass(frozen=True)
class BenderReport:
    """Outcome of the central-limit hypotheses check at q = 1.

    The denominator specializes to 1 - 5z + 5z**2; its roots are
    (5 -/+ sqrt(5))/10.  The check verifies the root pair exactly (sum 1,
    product 1/5, both annihilate the denominator), confirms the dominant
    (smaller) root is simple, and evaluates each family numerator there.
    """

    small_root: Root5
    large_root: Root5
    numerator_values: dict
    passed: bool


def _root5_horner(int_coeffs, z: Root5) -> Root5:
    acc = Root5(0)
    for c in reversed(int_coeffs):
        acc = acc * z + c
    return acc


def check_bender_conditions() -> BenderReport:
    """Verify the rational-GF central-limit hypotheses for B, C, D at q = 1."""
    small = Root5(Fraction(1, 2), Fraction(-1, 10))
    large = Root5(Fraction(1, 2), Fraction(1, 10))
    den = [1, -5, 5]
    ok = (
        _root5_horner(den, small) == Root5(0)
        and _root5_horner(den, large) == Root5(0)
        and small + large == Root5(1)
        and small * large == Root5(Fraction(1, 5))
        and small != large  # distinct roots, so the dominant one is simple
    )
    values = {}
    for fam in sorted(_GF_NUMERATORS):
        terms = _GF_NUMERATORS[fam]
        top = max(terms)
        coeffs = [terms.get(k, QPoly.zero())(1) for k in range(top + 1)]
        val = _root5_horner(coeffs, small)
        values[fam] = val
        ok = ok and val != Root5(0)
    return BenderReport(small, large, values, ok)
