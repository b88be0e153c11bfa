"""Monomial ideals in four variables and their Hilbert series.

The first Hilbert series numerator ``P`` is computed with the recursion
``P(I) = P(J) - t^deg(w) P(J : w)`` for ``I = J + (w)``.  The second series
is ``Q = P / (1 - t)^3`` (the rings here have Krull dimension one), and the
Hilbert function is the running sum of the coefficients of ``Q``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterable, Optional

from .algebra import NVARS, mcoprime, mdeg, mdivides, mlcm, mquo
from .series import SeriesPolynomial, cumulative

MAX_RECURSION = 10**5


class DimensionError(ArithmeticError):
    """The numerator is not divisible by (1 - t)^3."""


class MonomialIdeal:
    """Monomial ideal kept as its set of minimal generators."""

    __slots__ = ("generators",)

    def __init__(self, gens: Iterable = ()):
        self.generators = frozenset(_minimal(tuple(g) for g in gens))

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.generators)

    def __contains__(self, m):
        return any(mdivides(g, m) for g in self.generators)

    def __eq__(self, other):
        if isinstance(other, MonomialIdeal):
            return self.generators == other.generators
        return NotImplemented

    def __hash__(self):
        return hash(self.generators)

    def sorted(self) -> list:
        return sorted(self.generators, key=lambda m: (mdeg(m), m))

    def __repr__(self):
        return f"MonomialIdeal({self.sorted()})"


def _minimal(gens):
    out = []
    for m in sorted(set(gens), key=mdeg):
        if not any(mdivides(g, m) for g in out):
            out.append(m)
    return out


def minimalize(gens: Iterable) -> MonomialIdeal:
    return MonomialIdeal(gens)


def colon(I: MonomialIdeal, w) -> MonomialIdeal:
    """``(I : w)`` generated by ``lcm(m, w) / w``."""
    w = tuple(w)
    return MonomialIdeal(mquo(mlcm(m, w), w) for m in I.generators)


def _one_minus_t_power(d):
    return SeriesPolynomial.monomial(0) - SeriesPolynomial.monomial(d)


def highest_degree_pivot(gens):
    return max(gens, key=lambda m: (mdeg(m), m))


def random_pivot(rng: random.Random) -> Callable:
    return lambda gens: rng.choice(sorted(gens))


def numerator(I, pivot: Optional[Callable] = None, memo: Optional[dict] = None) -> SeriesPolynomial:
    """First Hilbert series numerator of ``K[X1..X4] / I``.

    ``pivot`` picks the generator ``w`` to split off; the result does not
    depend on it.  Ideals whose generators are pairwise coprime are a base
    case (a product of ``1 - t^deg``).
    """
    if not isinstance(I, MonomialIdeal):
        I = MonomialIdeal(I)
    pivot = pivot or highest_degree_pivot
    memo = {} if memo is None else memo
    return _numerator(I.generators, pivot, memo, 0)


def _numerator(gens: frozenset, pivot, memo, depth) -> SeriesPolynomial:
    if gens in memo:
        return memo[gens]
    if depth > MAX_RECURSION:
        raise RecursionError("monomial ideal recursion too deep")
    if len(gens) <= 1 or _pairwise_coprime(gens):
        out = SeriesPolynomial.one()
        for g in gens:
            out = out * _one_minus_t_power(mdeg(g))
    else:
        w = pivot(gens)
        rest = gens - {w}
        quotient = frozenset(_minimal(mquo(mlcm(m, w), w) for m in rest))
        out = _numerator(rest, pivot, memo, depth + 1) - \
            _numerator(quotient, pivot, memo, depth + 1).shift(mdeg(w))
    memo[gens] = out
    return out


def _pairwise_coprime(gens):
    gens = list(gens)
    return all(mcoprime(a, b) for i, a in enumerate(gens) for b in gens[i + 1:])


def second_series(P: SeriesPolynomial, dimension_drop: int = 3) -> SeriesPolynomial:
    """``Q = P / (1 - t)^3`` by exact division."""
    Q = P
    for _ in range(dimension_drop):
        Q, r = Q.divmod_one_minus_t()
        if r != 0:
            raise DimensionError("dimension mismatch or corrupted numerator: "
                                 "(1 - t)^3 does not divide P")
    return Q


def hilbert_function(Q: SeriesPolynomial, N: int) -> list:
    """``H(0..N)`` as running sums of the coefficients of ``Q``."""
    return cumulative(Q.coeffs, N)


def regularity_index(H: list) -> int:
    """Smallest ``n0`` after which ``H`` stays constant inside the window."""
    n0 = len(H) - 1
    while n0 > 0 and H[n0 - 1] == H[-1]:
        n0 -= 1
    return n0


def is_nondecreasing(H: list) -> bool:
    H = [0] + list(H)
    return all(a <= b for a, b in zip(H, H[1:]))


def degree_monomials(d: int, bounds=None):
    """Monomials of total degree ``d``; ``bounds[i]`` caps exponent ``i`` (exclusive)."""
    if bounds is None:
        for combo in combinations_with_replacement(range(NVARS), d):
            e = [0] * NVARS
            for i in combo:
                e[i] += 1
            yield tuple(e)
        return
    # the first variable is determined by the others
    b2, b3, b4 = (min(b, d + 1) for b in bounds[1:])
    for e4 in range(b4):
        for e3 in range(min(b3, d - e4 + 1)):
            rest = d - e4 - e3
            for e2 in range(min(b2, rest + 1)):
                e1 = rest - e2
                if e1 < bounds[0]:
                    yield (e1, e2, e3, e4)


def _pure_power_bounds(gens):
    bounds = [float("inf")] * NVARS
    for g in gens:
        support = [i for i, e in enumerate(g) if e]
        if len(support) == 1:
            i = support[0]
            bounds[i] = min(bounds[i], g[i])
    return bounds


def count_standard_monomials(I, d: int) -> int:
    """Number of degree-``d`` monomials outside ``I``, by enumeration.

    Exponents at or above a pure power in ``I`` are skipped outright, which
    keeps high degrees reachable for ideals containing such powers.
    """
    if not isinstance(I, MonomialIdeal):
        I = MonomialIdeal(I)
    gens = sorted(I.generators, key=mdeg)
    bounds = _pure_power_bounds(gens)
    return sum(1 for m in degree_monomials(d, bounds)
               if not any(mdivides(g, m) for g in gens))


def numerator_coefficient_by_counting(I, d: int) -> int:
    """Coefficient of ``t^d`` in ``P`` from counts: ``P = (1 - t)^4 * sum H(n) t^n``."""
    binom = (1, -4, 6, -4, 1)
    return sum(c * count_standard_monomials(I, d - i) for i, c in enumerate(binom) if d - i >= 0)


def cm_criterion(I: MonomialIdeal) -> bool:
    """True (Cohen-Macaulay) iff no minimal generator involves X1.

    Only meaningful for leading-form ideals of monomial curves with X1 the
    variable of smallest weight.
    """
    return not any(g[0] > 0 for g in I.generators)


@dataclass
class HilbertReport:
    P: SeriesPolynomial
    Q: SeriesPolynomial
    H: list
    regularity_index: int
    multiplicity: int
    cm: bool
    nondecreasing: bool
    q_nonnegative: bool


def hilbert_report(I: MonomialIdeal, max_degree: Optional[int] = None) -> HilbertReport:
    P = numerator(I)
    Q = second_series(P)
    N = Q.degree + 4 if max_degree is None else max_degree
    H = hilbert_function(Q, N)
    return HilbertReport(
        P=P, Q=Q, H=H,
        regularity_index=regularity_index(hilbert_function(Q, max(N, Q.degree + 1))),
        multiplicity=Q(1),
        cm=cm_criterion(I),
        nondecreasing=is_nondecreasing(hilbert_function(Q, max(N, Q.degree + 1))),
        q_nonnegative=all(c >= 0 for c in Q.coeffs),
    )

