"""Closed forms for the alpha4 = 3 family with alpha2 > alpha21 + 1.

Everything here is written down directly from the parameters ``(k, s, l)``
rather than computed; the ``mora`` and ``hilbert`` modules provide the
independent computations these closed forms are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Polynomial, monomial
from .hilbert import MonomialIdeal, hilbert_function, is_nondecreasing
from .semigroup import (ConsistencyError, FamilyInvariants, InvalidParameters, Check,
                        PseudoSymmetricParams, family_invariants, toric_ideal, validate)
from .series import ONE_MINUS_T, SeriesPolynomial

S = SeriesPolynomial


def _require(params: PseudoSymmetricParams, inv: FamilyInvariants = None) -> FamilyInvariants:
    validate(params, closed_form=True).raise_for_status()
    inv = inv or family_invariants(params)
    if params.alpha3 < inv.l + 1:
        raise InvalidParameters([Check("alpha3 >= l + 1", False, "hypothesis",
                                       f"alpha3={params.alpha3}, l={inv.l}")])
    return inv


def g_exponents(p: PseudoSymmetricParams, i: int):
    """``(X2 power, X1 power, X3 power)`` of ``g_i = X2^a X4 - X1^b X3^c``."""
    a1, a2, a3, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha21
    return (2 * i + 1) * a2 + 1, i * a1 + (2 * i + 2) * a21 + 1, a3 - (i + 1)


def h_exponents(p: PseudoSymmetricParams, j: int):
    """``(X2 power, X1 power, X3 power)`` of ``h_j = X2^a - X1^b X3^c``."""
    a1, a2, a3, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha21
    return (2 * j + 2) * a2 + 1, j * a1 + (2 * j + 3) * a21 + 1, a3 - (j + 1)


def g_poly(p, i):
    a, b, c = g_exponents(p, i)
    return Polynomial.binomial(monomial(0, a, 0, 1), monomial(b, 0, c, 0))


def h_poly(p, j):
    a, b, c = h_exponents(p, j)
    return Polynomial.binomial(monomial(0, a, 0, 0), monomial(b, 0, c, 0))


@dataclass
class ClosedFormBasis:
    f: list               # f1..f7
    g: dict = field(default_factory=dict)   # i -> g_i, i = 0..s
    h: dict = field(default_factory=dict)   # j -> h_j, j = s..l

    def elements(self) -> list:
        return list(self.f) + [self.g[i] for i in sorted(self.g)] + \
            [self.h[j] for j in sorted(self.h)]

    def labelled(self) -> list:
        out = [(f"f{i}", f) for i, f in enumerate(self.f, 1)]
        out += [(f"g{i}", self.g[i]) for i in sorted(self.g)]
        out += [(f"h{j}", self.h[j]) for j in sorted(self.h)]
        return out


def closed_form_basis(params: PseudoSymmetricParams, inv: FamilyInvariants = None) -> ClosedFormBasis:
    inv = _require(params, inv)
    a1, a2, a21 = params.alpha1, params.alpha2, params.alpha21
    f6 = Polynomial.binomial(monomial(a1 + a21, 0, 0, 0), monomial(0, a2, 1, 1))
    f7 = Polynomial.binomial(monomial(a1 + 2 * a21, 0, 0, 0), monomial(0, 2 * a2, 1, 0))
    return ClosedFormBasis(
        f=toric_ideal(params) + [f6, f7],
        g={i: g_poly(params, i) for i in range(inv.s + 1)},
        h={j: h_poly(params, j) for j in range(inv.s, inv.l + 1)},
    )


def predicted_leading_monomials(params: PseudoSymmetricParams,
                                inv: FamilyInvariants = None) -> MonomialIdeal:
    """Leading forms of the closed-form basis, as a minimal monomial ideal.

    ``g_i`` for ``i < s`` and ``h_j`` for ``j < l`` lead with their X1 side,
    ``g_s`` and ``h_l`` with their X2 side.
    """
    inv = _require(params, inv)
    a2, a3, a21 = params.alpha2, params.alpha3, params.alpha21
    gens = [
        monomial(0, 0, 1, 2),
        monomial(a21, 0, 0, 1),
        monomial(0, 0, a3, 0),
        monomial(0, 0, 0, 3),
        monomial(0, 1, 0, 2),
        monomial(0, a2, 1, 1),
        monomial(0, 2 * a2, 1, 0),
    ]
    for i in range(inv.s):
        _, b, c = g_exponents(params, i)
        gens.append(monomial(b, 0, c, 0))
    gens.append(monomial(0, g_exponents(params, inv.s)[0], 0, 1))
    for j in range(inv.s, inv.l):
        _, b, c = h_exponents(params, j)
        gens.append(monomial(b, 0, c, 0))
    gens.append(monomial(0, h_exponents(params, inv.l)[0], 0, 0))
    return MonomialIdeal(gens)


def correction_series(params: PseudoSymmetricParams, inv: FamilyInvariants) -> SeriesPolynomial:
    """The ``R(t)`` collecting the X1-led ``g_i`` and ``h_j`` leading forms.

    Empty sums vanish, so ``s = l = 0`` gives zero and ``s = 0 < l`` keeps only
    the second sum.
    """
    a1, a3, a21 = params.alpha1, params.alpha3, params.alpha21
    s, l = inv.s, inv.l
    step = a1 + 2 * a21 - 1
    out = S()
    for j in range(s):
        out = out + S.monomial(2 * a21 + a3 + j * step)
    base = s * a1 + (2 * s + 3) * a21 + a3 - s
    for j in range(l - s):
        out = out + S.monomial(base + j * step)
    return out


def span(a: int, b: int) -> SeriesPolynomial:
    """``(t^a - t^(b+1)) / (1 - t)``: ``t^a + ... + t^b``, signed when ``b < a - 1``."""
    if b >= a - 1:
        return S.monomial(a) * S.geometric(b - a) if b >= a else S()
    return -span(b + 1, a - 1)


def _one_minus_t_to(n):
    return S.monomial(0) - S.monomial(n)


def closed_form_numerator(params: PseudoSymmetricParams, inv: FamilyInvariants = None) -> SeriesPolynomial:
    """First Hilbert series numerator of the tangent cone, in closed form."""
    inv = _require(params, inv)
    a2, a3, a21 = params.alpha2, params.alpha3, params.alpha21
    s, l = inv.s, inv.l
    t = S.monomial
    u = ONE_MINUS_T
    R = correction_series(params, inv)
    P = S([1, 0, 0, -3, 3, -1])
    P = P - t(a21 + 1) * u * S([1, 1, -2, 1])
    P = P - t(a3) * (_one_minus_t_to(a21 + 1) - t(2) * _one_minus_t_to(a21))
    P = P - t(a2 + 2) * u * _one_minus_t_to(a21) * _one_minus_t_to(a3 - 1)
    P = P - t(2 * a2 + 1) * u * _one_minus_t_to(a3 - 1)
    P = P - u * u * _one_minus_t_to(2 * a2) * R
    P = P - u * u * _one_minus_t_to(a21) * t((2 * s + 1) * a2 + 2)
    P = P - u * u * t((2 * l + 2) * a2 + 1)
    return P


def closed_form_second_series(params: PseudoSymmetricParams,
                              inv: FamilyInvariants = None) -> SeriesPolynomial:
    """Second Hilbert series in closed form; checked against ``P = Q (1-t)^3``."""
    inv = _require(params, inv)
    a2, a3, a21 = params.alpha2, params.alpha3, params.alpha21
    s, l = inv.s, inv.l
    geo = S.geometric
    t = S.monomial
    R = correction_series(params, inv)
    # alpha3 = 2 turns the t^4..t^alpha3 run into -t^3
    head = S([0, 1, 2]) + span(4, a3)
    Q = geo(a21 - 1) * head
    Q = Q + geo(a3 - 2) * (geo(2 * a2) - t(a2 + 2) * geo(a21 - 1))
    Q = Q - geo(a21 - 1) * t((2 * s + 1) * a2 + 2)
    Q = Q + t(a3 - 1) * geo((2 * l + 2) * a2 - a3 + 1)
    Q = Q - geo(2 * a2 - 1) * R
    P = closed_form_numerator(params, inv)
    if Q * ONE_MINUS_T ** 3 != P:
        raise ConsistencyError("closed-form Q(t) (1-t)^3 differs from closed-form P(t)")
    return Q


@dataclass
class MonotonicityVerdict:
    q_nonnegative: bool
    nondecreasing: bool
    l_zero: bool
    negative_terms: dict
    first_decrease: int = None

    def as_dict(self):
        return {
            "q_nonnegative": self.q_nonnegative,
            "nondecreasing": self.nondecreasing,
            "l_zero": self.l_zero,
            "negative_terms": {str(k): v for k, v in sorted(self.negative_terms.items())},
            "first_decrease": self.first_decrease,
        }


def monotonicity_verdict(Q: SeriesPolynomial, inv: FamilyInvariants = None) -> MonotonicityVerdict:
    """Coefficient-sign test on ``Q`` plus a direct look at the Hilbert function."""
    H = hilbert_function(Q, max(Q.degree, 0) + 1)
    first = next((n for n in range(1, len(H)) if H[n] < H[n - 1]), None)
    return MonotonicityVerdict(
        q_nonnegative=all(c >= 0 for c in Q.coeffs),
        nondecreasing=is_nondecreasing(H),
        l_zero=inv is not None and inv.l == 0,
        negative_terms=Q.negative_terms(),
        first_decrease=first,
    )
