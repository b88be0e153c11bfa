"""Sparse polynomials in X1..X4 with rational coefficients under a local ordering.

Monomials are plain 4-tuples of exponents.  A :class:`Polynomial` keeps its
terms sorted from the largest monomial to the smallest, so the first term is
the leading term.  Under a local ordering the leading monomial is one of
smallest total degree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

NVARS = 4
VARIABLES = ("X1", "X2", "X3", "X4")

Monomial = tuple  # tuple[int, int, int, int]
Coefficient = Union[int, Fraction]

ONE = (0, 0, 0, 0)


class OrderingError(ValueError):
    pass


def monomial(*exponents: int) -> Monomial:
    if len(exponents) != NVARS:
        raise ValueError(f"expected {NVARS} exponents, got {len(exponents)}")
    if any(e < 0 for e in exponents):
        raise ValueError(f"negative exponent in {exponents}")
    return tuple(int(e) for e in exponents)


def variable(i: int, power: int = 1) -> Monomial:
    """Return ``X_i^power`` with ``i`` counted from 1."""
    e = [0] * NVARS
    e[i - 1] = power
    return tuple(e)


def mdeg(m: Monomial) -> int:
    return sum(m)


def mdivides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mlcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mmul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mquo(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; ``b`` must divide ``a``."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def mcoprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def weighted_degree(m: Monomial, weights: Iterable[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


class LocalOrdering:
    """Negative degree lexicographic ordering with X1 > X2 > X3 > X4.

    ``a`` is larger than ``b`` when ``deg a < deg b``; on equal degree the
    lexicographically larger one wins.  The constant monomial is the largest
    of all.
    """

    name = "Ds"

    def key(self, m: Monomial):
        # larger key == larger monomial
        return (-sum(m),) + tuple(m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __repr__(self):
        return "LocalOrdering('Ds')"

    def __eq__(self, other):
        return isinstance(other, LocalOrdering)

    def __hash__(self):
        return hash(self.name)


DS = LocalOrdering()  # the ordering used throughout


def compare(a: Monomial, b: Monomial, order: LocalOrdering = DS) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``."""
    return order.compare(a, b)


def _coeff(c) -> Coefficient:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def _div(a: Coefficient, b: Coefficient) -> Coefficient:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return _coeff(Fraction(a) / b)


class Polynomial:
    """Immutable sparse polynomial; ``terms`` is sorted descending."""

    __slots__ = ("terms", "order", "_hash")

    def __init__(self, terms: Union[Mapping, Iterable] = (), order: LocalOrdering = DS):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc = {}
        for m, c in items:
            m = tuple(m)
            if len(m) != NVARS or any(e < 0 for e in m):
                raise ValueError(f"bad monomial {m}")
            acc[m] = acc.get(m, 0) + c
        key = order.key
        self.terms = tuple(sorted(((m, _coeff(c)) for m, c in acc.items() if c != 0),
                                  key=lambda t: key(t[0]), reverse=True))
        self.order = order
        self._hash = None

    @classmethod
    def _raw(cls, terms, order):
        # terms already sorted, merged and nonzero
        p = cls.__new__(cls)
        p.terms = terms
        p.order = order
        p._hash = None
        return p

    @classmethod
    def binomial(cls, a: Monomial, b: Monomial, order: LocalOrdering = DS) -> "Polynomial":
        """Return ``a - b``."""
        return cls({a: 1, b: -1} if a != b else {}, order)

    @classmethod
    def from_monomial(cls, m: Monomial, coeff: Coefficient = 1, order: LocalOrdering = DS):
        return cls({m: coeff}, order)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def LT(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0]

    @property
    def LM(self) -> Monomial:
        return self.LT[0]

    @property
    def LC(self) -> Coefficient:
        return self.LT[1]

    def monomials(self):
        return [m for m, _ in self.terms]

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(m) for m, _ in self.terms)

    def ecart(self) -> int:
        return self.total_degree() - sum(self.LM)

    def lowest_form(self) -> "Polynomial":
        """Sum of the terms of minimal total degree."""
        if not self.terms:
            return self
        d = min(sum(m) for m, _ in self.terms)
        return Polynomial._raw(tuple(t for t in self.terms if sum(t[0]) == d), self.order)

    def weighted_degrees(self, weights) -> set:
        return {weighted_degree(m, weights) for m, _ in self.terms}

    def is_weighted_homogeneous(self, weights) -> bool:
        return len(self.weighted_degrees(weights)) <= 1

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.order != self.order:
            raise OrderingError("polynomials use different orderings")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self._combine(other, -1)

    def _combine(self, other, sign):
        acc = dict(self.terms)
        for m, c in other.terms:
            v = acc.get(m, 0) + sign * c
            if v:
                acc[m] = v
            else:
                acc.pop(m, None)
        return Polynomial(acc, self.order)

    def __neg__(self):
        return Polynomial._raw(tuple((m, -c) for m, c in self.terms), self.order)

    def mul_term(self, m: Monomial, c: Coefficient = 1) -> "Polynomial":
        """Multiply by the term ``c * m``; order is preserved by compatibility."""
        if c == 0:
            return Polynomial._raw((), self.order)
        c = _coeff(c)
        return Polynomial._raw(
            tuple((mmul(mm, m), _coeff(cc * c)) for mm, cc in self.terms), self.order)

    def scale(self, c: Coefficient) -> "Polynomial":
        return self.mul_term(ONE, c)

    def monic(self) -> "Polynomial":
        if not self.terms or self.LC == 1:
            return self
        lc = self.LC
        return Polynomial._raw(tuple((m, _div(c, lc)) for m, c in self.terms), self.order)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        return render(self)


def ecart(f: Polynomial) -> int:
    """``deg f - deg LM(f)``; nonnegative under a local ordering."""
    if f.is_zero():
        raise ValueError("ecart of the zero polynomial is undefined")
    return f.ecart()


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(lcm/LT f) f - (lcm/LT g) g`` with ``lcm = lcm(LM f, LM g)``."""
    if f.is_zero() or g.is_zero():
        raise ValueError("s-polynomial of a zero polynomial")
    (mf, cf), (mg, cg) = f.LT, g.LT
    L = mlcm(mf, mg)
    a = f.mul_term(mquo(L, mf), _div(1, cf))
    b = g.mul_term(mquo(L, mg), _div(1, cg))
    return a - b


def normalize(f: Polynomial) -> Polynomial:
    """Scale so the leading coefficient is 1."""
    return f.monic()


def _render_monomial(m: Monomial) -> str:
    parts = []
    for name, e in zip(VARIABLES, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render(f: Polynomial) -> str:
    """Canonical text, e.g. ``X1^22 - X3*X4``."""
    if f.is_zero():
        return "0"
    out = []
    for i, (m, c) in enumerate(f.terms):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = _render_monomial(m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_TERM = re.compile(r"([+-]?)\s*([^+-]+)")
_FACTOR = re.compile(r"X_?\{?([1-4])\}?(?:\^\{?(\d+)\}?)?")
_NUMBER = re.compile(r"^(\d+)(?:/(\d+))?")


def parse_polynomial(text: str, order: LocalOrdering = DS) -> Polynomial:
    """Parse ``X1^22 - X3*X4`` or the TeX-ish ``X_1^{22}-X_3X_4``."""
    s = text.replace(" ", "").replace("*", "")
    if s in ("", "0"):
        return Polynomial((), order)
    acc = {}
    pos = 0
    for match in _TERM.finditer(s):
        if match.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = match.end()
        sign, body = match.groups()
        coeff = Fraction(1)
        num = _NUMBER.match(body)
        if num:
            coeff = Fraction(int(num.group(1)), int(num.group(2) or 1))
            body = body[num.end():]
        exps = [0] * NVARS
        i = 0
        for fm in _FACTOR.finditer(body):
            if fm.start() != i:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            exps[int(fm.group(1)) - 1] += int(fm.group(2) or 1)
            i = fm.end()
        if i != len(body):
            raise ValueError(f"cannot parse term {body!r} in {text!r}")
        if sign == "-":
            coeff = -coeff
        m = tuple(exps)
        acc[m] = acc.get(m, 0) + coeff
    if pos != len(s):
        raise ValueError(f"cannot parse {text!r}")
    return Polynomial(acc, order)
