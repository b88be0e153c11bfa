"""Dense univariate integer polynomials in ``t`` for Hilbert series numerators."""

from __future__ import annotations

import re
from typing import Iterable, Sequence


class SeriesPolynomial:
    """Coefficients indexed by the power of ``t``; trailing zeros are trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "SeriesPolynomial":
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @classmethod
    def one(cls):
        return cls([1])

    @classmethod
    def geometric(cls, top: int) -> "SeriesPolynomial":
        """``1 + t + ... + t^top``; zero when ``top < 0``."""
        return cls([1] * (top + 1)) if top >= 0 else cls()

    @classmethod
    def from_sparse(cls, terms) -> "SeriesPolynomial":
        terms = dict(terms)
        if not terms:
            return cls()
        c = [0] * (max(terms) + 1)
        for e, v in terms.items():
            c[int(e)] += v
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SeriesPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return SeriesPolynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return SeriesPolynomial(self[i] - other[i] for i in range(n))

    def __neg__(self):
        return SeriesPolynomial(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return SeriesPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return SeriesPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        b = [(j, y) for j, y in enumerate(other.coeffs) if y]
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in b:
                    out[i + j] += x * y
        return SeriesPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = SeriesPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, n: int) -> "SeriesPolynomial":
        """Multiply by ``t^n``."""
        if not self.coeffs:
            return self
        return SeriesPolynomial((0,) * n + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_one_minus_t(self):
        """Return ``(q, r)`` with ``self = q (1 - t) + r`` and ``r`` constant."""
        if not self.coeffs:
            return SeriesPolynomial(), 0
        # remainder is p(1); q_i = p_0 + ... + p_i - p(1)
        total = sum(self.coeffs)
        q = []
        acc = 0
        for c in self.coeffs[:-1]:
            acc += c
            q.append(acc - total)
        return SeriesPolynomial(q), total

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def negative_terms(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c < 0}

    def __repr__(self):
        return f"SeriesPolynomial({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for i, c in self.sparse().items():
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(out)


ONE_MINUS_T = SeriesPolynomial([1, -1])

_TERM = re.compile(r"([+-]?)(\d*)\*?(t(?:\^\{?(\d+)\}?)?)?")


def parse_series(text: str) -> SeriesPolynomial:
    """Parse ``1-3t^3+3t^{4}`` style text; ``t^{}`` counts as ``t``."""
    s = text.replace(" ", "").replace("t^{}", "t")
    if s == "0":
        return SeriesPolynomial()
    terms = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, num, tpart, power = m.groups()
        c = int(num) if num else 1
        e = (int(power) if power else 1) if tpart else 0
        terms[e] = terms.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return SeriesPolynomial.from_sparse(terms)


def diff(a: SeriesPolynomial, b: SeriesPolynomial) -> dict:
    """Powers where ``a`` and ``b`` disagree, mapped to ``(a_i, b_i)``."""
    n = max(len(a), len(b))
    return {i: (a[i], b[i]) for i in range(n) if a[i] != b[i]}


def cumulative(coeffs: Sequence[int], n: int) -> list:
    out = []
    acc = 0
    for i in range(n + 1):
        acc += coeffs[i] if i < len(coeffs) else 0
        out.append(acc)
    return out
