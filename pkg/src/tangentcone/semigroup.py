"""Pseudo-symmetric 4-generated numerical semigroups from their alpha parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .algebra import Polynomial, monomial

# defensive bound on the k, s, l searches; existence is guaranteed for valid input
SEARCH_CAP = 10**6


class InvalidParameters(ValueError):
    """The parameters fall outside the hypotheses of the construction."""

    def __init__(self, failures):
        self.failures = list(failures)
        names = ", ".join(c.name for c in self.failures)
        super().__init__(f"parameter check failed: {names}")


class ConsistencyError(RuntimeError):
    """An invariant that must follow from the hypotheses was violated."""


@dataclass(frozen=True)
class PseudoSymmetricParams:
    alpha1: int
    alpha2: int
    alpha3: int
    alpha4: int
    alpha21: int

    @classmethod
    def from_mapping(cls, data) -> "PseudoSymmetricParams":
        """Accept ``a1..a4, a21`` or ``alpha1..alpha4, alpha21`` keys."""
        out = {}
        for short in ("1", "2", "3", "4", "21"):
            for key in (f"a{short}", f"alpha{short}"):
                if key in data:
                    value = data[key]
                    if isinstance(value, bool) or not isinstance(value, int):
                        raise TypeError(f"{key} must be an integer, got {value!r}")
                    out[f"alpha{short}"] = value
                    break
            else:
                raise KeyError(f"missing parameter a{short}")
        return cls(**out)

    def as_dict(self) -> dict:
        return {"a1": self.alpha1, "a2": self.alpha2, "a3": self.alpha3,
                "a4": self.alpha4, "a21": self.alpha21}


@dataclass(frozen=True)
class SemigroupGenerators:
    n1: int
    n2: int
    n3: int
    n4: int

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3, self.n4))

    @property
    def multiplicity(self) -> int:
        return self.n1


@dataclass(frozen=True)
class FamilyInvariants:
    k: int
    s: int
    l: int


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    kind: str  # "hypothesis", "derived" or "warning"
    detail: str = ""


@dataclass
class ValidationReport:
    checks: list = field(default_factory=list)

    def _failed(self, kind):
        return [c for c in self.checks if c.kind == kind and not c.passed]

    @property
    def hypothesis_failures(self):
        return self._failed("hypothesis")

    @property
    def derived_failures(self):
        return self._failed("derived")

    @property
    def warnings(self):
        return self._failed("warning")

    @property
    def ok(self) -> bool:
        return not self.hypothesis_failures and not self.derived_failures

    def get(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def raise_for_status(self):
        if self.derived_failures:
            names = ", ".join(c.name for c in self.derived_failures)
            raise ConsistencyError(f"derived condition violated: {names}")
        if self.hypothesis_failures:
            raise InvalidParameters(self.hypothesis_failures)


def _generators_unchecked(p: PseudoSymmetricParams) -> SemigroupGenerators:
    a1, a2, a3, a4, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21
    n1 = a2 * a3 * (a4 - 1) + 1
    n2 = a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3
    n3 = a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1
    n4 = a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2
    return SemigroupGenerators(n1, n2, n3, n4)


def primitive_checks(p: PseudoSymmetricParams) -> list:
    values = (p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21)
    checks = [Check(f"alpha{i} > 1", v > 1, "hypothesis", f"alpha{i}={v}")
              for i, v in zip((1, 2, 3, 4), values)]
    checks.append(Check("0 < alpha21 < alpha1 - 1", 0 < p.alpha21 < p.alpha1 - 1,
                        "hypothesis", f"alpha21={p.alpha21}, alpha1={p.alpha1}"))
    return checks


def validate(p: PseudoSymmetricParams, closed_form: bool = None) -> ValidationReport:
    """Run every parameter check and return them all, passed or not.

    With ``closed_form`` (default: ``alpha4 == 3``) the hypotheses of the
    alpha4 = 3 family are included, together with the seven derived
    inequalities that must follow from them.
    """
    for v in (p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"parameters must be integers, got {v!r}")
    if closed_form is None:
        closed_form = p.alpha4 == 3
    report = ValidationReport(primitive_checks(p))
    if not all(c.passed for c in report.checks):
        return report

    n = _generators_unchecked(p)
    g = gcd(gcd(n.n1, n.n2), gcd(n.n3, n.n4))
    # a common factor only rescales the semigroup; the ideal computations are unaffected
    report.checks.append(Check("gcd(n1, n2, n3, n4) = 1", g == 1, "warning", f"gcd={g}"))
    if not closed_form:
        return report

    a1, a2, a3, a4, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21
    increasing = n.n1 < n.n2 < n.n3 < n.n4
    hyps = [
        Check("alpha4 = 3", a4 == 3, "hypothesis", f"alpha4={a4}"),
        Check("n1 < n2 < n3 < n4", increasing, "hypothesis",
              f"n=({n.n1}, {n.n2}, {n.n3}, {n.n4})"),
        Check("alpha2 > alpha21 + 1", a2 > a21 + 1, "hypothesis",
              f"alpha2={a2}, alpha21={a21}"),
    ]
    report.checks.extend(hyps)
    if not all(c.passed for c in hyps):
        return report
    derived = [
        ("(1) alpha1 > alpha4", a1 > a4),
        ("(2) alpha3 < alpha1 - alpha21", a3 < a1 - a21),
        ("(3) alpha4 < alpha2 + alpha3 - 1", a4 < a2 + a3 - 1),
        ("(5) alpha21 + alpha3 > alpha4", a21 + a3 > a4),
        ("(6) alpha1 + alpha21 + 1 >= alpha2 + alpha4", a1 + a21 + 1 >= a2 + a4),
        ("(7) 2 alpha2 + 1 < 2 alpha21 + alpha1", 2 * a2 + 1 < 2 * a21 + a1),
    ]
    report.checks.extend(Check(name, ok, "derived") for name, ok in derived)
    return report


def generators(p: PseudoSymmetricParams) -> SemigroupGenerators:
    """The four generators n1 < ... as closed-form expressions in the alphas."""
    validate(p, closed_form=False).raise_for_status()
    return _generators_unchecked(p)


def toric_ideal(p: PseudoSymmetricParams) -> list:
    """The five binomial generators ``f1..f5`` in their displayed orientation."""
    validate(p, closed_form=False).raise_for_status()
    a1, a2, a3, a4, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha4, p.alpha21
    B = Polynomial.binomial
    return [
        B(monomial(a1, 0, 0, 0), monomial(0, 0, 1, a4 - 1)),
        B(monomial(0, a2, 0, 0), monomial(a21, 0, 0, 1)),
        B(monomial(0, 0, a3, 0), monomial(a1 - a21 - 1, 1, 0, 0)),
        B(monomial(0, 0, 0, a4), monomial(1, a2 - 1, a3 - 1, 0)),
        B(monomial(a21 + 1, 0, a3 - 1, 0), monomial(0, 1, 0, a4 - 1)),
    ]


def _smallest(start, predicate, what):
    for i in range(start, start + SEARCH_CAP):
        if predicate(i):
            return i
    raise ConsistencyError(f"no {what} found below {start + SEARCH_CAP}")


def family_invariants(p: PseudoSymmetricParams) -> FamilyInvariants:
    """The smallest k >= 1 and s, l >= 0 satisfying the defining inequalities."""
    validate(p, closed_form=True).raise_for_status()
    a1, a2, a3, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha21
    k = _smallest(1, lambda k: (k - 1) * a1 + (k + 1) * a21 + a3 > k * a2 + (k + 1), "k")
    s = _smallest(0, lambda s: s * a1 + (2 * s + 2) * a21 + a3 > (2 * s + 1) * a2 + (s + 2), "s")
    l = _smallest(0, lambda l: l * a1 + (2 * l + 3) * a21 + a3 > (2 * l + 2) * a2 + (l + 1), "l")
    return FamilyInvariants(k, s, l)
