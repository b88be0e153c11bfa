"""Mora's normal form and standard bases for local orderings."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .algebra import DS, Polynomial, mcoprime, mdeg, mdivides, mlcm, normalize, spoly

log = logging.getLogger(__name__)

MAX_REDUCTION_STEPS = 10**6
MAX_BASIS_SIZE = 10**5


class ReductionCapExceeded(RuntimeError):
    pass


class LeadingFormError(ValueError):
    """A leading form is not a monomial, so the monomial-ideal tools do not apply."""


@dataclass
class TraceStep:
    reducer: Polynomial
    candidates: int
    reducer_ecart: int
    ecart: int
    leading_monomial: tuple
    recruited: bool


@dataclass
class ReductionTrace:
    start: Optional[Polynomial] = None
    steps: list = field(default_factory=list)

    def dump(self) -> str:
        lines = [f"h = {self.start}"]
        for i, st in enumerate(self.steps, 1):
            extra = " (h kept as reducer)" if st.recruited else ""
            lines.append(f"r{i}: |T_h|={st.candidates} reducer={st.reducer} "
                         f"ecart(reducer)={st.reducer_ecart} ecart(h)={st.ecart} "
                         f"LM(h)={st.leading_monomial}{extra}")
        return "\n".join(lines)


def normal_form(f: Polynomial, G: Sequence[Polynomial], trace: ReductionTrace = None,
                weights=None, max_steps: int = MAX_REDUCTION_STEPS) -> Polynomial:
    """Mora weak normal form of ``f`` with respect to ``G``.

    Among the reducers whose leading monomial divides ``LM(h)`` the one of
    smallest ecart is taken (first in list order on ties).  When it has a
    larger ecart than ``h`` itself, ``h`` is kept as a reducer for later
    steps.  ``weights`` turns on a weighted-homogeneity assertion per step.
    """
    if not G:
        raise ValueError("normal form needs a nonempty reducer set")
    if trace is not None:
        trace.start = f
    h = f
    T = [(g.LM, g.ecart(), g) for g in G]
    for _ in range(max_steps):
        if h.is_zero():
            return h
        lm = h.LM
        best = None
        count = 0
        for entry in T:
            if mdivides(entry[0], lm):
                count += 1
                if best is None or entry[1] < best[1]:
                    best = entry
        if best is None:
            return h
        e = h.ecart()
        recruited = best[1] > e
        if recruited:
            T.append((lm, e, h))
        if trace is not None:
            trace.steps.append(TraceStep(best[2], count, best[1], e, lm, recruited))
        h = spoly(h, best[2])
        if weights is not None and not h.is_weighted_homogeneous(weights):
            raise AssertionError(f"reduction left the weighted-homogeneous world: {h}")
    raise ReductionCapExceeded(f"normal form did not finish within {max_steps} steps")


def _sort_key(p: Polynomial):
    return (p.order.key(p.LM), tuple(p.order.key(m) for m in p.monomials()))


def _canonical(G):
    return sorted(G, key=_sort_key, reverse=True)


def minimalize_basis(G: Sequence[Polynomial]) -> list:
    """Drop elements whose leading monomial is divisible by another's."""
    G = _canonical(normalize(g) for g in G if not g.is_zero())
    out = []
    for i, g in enumerate(G):
        lm = g.LM
        redundant = False
        for j, h in enumerate(G):
            if i == j:
                continue
            if mdivides(h.LM, lm) and (h.LM != lm or j < i):
                redundant = True
                break
        if not redundant:
            out.append(g)
    return out


@dataclass
class StandardBasis:
    elements: list
    ordering: object = DS

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list:
        return [g.LM for g in self.elements]


def standard_basis(F: Sequence[Polynomial], weights=None, trace_log: list = None,
                   max_steps: int = MAX_REDUCTION_STEPS,
                   max_size: int = MAX_BASIS_SIZE) -> StandardBasis:
    """Standard basis of the ideal generated by ``F`` in the localisation.

    Pairs are handled in ascending degree of the lcm of their leading
    monomials, first-created first on ties; pairs with coprime leading
    monomials are skipped.
    """
    G = []
    for f in F:
        if f.is_zero():
            raise ValueError("input contains the zero polynomial")
        g = normalize(f)
        if g not in G:
            G.append(g)
    if not G:
        raise ValueError("empty input")

    pairs = []
    counter = 0

    def add_pairs(j):
        nonlocal counter
        lj = G[j].LM
        for i in range(j):
            li = G[i].LM
            if mcoprime(li, lj):
                continue
            pairs.append((mdeg(mlcm(li, lj)), counter, i, j))
            counter += 1

    for j in range(len(G)):
        add_pairs(j)

    while pairs:
        pairs.sort()
        _, _, i, j = pairs.pop(0)
        trace = ReductionTrace() if trace_log is not None else None
        h = normal_form(spoly(G[i], G[j]), G, trace=trace, weights=weights, max_steps=max_steps)
        if trace_log is not None:
            trace_log.append(((i, j), trace))
        if h.is_zero():
            continue
        G.append(normalize(h))
        if len(G) > max_size:
            raise ReductionCapExceeded(f"standard basis exceeded {max_size} elements")
        log.debug("new element %d: %s", len(G) - 1, G[-1])
        add_pairs(len(G) - 1)

    return StandardBasis(minimalize_basis(G))


@dataclass
class StandardBasisCheck:
    ok: bool
    failing_pair: Optional[tuple] = None
    remainder: Optional[Polynomial] = None

    def __bool__(self):
        return self.ok


def is_standard_basis(G: Sequence[Polynomial]) -> StandardBasisCheck:
    """Check that every pairwise s-polynomial reduces to zero against ``G``."""
    G = list(G)
    if any(g.is_zero() for g in G):
        raise ValueError("basis contains the zero polynomial")
    for j in range(len(G)):
        for i in range(j):
            r = normal_form(spoly(G[i], G[j]), G)
            if not r.is_zero():
                return StandardBasisCheck(False, (i, j), r)
    return StandardBasisCheck(True)


def tied_leading_forms(G) -> list:
    """Elements whose lowest-degree form has more than one term."""
    return [g for g in G if len(g.lowest_form()) > 1]


def leading_form_ideal(G, strict: bool = False):
    """Monomial ideal of the leading monomials of the lowest forms of ``G``.

    The ordering refines degree, so ``LM(g*) = LM(g)`` and this ideal has the
    Hilbert function of the tangent cone even when some ``g*`` is a
    degree-balanced binomial.  ``strict`` refuses such elements instead.
    """
    from .hilbert import MonomialIdeal

    if strict:
        tied = tied_leading_forms(G)
        if tied:
            raise LeadingFormError(f"leading form of {tied[0]} is not a monomial: "
                                   f"{tied[0].lowest_form()}")
    return MonomialIdeal(g.lowest_form().LM for g in G)
