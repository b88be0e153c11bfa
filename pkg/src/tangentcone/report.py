"""End-to-end analysis: parameters in, a JSON-ready report out."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import reference
from .algebra import Polynomial, render
from .family import (closed_form_basis, closed_form_numerator, closed_form_second_series,
                     monotonicity_verdict, predicted_leading_monomials)
from .hilbert import (MonomialIdeal, cm_criterion, count_standard_monomials, hilbert_function,
                      is_nondecreasing, numerator, numerator_coefficient_by_counting,
                      regularity_index, second_series)
from .mora import (ReductionTrace, is_standard_basis, leading_form_ideal, normal_form,
                   standard_basis, tied_leading_forms)
from .semigroup import (ConsistencyError, InvalidParameters, PseudoSymmetricParams,
                        family_invariants, generators, toric_ideal, validate)
from .series import SeriesPolynomial, diff

SCHEMA_VERSION = 1
COUNTING_DEGREES = 12
MODES = ("report", "verify", "basis", "hilbert")

EXIT_OK, EXIT_INVALID, EXIT_HYPOTHESIS, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class Options:
    mode: str = "report"
    max_degree: Optional[int] = None
    trace: bool = False
    counting_degrees: int = COUNTING_DEGREES


# -- JSON encodings ---------------------------------------------------------

def _coeff_json(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return c


def mono_key(m) -> str:
    return ",".join(str(e) for e in m)


def poly_json(f: Polynomial) -> dict:
    return {"text": render(f), "terms": {mono_key(m): _coeff_json(c) for m, c in f.terms}}


def series_json(P: SeriesPolynomial) -> dict:
    return {"text": str(P), "terms": {str(i): c for i, c in P.sparse().items()}}


def ideal_json(I: MonomialIdeal) -> list:
    return [mono_key(m) for m in I.sorted()]


def _diff_json(d: dict) -> dict:
    return {str(k): list(v) for k, v in sorted(d.items())}


def cell(name, status, detail=None, **extra) -> dict:
    out = {"name": name, "status": status}
    if detail is not None:
        out["detail"] = detail
    out.update(extra)
    return out


def agree_cell(name, same: bool, **extra):
    return cell(name, "agree" if same else "disagree", **extra)


def na(name, reason):
    return cell(name, "not-applicable", reason)


def dumps(obj, compact: bool = False) -> str:
    if compact:
        return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(obj, indent=2, ensure_ascii=False)


# -- pipeline ---------------------------------------------------------------

def _published_cells(params, P, Q, basis, I):
    ex = reference.find(params)
    if ex is None:
        return []
    cells = []
    printed = [g for g in ex.basis_polynomials()]
    missing = [render(g) for g in printed if not normal_form(g, basis).is_zero()]
    back = [render(g) for g in basis if not normal_form(g, printed).is_zero()]
    same_lm = MonomialIdeal(g.LM for g in printed) == MonomialIdeal(g.LM for g in basis)
    cells.append(agree_cell(f"published basis ({ex.name})", not missing and not back and same_lm,
                            printed_not_reduced=missing, computed_not_reduced=back,
                            same_leading_ideal=same_lm))
    for label, ours, theirs in (("P", P, ex.printed_P()), ("Q", Q, ex.printed_Q())):
        if theirs is None:
            continue
        d = diff(ours, theirs)
        extra = {}
        if d:
            extra["printed_value_at_1"] = theirs(1)
            if label == "P" and I is not None:
                extra["counting"] = {str(k): numerator_coefficient_by_counting(I, k)
                                     for k in sorted(d)}
        cells.append(agree_cell(f"published {label} ({ex.name})", not d,
                                diff=_diff_json(d), **extra))
    return cells


def analyse(params: PseudoSymmetricParams, options: Options = None) -> dict:
    """Run the pipeline and return the report as an ordered dict.

    Raises :class:`InvalidParameters` for inputs outside the primitive
    hypotheses and :class:`ConsistencyError` on internal failures.
    """
    options = options or Options()
    if options.mode not in MODES:
        raise ValueError(f"unknown mode {options.mode!r}")
    base = validate(params, closed_form=False)
    base.raise_for_status()
    family_report = validate(params, closed_form=True)
    closed = params.alpha4 == 3 and family_report.ok
    if family_report.derived_failures:
        family_report.raise_for_status()
    if options.mode == "verify" and not closed:
        raise InvalidParameters(family_report.hypothesis_failures or
                                [c for c in family_report.checks if not c.passed])

    n = generators(params)
    weights = tuple(n)
    F = toric_ideal(params)
    out = {
        "schema_version": SCHEMA_VERSION,
        "params": params.as_dict(),
        "mode": options.mode,
        "validation": [{"name": c.name, "kind": c.kind, "passed": c.passed, "detail": c.detail}
                       for c in family_report.checks],
        "generators": {"n1": n.n1, "n2": n.n2, "n3": n.n3, "n4": n.n4},
        "toric_ideal": [poly_json(f) for f in F],
    }
    inv = cf_basis = None
    if closed:
        inv = family_invariants(params)
        out["invariants"] = {"k": inv.k, "s": inv.s, "l": inv.l}
        if params.alpha3 < inv.l + 1:
            closed = False
    else:
        out["invariants"] = None
    if params.alpha4 != 3:
        reason = "alpha4 != 3"
    elif not family_report.ok:
        reason = "closed-form hypotheses fail: " + \
            ", ".join(c.name for c in family_report.hypothesis_failures)
    else:
        reason = "alpha3 < l + 1"

    trace_log = [] if options.trace else None
    G = standard_basis(F, weights=weights, trace_log=trace_log).elements
    I = leading_form_ideal(G)
    cells = []
    if closed:
        cf_basis = closed_form_basis(params, inv)
        predicted = predicted_leading_monomials(params, inv)
        check = is_standard_basis(cf_basis.elements())
        cells.append(agree_cell("closed-form basis is a standard basis", check.ok,
                                failing_pair=list(check.failing_pair) if check.failing_pair else None))
        cells.append(agree_cell("leading ideal: engine vs closed form", I == predicted,
                                engine_only=ideal_json(MonomialIdeal(I.generators - predicted.generators)),
                                closed_form_only=ideal_json(MonomialIdeal(predicted.generators - I.generators))))
        mutual = all(normal_form(g, G).is_zero() for g in cf_basis.elements()) and \
            all(normal_form(g, cf_basis.elements()).is_zero() for g in G)
        cells.append(agree_cell("closed-form and engine bases reduce each other to zero", mutual))
    else:
        cells.append(na("closed-form basis is a standard basis", reason))
        cells.append(na("leading ideal: engine vs closed form", reason))

    if options.mode in ("report", "basis", "verify"):
        basis_out = {"computed": [poly_json(g) for g in G]}
        if cf_basis is not None:
            basis_out["closed_form"] = [dict(label=lab, **poly_json(g))
                                        for lab, g in cf_basis.labelled()]
        basis_out["degree_balanced"] = [poly_json(g) for g in tied_leading_forms(G)]
        out["standard_basis"] = basis_out
    out["leading_ideal"] = ideal_json(I)
    out["cohen_macaulay"] = cm_criterion(I)

    P = Q = None
    if options.mode in ("report", "hilbert", "verify"):
        P = numerator(I)
        try:
            Q = second_series(P)
        except ArithmeticError as exc:
            raise ConsistencyError(str(exc)) from exc
        N = options.max_degree if options.max_degree is not None else Q.degree + 4
        H = hilbert_function(Q, N)
        H_full = hilbert_function(Q, max(N, Q.degree + 1))
        verdict = monotonicity_verdict(Q, inv)
        out["hilbert"] = {
            "P": series_json(P),
            "Q": series_json(Q),
            "H": H,
            "regularity_index": regularity_index(H_full),
            "multiplicity": Q(1),
            "nondecreasing": is_nondecreasing(H_full),
        }
        out["monotonicity"] = verdict.as_dict()

        if closed:
            Pc = closed_form_numerator(params, inv)
            cells.append(agree_cell("P: closed form vs recursion", Pc == P, diff=_diff_json(diff(Pc, P))))
            try:
                Qc = closed_form_second_series(params, inv)
                cells.append(agree_cell("Q: closed form vs recursion", Qc == Q,
                                        diff=_diff_json(diff(Qc, Q))))
            except ConsistencyError as exc:
                cells.append(cell("Q: closed form vs recursion", "disagree", str(exc)))
        else:
            cells.append(na("P: closed form vs recursion", reason))
            cells.append(na("Q: closed form vs recursion", reason))
        top = min(options.counting_degrees, len(H) - 1)
        counts = [count_standard_monomials(I, d) for d in range(top + 1)]
        cells.append(agree_cell(f"H(0..{top}): series vs monomial counting", counts == H[:top + 1],
                                counts=counts))
        cells.append(agree_cell("(1-t)^3 divides P and Q(1) = n1", Q(1) == n.n1,
                                q_at_1=Q(1), n1=n.n1))
    if options.mode != "verify":
        cells.extend(_published_cells(params, P, Q, G, I) if P is not None else [])
    out["cross_checks"] = cells
    if trace_log is not None:
        out["trace"] = [{"pair": list(pair), "steps": t.dump()} for pair, t in trace_log
                        if isinstance(t, ReductionTrace)]
    return out


def verification_passed(report: dict) -> bool:
    return all(c["status"] != "disagree" for c in report["cross_checks"]
               if not c["name"].startswith("published"))


# -- batch ------------------------------------------------------------------

@dataclass
class BatchSummary:
    records: int = 0
    reports: int = 0
    errors: int = 0
    not_cm: int = 0
    nondecreasing: int = 0
    max_k: Optional[int] = None
    max_s: Optional[int] = None
    max_l: Optional[int] = None
    error_lines: list = field(default_factory=list)

    def add(self, report: dict):
        self.reports += 1
        if report.get("cohen_macaulay") is False:
            self.not_cm += 1
        if report.get("hilbert", {}).get("nondecreasing"):
            self.nondecreasing += 1
        inv = report.get("invariants")
        if inv:
            self.max_k = max(self.max_k or 0, inv["k"])
            self.max_s = max(self.max_s or 0, inv["s"])
            self.max_l = max(self.max_l or 0, inv["l"])

    def as_dict(self):
        return {
            "summary": True,
            "records": self.records,
            "reports": self.reports,
            "errors": self.errors,
            "not_cm": f"{self.not_cm}/{self.reports} not CM",
            "nondecreasing": f"{self.nondecreasing}/{self.reports} nondecreasing",
            "max_k": self.max_k, "max_s": self.max_s, "max_l": self.max_l,
            "error_lines": self.error_lines,
        }


def exit_code(exc: BaseException, params: Optional[PseudoSymmetricParams] = None) -> int:
    """Map an exception from :func:`analyse` to the CLI exit code."""
    if isinstance(exc, InvalidParameters):
        if params is not None and validate(params, closed_form=False).ok:
            return EXIT_HYPOTHESIS
        return EXIT_INVALID
    if isinstance(exc, (ConsistencyError, RuntimeError)):
        return EXIT_INTERNAL
    return EXIT_INVALID


def _run_record(args):
    lineno, text, options = args
    params = None
    try:
        data = json.loads(text)
        if not isinstance(data, dict):
            raise TypeError("record must be a JSON object")
        params = PseudoSymmetricParams.from_mapping(data)
        return lineno, analyse(params, options), None
    except (ValueError, KeyError, TypeError, RuntimeError) as exc:
        return lineno, None, {"line": lineno, "error": str(exc),
                              "exit_code": exit_code(exc, params)}


def run_batch(lines, options: Options = None, jobs: int = 1):
    """Yield ``(report or None, error or None)`` per non-blank line, in input order.

    The last item yielded is the :class:`BatchSummary`.
    """
    options = options or Options()
    records = [(i, line, options) for i, line in enumerate(lines, 1) if line.strip()]
    summary = BatchSummary(records=len(records))
    if jobs > 1 and len(records) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_record, records))
    else:
        results = map(_run_record, records)
    for lineno, rep, err in results:
        if err is not None:
            summary.errors += 1
            summary.error_lines.append(lineno)
        else:
            summary.add(rep)
        yield rep, err
    yield summary
