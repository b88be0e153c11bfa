"""Tangent cones of 4-generated pseudo-symmetric monomial curves.

Exact standard bases under a local ordering (Mora's algorithm), leading-form
ideals, and Hilbert series computed three ways: closed forms for the
alpha4 = 3 family, the monomial-ideal recursion, and monomial counting.
"""

from .algebra import DS, LocalOrdering, Polynomial, compare, ecart, normalize, parse_polynomial, spoly
from .family import (closed_form_basis, closed_form_numerator, closed_form_second_series,
                     monotonicity_verdict, predicted_leading_monomials)
from .hilbert import (MonomialIdeal, cm_criterion, colon, count_standard_monomials,
                      hilbert_function, minimalize, numerator, second_series)
from .mora import is_standard_basis, leading_form_ideal, normal_form, standard_basis
from .report import Options, analyse
from .semigroup import (FamilyInvariants, PseudoSymmetricParams, SemigroupGenerators,
                        family_invariants, generators, toric_ideal, validate)
from .series import SeriesPolynomial

__version__ = "0.1.0"
