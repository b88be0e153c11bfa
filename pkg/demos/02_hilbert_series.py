"""
Hilbert series of the tangent cone
==================================

The numerator P comes from the leading ideal by the colon recursion; dividing
by (1 - t)^3 leaves Q, whose running sums give the Hilbert function.
"""

from tangentcone import PseudoSymmetricParams, standard_basis, toric_ideal
from tangentcone.family import closed_form_numerator, monotonicity_verdict
from tangentcone.hilbert import (count_standard_monomials, hilbert_function, numerator,
                                 regularity_index, second_series)
from tangentcone.mora import leading_form_ideal
from tangentcone.semigroup import family_invariants

p = PseudoSymmetricParams(alpha1=38, alpha2=20, alpha3=8, alpha4=3, alpha21=12)
I = leading_form_ideal(standard_basis(toric_ideal(p)).elements)

P = numerator(I)
Q = second_series(P)
print("P(t) =", P)
print("Q(t) =", Q)
print("closed form agrees:", closed_form_numerator(p) == P)

H = hilbert_function(Q, Q.degree + 2)
print("H:", H[:15], "...")
print("multiplicity", Q(1), "reached from degree", regularity_index(H))

# brute force on the first few degrees
print("counted:", [count_standard_monomials(I, d) for d in range(8)])
print(monotonicity_verdict(Q, family_invariants(p)).as_dict())
