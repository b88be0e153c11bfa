"""
A misprinted numerator
======================

For (alpha1, alpha2, alpha3, alpha4, alpha21) = (62, 40, 14, 3, 11) the
published numerator disagrees with ours in four places.  Three independent
computations agree with each other, and the published Q times (1 - t)^3
reproduces our P.
"""

from tangentcone.family import closed_form_numerator
from tangentcone.hilbert import numerator, numerator_coefficient_by_counting
from tangentcone.mora import leading_form_ideal, standard_basis
from tangentcone.reference import FAMILY_L12
from tangentcone.semigroup import toric_ideal
from tangentcone.series import ONE_MINUS_T, diff

p = FAMILY_L12.params
I = leading_form_ideal(standard_basis(toric_ideal(p)).elements)
P = numerator(I)
printed = FAMILY_L12.printed_P()

print("power   recursion  closed form  counting  printed")
for power, (ours, theirs) in diff(P, printed).items():
    counted = numerator_coefficient_by_counting(I, power)
    print(f"{power:5d} {ours:10d} {closed_form_numerator(p)[power]:12d} {counted:9d} {theirs:8d}")

print("printed P(1) =", printed(1), " (a curve numerator vanishes at 1)")
print("printed Q (1-t)^3 == our P:", FAMILY_L12.printed_Q() * ONE_MINUS_T ** 3 == P)
