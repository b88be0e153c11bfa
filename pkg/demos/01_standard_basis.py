"""
Standard bases of a monomial curve
==================================

Build the toric ideal for one parameter set, run Mora's algorithm under the
local ordering, and compare with the closed-form basis.
"""

from tangentcone import (PseudoSymmetricParams, closed_form_basis, family_invariants,
                         generators, standard_basis, toric_ideal)
from tangentcone.mora import is_standard_basis, leading_form_ideal

p = PseudoSymmetricParams(alpha1=38, alpha2=20, alpha3=8, alpha4=3, alpha21=12)
print("generators:", tuple(generators(p)))

# five binomials, each homogeneous for the weights n1..n4
F = toric_ideal(p)
for f in F:
    print("  ", f)

G = standard_basis(F, weights=tuple(generators(p)))
print("standard basis has", len(G), "elements")
for g in G:
    print("  ", g, "   ecart", g.ecart())

# the family has a basis written in terms of (k, s, l)
inv = family_invariants(p)
print("(k, s, l) =", (inv.k, inv.s, inv.l))
cf = closed_form_basis(p, inv)
for label, g in cf.labelled():
    print(f"  {label}: {g}")
print("closed form is a standard basis:", is_standard_basis(cf.elements()).ok)
print("leading ideal:", leading_form_ideal(G).sorted())
