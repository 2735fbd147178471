"""Module invariants and the maps between K0, G0 and G."""

from matpairs.grothendieck import (
    FormalSum, collapse, dim_character, gamma, gamma_sum, kappa, module_invariant, triangle_check,
)
from matpairs.matrix import parse_matrix
from matpairs.pairs import parse_pair
from matpairs.rings import ZZ, F

A = parse_matrix("2x3[2,0,0;0,3,0]", ZZ)
print("A =", A, " presents", module_invariant(A))
print("kappa{A}:")
print("  " + kappa(A).format().replace("\n", "\n  "))
back = gamma_sum(kappa(A))
print("gamma(kappa{A}) collapses to", collapse(back), "; {A} collapses to", collapse(FormalSum.of(A)))
print("triangle commutes:", triangle_check(A))

p = parse_pair("[2x1[1;1]|2x2[1,0;0,1]]", F(3))
print("\ngamma of", p, "has dimension", dim_character(gamma(p)))
