"""
Determinant and adjugate over Z[t]
==================================

The same code runs over polynomials with integer coefficients.  Exact
division is polynomial long division, which never leaves a remainder here.
"""

from ffsolve import ZZ_t, Mat, Poly, adjugate, determinant, identity, mat_mul, mat_scale

t = Poly([0, 1])
one = ZZ_t.one
A = Mat([
    [t, one, Poly([2])],
    [one, t, one],
    [Poly([-1]), one, t * t],
], ZZ_t)

d = determinant(A)
G = adjugate(A)
print("det =", ZZ_t.format(d))
print(G)

assert mat_mul(A, G) == mat_scale(d, identity(3, ZZ_t))

###############################################################################
# Evaluating at a point commutes with the computation.

for x in (-2, 0, 3):
    print(x, d(x))
