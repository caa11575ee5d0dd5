# Lambda-brackets, normal ordering and the Jacobi identity for two small presets.
from fractions import Fraction

from voa import check_jacobi, lambda_bracket, n2, nop, virasoro

V = virasoro()
L = V.gen("L")
print("[L_lambda L] =", {n: str(e) for n, e in sorted(lambda_bracket(L, L).items())})

# the quasi-primary weight-4 field and its quartic pole
LL = L @ L
print("L_(3) :LL: =", L.nth(LL, 3))
print("L_(1) :LL: =", L.nth(LL, 1))

# N=2 at generic c: every skew and Jacobi identity up to weight 6
N = n2()
H, T, E, F = N.gens("H T E F")
print("E_(0)F =", E.nth(F, 0))
print("F_(0)E =", F.nth(E, 0))
ids = check_jacobi(N, 6)
print(len(ids), "Jacobi identities,", sum(not i.ok for i in ids), "failing")

# products are exact rational functions of c; specialise afterwards
print("H_(1)H at c = -15:", H.nth(H, 1).specialize(c=-15))
print(":HHH: has weight", nop(H, H, H).weight(), "and (3/2)*E weight", (Fraction(3, 2) * E).weight())
