# Zhu algebra images, the W(0) eigenvalue and the classification of top spaces at k=-1.
from fractions import Fraction

from voa import Scalar, ZhuAlgebra, n2, parafermion_generator, wsl4sub
from voa.ks import classify, hw_eigenvalues, w0_eigenvalue, w0_eigenvalue_module

P = wsl4sub(-1)
Z = ZhuAlgebra(P)
gp, gm = Z.project(P.gen("G+")), Z.project(P.gen("G-"))
print("[[G+],[G-]] =", gp * gm - gm * gp)

N = n2(-15)
W = parafermion_generator(N, Fraction(-3, 2))
print("[W] in Zhu(N=2) =", ZhuAlgebra(N).project(W))

h, q = Scalar.param("h"), Scalar.param("q")
w = w0_eigenvalue(h, q, -15, Fraction(-3, 2))
unit, facs = w.factor()
print("W(0) eigenvalue:", w, "=", unit, "*", " * ".join(f"({f})" for f, _ in facs))
print("module engine agrees:", w0_eigenvalue_module(h, q, -15, Fraction(-3, 2)) == w)

for sector in (0, 1):
    ev = hw_eigenvalues(h, q, sector)
    print(f"v x e^({sector} phi+):", {k: str(v) for k, v in ev.items()})

for xyz in [(0, 0, 0), (0, Fraction(5, 2), 0), (1, 1, 1)]:
    r = classify(*xyz)
    where = "S1" if r["S1"] else "S2" if r["S2"] else "neither"
    hq = r["S1"] or r["S2"]
    print(", ".join(map(str, xyz)), "->", where,
          f"(h, q) = ({hq[0]}, {hq[1]}), top dim {r['top_dim']}" if hq else "")
