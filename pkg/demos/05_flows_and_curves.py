# Spectral flow on both sides, and where the two truncation curves meet.
from voa import HighestWeightModule, Scalar, n2, spectral_flow, wsl4sub
from voa.flowzhu import PrintedSigma, automorphism_defects
from voa.hwmod import n2_twisted_hw
from voa.ks import intersect_truncation_curves

N = n2()
s = spectral_flow(N, 1)
for g, r in [("H", 0), ("T", 1), ("E", 0), ("F", 2)]:
    print(f"sigma({g}({r})) =", s.generator(g, r))
p = spectral_flow(wsl4sub(), 1)
print("psi(J(0)) =", p.generator("J", 0))

# a sign check: with +lc/3 on H(0) the bracket [E(0), F(1)] is not preserved
M = HighestWeightModule(n2_twisted_hw(N, Scalar.param("h"), Scalar.param("q")), cutoff=4)
modes = [("E", 0), ("F", 1), ("H", 0), ("T", 1)]
print("defects, +lc/3:", automorphism_defects(PrintedSigma(N, 1), M, modes, [M.hw.terms]))
print("defects, -lc/3:", automorphism_defects(s, M, modes, [M.hw.terms]))

r = intersect_truncation_curves()
print("intersection points (k, s):", [(str(k), str(v)) for k, v in r["points"]])
print("c = 0:", [(str(k), str(v)) for k, v in r["special"][0]])
print("c = -2:", [(str(k), str(v)) for k, v in r["special"][-2]])
