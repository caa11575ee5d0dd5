# Forward and inverse free-field maps between N=2 at c=-15 and W^{-1}(sl4, f_sub).
from voa.ks import commutant_check, forward_embedding, inverse_embedding

fwd = forward_embedding()
print("forward target:", fwd.target.name, "modulo <(G+)^2, (G-)^2>")
for a, b, n in [("E", "F", 2), ("E", "F", 1), ("E", "F", 0), ("E", "E", 0), ("F", "F", 0)]:
    r = fwd.check(a, b, n)
    print(f"  {r.job:8s} {r.status}  {r.got}")

inv = inverse_embedding()
recs = inv.verify()
print("inverse:", len(recs), "products,", sum(r.status != "pass" for r in recs), "failing")
gp, gm = inv.images["G+"], inv.images["G-"]
for n in (3, 2, 1):
    print(f"  G+({n})G- =", gp.nth(gm, n))

# the image is the Heisenberg commutant, at least in a small window
V = inv.target
heis = V.gen("H") - V.embed_right(V.right.phi())
for r in commutant_check(heis, inv, cutoff=2):
    if "dim" in r.job:
        print(f"  {r.job}: {r.got} (expected {r.expected})")
