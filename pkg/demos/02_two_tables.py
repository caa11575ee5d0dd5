# Two candidate first-order poles of G+ G- in W^k(sl4, f_sub); only one is associative.
from voa import check_jacobi, check_skew, wsl4sub
from voa.cli import gpgm_display_form

for variant in ("gpgm", "altB"):
    P = wsl4sub(variant=variant)
    ids = check_skew(P) + check_jacobi(P, 9)
    bad = [i for i in ids if not i.ok]
    print(f"{P.name:14s} {len(ids)} identities, {len(bad)} failing",
          f"(first: {bad[0].label})" if bad else "")

# the surviving table at k = -1, where c = -15
P, shown = gpgm_display_form()
print("c at k=-1:", P.metadata["central_charge"])
print("G+_(0) G- =", P.gen("G+").nth(P.gen("G-"), 0))
print("matches the Lperp form:", P.gen("G+").nth(P.gen("G-"), 0) == shown)

# the Lambda field with the printed coefficient breaks the W W row
Q = wsl4sub(lambda_rows="printed")
bad = [i.label for i in check_jacobi(Q, 9) if not i.ok]
print("printed Lambda:", len(bad), "failures, e.g.", bad[:2])
