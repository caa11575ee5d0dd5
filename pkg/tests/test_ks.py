from fractions import Fraction

import pytest

from voa import Scalar
from voa.ks import (classify, commutant_check, forward_embedding, g1, g2, hw_eigenvalues,
                    intersect_truncation_curves, inverse_embedding, s1_point, s2_point,
                    truncation_curves, w0_eigenvalue, w0_eigenvalue_module)

F = Fraction
h, q = Scalar.param("h"), Scalar.param("q")


@pytest.fixture(scope="module")
def fwd():
    return forward_embedding()


@pytest.fixture(scope="module")
def inv():
    return inverse_embedding()


def test_forward_all_products(fwd):
    recs = fwd.verify()
    assert len(recs) == 28
    assert [r.job for r in recs if r.status != "pass"] == []


def test_forward_ef_row(fwd):
    N, V = fwd.source, fwd.target
    E, Fi = fwd.images["E"], fwd.images["F"]
    red = fwd.reduce
    assert red(E.nth(Fi, 2)) == -10 * V.one
    assert red(E.nth(Fi, 1)) == fwd(2 * N.gen("H"))
    assert red(E.nth(Fi, 0)) == fwd(2 * N.gen("T") + N.gen("H").d())
    assert red(E.nth(E, 0)).is_zero()
    assert red(Fi.nth(Fi, 0)).is_zero()


def test_inverse_all_products(inv):
    recs = inv.verify()
    assert [r.job for r in recs if r.status != "pass"] == []
    assert {"W_(0)W", "W_(5)W"} <= {r.job for r in recs}


def test_inverse_gpgm(inv):
    from voa.cli import inverse_display_checks

    assert [r["status"] for r in inverse_display_checks(inv)] == ["pass"] * 4


def test_commutant_small_window(inv):
    V = inv.target
    heis = V.gen("H") - V.embed_right(V.right.phi())
    recs = commutant_check(heis, inv, cutoff=2, sectors=range(-2, 3))
    assert [r.job for r in recs if r.status != "pass"] == []
    dims = {r.job: r.got for r in recs if r.job.startswith("commutant dim")}
    assert [dims[f"commutant dim at weight {w}"] for w in (0, 1, 2)] == ["1", "2", "5"]


def test_curves():
    r = intersect_truncation_curves()
    assert r["points"] == sorted([(F(-13, 4), F(-7, 4)), (F(-8, 3), 0), (F(-5, 2), 1),
                                  (F(-3, 2), F(-7, 5)), (F(-1), F(-5, 3))])
    assert r["stable"]
    assert r["special"][0] == sorted([(F(-5, 2), 1), (F(-7, 3), 1)])
    assert r["special"][-2] == sorted([(F(-2), F(-1, 2)), (F(-11, 4), F(-1, 2))])


def test_curve_data():
    cur = truncation_curves()
    cN, _ = cur["N_s"]
    cC, _ = cur["C_k"]
    assert cN.specialize(s=1) == 0
    assert cC.specialize(k=F(-5, 2)) == 0
    # the coset loses one unit of central charge to the Heisenberg field
    from voa import central_charge_wsl4sub
    assert cC == central_charge_wsl4sub() - 1


def test_classification_identities():
    assert g1(*s1_point(h, q)).is_zero()
    assert g2(*s2_point(h, q)).is_zero()
    assert not g1(*s2_point(h, q)).is_zero()


def test_w0_factorisation():
    w = w0_eigenvalue(h, q, -15, F(-3, 2))
    assert w == -F(1, 25) * (h + 5) * (h * h - 5 * h + 15 * q)
    unit, facs = w.factor()
    assert unit == F(-1, 25)
    assert sorted(str(f) for f, _ in facs) == sorted(["h+5", "h^2-5*h+15*q"])


def test_w0_module_engine():
    assert w0_eigenvalue_module(h, q, -15, F(-3, 2)) == w0_eigenvalue(h, q, -15, F(-3, 2))
    c, nu = Scalar.param("c"), Scalar.param("nu")
    assert w0_eigenvalue_module(h, q, c, nu) == w0_eigenvalue(h, q, c, nu)


@pytest.mark.parametrize("sector,point", [(0, s1_point), (1, s2_point)])
def test_hw_eigenvalues(sector, point):
    ev = hw_eigenvalues(h, q, sector)
    assert (ev["J"], ev["L"], ev["W"]) == point(h, q)
    assert ev["G+(0) kills"]


def test_classify_examples():
    r = classify(0, 0, 0)
    assert r["S1"] == (0, 0) and r["top_dim"] == 1
    r = classify(0, F(5, 2), 0)
    assert r["S2"] == (5, 0) and r["top_dim"] == 2
    r = classify(1, 1, 1)
    assert r["S1"] is None and r["S2"] is None and r["top_dim"] is None
