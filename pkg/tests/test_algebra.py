from fractions import Fraction

import pytest

from voa import (AlgebraPresentation, Generator, PresentationError, Scalar, check_jacobi,
                 check_skew, central_charge_wsl4sub, lambda_bracket, n2, nop, virasoro, wsl4sub)
from voa.checks import check_weights

c = Scalar.param("c")


def test_central_charge_values():
    assert central_charge_wsl4sub(-1) == -15
    assert central_charge_wsl4sub(Fraction(-7, 3)) == 1
    k = Scalar.param("k")
    assert central_charge_wsl4sub() == -(24 * k * k + 115 * k + 136) / (k + 4)


def test_virasoro_bracket():
    L = virasoro().gen("L")
    br = lambda_bracket(L, L)
    assert br[0] == L.d()
    assert br[1] == 2 * L
    assert br[3] == (c / 2) * L.algebra.one
    assert 2 not in br


def test_quasi_primary_product():
    L = virasoro().gen("L")
    LL = L @ L
    assert LL.weight() == 4
    assert L.nth(LL, 3) == (c + 8) * L
    assert L.nth(LL, 1) == 4 * LL


def test_translation_rules():
    L = virasoro().gen("L")
    # (da)_(n) b = -n a_(n-1) b and d(a_(n) b) = (da)_(n) b + a_(n) db
    for n in range(0, 4):
        assert L.d().nth(L, n) == -n * L.nth(L, n - 1)
        assert L.nth(L, n).d() == L.d().nth(L, n) + L.nth(L.d(), n)


def test_vacuum_is_identity():
    P = n2()
    one = P.one
    for g in P.gens():
        assert one.nth(g, -1) == g
        assert g.nth(one, -1) == g
        assert g.nth(one, 0).is_zero()


def test_odd_generators():
    P = n2()
    H, T, E, F = P.gens("H T E F")
    assert E.parity() == 1 and H.parity() == 0
    assert (E @ E).is_zero() or (E @ E).weight() == 1
    # odd-odd skew-symmetry: F_(0) E = E_(0) F - d(E_(1) F) + d^2(E_(2) F)/2
    assert F.nth(E, 0) == E.nth(F, 0) - E.nth(F, 1).d() + E.nth(F, 2).d(2) / 2


def test_nop_is_right_nested():
    P = wsl4sub()
    J = P.gen("J")
    assert nop(J, J, J) == J @ (J @ J)


@pytest.mark.parametrize("P", [virasoro(), n2()], ids=["vir", "n2"])
def test_presets_satisfy_axioms(P):
    assert all(i.ok for i in check_skew(P))
    assert all(i.ok for i in check_jacobi(P, 5))


def test_wsl4sub_skew():
    assert all(i.ok for i in check_skew(wsl4sub()))


def test_fields_recorded():
    P = wsl4sub(-1)
    J, L = P.gens("J L")
    assert P.fields["Lperp"] == L - Fraction(2, 5) * (J @ J)
    assert P.ideal == [P.fields["G+G+"], P.fields["G-G-"]]


def test_specialize():
    P = n2()
    Q = P.specialize(c=-15)
    H = Q.gen("H")
    assert H.nth(H, 1) == -5 * Q.one


def test_bad_ope_weight():
    P = AlgebraPresentation("bad", [Generator("a", 0, Fraction(1))])
    P.set_ope("a", "a", {0: P.gen("a").d()})
    bad = [i for i in check_weights(P) if not i.ok]
    assert [i.label for i in bad] == ["weight a_(0)a"]


def test_unknown_generator():
    with pytest.raises((PresentationError, KeyError)):
        virasoro().gen("X")
