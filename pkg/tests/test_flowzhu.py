from fractions import Fraction

import pytest

from voa import HighestWeightModule, Scalar, n2, spectral_flow, virasoro, wsl4sub
from voa.cli import flow_checks, zhu_checks
from voa.flowzhu import (PrintedSigma, ZhuAlgebra, automorphism_defects,
                         composition_defects, zhu_commutator, zhu_project, zhu_star)
from voa.hwmod import n2_twisted_hw

F = Fraction


def test_virasoro_zhu():
    V = virasoro()
    L = V.gen("L")
    l = ZhuAlgebra(V).gen("L")
    assert zhu_project(L.d()) == -2 * l
    assert zhu_star(L, L) == l * l
    assert zhu_project(L @ L) == l * l + 2 * l
    assert zhu_project(L @ (L @ L)) == l ** 3 + 6 * l * l + 8 * l


def test_polynomial_arithmetic():
    Z = ZhuAlgebra(virasoro())
    l = Z.gen("L")
    p = (l + 1) * (l - 1)
    assert p == l * l - 1
    assert p.evaluate({"L": 3}) == 8
    assert str(Z.coerce(0)) == "0"


def test_zhu_commutator():
    P = wsl4sub(-1)
    Z = ZhuAlgebra(P)
    j, l, w = Z.gen("J"), Z.gen("L"), Z.gen("W")
    want = -6 * j ** 2 + F(56, 25) * j ** 3 + 4 * j - F(12, 5) * j * l + 3 * l + w
    assert zhu_commutator(P.gen("G+"), P.gen("G-")) == want


def test_odd_generators_vanish():
    N = n2(-15)
    E, Fg = N.gens("E F")
    assert zhu_project(E) == ZhuAlgebra(N).coerce(0)
    assert zhu_project(Fg) == ZhuAlgebra(N).coerce(0)


@pytest.mark.parametrize("rec", zhu_checks(), ids=lambda r: r["job"])
def test_zhu_items(rec):
    assert rec["status"] == "pass", (rec["expected"], rec["got"])


def test_flow_on_generators():
    s = spectral_flow(n2(), 1)
    assert str(s.generator("H", 0)) == "(-1/3*c)*1 + (1)*[H]_(0)"
    assert str(s.generator("E", 0)) == "(1)*[E]_(-1)"
    assert str(s.generator("T", 1)) == "(1/6*c)*1 + (-1)*[H]_(0) + (1)*[T]_(1)"
    p = spectral_flow(wsl4sub(), 1)
    assert str(p.generator("J", 0)) == "(-3/4*k-2)*1 + (1)*[J]_(0)"
    assert str(p.generator("G+", 0)) == "(1)*[G+]_(-1)"
    assert str(p.generator("W", 2)) == "(1)*[W]_(2)"


def test_flow_requires_integer():
    with pytest.raises(Exception):
        spectral_flow(n2(), F(1, 2))


@pytest.mark.parametrize("rec", flow_checks()[0], ids=lambda r: r["job"])
def test_flows(rec):
    assert rec["status"] == "pass", rec["got"]


def test_printed_sign_fails():
    N = n2()
    M = HighestWeightModule(n2_twisted_hw(N, Scalar.param("h"), Scalar.param("q")), cutoff=4)
    modes = [("E", 0), ("F", 1), ("H", 0)]
    bad = automorphism_defects(PrintedSigma(N, 1), M, modes, [M.hw.terms])
    assert (("E", 0), ("F", 1)) in bad
    assert automorphism_defects(spectral_flow(N, 1), M, modes, [M.hw.terms]) == []


def test_composition_law():
    assert composition_defects(n2(), 1, -2, [("E", 0), ("T", 1)]) == []
    assert composition_defects(wsl4sub(), 2, -1, [("G-", 2), ("L", 1)]) == []
