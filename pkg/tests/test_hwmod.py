from fractions import Fraction

import pytest

from voa import (HighestWeightModule, PresentationError, Scalar, gplus_power_kernel,
                 gplus_power_singular, n2, top_space_dim, virasoro, wsl4sub, wsl4sub_hw)
from voa.hwmod import N2_TWISTED_PATTERN, n2_twisted_hw, vacuum_spec

VIR_POSITIVE = {"L": 2}


def _singular(P, weight, cutoff=None):
    M = HighestWeightModule(vacuum_spec(P), cutoff=cutoff or weight)
    return [M.format(v.terms) for v in M.singular_vectors(weight, pattern=VIR_POSITIVE)]


def test_lee_yang_vacuum():
    # L_{-2}^2 - 3/5 L_{-4}, written with n-th product labels
    assert _singular(virasoro(Fraction(-22, 5)), 4) == ["(-3/5)*L_(-3) v + L_(-1) L_(-1) v"]


def test_generic_virasoro_has_no_singular_vectors():
    assert _singular(virasoro(), 4) == []
    assert _singular(virasoro(), 6) == []


def test_vacuum_character():
    V = HighestWeightModule(vacuum_spec(virasoro()), cutoff=8)
    # partitions into parts >= 2
    assert [len(V.basis(w)) for w in range(9)] == [1, 0, 1, 1, 2, 2, 4, 4, 7]


def test_vacuum_charges():
    P = wsl4sub(-1)
    V = HighestWeightModule(vacuum_spec(P), cutoff=3)
    assert [len(V.basis(w)) for w in range(4)] == [1, 2, 6, 15]
    assert len(V.basis(2, (2,))) == 1


def test_gplus_squared_singular_at_minus_one():
    P = wsl4sub(-1)
    assert gplus_power_kernel(P, 2)
    assert not gplus_power_kernel(P, 1)


@pytest.mark.parametrize("k", [-1, 0, None], ids=["k=-1", "k=0", "generic"])
@pytest.mark.parametrize("s", [1, 2, 3])
def test_criterion_matches_kernel(k, s):
    kk = Scalar.param("k") if k is None else k
    assert gplus_power_singular(4, s, kk) == gplus_power_kernel(wsl4sub(k), s)


def test_criterion_values():
    assert gplus_power_singular(4, 2, -1)
    assert gplus_power_singular(4, 3, 0)
    assert not gplus_power_singular(4, 1, -1)
    assert not gplus_power_singular(4, 2, Scalar.param("k"))


def test_hw_eigenvalues():
    P = wsl4sub()
    x, y, z = (Scalar.param(s) for s in "xyz")
    M = HighestWeightModule(wsl4sub_hw(P, x, y, z), cutoff=3)
    v = M.hw
    assert M.apply([("J", 0)]).scalar_multiple_of(v) == x
    assert M.apply([("L", 1)]).scalar_multiple_of(v) == y
    assert M.apply([("W", 2)]).scalar_multiple_of(v) == z
    assert not M.apply([("G+", 0)]).terms


def test_n2_twisted_hw():
    N = n2()
    h, q = Scalar.param("h"), Scalar.param("q")
    M = HighestWeightModule(n2_twisted_hw(N, h, q), cutoff=3)
    assert M.apply([("H", 0)]).scalar_multiple_of(M.hw) == h
    assert M.apply([("T", 1)]).scalar_multiple_of(M.hw) == q
    for g, first in N2_TWISTED_PATTERN.items():
        assert not M.apply([(g, first)]).terms


@pytest.mark.parametrize("xyz,dim", [((0, 0, 0), 1), ((0, Fraction(5, 2), 0), 2)])
def test_top_space_dim(xyz, dim):
    assert top_space_dim(wsl4sub(-1), *xyz) == dim


def test_top_space_none():
    with pytest.raises(PresentationError):
        top_space_dim(wsl4sub(-1), 1, 1, 1)
