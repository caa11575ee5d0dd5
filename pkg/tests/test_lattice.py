from fractions import Fraction

import pytest

from voa import lattice_preset, n2, quotient_reduce, tensor, wsl4sub
from voa.checks import state_jacobi_residual, state_skew_residual
from voa.ks import lattice_leg
from voa.quotient import ideal_span


@pytest.fixture(scope="module")
def fplus():
    return lattice_preset("F+1")


@pytest.fixture(scope="module")
def fminus():
    return lattice_preset("F-1")


def test_weights_and_parity(fplus, fminus):
    assert fplus.exp(1).weight() == Fraction(1, 2)
    assert fplus.exp(1).parity() == 1
    assert fplus.exp(2).weight() == 2
    assert fminus.exp(1).weight() == Fraction(-1, 2)
    assert fminus.exp(1).parity() == 1


def test_fermion_pair(fplus):
    e, f, phi = fplus.exp(1), fplus.exp(-1), fplus.phi()
    assert e.nth(f, 0) == fplus.one
    assert e.nth(f, -1) == phi
    assert e.nth(e, -1).is_zero()
    assert e.nth(e, -2) == fplus.exp(2)
    assert phi.nth(phi, 1) == fplus.one
    assert phi.nth(e, 0) == e


def test_negative_norm(fminus):
    e, f, phi = fminus.exp(1), fminus.exp(-1), fminus.phi()
    assert phi.nth(phi, 1) == -fminus.one
    assert phi.nth(e, 0) == -e
    assert e.nth(f, 0).is_zero()


def test_heisenberg_level():
    a = lattice_preset("Heis(3)").phi()
    assert a.nth(a, 1) == 3 * a.algebra.one


@pytest.mark.parametrize("n", [-2, -1, 0, 1])
def test_lattice_axioms(fplus, n):
    e, f, phi = fplus.exp(1), fplus.exp(-1), fplus.phi()
    assert state_skew_residual(e, f, n).is_zero()
    for m in (0, 1):
        assert state_jacobi_residual(e, f, phi, m, n).is_zero()
        assert state_jacobi_residual(e, e, f, m, n).is_zero()


def test_tensor_grading(fplus):
    N = n2(-15)
    V = tensor(N, fplus)
    x = V.pair(N.gen("E"), fplus.exp(1))
    assert x.weight() == 1
    assert x.parity() == 0
    assert V.embed_left(N.gen("H")).nth(V.embed_right(fplus.phi()), 1).is_zero()


def test_tensor_sign(fplus):
    # (E x e)_(3)(F x f) = -E_(2)F x e_(0)f: the sign of moving e past F
    N = n2(-15)
    V = tensor(N, fplus)
    a = V.pair(N.gen("E"), fplus.exp(1))
    b = V.pair(N.gen("F"), fplus.exp(-1))
    assert a.nth(b, 3) == -V.pair(N.gen("E").nth(N.gen("F"), 2), fplus.one)


def test_ideal_span():
    P = wsl4sub(-1)
    span = ideal_span(P, 4)
    assert [span.dimension(w) for w in (1, 2, 3, 4)] == [0, 1, 3, 9]
    Gp = P.gen("G+")
    assert quotient_reduce(Gp @ Gp, 4).is_zero()
    assert quotient_reduce(P.gen("J") @ (Gp @ Gp), 4).is_zero()
    assert not quotient_reduce(P.gen("J") @ Gp, 4).is_zero()


def test_c1_realisations():
    legs = lattice_leg()
    for emb in legs.values():
        bad = [r.job for r in emb.verify() if r.status != "pass"]
        assert bad == []
