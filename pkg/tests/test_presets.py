from fractions import Fraction

import pytest

from voa import PRESETS, PresentationError, check_jacobi, load_preset, n2, nop, wsl4sub
from voa.cli import gpgm_display_form
from voa.ks import inverse_embedding


def test_registry():
    assert set(PRESETS) == {"vir", "n2", "wsl4sub", "wsl4sub-altB"}
    H = load_preset("n2", c=-15).gen("H")
    assert H.nth(H, 1) == -5 * H.algebra.one
    assert load_preset("F-1").name == "F-1"
    with pytest.raises(PresentationError):
        load_preset("sl2")


def test_generator_data():
    P = wsl4sub()
    assert [g.name for g in P.generators] == ["J", "L", "G+", "G-", "W"]
    assert [g.weight for g in P.generators] == [1, 2, 1, 3, 3]
    assert all(g.parity == 0 for g in P.generators)
    assert P.generators[P.index["G+"]].charge("J") == 1
    assert P.generators[P.index["G-"]].charge("J") == -1


def _failures(P, cutoff=9):
    # 9 = weight of the W W W triple, so every generator triple is checked
    return [i.label for i in check_jacobi(P, cutoff) if not i.ok]


def test_exactly_one_variant_passes():
    good = _failures(wsl4sub(variant="gpgm"))
    bad = _failures(wsl4sub(variant="altB"))
    assert good == []
    assert len(bad) > 0


def test_printed_lambda_breaks_ww_row():
    P = wsl4sub(lambda_rows="printed")
    assert _failures(P, 6) == []
    fails = _failures(P)
    assert fails and all(f.count("W") >= 1 for f in fails)


def test_gpgm_display_form():
    P, form = gpgm_display_form()
    assert P.gen("G+").nth(P.gen("G-"), 0) == form


def test_gpgm_lower_poles_at_minus_one():
    P = wsl4sub(-1)
    J, L = P.gens("J L")
    Gp, Gm = P.gens("G+ G-")
    Lp = P.fields["Lperp"]
    assert Gp.nth(Gm, 3) == 15 * P.one
    assert Gp.nth(Gm, 2) == 12 * J
    assert Gp.nth(Gm, 1) == -3 * Lp + Fraction(24, 5) * (J @ J) + 6 * J.d()


def test_printed_lambda_breaks_inverse_map():
    emb = inverse_embedding()
    emb.source = wsl4sub(-1, lambda_rows="printed")
    bad = {r.job for r in emb.verify([("W", "W")]) if r.status != "pass"}
    assert bad == {"W_(0)W", "W_(1)W"}


def test_central_sign_variant_fails():
    assert _failures(wsl4sub(central_sign=-1), 6)


def test_unknown_variant():
    with pytest.raises(PresentationError):
        wsl4sub(variant="other")


def test_parafermion_generator_weight():
    from voa import parafermion_generator

    N = n2()
    W = parafermion_generator(N, Fraction(-3, 2))
    assert W.weight() == 3
    H = N.gen("H")
    assert H.nth(W, 0).is_zero()
    assert H.nth(W, 1).is_zero()
    assert nop(H, H, H).weight() == 3
