import pytest

from voa import (ParseError, Scalar, check_jacobi, n2, parse_presentation, print_presentation,
                 virasoro, wsl4sub)
from voa.textfmt import parse_expr, print_expr

VIR = """\
algebra vir
param c
generator L parity=even weight=2
ope L L { 3: (c/2)*|0>; 1: 2*L; 0: d^1(L); }
"""


def _same(P, Q):
    assert [g.name for g in P.generators] == [g.name for g in Q.generators]
    for a in P.gens():
        for b in P.gens():
            A, B = Q.gen(str(a)), Q.gen(str(b))
            for n in range(0, 6):
                assert str(a.nth(b, n)) == str(A.nth(B, n))


@pytest.mark.parametrize("make", [n2, wsl4sub, lambda: wsl4sub(variant="altB"),
                                  virasoro, lambda: wsl4sub(-1), lambda: n2(-15)])
def test_roundtrip(make):
    P = make()
    text = print_presentation(P)
    Q = parse_presentation(text)
    assert print_presentation(Q) == text
    _same(P, Q)
    assert set(Q.fields) == set(P.fields)


def test_handwritten_virasoro():
    P = parse_presentation(VIR)
    assert all(i.ok for i in check_jacobi(P, 6))
    L = P.gen("L")
    assert P.parameters == ("c",)
    assert L.nth(L, 3) == (Scalar.param("c") / 2) * P.one


def test_expr_roundtrip():
    P = wsl4sub()
    J, L, Gp = P.gens("J L G+")
    e = (J @ (J @ J)) - 3 * L.d(2) + (Gp @ Gp) / 7
    assert parse_expr(P, print_expr(e)) == e


def _error(text):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    return info.value


def test_negative_index():
    err = _error(VIR.replace("0: d^1(L)", "-1: d^1(L)"))
    assert err.line == 4
    assert "line 4" in str(err)


def test_duplicate_index():
    err = _error(VIR.replace("0: d^1(L)", "1: d^1(L)"))
    assert err.line == 4 and "given twice" in str(err)


def test_weight_mismatch():
    err = _error(VIR.replace("1: 2*L", "2: 2*L"))
    assert err.line == 4
    assert "weight" in str(err)


def test_undeclared_parameter():
    err = _error(VIR.replace("(c/2)", "(k/2)"))
    assert err.line == 4 and "k" in str(err)


def test_bad_parity():
    err = _error(VIR.replace("parity=even", "parity=weird"))
    assert (err.line, err.col) == (3, 13)


def test_unknown_generator():
    err = _error(VIR.replace("2*L", "2*M"))
    assert err.line == 4 and err.col > 1


def test_unknown_directive():
    err = _error(VIR + "frobnicate x\n")
    assert err.line == 5
