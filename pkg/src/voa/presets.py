"""Built-in presentations: Virasoro, Heisenberg, N=2, the subregular W-algebra of sl4.

Tables use the shifted grading fields as the declared weights (``T + dH`` for
N=2, ``L + dJ`` for the W-algebra); the unshifted Virasoro fields stay the
generators ``T`` and ``L``. Each preset also carries named composite fields.
"""

from __future__ import annotations

from fractions import Fraction as Fr
from typing import Mapping

from .algebra import AlgebraPresentation, Expr, Generator, PresentationError
from .scalar import Scalar, as_scalar, parse_scalar

__all__ = [
    "PRESETS",
    "load_preset",
    "virasoro",
    "heisenberg",
    "n2",
    "wsl4sub",
    "central_charge_wsl4sub",
    "parafermion_generator",
    "nop",
]


def nop(*xs: Expr) -> Expr:
    """Right-nested normal ordering ``:x1 :x2 ... xn::``."""
    out = xs[-1]
    for x in reversed(xs[:-1]):
        out = x @ out
    return out


def _param(P, name, value):
    return as_scalar(value) if value is not None else Scalar.param(name)


def central_charge_wsl4sub(k=None):
    k = Scalar.param("k") if k is None else as_scalar(k)
    return -(3 * k + 8) * (8 * k + 17) / (k + 4)


def virasoro(c=None) -> AlgebraPresentation:
    c = Scalar.param("c") if c is None else as_scalar(c)
    P = AlgebraPresentation("vir", [Generator("L", 0, Fr(2))], c.parameters, "L")
    L, = P.gens()
    P.set_ope("L", "L", {3: c / 2 * P.one, 1: 2 * L, 0: L.d()})
    return P


def heisenberg(level=1, name="a") -> AlgebraPresentation:
    level = as_scalar(level)
    P = AlgebraPresentation(f"heis({level})", [Generator(name, 0, Fr(1))], level.parameters)
    P.set_ope(name, name, {1: level * P.one})
    return P


def n2(c=None) -> AlgebraPresentation:
    """Universal N=2 superconformal algebra, graded by ``T + dH``."""
    c = Scalar.param("c") if c is None else as_scalar(c)
    gens = [
        Generator("H", 0, Fr(1)),
        Generator("T", 0, Fr(2)),
        Generator("E", 1, Fr(1, 2), (("H", Fr(1)),)),
        Generator("F", 1, Fr(5, 2), (("H", Fr(-1)),)),
    ]
    P = AlgebraPresentation("n2", gens, c.parameters, "Tt",
                            {"central_charge": str(c)})
    H, T, E, F = P.gens("H T E F")
    one = P.one
    P.set_ope("H", "H", {1: c / 3 * one})
    P.set_ope("T", "H", {1: H, 0: H.d()})
    P.set_ope("T", "T", {3: c / 2 * one, 1: 2 * T, 0: T.d()})
    P.set_ope("T", "E", {1: Fr(3, 2) * E, 0: E.d()})
    P.set_ope("T", "F", {1: Fr(3, 2) * F, 0: F.d()})
    P.set_ope("H", "E", {0: E})
    P.set_ope("H", "F", {0: -F})
    P.set_ope("E", "E", {})
    P.set_ope("F", "F", {})
    P.set_ope("E", "F", {2: 2 * c / 3 * one, 1: 2 * H, 0: 2 * T + H.d()})
    P.set_ope("F", "E", {2: 2 * c / 3 * one, 1: -2 * H, 0: 2 * T - H.d()})
    H, T, E, F = P.gens("H T E F")
    P.fields["Tt"] = T + H.d()
    if c:
        P.fields["Tperp"] = T - Fr(3, 2) / c * (H @ H)
    return P


def parafermion_generator(P: AlgebraPresentation, nu=None) -> Expr:
    """``nu(:EF: - dT - (6/c):TH: - ((c-9)/3c) d^2 H + (6/c^2):H^3:)`` in ``n2``.

    Undefined at the excluded central charges 0, 1, 3/2, -6, -9.
    """
    c = parse_scalar(P.metadata["central_charge"])
    if c.is_constant() and c.to_fraction() in (0, 1, Fr(3, 2), -6, -9):
        raise PresentationError(f"parafermion generator is not defined at c = {c}")
    nu = Scalar.param("nu") if nu is None else as_scalar(nu)
    H, T, E, F = P.gens("H T E F")
    return nu * ((E @ F) - T.d() - 6 / c * (T @ H) - (c - 9) / (3 * c) * H.d(2)
                 + 6 / (c * c) * nop(H, H, H))


WSL4_VARIANTS = ("altB", "gpgm")


def wsl4sub(k=None, variant: str = "gpgm", central_sign: int = 1,
            lambda_rows: str = "jacobi") -> AlgebraPresentation:
    """Universal W^k(sl4, f_sub) from its OPE table.

    ``variant`` selects the first-order pole of ``G+ G-``: ``"altB"``
    takes ``+(k+4)/2 dL`` and ``8(k+11)`` for ``:J^3:``; ``"gpgm"`` takes
    ``-(k+4)/2 dL`` and ``8(11k+32)``. ``central_sign`` multiplies the
    quartic pole of ``L L`` (``c_k/2`` for +1).

    ``lambda_rows="printed"`` keeps the printed ``d^2 Lperp`` coefficient of
    ``Lambda``; the default ``"jacobi"`` uses three times that value, which is
    the unique choice passing the Jacobi identities of the ``W W`` row.
    """
    if lambda_rows not in ("jacobi", "printed"):
        raise PresentationError(f"unknown lambda_rows {lambda_rows!r}")
    if variant not in WSL4_VARIANTS:
        raise PresentationError(f"unknown variant {variant!r}")
    k = Scalar.param("k") if k is None else as_scalar(k)
    gens = [
        Generator("J", 0, Fr(1)),
        Generator("L", 0, Fr(2)),
        Generator("G+", 0, Fr(1), (("J", Fr(1)),)),
        Generator("G-", 0, Fr(3), (("J", Fr(-1)),)),
        Generator("W", 0, Fr(3)),
    ]
    name = "wsl4sub" if variant == "gpgm" else "wsl4sub-altB"
    ck = central_charge_wsl4sub(k)
    P = AlgebraPresentation(name, gens, k.parameters, "Lt",
                            {"variant": variant, "lambda_rows": lambda_rows, "k": str(k),
                             "central_charge": str(ck)})
    J, L, Gp, Gm, W = P.gens("J L G+ G- W")
    one = P.one
    k8 = 3 * k + 8
    P.set_ope("J", "J", {1: k8 / 4 * one})
    P.set_ope("J", "G+", {0: Gp})
    P.set_ope("J", "G-", {0: -Gm})
    P.set_ope("G+", "G+", {})
    P.set_ope("G-", "G-", {})
    P.set_ope("L", "G+", {1: 2 * Gp, 0: Gp.d()})
    P.set_ope("L", "G-", {1: 2 * Gm, 0: Gm.d()})
    P.set_ope("L", "J", {1: J, 0: J.d()})
    P.set_ope("L", "L", {3: central_sign * ck / 2 * one, 1: 2 * L, 0: L.d()})
    P.set_ope("L", "W", {1: 3 * W, 0: W.d()})
    P.set_ope("J", "W", {})
    J, L, Gp, Gm, W = P.gens("J L G+ G- W")

    JJ = J @ J
    if variant == "altB":
        c_j3 = 8 * (k + 11) / (3 * k8 ** 2)
        c_dl = (k + 4) / 2
    else:
        c_j3 = 8 * (11 * k + 32) / (3 * k8 ** 2)
        c_dl = -(k + 4) / 2
    P.set_ope("G+", "G-", {
        3: (k + 2) * (2 * k + 5) * k8 * one,
        2: 4 * (k + 2) * (2 * k + 5) * J,
        1: (k + 2) * (6 * JJ + 2 * (2 * k + 5) * J.d() - (k + 4) * L),
        0: (k + 2) * (W + c_j3 * nop(J, J, J) - 4 * (k + 4) / k8 * (L @ J)
                      + 6 * (J.d() @ J) + c_dl * L.d()
                      + 4 * (3 * k * k + 17 * k + 26) / (3 * k8) * J.d(2)),
    })
    J, L, Gp, Gm, W = P.gens("J L G+ G- W")

    for s, G in ((1, Gp), (-1, Gm)):
        P.set_ope("W", "G+" if s == 1 else "G-", {
            2: s * 2 * (k + 4) * (3 * k + 7) * (5 * k + 16) / k8 ** 2 * G,
            1: s * 3 * (k + 4) * (5 * k + 16) / (2 * k8) * G.d()
               - 6 * (k + 4) * (5 * k + 16) / k8 ** 2 * (J @ G),
            0: -8 * (k + 4) * (k + 3) / ((k + 2) * k8) * (J @ G.d())
               - 4 * (k + 4) * (3 * k * k + 15 * k + 16) / ((k + 2) * k8 ** 2) * (J.d() @ G)
               + s * (k + 4) * (k + 3) / (k + 2) * G.d(2)
               - s * 2 * (k + 4) ** 2 / ((k + 2) * k8) * (L @ G)
               + s * 4 * (k + 4) * (5 * k + 16) / ((k + 2) * k8 ** 2) * nop(J, J, G),
        })
    J, L, Gp, Gm, W = P.gens("J L G+ G- W")

    Lp = L - 2 / k8 * JJ
    q = 20 * k * k + 93 * k + 102
    d2 = 3 if lambda_rows == "jacobi" else 1
    Lam = (nop(Gp, Gm) + (k + 2) * (
        -W.d() / 2 - 4 / k8 * (W @ J)
        + d2 * (k + 2) * (k + 4) * (6 * k * k + 33 * k + 46) / (2 * k8 * q) * Lp.d(2)
        - (k + 4) ** 2 * (11 * k + 26) / (2 * k8 * q) * (Lp @ Lp)
        + 2 * (k + 4) / k8 * (Lp @ J).d()
        + 8 * (k + 4) / k8 ** 2 * nop(Lp, J, J)
        - (2 * k + 5) / k8 * (Fr(8, 3) * (J.d(2) @ J) + 2 * (J.d() @ J.d())
                              + 16 / k8 * nop(J.d(), J, J)
                              + 32 / (3 * k8 ** 2) * nop(J, J, J, J)
                              + k8 / 6 * J.d(3)))) / (k + 2) ** 2
    a = 3 * (k + 4) ** 2 * (5 * k + 16)
    b = 8 * (k + 4) ** 3 * (5 * k + 16) / (k8 * q)
    r = 12 * k * k + 59 * k + 74
    P.set_ope("W", "W", {
        5: 2 * (k + 4) * (2 * k + 5) * (3 * k + 7) * (5 * k + 16) / k8 * one,
        3: -a / k8 * Lp,
        2: -a / (2 * k8) * Lp.d(),
        1: -a * r / (4 * k8 * q) * Lp.d(2) + b * (Lp @ Lp) + 4 * (k + 4) * Lam,
        0: -(k + 4) ** 2 * (5 * k + 16) * r / (6 * k8 * q) * Lp.d(3)
           + b * (Lp.d() @ Lp) + 2 * (k + 4) * Lam.d(),
    })
    J, L, Gp, Gm, W = P.gens("J L G+ G- W")
    Lp = L - 2 / k8 * (J @ J)
    P.fields.update({
        "Lt": L + J.d(),
        "Lperp": Lp,
        "Lambda": Expr(P, Lam.terms),
        "G+G+": Gp @ Gp,
        "G-G-": Gm @ Gm,
    })
    P.ideal = [P.fields["G+G+"], P.fields["G-G-"]]
    return P


PRESETS = {
    "vir": virasoro,
    "n2": n2,
    "wsl4sub": lambda **kw: wsl4sub(variant="gpgm", **kw),
    "wsl4sub-altB": lambda **kw: wsl4sub(variant="altB", **kw),
}


def load_preset(name: str, overrides: Mapping | None = None, **params) -> AlgebraPresentation:
    """Load and validate a preset; ``params`` bind parameters (``k=-1``, ``c=-15``)."""
    from .checks import validate

    if name in ("F+1", "F-1") or name.startswith("Heis("):
        from .lattice import lattice_preset
        return lattice_preset(name)
    try:
        factory = PRESETS[name]
    except KeyError:
        raise PresentationError(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None
    P = factory(**params)
    if overrides:
        for (a, b), products in overrides.items():
            P.set_ope(a, b, products)
    validate(P)
    return P
