"""Kazama-Suzuki embeddings, commutant checks, truncation curves, classification.

``forward_embedding`` realizes the N=2 algebra at ``c = -15`` inside
``W_{-1}(sl4, f_sub) x F_{-1}``; ``inverse_embedding`` realizes
``W^{-1}(sl4, f_sub)`` inside ``N=2_{c=-15} x F_{+1}``. Both are plain
generator maps extended to normally ordered monomials, so a product check
compares ``Phi(a)_(n) Phi(b)`` with ``Phi(a_(n) b)`` term by term.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import flint

from .algebra import AlgebraPresentation, Expr, PresentationError
from .hwmod import HighestWeightModule, n2_twisted_hw, vacuum_spec
from .lattice import LatticeAlgebra, lattice_preset, _partitions
from .linalg import Echelon, kernel
from .modes import add_into
from .presets import n2, nop, parafermion_generator, wsl4sub
from .quotient import quotient_reduce
from .scalar import ONE, Scalar, as_scalar
from .tensor import TensorAlgebra, tensor

__all__ = [
    "Embedding",
    "CheckRecord",
    "forward_embedding",
    "inverse_embedding",
    "verify_embedding",
    "TensorModule",
    "commutant_check",
    "truncation_curves",
    "intersect_truncation_curves",
    "g1",
    "g2",
    "s1_point",
    "s2_point",
    "classify",
    "w0_eigenvalue",
    "w0_eigenvalue_module",
    "hw_eigenvalues",
    "lattice_leg",
]


@dataclass
class CheckRecord:
    """One verification job; ``expected``/``got`` are printed expressions."""

    job: str
    status: str
    expected: str
    got: str
    weight: str
    charge: str
    anchor: str = ""

    def as_dict(self) -> dict:
        return {"job": self.job, "status": self.status, "expected": self.expected,
                "got": self.got, "weight": self.weight, "charge": self.charge}


@dataclass
class Embedding:
    """Generator map ``source -> target``, extended to normally ordered monomials."""

    source: AlgebraPresentation
    target: object
    images: dict
    quotient: bool = False
    name: str = "Phi"
    _memo: dict = field(default_factory=dict, repr=False)

    def reduce(self, e: Expr) -> Expr:
        return quotient_reduce(e) if self.quotient else e

    def image_mono(self, mono) -> Expr:
        r = self._memo.get(mono)
        if r is not None:
            return r
        if not mono:
            r = self.target.one
        else:
            (g, m), rest = mono[0], mono[1:]
            a = self.images[self.source.generators[g].name]
            r = a.nth(self.image_mono(rest), m)
        self._memo[mono] = r
        return r

    def __call__(self, e: Expr) -> Expr:
        if e.algebra is not self.source:
            raise PresentationError("expression does not live in the source algebra")
        out = {}
        for mono, c in e.terms.items():
            add_into(out, self.image_mono(mono).terms, c)
        return self.reduce(Expr(self.target, out))

    def check(self, a: str, b: str, n: int) -> CheckRecord:
        P = self.source
        A, B = P.gen(a), P.gen(b)
        expected = self(A.nth(B, n))
        got = self.reduce(self.images[a].nth(self.images[b], n))
        w = A.weight() + B.weight() - n - 1
        ch = ",".join(f"{g}={sum((P.generators[P.index[x]].charge(g) for x in (a, b)), Fraction(0))}"
                      for g in _gradings(P))
        ok = (got - expected).is_zero()
        return CheckRecord(f"{a}_({n}){b}", "pass" if ok else "fail",
                           str(expected), str(got), str(w), ch)

    def verify(self, pairs=None) -> list:
        """All products ``a_(n) b`` with ``n`` from 0 to the pole order of the pair."""
        P = self.source
        names = [g.name for g in P.generators]
        if pairs is None:
            pairs = [(a, b) for i, a in enumerate(names) for b in names[i:]]
        out = []
        for a, b in pairs:
            top = P.max_product(((P.index[a], -1),), ((P.index[b], -1),))
            for n in range(0, top + 1):
                out.append(self.check(a, b, n))
        return out


def _gradings(P):
    return sorted({g for gen in P.generators for g, _ in gen.charges})


def forward_embedding(k=-1) -> Embedding:
    """``Phi: N=2_{c=-15} -> W x F_{-1}``, products reduced modulo ``<(G+)^2, (G-)^2>``."""
    W = wsl4sub(k)
    F = lattice_preset("F-1")
    V = tensor(W, F, name="W x F-1")
    c = as_scalar(W.metadata["central_charge"])
    N = n2(c)
    J, L = V.gen("J"), V.gen("L")
    ph = V.embed_right(F.phi())
    images = {
        "E": Fraction(2, 3) * V.pair(W.gen("G+"), F.exp(1)),
        "F": -V.pair(W.gen("G-"), F.exp(-1)),
        "H": -4 * J - 5 * ph,
        "T": L - 2 * (J @ J) - 4 * (J @ ph) - Fraction(5, 2) * (ph @ ph),
    }
    return Embedding(N, V, images, quotient=True, name="Phi")


def inverse_embedding(c=-15, nu=Fraction(-3, 2)) -> Embedding:
    """``Phi^inv: W^{-1}(sl4, f_sub) -> N=2_{c=-15} x F_{+1}``."""
    N = n2(c)
    F = lattice_preset("F+1")
    V = tensor(N, F, name="N2 x F+1")
    W = wsl4sub(-1)
    H, T = V.gen("H"), V.gen("T")
    ph = V.embed_right(F.phi())
    J = -Fraction(1, 4) * H + Fraction(5, 4) * ph
    images = {
        "J": J,
        "L": T + Fraction(1, 10) * (H @ H) + Fraction(2, 5) * (J @ J),
        "G+": V.pair(N.gen("E"), F.exp(1)),
        "G-": Fraction(3, 2) * V.pair(N.gen("F"), F.exp(-1)),
        "W": V.embed_left(parafermion_generator(N, nu)),
    }
    return Embedding(W, V, images, quotient=False, name="Phi_inv")


def verify_embedding(direction: str = "forward", pairs=None) -> list:
    if direction == "forward":
        return forward_embedding().verify(pairs)
    if direction == "inverse":
        return inverse_embedding().verify(pairs)
    raise PresentationError(f"unknown direction {direction!r}")


# -- modules of a tensor product ---------------------------------------------


class TensorModule:
    """``M x F`` for a highest-weight module ``M`` of the left factor and the
    lattice algebra ``F`` of the right factor, acting on ``{(mono, state): c}``.

    ``(a x b)_(n) (v x w) = (-1)^{p(b) p(v)} sum_i a_(i) v x b_(n-1-i) w``.
    """

    def __init__(self, module: HighestWeightModule, algebra: TensorAlgebra):
        if not isinstance(algebra.right, LatticeAlgebra):
            raise PresentationError("the right factor must be a lattice algebra")
        self.module = module
        self.algebra = algebra

    def vector(self, lattice_state=None) -> dict:
        """``v x w`` for the cyclic vector ``v`` and a lattice state ``w`` (default vacuum)."""
        w = self.algebra.right.vacuum_key if lattice_state is None else lattice_state
        return {((), w): ONE}

    def _mod_parity(self, mono) -> int:
        P = self.module.algebra
        return sum(P.generators[g].parity for g, _ in mono) % 2

    def mode(self, u: Expr, n: int, vec: dict) -> dict:
        if u.algebra is not self.algebra:
            raise PresentationError("field does not live in the tensor algebra")
        M, F = self.module, self.algebra.right
        eng = M.engine
        out = {}
        for (a, b), cu in u.terms.items():
            wa = self.algebra.left.mono_weight(a)
            for (v, w), cv in vec.items():
                sign = -1 if (F.mono_parity(b) and self._mod_parity(v)) else 1
                hi = int(wa + M.weight(v) - 1)
                lo = n - 1 - F.max_product(b, w)
                for i in range(lo, hi + 1):
                    av = eng.state_mode({a: ONE}, i, {v: ONE})
                    if not av:
                        continue
                    bw = F.nth_terms({b: ONE}, {w: ONE}, n - 1 - i)
                    for x, cx in av.items():
                        for y, cy in bw.items():
                            add_into(out, {(x, y): cx * cy * cu * cv * sign})
        return out

    def eigenvalue(self, u: Expr, n: int, vec: dict):
        """``c`` with ``u_(n) vec = c vec``, or None."""
        img = self.mode(u, n, vec)
        key = next(iter(vec))
        c = img.get(key, Scalar(0)) / vec[key]
        t = dict(img)
        add_into(t, vec, -c)
        return None if t else c


# -- commutants ------------------------------------------------------------------


def _left_basis(P, weight):
    """Vacuum monomials of ``P`` of weight ``weight`` (PBW, all charges)."""
    if weight < 0 or Fraction(weight).denominator != 1 and not any(
            g.weight.denominator != 1 for g in P.generators):
        return []
    M = HighestWeightModule(vacuum_spec(P), cutoff=max(weight, 0))
    eng = P.vacuum
    out = []
    for mono in M.basis(weight):
        out.append(eng.ordered(list(mono)))
    return out


def _ambient_states(V: TensorAlgebra, weight, sectors):
    """States of ``V`` at ``weight`` with lattice sector in ``sectors``."""
    F = V.right
    out = []
    for m in sectors:
        base = F.mono_weight((m, ()))
        rest = Fraction(weight) - base
        t = 0
        while t <= rest:
            wl = rest - t
            for parts in _partitions(t):
                for left in _left_basis(V.left, wl):
                    out.append({(x, (m, parts)): c for x, c in left.items()})
            t += 1
    return out


def _reduce_terms(V, terms, quotient):
    return quotient_reduce(Expr(V, terms)).terms if quotient else terms


def commutant_check(heis: Expr, emb: Embedding, cutoff=2, sectors=range(-2, 3),
                    source_weights=None) -> list:
    """Finite-weight commutant checks for a Heisenberg vector ``heis``.

    Records: ``heis_(n) Phi(X) = 0`` for every source generator ``X`` and
    ``n >= 0``; then, for each weight up to ``cutoff`` and lattice sectors in
    ``sectors``, the dimension of the commutant (states killed by all
    ``heis_(n)``, ``n >= 0``) against the dimension of ``Phi`` applied to the
    source vacuum module, and the ``heis_(0)``-kernel against the graded
    product of the image with the Heisenberg Fock space.
    """
    V = emb.target
    recs = []
    P = emb.source
    for g in P.generators:
        img = emb.images[g.name]
        top = V.max_product(next(iter(heis.terms)), next(iter(img.terms)))
        for n in range(0, top + 1):
            r = emb.reduce(heis.nth(img, n))
            recs.append(CheckRecord(f"heis_({n}){g.name}", "pass" if r.is_zero() else "fail",
                                    "0", str(r), str(img.weight() - n), "0"))
    level = heis.nth(heis, 1)
    image_dims = {}
    step = Fraction(1, 2) if any(g.weight.denominator != 1 for g in P.generators) else Fraction(1)
    weights = [step * i for i in range(0, int(Fraction(cutoff) / step) + 1)]
    for w in weights:
        img_states = [emb(Expr(P, t)) for t in _left_basis(P, w)]
        ech = Echelon()
        for s in img_states:
            ech.add(s.terms)
        image_dims[w] = len(ech)
        amb = []
        ech2 = Echelon()
        for s in _ambient_states(V, w, sectors):
            r = _reduce_terms(V, s, emb.quotient)
            if r and ech2.add(r) is not None:
                amb.append(r)
        # kernel of heis_(0), then of all heis_(n)
        basis = [dict(r) for r in ech2.rows.values()]
        cols0 = [_reduce_terms(V, heis.algebra.nth_terms(heis.terms, b, 0), emb.quotient)
                 for b in basis]
        ker0 = kernel(cols0)
        charge0 = [_combine(basis, comb) for comb in ker0]
        cols = []
        for s in charge0:
            stacked = {}
            for n in range(1, int(w) + 2):
                for key, c in _reduce_terms(V, V.nth_terms(heis.terms, s, n), emb.quotient).items():
                    stacked[(n, key)] = c
            cols.append(stacked)
        com = len(kernel(cols))
        # charge-0 part = image x Fock(heis): dims convolve with partition counts
        fock = sum(image_dims[w - j] * len(_partitions(j)) for j in range(0, int(w) + 1))
        recs.append(CheckRecord(f"commutant dim at weight {w}", "pass" if com == image_dims[w] else "fail",
                                str(image_dims[w]), str(com), str(w), "0"))
        recs.append(CheckRecord(f"charge-0 dim at weight {w}", "pass" if len(charge0) == fock else "fail",
                                str(fock), str(len(charge0)), str(w), "0"))
    recs.insert(0, CheckRecord("heis_(1)heis", "pass" if not level.is_zero() else "fail",
                               "nonzero", str(level), "0", "0"))
    return recs


def _combine(basis, comb):
    out = {}
    for i, c in comb.items():
        add_into(out, basis[i], c)
    return out


# -- truncation curves --------------------------------------------------------


def truncation_curves():
    """``(c, lambda)`` parametrizations of the two truncation curves as Scalars."""
    s, k = Scalar.param("s"), Scalar.param("k")
    ns = (2 * (s - 1) / (s + 2), (s + 1) / ((s - 2) * (3 * s + 4)))
    ck = (-4 * (5 + 2 * k) * (7 + 3 * k) / (4 + k),
          -(3 + k) * (4 + k) / (3 * (2 + k) ** 2 * (16 + 5 * k)))
    return {"N_s": ns, "C_k": ck}


def _rational_roots(p) -> list:
    """Rational roots of a univariate ``fmpq_mpoly`` (one used generator)."""
    if p.is_zero():
        raise PresentationError("identically zero eliminant")
    _, facs = p.factor()
    out = []
    for f, _ in facs:
        if f.total_degree() == 1:
            d = f.to_dict()
            lin = [c for e, c in d.items() if sum(e) == 1][0]
            const = d.get(tuple(0 for _ in next(iter(d))), flint.fmpq(0))
            r = -const / lin
            out.append(Fraction(int(r.p), int(r.q)))
    return sorted(set(out))


def _curve_polys(ctx):
    s, k = ctx.gens()
    cN = (2 * (s - 1), s + 2)
    lN = (s + 1, (s - 2) * (3 * s + 4))
    cC = (-4 * (5 + 2 * k) * (7 + 3 * k), 4 + k)
    lC = (-(3 + k) * (4 + k), 3 * (2 + k) ** 2 * (16 + 5 * k))
    p1 = cN[0] * cC[1] - cC[0] * cN[1]
    p2 = lN[0] * lC[1] - lC[0] * lN[1]
    dens = [cN[1], lN[1], cC[1], lC[1]]
    return p1, p2, dens


def _solve(order: str) -> list:
    ctx = flint.fmpq_mpoly_ctx.get(("s", "k"))
    p1, p2, dens = _curve_polys(ctx)
    first, second = ("k", "s") if order == "k" else ("s", "k")
    # eliminate `first`, get roots in `second`, back-substitute
    res = p1.resultant(p2, first)
    pts = set()
    for r in _rational_roots(res):
        sub = {second: flint.fmpq(r.numerator, r.denominator)}
        g = p1.subs(sub).gcd(p2.subs(sub))
        if g.is_constant():
            continue
        for r2 in _rational_roots(g):
            pt = {second: r, first: r2}
            pts.add((pt["k"], pt["s"]))
    ok = []
    for kk, ss in pts:
        vals = {"s": flint.fmpq(ss.numerator, ss.denominator), "k": flint.fmpq(kk.numerator, kk.denominator)}
        if any(d.subs(vals).is_zero() for d in dens):
            continue
        ok.append((kk, ss))
    return sorted(ok)


def _special_points(c0) -> list:
    ctx = flint.fmpq_mpoly_ctx.get(("s", "k"))
    s, k = ctx.gens()
    c0 = flint.fmpq(Fraction(c0).numerator, Fraction(c0).denominator)
    ss = _rational_roots(2 * (s - 1) - c0 * (s + 2))
    ks = _rational_roots(-4 * (5 + 2 * k) * (7 + 3 * k) - c0 * (4 + k))
    return sorted((kk, sv) for kk in ks for sv in ss)


def intersect_truncation_curves() -> dict:
    """Rational intersection points ``(k, s)`` of the two truncation curves.

    Elimination runs in both orders; ``stable`` records that they agree.
    ``special`` lists, for the excluded central charges 0 and -2, the pairs
    ``(k, s)`` with both curves at that central charge.
    """
    a, b = _solve("k"), _solve("s")
    return {"points": a, "stable": a == b,
            "special": {0: _special_points(0), -2: _special_points(-2)}}


# -- classification -----------------------------------------------------------


def g1(x, y, z) -> Scalar:
    x, y, z = map(as_scalar, (x, y, z))
    return (-6 * x * x + Fraction(56, 25) * x ** 3 + 4 * x
            - Fraction(12, 5) * x * y + 3 * y + z)


def g2(x, y, z) -> Scalar:
    x, y, z = map(as_scalar, (x, y, z))
    return z + Fraction(1, 25) * (2 * x - 5) * (75 - 80 * x + 28 * x * x - 30 * y)


def _zval(h, q):
    return -Fraction(1, 25) * (h + 5) * (h * h - 5 * h + 15 * q)


def s1_point(h, q) -> tuple:
    h, q = as_scalar(h), as_scalar(q)
    return (-h / 4, q + h * h / 8, _zval(h, q))


def s2_point(h, q) -> tuple:
    h, q = as_scalar(h), as_scalar(q)
    return (-(h - 5) / 4, q + (h * h - 2 * h + 5) / 8, _zval(h, q))


def classify(x, y, z) -> dict:
    """S1/S2 membership of ``(x, y, z)`` with the ``(h, q)`` preimages."""
    x, y, z = map(as_scalar, (x, y, z))
    out = {"g1": g1(x, y, z), "g2": g2(x, y, z), "S1": None, "S2": None}
    if out["g1"].is_zero():
        h = -4 * x
        out["S1"] = (h, y - h * h / 8)
    if out["g2"].is_zero():
        h = 5 - 4 * x
        out["S2"] = (h, y - (h * h - 2 * h + 5) / 8)
    if out["S1"] is not None:
        out["top_dim"] = 1
    elif out["S2"] is not None:
        out["top_dim"] = 2
    else:
        out["top_dim"] = None
    return out


def w0_eigenvalue(h, q, c, nu) -> Scalar:
    """``W(0)`` on the twisted highest-weight vector ``v_{h,q}``."""
    h, q, c, nu = map(as_scalar, (h, q, c, nu))
    if c.is_zero():
        raise PresentationError("w0_eigenvalue is undefined at c = 0")
    return nu * (2 * q - 6 / c * (q * h + h) - 2 * (c - 9) / (3 * c) * h + 6 / (c * c) * h ** 3)


def w0_eigenvalue_module(h, q, c, nu, cutoff=3) -> Scalar:
    """The same eigenvalue recomputed by acting with the composite field."""
    N = n2(c)
    M = HighestWeightModule(n2_twisted_hw(N, h, q), cutoff=cutoff)
    W = parafermion_generator(N, nu)
    img = M.state_mode(W.terms, 2, M.hw)
    for n in (3, 4):
        if M.state_mode(W.terms, n, M.hw):
            raise PresentationError(f"W({n - 2}) does not kill v_(h,q)")
    c0 = img.scalar_multiple_of(M.hw)
    if c0 is None:
        raise PresentationError("v_(h,q) is not a W(0) eigenvector")
    return c0


def hw_eigenvalues(h, q, sector: int = 0) -> dict:
    """``J(0), L(0), W(0)`` and ``G+(0)`` on ``v_{h,q} x e^{sector phi+}`` via ``Phi^inv``.

    ``sector = 0`` is the one-dimensional top case, ``sector = 1`` the vector
    ``w_2`` of the two-dimensional construction.
    """
    emb = inverse_embedding()
    V = emb.target
    M = HighestWeightModule(n2_twisted_hw(V.left, h, q), cutoff=4)
    TM = TensorModule(M, V)
    vec = TM.vector((sector, ()))
    ev = {
        "J": TM.eigenvalue(emb.images["J"], 0, vec),
        "L": TM.eigenvalue(emb.images["L"], 1, vec),
        "W": TM.eigenvalue(emb.images["W"], 2, vec),
    }
    ev["G+(0) kills"] = not TM.mode(emb.images["G+"], 0, vec)
    return ev


# -- the c = 1 leg ------------------------------------------------------------


def lattice_leg() -> dict:
    """Lattice realizations at ``c = 1``: ``N=2_{c=1}`` in ``F_3`` and
    ``W_{-7/3}(sl4, f_sub)`` in ``F_4`` (with ``W`` in the maximal ideal)."""
    F3 = LatticeAlgebra(3, "phi3")
    p3 = F3.phi()
    n2_leg = Embedding(n2(1), F3, {"H": Fraction(1, 3) * p3, "T": Fraction(1, 6) * (p3 @ p3),
                                   "E": F3.exp(1), "F": Fraction(2, 3) * F3.exp(-1)},
                       name="N2 in F3")
    F4 = LatticeAlgebra(4, "phi4")
    p4 = F4.phi()
    w_leg = Embedding(wsl4sub(Fraction(-7, 3)), F4,
                      {"J": Fraction(1, 4) * p4, "L": Fraction(1, 8) * (p4 @ p4),
                       "G+": F4.exp(1), "G-": Fraction(-1, 9) * F4.exp(-1), "W": F4.zero()},
                      name="W in F4")
    return {"n2": n2_leg, "wsl4sub": w_leg}
