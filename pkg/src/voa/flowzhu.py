"""Zhu algebra projections and spectral-flow automorphisms.

Zhu algebra. States are projected to ordered words in the classes of the
even generators. Degrees are the declared generator weights (the shifted
grading), and the rules are:

* ``[a_(-1) v] = [a] * [v] - sum_{i>=1} C(wt a, i) [a_(i-1) v]``;
* ``a_(-2-m) v = - sum_{i>=1} C(wt a, i) a_(i-2-m) v`` modulo ``O(V)``;
* for odd ``a`` of half-integral weight,
  ``a_(-1-m) v = - sum_{i>=1} C(wt a - 1/2, i) a_(i-1-m) v`` modulo ``O(V)``;
* ``[a] * [b] - [b] * [a] = sum_j C(wt a - 1, j) [a_(j) b]`` straightens words.

Spectral flow. ``Delta(-a v, z)`` for a Heisenberg-like ``v`` twists modes:
``u_(r) -> sum_s (D_s u)_(r - a h_u - s)`` where ``h_u`` is the ``v_(0)``
charge of ``u`` and ``D_s u`` is the ``z^{-s}`` part of
``exp(sum_k (-1)^{k+1} (-a) v_(k) / (k z^k)) u``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .algebra import AlgebraPresentation, Expr, PresentationError
from .modes import add_into, binom
from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "ZhuAlgebra",
    "ZhuPolynomial",
    "zhu_star",
    "zhu_project",
    "zhu_commutator",
    "SpectralFlow",
    "spectral_flow",
    "ModeOp",
    "printed_sigma",
    "PrintedSigma",
    "bracket_op",
    "automorphism_defects",
    "composition_defects",
]


class ZhuPolynomial:
    """Noncommutative polynomial in generator classes, in straightened form."""

    __slots__ = ("zhu", "terms")

    def __init__(self, zhu: "ZhuAlgebra", terms: dict):
        self.zhu = zhu
        self.terms = terms

    def __add__(self, other):
        other = self.zhu.coerce(other)
        t = dict(self.terms)
        add_into(t, other.terms)
        return ZhuPolynomial(self.zhu, t)

    __radd__ = __add__

    def __neg__(self):
        return ZhuPolynomial(self.zhu, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.zhu.coerce(other))

    def __rsub__(self, other):
        return self.zhu.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, ZhuPolynomial):
            return ZhuPolynomial(self.zhu, self.zhu.mul(self.terms, other.terms))
        c = as_scalar(other)
        return ZhuPolynomial(self.zhu, {w: v * c for w, v in self.terms.items()} if c else {})

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        return reduce(lambda a, b: a * b, [self] * n, self.zhu.one)

    def __eq__(self, other):
        if isinstance(other, (ZhuPolynomial, int, Fraction, Scalar)):
            return not (self - other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def evaluate(self, values) -> Scalar:
        """Substitute commuting values ``{name: scalar}`` for the classes."""
        names = self.zhu.names
        out = Scalar(0)
        for w, c in self.terms.items():
            t = c
            for g in w:
                t = t * as_scalar(values[names[g]])
            out = out + t
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.zhu.names
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = []
            i = 0
            while i < len(w):
                j = i
                while j < len(w) and w[j] == w[i]:
                    j += 1
                p = j - i
                mono.append(f"[{names[w[i]]}]" + (f"^{p}" if p > 1 else ""))
                i = j
            txt = "".join(mono)
            if not txt:
                parts.append(f"{c}")
            elif c == 1:
                parts.append(txt)
            else:
                parts.append(f"({c})*{txt}")
        return " + ".join(parts)

    __repr__ = __str__


class ZhuAlgebra:
    """Zhu algebra of a presentation graded by its declared weights."""

    def __init__(self, P: AlgebraPresentation):
        self.P = P
        self.names = [g.name for g in P.generators]
        for g in P.generators:
            if g.parity and g.weight.denominator != 2:
                raise PresentationError(f"odd generator {g.name} needs half-integral weight")
            if not g.parity and g.weight.denominator != 1:
                raise PresentationError(f"even generator {g.name} needs integral weight")
        self._proj: dict = {}
        self._norm: dict = {}

    @property
    def one(self) -> ZhuPolynomial:
        return ZhuPolynomial(self, {(): ONE})

    def coerce(self, x) -> ZhuPolynomial:
        if isinstance(x, ZhuPolynomial):
            return x
        c = as_scalar(x)
        return ZhuPolynomial(self, {(): c} if c else {})

    def gen(self, name: str) -> ZhuPolynomial:
        return self.project(self.P.gen(name))

    # -- straightening ------------------------------------------------

    def _rank(self, g):
        return self.P.rank[g]

    def mul(self, a: dict, b: dict) -> dict:
        out = {}
        for u, cu in a.items():
            for v, cv in b.items():
                add_into(out, self.normal(u + v), cu * cv)
        return out

    def normal(self, word: tuple) -> dict:
        r = self._norm.get(word)
        if r is not None:
            return r
        for i in range(len(word) - 1):
            b, a = word[i], word[i + 1]
            if self._rank(b) > self._rank(a):
                # [b][a] = [a][b] - sum_j C(wt a - 1, j) [a_(j) b]
                swapped = self.normal(word[:i] + (a, b) + word[i + 2:])
                out = dict(swapped)
                corr = self._commutator_state(a, b)
                if corr:
                    pre = {word[:i]: ONE}
                    post = {word[i + 2:]: ONE}
                    add_into(out, self.mul(self.mul(pre, corr), post), -ONE)
                break
        else:
            out = {word: ONE}
        self._norm[word] = out
        return out

    def _commutator_state(self, a: int, b: int) -> dict:
        P = self.P
        wa = P.generators[a].weight
        eng = P.vacuum
        out = {}
        A = ((a, -1),)
        B = ((b, -1),)
        j = 0
        while wa + P.generators[b].weight - j - 1 >= 0:
            c = binom(int(wa) - 1, j)
            if c:
                st = eng.mono_mode(A, j, B)
                if st:
                    add_into(out, self.project_terms(st), Scalar(c))
            j += 1
        return out

    # -- projection ---------------------------------------------------

    def project_terms(self, terms: dict) -> dict:
        out = {}
        for m, c in terms.items():
            add_into(out, self._project_mono(m), c)
        return out

    def _project_mono(self, u: tuple) -> dict:
        r = self._proj.get(u)
        if r is not None:
            return r
        r = self._project(u)
        self._proj[u] = r
        return r

    def _project(self, u):
        if not u:
            return {(): ONE}
        P = self.P
        eng = P.vacuum
        a, n0 = u[0]
        v = u[1:]
        ga = P.generators[a]
        out = {}
        if ga.parity:
            # a_(-1-m) v ~ -sum_{i>=1} C(wt a - 1/2, i) a_(i-1-m) v
            h = int(ga.weight - Fraction(1, 2))
            m = -1 - n0
            for i in range(1, h + 1):
                st = eng.act(a, i - 1 - m, v)
                if st:
                    add_into(out, self.project_terms(st), Scalar(-binom(h, i)))
            return out
        w = int(ga.weight)
        if n0 == -1:
            out = self.mul({(a,): ONE}, self._project_mono(v))
            for i in range(1, w + 1):
                st = eng.act(a, i - 1, v)
                if st:
                    add_into(out, self.project_terms(st), Scalar(-binom(w, i)))
            return out
        m = -2 - n0
        for i in range(1, w + 1):
            st = eng.act(a, i - 2 - m, v)
            if st:
                add_into(out, self.project_terms(st), Scalar(-binom(w, i)))
        return out

    def project(self, A: Expr) -> ZhuPolynomial:
        if A.algebra is not self.P:
            raise PresentationError("expression lives in a different algebra")
        if A.terms:
            ws = {self.P.vacuum_weight(m) for m in A.terms}
            if len(ws) > 1:
                raise PresentationError("Zhu projection needs a homogeneous expression")
        return ZhuPolynomial(self, self.project_terms(A.terms))

    def star_state(self, A: Expr, B: Expr) -> Expr:
        """``a * b = Res_z (1+z)^{wt a} z^{-1} Y(a,z) b`` as a state."""
        wa = A.weight()
        if wa.denominator != 1:
            raise PresentationError("star product needs an even, integral-weight left factor")
        out = {}
        for i in range(0, int(wa) + 1):
            add_into(out, A.nth(B, i - 1).terms, Scalar(binom(int(wa), i)))
        return Expr(self.P, out)

    def commutator_state(self, A: Expr, B: Expr) -> Expr:
        """``Res_z (1+z)^{wt a - 1} Y(a,z) b``, the state of ``[a]*[b] - [b]*[a]``."""
        wa = A.weight()
        out = {}
        for j in range(0, int(wa + B.weight())):
            c = binom(int(wa) - 1, j)
            if c:
                add_into(out, A.nth(B, j).terms, Scalar(c))
        return Expr(self.P, out)


def _zhu(P) -> ZhuAlgebra:
    z = P.__dict__.get("_zhu")
    if z is None:
        z = ZhuAlgebra(P)
        P.__dict__["_zhu"] = z
    return z


def zhu_project(A: Expr) -> ZhuPolynomial:
    return _zhu(A.algebra).project(A)


def zhu_star(A: Expr, B: Expr) -> ZhuPolynomial:
    """``[A] * [B]`` reduced to normal form."""
    Z = _zhu(A.algebra)
    return Z.project(A) * Z.project(B)


def zhu_commutator(A: Expr, B: Expr) -> ZhuPolynomial:
    Z = _zhu(A.algebra)
    a, b = Z.project(A), Z.project(B)
    return a * b - b * a


# -- spectral flow ---------------------------------------------------------


class ModeOp:
    """Finite sum ``sum c * u_(p)`` of modes of vacuum monomials ``u``.

    The identity operator is ``((), -1)``.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: dict):
        self.algebra = algebra
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def mode(cls, P, name: str, r: int) -> "ModeOp":
        return cls(P, {(((P.index[name], -1),), r): ONE})

    def __add__(self, other):
        t = dict(self.terms)
        add_into(t, other.terms)
        return ModeOp(self.algebra, t)

    def __mul__(self, c):
        c = as_scalar(c)
        return ModeOp(self.algebra, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def act(self, module, state: dict) -> dict:
        """Apply to a module state (``{mono: Scalar}``) of a module engine."""
        eng = module.engine if hasattr(module, "engine") else module
        out = {}
        for (u, p), c in self.terms.items():
            add_into(out, eng.state_mode({u: ONE}, p, state), c)
        return out

    def __str__(self):
        P = self.algebra
        parts = []
        for (u, p), c in sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), repr(kv[0]))):
            if not u:
                parts.append(f"({c})*1")
                continue
            f, txt = P.format_mono(u)
            parts.append(f"({c * Scalar(f)})*[{txt}]_({p})")
        return " + ".join(parts) or "0"


class SpectralFlow:
    """The ``Delta(-amount * v, z)`` twist of mode operators."""

    def __init__(self, P: AlgebraPresentation, v: str, amount):
        self.P = P
        self.v = P.index[v]
        self.grading = v
        self.amount = as_scalar(amount)
        if not (self.amount.is_constant() and self.amount.to_fraction().denominator == 1):
            raise PresentationError("spectral flow amount must be an integer")
        self.a = int(self.amount.to_fraction())
        vv = ((self.v, -1),)
        for n in range(2, 6):
            if P.vacuum.mono_mode(vv, n, vv):
                raise PresentationError(f"{v} is not Heisenberg-like")
        self._cache: dict = {}

    def _charge(self, u) -> int:
        c = self.P.mono_charge(u, self.grading)
        if c.denominator != 1:
            raise PresentationError("non-integral charge under the flow field")
        return int(c)

    def delta_parts(self, u: tuple) -> dict:
        """``{s: D_s u}`` with ``D_s`` the ``z^{-s}`` part of the exponential."""
        got = self._cache.get(u)
        if got is not None:
            return got
        P = self.P
        eng = P.vacuum
        w = P.vacuum_weight(u)
        smax = int(w)
        # X = sum_k x_k z^{-k} with x_k = (-1)^{k+1} (-a) v_(k) / k
        parts = {0: {u: ONE}}
        power = {0: {u: ONE}}       # X^p / p!, accumulated by z-degree
        for p in range(1, smax + 1):
            nxt = {}
            for s, st in power.items():
                for k in range(1, smax - s + 1):
                    coef = Scalar(Fraction((-1) ** (k + 1) * (-self.a), k * p))
                    if coef.is_zero():
                        continue
                    img = {}
                    for m, c in st.items():
                        add_into(img, eng.act(self.v, k, m), c)
                    if img:
                        add_into(nxt.setdefault(s + k, {}), img, coef)
            power = {s: t for s, t in nxt.items() if t}
            if not power:
                break
            for s, t in power.items():
                add_into(parts.setdefault(s, {}), t)
        parts = {s: t for s, t in parts.items() if t}
        self._cache[u] = parts
        return parts

    def image_mono(self, u: tuple, r: int) -> ModeOp:
        """Flow image of the mode ``u_(r)``."""
        if not u:
            return ModeOp(self.P, {((), r): ONE} if r == -1 else {})
        h = self._charge(u)
        out = {}
        for s, st in self.delta_parts(u).items():
            p = r - self.a * h - s
            for m, c in st.items():
                key = (m, p)
                if m == ():
                    if p != -1:
                        continue
                add_into(out, {key: c})
        return ModeOp(self.P, out)

    def image(self, op: ModeOp) -> ModeOp:
        out = {}
        for (u, r), c in op.terms.items():
            add_into(out, self.image_mono(u, r).terms, c)
        return ModeOp(self.P, out)

    def generator(self, name: str, r: int) -> ModeOp:
        return self.image_mono(((self.P.index[name], -1),), r)


def spectral_flow(P: AlgebraPresentation, amount) -> SpectralFlow:
    """``sigma^amount`` on ``n2`` (twist by ``H``) or ``psi^amount`` on ``wsl4sub`` (by ``J``)."""
    if "H" in P.index and "E" in P.index:
        return SpectralFlow(P, "H", amount)
    if "J" in P.index and "G+" in P.index:
        return SpectralFlow(P, "J", amount)
    raise PresentationError(f"no spectral flow known for {P.name}")


def printed_sigma(P: AlgebraPresentation, l: int, name: str, r: int) -> ModeOp:
    """The N=2 flow with the printed sign ``H(n) + (l c/3) delta``, for comparison."""
    from .scalar import parse_scalar

    c = parse_scalar(P.metadata["central_charge"])
    i = P.index
    one = lambda v: {((), -1): v}
    if name == "H":
        t = {(((i["H"], -1),), r): ONE}
        if r == 0:
            t.update(one(c * l / 3))
        return ModeOp(P, t)
    if name == "T":
        t = {(((i["T"], -1),), r): ONE}
        add_into(t, {(((i["H"], -1),), r - 1): Scalar(-l)})
        if r == 1:
            add_into(t, one(c * l * l / 6))
        return ModeOp(P, t)
    if name == "E":
        return ModeOp(P, {(((i["E"], -1),), r - l): ONE})
    if name == "F":
        return ModeOp(P, {(((i["F"], -1),), r + l): ONE})
    raise PresentationError(f"unknown generator {name}")


def bracket_op(P, a: str, r: int, b: str, s: int) -> ModeOp:
    """``[a_(r), b_(s)] = sum_j C(r, j) (a_(j) b)_(r + s - j)`` as a :class:`ModeOp`."""
    A, B = P.gen(a), P.gen(b)
    out = {}
    j = 0
    top = P.max_product(next(iter(A.terms)), next(iter(B.terms)))
    while j <= top:
        c = binom(r, j)
        if c:
            for u, cu in A.nth(B, j).terms.items():
                add_into(out, {(u, r + s - j): cu * Scalar(c)})
        j += 1
    return ModeOp(P, out)


def _act(op: ModeOp, module, terms: dict) -> dict:
    return op.act(module, terms)


def automorphism_defects(flow, module, modes, states) -> list:
    """Pairs of modes whose flowed bracket differs from the bracket of the flows.

    Both sides act on every state in ``states`` of ``module``.
    """
    P = flow.P
    bad = []
    for i, (a, r) in enumerate(modes):
        for b, s in modes[i:]:
            eps = -1 if (P.generators[P.index[a]].parity and P.generators[P.index[b]].parity) else 1
            fa, fb = flow.generator(a, r), flow.generator(b, s)
            rhs = flow.image(bracket_op(P, a, r, b, s))
            for v in states:
                lhs = _act(fa, module, _act(fb, module, v))
                add_into(lhs, _act(fb, module, _act(fa, module, v)), Scalar(-eps))
                add_into(lhs, _act(rhs, module, v), -ONE)
                if lhs:
                    bad.append(((a, r), (b, s)))
                    break
    return bad


def composition_defects(P, l: int, m: int, modes, module=None, states=()) -> list:
    """Modes where ``flow^l(flow^m(x)) != flow^(l+m)(x)``."""
    fl, fm, flm = spectral_flow(P, l), spectral_flow(P, m), spectral_flow(P, l + m)
    bad = []
    for a, r in modes:
        lhs = fl.image(fm.generator(a, r))
        rhs = flm.generator(a, r)
        if lhs.terms == rhs.terms:
            continue
        if module is not None and all(_act(lhs, module, v) == _act(rhs, module, v) for v in states):
            continue
        bad.append((a, r))
    return bad


class PrintedSigma:
    """``printed_sigma`` extended to modes of derivatives, in the flow interface."""

    def __init__(self, P: AlgebraPresentation, l: int):
        self.P, self.l = P, l

    def generator(self, name: str, r: int) -> ModeOp:
        return printed_sigma(self.P, self.l, name, r)

    def image(self, op: ModeOp) -> ModeOp:
        # (d^(j) a)_(p) = (-1)^j C(p, j) a_(p-j)
        out = {}
        for (u, p), c in op.terms.items():
            if not u:
                add_into(out, {(u, p): c})
                continue
            if len(u) != 1:
                raise PresentationError("printed flow is only defined on generator modes")
            g, n = u[0]
            j = -1 - n
            f = (-1) ** j * binom(p, j)
            if f:
                add_into(out, self.generator(self.P.generators[g].name, p - j).terms, c * Scalar(f))
        return ModeOp(self.P, out)
