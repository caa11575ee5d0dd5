"""Rank-one lattice vertex superalgebras and Heisenberg algebras.

A basis state is ``(m, parts)``: the sector ``e^{m phi}`` dressed by the
creation modes ``phi(-j)`` for ``j`` in ``parts`` (a non-increasing tuple).
With ``q = <phi, phi>`` the weight is ``q m^2/2 + sum(parts)`` and the
parity is ``q m^2 mod 2``.

Vertex operators of sector states come from the closed formula

    Y(e^{m phi}, z) = eps(m, l) e_m z^{q m phi(0)} E^-(z) E^+(z)

where ``E^+(z)`` acts on a Fock polynomial as the shift
``phi(-j) -> phi(-j) - m q z^{-j}`` and ``E^-(z) = exp(m sum_j phi(-j) z^j / j)``.
States carrying Heisenberg dressing are peeled one ``phi(-j)`` at a time
with the Borcherds normal-ordering identity. The table-driven engine in
:mod:`voa.modes` is never used here: sector weights can be negative.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .algebra import Expr, Generator, PresentationError
from .modes import add_into, binom, scale
from .scalar import ONE, Scalar, as_scalar

__all__ = ["LatticeAlgebra", "lattice_preset", "cocycle", "delta_twist"]


def cocycle(q: int, m: int, n: int) -> int:
    """Sign ``eps(m phi, n phi)`` in ``e_m e_n = eps(m, n) e_{m+n}``.

    For a rank-one lattice with odd ``q`` the commutator factor
    ``(-1)^{q m n + q^2 m^2 n^2}`` is trivial, so the trivial cocycle works.
    Even ``q`` also needs no sign. Kept as a function so the Jacobi suite
    can test alternatives.
    """
    return 1


@lru_cache(maxsize=None)
def _partitions(t: int, maxpart: int | None = None) -> tuple:
    """Partitions of ``t`` as non-increasing tuples."""
    if maxpart is None:
        maxpart = t
    if t == 0:
        return ((),)
    out = []
    for p in range(min(t, maxpart), 0, -1):
        for rest in _partitions(t - p, p):
            out.append((p,) + rest)
    return tuple(out)


def _sorted_parts(parts) -> tuple:
    return tuple(sorted(parts, reverse=True))


class LatticeAlgebra:
    """The lattice superalgebra of ``Z phi`` with ``<phi, phi> = q``.

    ``sectors=False`` keeps only the Heisenberg vacuum module (then ``q``
    may be any Scalar, the level). ``boson`` names the Heisenberg field.
    """

    def __init__(self, q=1, boson: str = "phi", sectors: bool = True, name: str | None = None):
        self.q = as_scalar(q)
        self.sectors = sectors
        if sectors:
            qf = self.q.to_fraction()
            if qf.denominator != 1 or qf == 0:
                raise PresentationError("lattice norm must be a nonzero integer")
            self.qi = int(qf)
        else:
            self.qi = None
        self.boson = boson
        self.name = name or (f"F{'+' if self.qi > 0 else ''}{self.qi}" if sectors
                             else f"Heis({self.q})")
        gens = [Generator(boson, 0, Fraction(1))]
        if sectors:
            w = Fraction(self.qi, 2)
            par = self.qi % 2
            gens = [Generator(f"e^{{{boson}}}", par, w, ((boson, Fraction(1)),)),
                    Generator(f"e^{{-{boson}}}", par, w, ((boson, Fraction(-1)),))]
        self.generators = tuple(gens)
        self.parameters = tuple(self.q.parameters)
        self.metadata = {"norm": str(self.q)}
        self.fields = {}
        self.ideal = []
        self._mode_cache: dict = {}

    vacuum_key = (0, ())

    # -- states -------------------------------------------------------

    def state(self, m: int = 0, parts=()) -> Expr:
        """``phi(-j1) ... phi(-jr) e^{m phi}`` as an expression."""
        if m and not self.sectors:
            raise PresentationError(f"{self.name} has no lattice sectors")
        return Expr(self, {(int(m), _sorted_parts(parts)): ONE})

    @property
    def one(self) -> Expr:
        return self.state()

    def phi(self) -> Expr:
        return self.state(0, (1,))

    def exp(self, m: int) -> Expr:
        return self.state(m)

    def gen(self, name: str) -> Expr:
        if name == self.boson:
            return self.phi()
        if self.sectors:
            if name == f"e^{{{self.boson}}}":
                return self.exp(1)
            if name == f"e^{{-{self.boson}}}":
                return self.exp(-1)
        raise PresentationError(f"unknown generator {name!r} in {self.name}")

    def field(self, name: str) -> Expr:
        return self.gen(name)

    def zero(self) -> Expr:
        return Expr(self, {})

    def mono_weight(self, mono) -> Fraction:
        m, parts = mono
        w = Fraction(sum(parts))
        if m:
            w += Fraction(self.qi * m * m, 2)
        return w

    def mono_parity(self, mono) -> int:
        m = mono[0]
        return (self.qi * m * m) % 2 if m else 0

    def mono_charge(self, mono, grading=None) -> Fraction:
        """Lattice sector, the charge under the grading named after the boson."""
        if grading not in (None, self.boson):
            return Fraction(0)
        return Fraction(mono[0])

    def min_weight(self, sector: int) -> Fraction:
        return Fraction(self.qi * sector * sector, 2) if sector else Fraction(0)

    def max_product(self, u, X) -> int:
        s = u[0] + X[0]
        return math.floor(self.mono_weight(u) + self.mono_weight(X) - 1 - self.min_weight(s))

    def format_mono(self, mono) -> tuple[Fraction, str]:
        m, parts = mono
        f = Fraction(1)
        out = []
        for j in parts:
            out.append(self.boson if j == 1 else f"d^{j - 1}({self.boson})")
            f /= math.factorial(j - 1)
        if m:
            out.append(f"e^{{{m} {self.boson}}}")
        if not out:
            return f, "|0>"
        if len(out) == 1:
            return f, out[0]
        return f, ":(" + " ".join(out) + ")"

    # -- Heisenberg modes ---------------------------------------------

    def heis(self, n: int, X) -> dict:
        """``phi(n) X`` on a basis state."""
        m, parts = X
        if n < 0:
            return {(m, _sorted_parts(parts + (-n,))): ONE}
        if n == 0:
            v = self.q * m
            return {X: v} if v else {}
        cnt = parts.count(n)
        if not cnt:
            return {}
        i = parts.index(n)
        return {(m, parts[:i] + parts[i + 1:]): self.q * (n * cnt)}

    def heis_terms(self, n: int, terms: dict) -> dict:
        out = {}
        for X, c in terms.items():
            add_into(out, self.heis(n, X), c)
        return out

    # -- vertex operators ---------------------------------------------

    def _exp_mode(self, m: int, r: int, X) -> dict:
        """``(e^{m phi})_(r) X``."""
        l, parts = X
        q = self.qi
        shift = q * m * l
        # E^+: phi(-j)^k -> (phi(-j) - m q z^{-j})^k, collect by total z-degree -s
        plus = {((), 0): Fraction(1)}
        for j, k in Counter(parts).items():
            nxt = {}
            for (mono, d0), c in plus.items():
                for a in range(0, k + 1):
                    key = (mono + (j,) * (k - a), d0 + j * a)
                    nxt[key] = nxt.get(key, 0) + c * binom(k, a) * Fraction(-m * q) ** a
            plus = {key: c for key, c in nxt.items() if c}
        out = {}
        eps = cocycle(q, m, l)
        for (mono, s), c in plus.items():
            t = -r - 1 - shift + s
            if t < 0:
                continue
            for lam in _partitions(t):
                mult = Counter(lam)
                coef = Fraction(1)
                for j, a in mult.items():
                    coef *= Fraction(m, j) ** a / math.factorial(a)
                key = (l + m, _sorted_parts(mono + lam))
                v = out.get(key, Fraction(0)) + c * coef * eps
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return {k: Scalar(v) for k, v in out.items()}

    def mono_mode(self, u, r: int, X) -> dict:
        """``u_(r) X`` for basis states."""
        ck = (u, r, X)
        res = self._mode_cache.get(ck)
        if res is None:
            res = self._mono_mode(u, r, X)
            self._mode_cache[ck] = res
        return res

    def _mono_mode(self, u, r, X):
        mu, parts = u
        if r > self.max_product(u, X):
            return {}
        if not parts:
            if mu == 0:
                return {X: ONE} if r == -1 else {}
            return self._exp_mode(mu, r, X)
        p = parts[0]
        v = (mu, parts[1:])
        out = {}
        # (phi_(-p) v)_(r) = sum_i (-1)^i C(-p,i) [phi_(-p-i) v_(r+i) - (-1)^p v_(-p+r-i) phi_(i)]
        i = 0
        while r + i <= self.max_product(v, X):
            b = binom(-p, i) * (-1 if i % 2 else 1)
            for Y, c in self.mono_mode(v, r + i, X).items():
                add_into(out, self.heis(-p - i, Y), c * b)
            i += 1
        top = max(X[1], default=0)
        sgn = -(-1 if p % 2 else 1)
        for i in range(0, top + 1):
            b = binom(-p, i) * (-1 if i % 2 else 1) * sgn
            for Y, c in self.heis(i, X).items():
                add_into(out, self.mono_mode(v, -p + r - i, Y), c * b)
        return out

    def nth_terms(self, a: dict, b: dict, n: int) -> dict:
        out = {}
        for u, cu in a.items():
            for X, cx in b.items():
                add_into(out, self.mono_mode(u, n, X), cu * cx)
        return out

    def deriv_terms(self, a: dict) -> dict:
        return self.nth_terms(a, {self.vacuum_key: ONE}, -2)

    def __repr__(self):
        return f"LatticeAlgebra({self.name!r})"


def lattice_preset(name: str) -> LatticeAlgebra:
    """``F+1``, ``F-1`` or ``Heis(<level>)``."""
    from .scalar import parse_scalar

    if name in ("F+1", "F1"):
        return LatticeAlgebra(1, "phi+", name="F+1")
    if name == "F-1":
        return LatticeAlgebra(-1, "phi-", name="F-1")
    if name.startswith("Heis(") and name.endswith(")"):
        return LatticeAlgebra(parse_scalar(name[5:-1]), "a", sectors=False, name=name)
    raise PresentationError(f"unknown lattice preset {name!r}")


def delta_twist(P, v: str, amount):
    """Mode map of ``Y(Delta(-amount v, z) . , z)`` for a Heisenberg-like generator ``v``.

    See :class:`voa.flowzhu.SpectralFlow`.
    """
    from .flowzhu import SpectralFlow

    return SpectralFlow(P, v, amount)
