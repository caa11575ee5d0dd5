"""Generators, OPE tables and the normal-ordered expression type."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping

from .modes import ModeEngine, add_into, binom, scale
from .scalar import ONE, Scalar, as_scalar

__all__ = [
    "Generator",
    "AlgebraPresentation",
    "Expr",
    "PresentationError",
    "nth_product",
    "normally_ordered",
    "lambda_bracket",
]


class PresentationError(ValueError):
    """An OPE table entry is malformed or violates a structural rule."""


@dataclass(frozen=True)
class Generator:
    name: str
    parity: int = 0
    weight: Fraction = Fraction(1)
    charges: tuple = ()

    def charge(self, grading: str) -> Fraction:
        return dict(self.charges).get(grading, Fraction(0))


def _frac(x) -> Fraction:
    if isinstance(x, Scalar):
        return x.to_fraction()
    return Fraction(x)


class AlgebraPresentation:
    """A freely generated vertex superalgebra given by its OPE table.

    ``ope`` maps ordered generator-name pairs to ``{n: Expr | terms}`` for
    the non-negative products ``a_(n) b``. Missing ordered pairs are
    obtained by skew-symmetry; pairs missing in both orders commute.
    Table entries may be supplied lazily through :meth:`set_ope` because
    they are expressions in the algebra being defined.
    """

    def __init__(self, name: str, generators: Iterable[Generator],
                 parameters: Iterable[str] = (), grading: str | None = None,
                 metadata: Mapping | None = None):
        self.name = name
        self.generators = tuple(generators)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise PresentationError(f"duplicate generator names {dup}")
        self.index = {g.name: i for i, g in enumerate(self.generators)}
        order = sorted(range(len(names)),
                       key=lambda i: (self.generators[i].weight, names[i]))
        self.rank = tuple(order.index(i) for i in range(len(names)))
        self.parameters = tuple(parameters)
        self.grading = grading
        self.table: dict = {}
        self.ideal: list = []
        self.fields: dict = {}
        self.metadata = dict(metadata or {})
        self._comm_cache: dict = {}

    # -- construction -------------------------------------------------

    def set_ope(self, a: str, b: str, products: Mapping[int, object]) -> None:
        ia, ib = self._idx(a), self._idx(b)
        entry = {}
        for n, v in products.items():
            if n < 0:
                raise PresentationError(f"ope {a} {b}: product index {n} < 0")
            terms = v.terms if isinstance(v, Expr) else dict(v)
            if terms:
                entry[int(n)] = terms
        self.table[(ia, ib)] = entry
        self._comm_cache.clear()
        self.__dict__.pop("vacuum", None)

    def _idx(self, name):
        try:
            return self.index[name]
        except KeyError:
            raise PresentationError(f"unknown generator {name!r} in {self.name}") from None

    # -- expressions --------------------------------------------------

    def gen(self, name: str) -> "Expr":
        return Expr(self, {((self._idx(name), -1),): ONE})

    def gens(self, names: str | Iterable[str] | None = None):
        if names is None:
            names = [g.name for g in self.generators]
        elif isinstance(names, str):
            names = names.split()
        return tuple(self.gen(n) for n in names)

    @property
    def one(self) -> "Expr":
        return Expr(self, {(): ONE})

    def zero(self) -> "Expr":
        return Expr(self, {})

    def scalar(self, c) -> "Expr":
        return Expr(self, {(): as_scalar(c)} if as_scalar(c) else {})

    # -- structure used by the engine ---------------------------------

    def commutator_terms(self, a, m, b, n):
        """Terms ``(j, state, p, coeff)`` with ``[a_(m), b_(n)] = sum coeff*state_(p)``."""
        key = (a, m, b, n)
        r = self._comm_cache.get(key)
        if r is not None:
            return r
        out = []
        if (a, b) in self.table and not ((b, a) in self.table and self.rank[b] < self.rank[a]):
            for j, st in self.table[(a, b)].items():
                c = binom(m, j)
                if c:
                    out.append((j, st, m + n - j, as_scalar(c)))
        elif (b, a) in self.table:
            eps = -1 if (self.generators[a].parity and self.generators[b].parity) else 1
            for j, st in self.table[(b, a)].items():
                c = binom(n, j)
                if c:
                    out.append((j, st, m + n - j, as_scalar(-eps * c)))
        self._comm_cache[key] = out
        return out

    def vacuum_weight(self, mono) -> Fraction:
        w = Fraction(0)
        for g, m in mono:
            w += self.generators[g].weight - m - 1
        return w

    def vacuum_parity(self, mono) -> int:
        p = 0
        for g, _ in mono:
            p ^= self.generators[g].parity
        return p

    def mono_charge(self, mono, grading) -> Fraction:
        return sum((self.generators[g].charge(grading) for g, _ in mono), Fraction(0))

    @cached_property
    def vacuum(self) -> ModeEngine:
        return ModeEngine(self)

    # -- VA interface shared with lattice/tensor algebras -------------

    vacuum_key = ()

    def max_product(self, u, X) -> int:
        """Largest ``r`` for which ``u_(r) X`` can be nonzero (basis monomials)."""
        return math.floor(self.vacuum_weight(u) + self.vacuum_weight(X) - 1)

    def nth_terms(self, a: dict, b: dict, n: int) -> dict:
        return self.vacuum.state_mode(a, n, b)

    def deriv_terms(self, a: dict) -> dict:
        out = {}
        eng = self.vacuum
        for mono, c in a.items():
            for i, (g, m) in enumerate(mono):
                # [d, g_(m)] = -m g_(m-1)
                modes = mono[:i] + ((g, m - 1),) + mono[i + 1:]
                add_into(out, eng.ordered(modes), c * (-m))
        return out

    def mono_weight(self, mono):
        return self.vacuum_weight(mono)

    def mono_parity(self, mono):
        return self.vacuum_parity(mono)

    def format_mono(self, mono) -> tuple[Fraction, str]:
        """Return ``(factor, text)`` with ``mono = factor * text``."""
        if not mono:
            return Fraction(1), "|0>"
        parts = []
        f = Fraction(1)
        for g, m in mono:
            j = -1 - m
            nm = self.generators[g].name
            parts.append(nm if j == 0 else f"d^{j}({nm})")
            f /= math.factorial(j)
        if len(parts) == 1:
            return f, parts[0]
        return f, ":(" + " ".join(parts) + ")"

    # -- derived presentations ----------------------------------------

    def specialize(self, bindings=None, **kw) -> "AlgebraPresentation":
        """A copy with parameters bound to rational values."""
        b = dict(bindings or {})
        b.update(kw)
        P = AlgebraPresentation(
            self.name, self.generators,
            [p for p in self.parameters if p not in b], self.grading,
            {**self.metadata, "specialized": {**self.metadata.get("specialized", {}), **{k: str(v) for k, v in b.items()}}})
        for key, entry in self.table.items():
            P.table[key] = {n: _spec_terms(t, b) for n, t in entry.items()}
            P.table[key] = {n: t for n, t in P.table[key].items() if t}
        P.ideal = [Expr(P, _spec_terms(e.terms, b)) for e in self.ideal]
        P.fields = {k: Expr(P, _spec_terms(e.terms, b)) for k, e in self.fields.items()}
        return P

    def with_ideal(self, exprs) -> "AlgebraPresentation":
        P = self.copy()
        P.ideal = [Expr(P, e.terms) for e in exprs]
        return P

    def copy(self, name=None) -> "AlgebraPresentation":
        P = AlgebraPresentation(name or self.name, self.generators, self.parameters,
                                self.grading, self.metadata)
        P.table = {k: dict(v) for k, v in self.table.items()}
        P.ideal = [Expr(P, e.terms) for e in self.ideal]
        P.fields = {k: Expr(P, e.terms) for k, e in self.fields.items()}
        return P

    def field(self, name: str) -> "Expr":
        if name in self.index:
            return self.gen(name)
        return self.fields[name]

    def ope(self, a: str, b: str) -> dict:
        """Non-negative products ``a_(n) b`` as ``{n: Expr}``."""
        return lambda_bracket(self.gen(a), self.gen(b))

    def __repr__(self):
        return f"AlgebraPresentation({self.name!r}, {[g.name for g in self.generators]})"


def _spec_terms(terms, b):
    out = {}
    for m, c in terms.items():
        v = c.specialize(b)
        if v:
            out[m] = v
    return out


class Expr:
    """A finite linear combination of canonical normal-ordered monomials.

    Works over any algebra object implementing ``nth_terms``,
    ``deriv_terms``, ``mono_weight``, ``mono_parity`` and ``format_mono``.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _coerce(self, other) -> "Expr":
        if isinstance(other, Expr):
            if other.algebra is not self.algebra:
                raise PresentationError("expressions live in different algebras")
            return other
        c = as_scalar(other)
        return Expr(self.algebra, {self.algebra.vacuum_key: c} if c else {})

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        add_into(t, o.terms)
        return Expr(self.algebra, t)

    __radd__ = __add__

    def __neg__(self):
        return Expr(self.algebra, scale(self.terms, -1))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, c):
        if isinstance(c, Expr):
            return NotImplemented
        return Expr(self.algebra, scale(self.terms, c))

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (ONE / as_scalar(c))

    def __matmul__(self, other):
        """``A @ B`` is the normally ordered product ``:AB:``."""
        return normally_ordered(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)) or isinstance(other, Expr):
            return not (self - other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def nth(self, other: "Expr", n: int) -> "Expr":
        return nth_product(self, other, n)

    def d(self, j: int = 1) -> "Expr":
        t = self.terms
        for _ in range(j):
            t = self.algebra.deriv_terms(t)
        return Expr(self.algebra, t)

    def specialize(self, bindings=None, **kw) -> "Expr":
        b = dict(bindings or {})
        b.update(kw)
        return Expr(self.algebra, _spec_terms(self.terms, b))

    def weights(self) -> set:
        return {self.algebra.mono_weight(m) for m in self.terms}

    def weight(self) -> Fraction:
        ws = self.weights()
        if len(ws) != 1:
            raise PresentationError(f"expression is not homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def parity(self) -> int:
        ps = {self.algebra.mono_parity(m) for m in self.terms}
        if len(ps) > 1:
            raise PresentationError("expression has mixed parity")
        return ps.pop() if ps else 0

    def coefficient(self, mono) -> Scalar:
        from .scalar import ZERO
        return self.terms.get(mono, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for mono in sorted(self.terms, key=_mono_sort_key):
            f, txt = self.algebra.format_mono(mono)
            c = self.terms[mono] * Scalar(f)
            out.append(txt if c == 1 else f"({c})*{txt}")
        return " + ".join(out)

    def __repr__(self):
        return f"Expr({self})"


def _mono_sort_key(mono):
    return (len(mono), repr(mono))


def nth_product(A: Expr, B: Expr, n: int) -> Expr:
    """``A_(n) B`` for any integer ``n``."""
    if A.algebra is not B.algebra:
        raise PresentationError("operands live in different algebras")
    return Expr(A.algebra, A.algebra.nth_terms(A.terms, B.terms, n))


def normally_ordered(A: Expr, B: Expr) -> Expr:
    return nth_product(A, B, -1)


def lambda_bracket(A: Expr, B: Expr, nmax: int | None = None) -> dict:
    """``{n: A_(n) B}`` for all non-negative ``n`` with a nonzero product."""
    if nmax is None:
        nmax = max((A.algebra.max_product(u, X) for u in A.terms for X in B.terms),
                   default=-1)
    out = {}
    for n in range(0, nmax + 1):
        p = nth_product(A, B, n)
        if p:
            out[n] = p
    return out
