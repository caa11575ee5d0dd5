"""Tensor products of vertex superalgebras.

Products factorize with the Koszul sign

    (a x b)_(n) (c x d) = (-1)^{p(b) p(c)} sum_i a_(i) c  x  b_(n-1-i) d,

the sum running over the finite window where both factors can be nonzero.
Either factor may be a presentation, a lattice algebra or another tensor.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Expr, PresentationError
from .modes import add_into
from .scalar import ONE

__all__ = ["TensorAlgebra", "tensor"]


class TensorAlgebra:
    def __init__(self, left, right, name: str | None = None):
        names = [g.name for g in left.generators] + [g.name for g in right.generators]
        clash = sorted({n for n in names if names.count(n) > 1})
        if clash:
            raise PresentationError(f"generator names clash in tensor product: {clash}")
        self.left, self.right = left, right
        self.name = name or f"{left.name} x {right.name}"
        self.generators = tuple(left.generators) + tuple(right.generators)
        self.parameters = tuple(dict.fromkeys(tuple(left.parameters) + tuple(right.parameters)))
        self.vacuum_key = (left.vacuum_key, right.vacuum_key)
        self.fields = {}
        for k, e in getattr(left, "fields", {}).items():
            self.fields[k] = self.embed_left(e)
        for k, e in getattr(right, "fields", {}).items():
            self.fields.setdefault(k, self.embed_right(e))
        self.metadata = {"factors": [left.name, right.name]}
        self._cache: dict = {}

    # -- expressions --------------------------------------------------

    def embed_left(self, e: Expr) -> Expr:
        v = self.right.vacuum_key
        return Expr(self, {(m, v): c for m, c in e.terms.items()})

    def embed_right(self, e: Expr) -> Expr:
        v = self.left.vacuum_key
        return Expr(self, {(v, m): c for m, c in e.terms.items()})

    def pair(self, a: Expr, b: Expr) -> Expr:
        """``a x b`` for ``a`` in the left and ``b`` in the right factor."""
        out = {}
        for x, cx in a.terms.items():
            for y, cy in b.terms.items():
                add_into(out, {(x, y): cx * cy})
        return Expr(self, out)

    @property
    def one(self) -> Expr:
        return Expr(self, {self.vacuum_key: ONE})

    def zero(self) -> Expr:
        return Expr(self, {})

    def gen(self, name: str) -> Expr:
        for side, emb in ((self.left, self.embed_left), (self.right, self.embed_right)):
            try:
                return emb(side.gen(name))
            except PresentationError:
                pass
        raise PresentationError(f"unknown generator {name!r} in {self.name}")

    def field(self, name: str) -> Expr:
        if name in self.fields:
            return self.fields[name]
        for side, emb in ((self.left, self.embed_left), (self.right, self.embed_right)):
            try:
                return emb(side.field(name))
            except (PresentationError, KeyError):
                pass
        raise PresentationError(f"unknown field {name!r} in {self.name}")

    def split(self, e: Expr, side: str = "right") -> dict:
        """Group terms by the ``side`` factor: ``{key: Expr in the other factor}``."""
        out: dict = {}
        other = self.left if side == "right" else self.right
        for (x, y), c in e.terms.items():
            k, m = (y, x) if side == "right" else (x, y)
            out.setdefault(k, {})[m] = c
        return {k: Expr(other, t) for k, t in out.items()}

    # -- grading ------------------------------------------------------

    def mono_weight(self, mono) -> Fraction:
        return self.left.mono_weight(mono[0]) + self.right.mono_weight(mono[1])

    def mono_parity(self, mono) -> int:
        return self.left.mono_parity(mono[0]) ^ self.right.mono_parity(mono[1])

    def mono_charge(self, mono, grading) -> Fraction:
        return (_charge(self.left, mono[0], grading) + _charge(self.right, mono[1], grading))

    def max_product(self, u, X) -> int:
        return (self.left.max_product(u[0], X[0]) + self.right.max_product(u[1], X[1]) + 1)

    def format_mono(self, mono):
        fa, ta = self.left.format_mono(mono[0])
        fb, tb = self.right.format_mono(mono[1])
        if mono[1] == self.right.vacuum_key:
            return fa * fb, ta
        if mono[0] == self.left.vacuum_key:
            return fa * fb, tb
        return fa * fb, f"{ta}(x){tb}"

    # -- products -----------------------------------------------------

    def mono_mode(self, u, n: int, X) -> dict:
        key = (u, n, X)
        r = self._cache.get(key)
        if r is not None:
            return r
        (a, b), (c, d) = u, X
        L, R = self.left, self.right
        sign = -1 if (R.mono_parity(b) and L.mono_parity(c)) else 1
        out = {}
        lo = n - 1 - R.max_product(b, d)
        hi = L.max_product(a, c)
        for i in range(lo, hi + 1):
            ac = L.nth_terms({a: ONE}, {c: ONE}, i)
            if not ac:
                continue
            bd = R.nth_terms({b: ONE}, {d: ONE}, n - 1 - i)
            for x, cx in ac.items():
                for y, cy in bd.items():
                    add_into(out, {(x, y): cx * cy * sign})
        self._cache[key] = out
        return out

    def nth_terms(self, a: dict, b: dict, n: int) -> dict:
        out = {}
        for u, cu in a.items():
            for X, cx in b.items():
                add_into(out, self.mono_mode(u, n, X), cu * cx)
        return out

    def deriv_terms(self, a: dict) -> dict:
        out = {}
        for (x, y), c in a.items():
            for dx, cx in self.left.deriv_terms({x: ONE}).items():
                add_into(out, {(dx, y): cx * c})
            for dy, cy in self.right.deriv_terms({y: ONE}).items():
                add_into(out, {(x, dy): cy * c})
        return out

    def __repr__(self):
        return f"TensorAlgebra({self.left.name!r}, {self.right.name!r})"


def _charge(alg, mono, grading):
    f = getattr(alg, "mono_charge", None)
    if f is None:
        return Fraction(0)
    return f(mono, grading)


def tensor(P1, P2, name: str | None = None) -> TensorAlgebra:
    return TensorAlgebra(P1, P2, name)
