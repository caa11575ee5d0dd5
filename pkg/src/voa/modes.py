"""Mode action on PBW-type modules over a presented vertex superalgebra.

A module state is a dict ``{monomial: Scalar}``. A monomial is a tuple of
modes ``(g, m)`` (generator index, mode index in the ``a_(m)`` convention)
read left to right and applied to a cyclic vector. The vacuum module is
the case where every non-negative mode kills the cyclic vector.

Everything reduces to two recursions:

* ``act(g, m, X)``: insert ``g_(m)`` into the ordered monomial ``X`` using
  ``[a_(m), b_(n)] = sum_j C(m, j) (a_(j) b)_(m+n-j)``;
* ``mono_mode(u, r, X)``: the ``r``-th mode of a composite vacuum state
  ``u = c_(-p) v``, expanded by the Borcherds normal-ordering identity.

Both are memoized; the engine is immutable apart from its caches.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .scalar import ONE, Scalar, as_scalar

ANNIHILATE, CARTAN, CREATE = 0, 1, 2

_HALF = Scalar(Fraction(1, 2))


@lru_cache(maxsize=None)
def binom(m: int, i: int) -> int:
    """Generalized binomial C(m, i) for any integer m and i >= 0."""
    if i < 0:
        return 0
    num = 1
    for t in range(i):
        num *= m - t
    return num // math.factorial(i)


def add_into(acc: dict, terms: dict, coeff=ONE) -> None:
    if coeff is ONE:
        for mono, c in terms.items():
            s = acc.get(mono)
            if s is None:
                acc[mono] = c
            else:
                s = s + c
                if s.is_zero():
                    del acc[mono]
                else:
                    acc[mono] = s
        return
    for mono, c in terms.items():
        c = c * coeff
        s = acc.get(mono)
        if s is None:
            if not c.is_zero():
                acc[mono] = c
        else:
            s = s + c
            if s.is_zero():
                del acc[mono]
            else:
                acc[mono] = s


def scale(terms: dict, coeff) -> dict:
    coeff = as_scalar(coeff)
    if coeff.is_zero():
        return {}
    if coeff is ONE:
        return dict(terms)
    return {m: c * coeff for m, c in terms.items()}


class ModeEngine:
    """Ordered-monomial module over an :class:`AlgebraPresentation`.

    Subclasses (or the keyword hooks) decide which modes annihilate the
    cyclic vector, which act on it by a scalar, and how creation modes are
    ordered. The default is the vacuum module with the canonical order of
    normal-ordered expressions: generators by (weight, name), then mode
    index ascending (higher derivatives first).
    """

    def __init__(self, algebra, eigenvalues=None, annihilate_from=None,
                 order="vacuum"):
        self.algebra = algebra
        gens = algebra.generators
        self.n = len(gens)
        self.parity = tuple(g.parity for g in gens)
        self.weight = tuple(g.weight for g in gens)
        self.rank = algebra.rank
        self._eigen = {}
        for (g, m), v in (eigenvalues or {}).items():
            self._eigen[(g, m)] = as_scalar(v)
        # first mode index that kills the cyclic vector, per generator
        self._ann = dict(annihilate_from or {})
        self._order = order
        self._act_cache = {}
        self._mono_cache = {}
        self._lock = threading.Lock()

    # -- hooks --------------------------------------------------------

    def kind(self, g: int, m: int) -> int:
        if (g, m) in self._eigen:
            return CARTAN
        if m >= self._ann.get(g, 0):
            return ANNIHILATE
        return CREATE

    def key(self, g: int, m: int):
        if self._order == "vacuum":
            return (self.rank[g], m)
        return (-(self.weight[g] - m - 1), self.rank[g], m)

    @property
    def min_weight(self):
        return 0

    # -- grading ------------------------------------------------------

    def mode_shift(self, g, m):
        return self.weight[g] - m - 1

    def mono_weight(self, X) -> Fraction:
        w = Fraction(0)
        for g, m in X:
            w += self.weight[g] - m - 1
        return w

    def mono_parity(self, X) -> int:
        p = 0
        for g, _ in X:
            p ^= self.parity[g]
        return p

    # -- core recursions ----------------------------------------------

    def act(self, g: int, m: int, X: tuple) -> dict:
        """``g_(m) X`` for an ordered monomial ``X``."""
        ck = (g, m, X)
        r = self._act_cache.get(ck)
        if r is not None:
            return r
        r = self._act(g, m, X)
        self._act_cache[ck] = r
        return r

    def _act(self, g, m, X):
        kind = self.kind(g, m)
        if not X:
            if kind == ANNIHILATE:
                return {}
            if kind == CARTAN:
                v = self._eigen[(g, m)]
                return {(): v} if not v.is_zero() else {}
            return {((g, m),): ONE}
        b, n = X[0]
        rest = X[1:]
        if kind == CREATE:
            kg, kb = self.key(g, m), self.key(b, n)
            if kg < kb or (kg == kb and not self.parity[g]):
                return {((g, m),) + X: ONE}
            if kg == kb:
                # odd g with g_(m) g_(m) = (1/2) [g_(m), g_(m)]
                out = {}
                self._commutator_into(out, g, m, g, m, rest, _HALF)
                return out
        out = {}
        inner = self.act(g, m, rest)
        sign = -1 if (self.parity[g] and self.parity[b]) else 1
        for mono, c in inner.items():
            add_into(out, self.act(b, n, mono), c * sign)
        self._commutator_into(out, g, m, b, n, rest, ONE)
        return out

    def _commutator_into(self, out, a, m, b, n, X, coeff):
        """out += coeff * [a_(m), b_(n)] X."""
        for j, state, p, c in self.algebra.commutator_terms(a, m, b, n):
            cc = coeff * c
            for u, cu in state.items():
                add_into(out, self.mono_mode(u, p, X), cc * cu)

    def act_terms(self, g, m, terms: dict) -> dict:
        out = {}
        for X, c in terms.items():
            add_into(out, self.act(g, m, X), c)
        return out

    def mono_mode(self, u: tuple, r: int, X: tuple) -> dict:
        """``u_(r) X`` for a vacuum monomial ``u`` and module monomial ``X``."""
        if not u:
            return {X: ONE} if r == -1 else {}
        if len(u) == 1:
            c, n0 = u[0]
            p = -n0
            # c_(-p)|0> = d^(p-1) c / (p-1)!
            f = binom(r, p - 1) * (-1 if (p - 1) % 2 else 1)
            if f == 0:
                return {}
            res = self.act(c, r - p + 1, X)
            return res if f == 1 else scale(res, f)
        ck = (u, r, X)
        res = self._mono_cache.get(ck)
        if res is not None:
            return res
        res = self._mono_mode(u, r, X)
        self._mono_cache[ck] = res
        return res

    def _mono_mode(self, u, r, X):
        c, n0 = u[0]
        v = u[1:]
        p = -n0
        wv = self.algebra.vacuum_weight(v)
        wX = self.mono_weight(X)
        lo = self.min_weight
        out = {}
        # sum_i (-1)^i C(-p, i) c_(-p-i) v_(r+i) X
        imax = math.floor(wv + wX - r - 1 - lo)
        for i in range(0, imax + 1):
            b = binom(-p, i) * (-1 if i % 2 else 1)
            if b == 0:
                continue
            y = self.mono_mode(v, r + i, X)
            for mono, cm in y.items():
                add_into(out, self.act(c, -p - i, mono), cm * b)
        # - (-1)^p eps sum_i (-1)^i C(-p, i) v_(-p+r-i) c_(i) X
        eps = -1 if (self.parity[c] and self.algebra.vacuum_parity(v)) else 1
        pre = -(-1 if p % 2 else 1) * eps
        imax = math.floor(self.weight[c] + wX - 1 - lo)
        for i in range(0, imax + 1):
            b = binom(-p, i) * (-1 if i % 2 else 1) * pre
            if b == 0:
                continue
            y = self.act(c, i, X)
            for mono, cm in y.items():
                add_into(out, self.mono_mode(v, -p + r - i, mono), cm * b)
        return out

    def state_mode(self, u_terms: dict, r: int, X_terms: dict) -> dict:
        """``u_(r) X`` for a vacuum state ``u`` and module state ``X``."""
        out = {}
        for u, cu in u_terms.items():
            for X, cx in X_terms.items():
                add_into(out, self.mono_mode(u, r, X), cu * cx)
        return out

    def ordered(self, modes) -> dict:
        """Apply ``modes`` (leftmost outermost) to the cyclic vector."""
        terms = {(): ONE}
        for g, m in reversed(tuple(modes)):
            terms = self.act_terms(g, m, terms)
        return terms

    def cache_size(self) -> int:
        return len(self._act_cache) + len(self._mono_cache)
