"""Reduction modulo a weight-graded ideal.

The ideal generated by ``P.ideal`` is spanned by generator modes applied
to the ideal generators. Sorting modes by the weight they add (lowering on
the right) shows every such state is reached by a path that stays inside
``[0, cutoff]``, so the weight-truncated closure below is the full ideal up
to the cutoff.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .algebra import AlgebraPresentation, Expr, PresentationError
from .linalg import Echelon
from .modes import add_into

__all__ = ["IdealSpan", "quotient_reduce", "ideal_span"]


class IdealSpan:
    """Per-(weight, charges) echelon bases of an ideal of a presentation."""

    def __init__(self, P: AlgebraPresentation, cutoff, generators=None):
        self.P = P
        gens = P.ideal if generators is None else generators
        # lowering modes can bring heavier generators below the cutoff
        top = max((P.vacuum_weight(m) for e in gens for m in e.terms), default=0)
        self.cutoff = max(Fraction(cutoff), Fraction(top))
        self.gradings = sorted({g for gen in P.generators for g, _ in gen.charges})
        self.spans: dict = {}
        self._build([e.terms for e in gens])

    def grade(self, mono):
        P = self.P
        return (P.vacuum_weight(mono),) + tuple(P.mono_charge(mono, g) for g in self.gradings)

    def _split(self, terms):
        out: dict = {}
        for m, c in terms.items():
            out.setdefault(self.grade(m), {})[m] = c
        return out

    def _insert(self, terms, queue):
        for g, part in self._split(terms).items():
            if g[0] > self.cutoff:
                continue
            row = self.spans.setdefault(g, Echelon()).add(part)
            if row is not None:
                queue.append((g[0], dict(row)))

    def _build(self, gens):
        P = self.P
        eng = P.vacuum
        queue: list = []
        for t in gens:
            self._insert(t, queue)
        while queue:
            w, v = queue.pop()
            for gi, g in enumerate(P.generators):
                # g_(n) shifts the weight by wt(g) - n - 1, keep the result in [0, cutoff]
                lo = int(g.weight - 1 - (self.cutoff - w))
                hi = int(g.weight - 1 + w)
                for n in range(lo - 1, hi + 2):
                    s = g.weight - n - 1
                    if w + s < 0 or w + s > self.cutoff:
                        continue
                    r = eng.act_terms(gi, n, v)
                    if r:
                        self._insert(r, queue)

    def reduce(self, terms: dict) -> dict:
        out = {}
        for g, part in self._split(terms).items():
            if g[0] > self.cutoff:
                raise PresentationError(f"weight {g[0]} exceeds the ideal cutoff {self.cutoff}")
            e = self.spans.get(g)
            add_into(out, e.reduce(part) if e else part)
        return out

    def dimension(self, weight, charges=None) -> int:
        return sum(len(e) for g, e in self.spans.items()
                   if g[0] == weight and (charges is None or g[1:] == tuple(charges)))


_lock = threading.Lock()


def ideal_span(P: AlgebraPresentation, cutoff) -> IdealSpan:
    """Cached :class:`IdealSpan` of ``P.ideal`` up to ``cutoff``."""
    cache = P.__dict__.setdefault("_ideal_spans", {})
    key = (Fraction(cutoff), tuple(frozenset(e.terms.items()) for e in P.ideal))
    with _lock:
        span = cache.get(key)
        if span is None:
            for (c, k), s in cache.items():
                if k == key[1] and c >= key[0]:
                    return s
            span = IdealSpan(P, cutoff)
            cache[key] = span
    return span


def _needed_cutoff(alg, terms):
    return max((alg.mono_weight(m) for m in terms), default=Fraction(0))


def quotient_reduce(A: Expr, cutoff=None) -> Expr:
    """Normal form of ``A`` modulo the ideal of its algebra.

    For a tensor product the ideal is ``I1 x V2 + V1 x I2``; each factor is
    reduced separately, grouped by the other factor's basis state.
    """
    alg = A.algebra
    return Expr(alg, _reduce_terms(alg, A.terms, cutoff))


def _reduce_terms(alg, terms, cutoff):
    from .tensor import TensorAlgebra

    if not terms:
        return {}
    if isinstance(alg, TensorAlgebra):
        out = {}
        by_right: dict = {}
        for (x, y), c in terms.items():
            by_right.setdefault(y, {})[x] = c
        mid = {}
        for y, t in by_right.items():
            for x, c in _reduce_terms(alg.left, t, cutoff).items():
                add_into(mid, {(x, y): c})
        by_left: dict = {}
        for (x, y), c in mid.items():
            by_left.setdefault(x, {})[y] = c
        for x, t in by_left.items():
            for y, c in _reduce_terms(alg.right, t, cutoff).items():
                add_into(out, {(x, y): c})
        return out
    if not isinstance(alg, AlgebraPresentation) or not alg.ideal:
        return dict(terms)
    need = _needed_cutoff(alg, terms)
    if cutoff is not None and Fraction(cutoff) < need:
        raise PresentationError(f"cutoff {cutoff} is below the weight {need} of the expression")
    span = ideal_span(alg, need if cutoff is None else cutoff)
    return span.reduce(terms)
