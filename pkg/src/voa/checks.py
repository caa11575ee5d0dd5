"""Consistency checks for OPE tables: weights, skew-symmetry, Jacobi."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import AlgebraPresentation, Expr, PresentationError, lambda_bracket
from .modes import add_into, binom


@dataclass
class Identity:
    """One checked identity; ``residual`` is LHS - RHS (zero on success)."""

    label: str
    ok: bool
    residual: str = "0"
    weight: Fraction | None = None
    data: dict = field(default_factory=dict)


def _divided_derivative(P, terms, j):
    t = terms
    for _ in range(j):
        t = P.deriv_terms(t)
    f = math.factorial(j)
    return {m: c / f for m, c in t.items()}


def check_weights(P: AlgebraPresentation) -> list[Identity]:
    """Weight and charge additivity of every stored table entry."""
    out = []
    gradings = sorted({g for gen in P.generators for g, _ in gen.charges})
    for (a, b), entry in sorted(P.table.items()):
        ga, gb = P.generators[a], P.generators[b]
        for n, terms in sorted(entry.items()):
            label = f"{ga.name}_({n}){gb.name}"
            want = ga.weight + gb.weight - n - 1
            bad = [m for m in terms if P.vacuum_weight(m) != want]
            for g in gradings:
                q = ga.charge(g) + gb.charge(g)
                bad += [m for m in terms if P.mono_charge(m, g) != q]
            par = ga.parity ^ gb.parity
            bad += [m for m in terms if P.vacuum_parity(m) != par]
            ok = not bad
            out.append(Identity(f"weight {label}", ok,
                                "0" if ok else str(Expr(P, {m: terms[m] for m in bad})), want))
    return out


def skew_rhs(P, a: int, b: int, n: int) -> dict:
    """``b_(n) a`` from the stored ``a_(m) b`` by the skew-symmetry rule."""
    ga, gb = P.generators[a], P.generators[b]
    eps = -1 if (ga.parity and gb.parity) else 1
    out = {}
    for m, terms in P.table.get((a, b), {}).items():
        j = m - n
        if j < 0:
            continue
        sign = -eps * (-1 if (n + j) % 2 else 1)
        add_into(out, _divided_derivative(P, terms, j), sign)
    return out


def check_skew(P: AlgebraPresentation) -> list[Identity]:
    """Compare pairs stored in both orders (and a with itself) via the skew rule."""
    out = []
    for (a, b) in sorted(P.table):
        if (b, a) not in P.table:
            continue
        if a > b:
            continue
        ga, gb = P.generators[a], P.generators[b]
        top = max([*P.table[(a, b)], *P.table[(b, a)], 0])
        for n in range(0, top + 1):
            lhs = dict(P.table[(b, a)].get(n, {}))
            add_into(lhs, skew_rhs(P, a, b, n), -1)
            out.append(Identity(f"skew {gb.name}_({n}){ga.name}", not lhs,
                                str(Expr(P, lhs)),
                                ga.weight + gb.weight - n - 1))
    return out


def jacobi_residual(P: AlgebraPresentation, a: int, b: int, c: int, m: int, n: int) -> dict:
    """``a_m(b_n c) - (-1)^{p(a)p(b)} b_n(a_m c) - sum_j C(m,j) (a_j b)_{m+n-j} c``."""
    eng = P.vacuum
    ga, gb = P.generators[a], P.generators[b]
    C = {((c, -1),): _one()}
    bc = eng.act_terms(b, n, C)
    ac = eng.act_terms(a, m, C)
    res = eng.act_terms(a, m, bc)
    eps = -1 if (ga.parity and gb.parity) else 1
    add_into(res, eng.act_terms(b, n, ac), -eps)
    A = {((a, -1),): _one()}
    B = {((b, -1),): _one()}
    j = 0
    while True:
        ab = eng.state_mode(A, j, B)
        wab = ga.weight + gb.weight - j - 1
        if wab < 0:
            break
        if ab:
            add_into(res, eng.state_mode(ab, m + n - j, C), -binom(m, j))
        j += 1
    return res


def _one():
    from .scalar import ONE
    return ONE


def check_jacobi(P: AlgebraPresentation, cutoff=6, triples=None,
                 progress=None) -> list[Identity]:
    """Borcherds/Jacobi identity for generator triples up to total weight ``cutoff``.

    Total weight is ``wt(a) + wt(b) + wt(c)`` in the presentation's grading.
    Only ``m, n`` with a possibly nonzero result are visited.
    """
    gens = P.generators
    idx = range(len(gens))
    out = []
    if triples is None:
        triples = [(a, b, c) for a, b, c in itertools.product(idx, repeat=3)
                   if gens[a].weight + gens[b].weight + gens[c].weight <= cutoff]
    else:
        triples = [tuple(P.index[x] if isinstance(x, str) else x for x in t) for t in triples]
    for a, b, c in triples:
        ga, gb, gc = gens[a], gens[b], gens[c]
        total = ga.weight + gb.weight + gc.weight
        for m in range(0, math.floor(total) + 1):
            for n in range(0, math.floor(total) + 1):
                w = total - m - n - 2
                if w < 0:
                    continue
                r = jacobi_residual(P, a, b, c, m, n)
                out.append(Identity(
                    f"jacobi {ga.name}_({m}) {gb.name}_({n}) {gc.name}", not r,
                    str(Expr(P, r)), w, {"triple": (ga.name, gb.name, gc.name), "m": m, "n": n}))
                if progress:
                    progress(out[-1])
    return out


def validate(P: AlgebraPresentation, jacobi_cutoff=None) -> list[Identity]:
    """Structural validation; raises on the first failing identity."""
    checks = check_weights(P) + check_skew(P)
    if jacobi_cutoff is not None:
        checks += check_jacobi(P, jacobi_cutoff)
    bad = [c for c in checks if not c.ok]
    if bad:
        worst = min(bad, key=lambda c: (c.weight if c.weight is not None else 0, len(c.residual)))
        raise PresentationError(f"{P.name}: {worst.label} fails, residual {worst.residual}")
    return checks


def state_skew_residual(A: Expr, B: Expr, n: int) -> Expr:
    """``B_(n) A + (-1)^{p(A)p(B)} sum_j (-1)^{n+j} d^(j)(A_(n+j) B)`` for homogeneous states."""
    alg = A.algebra
    eps = -1 if (A.parity() and B.parity()) else 1
    res = dict(B.nth(A, n).terms)
    top = max((alg.max_product(u, X) for u in A.terms for X in B.terms), default=n - 1)
    for j in range(0, top - n + 1):
        t = A.nth(B, n + j).terms
        if not t:
            continue
        for _ in range(j):
            t = alg.deriv_terms(t)
        f = math.factorial(j)
        add_into(res, {m: c / f for m, c in t.items()}, eps * (-1 if (n + j) % 2 else 1))
    return Expr(alg, res)


def state_jacobi_residual(A: Expr, B: Expr, C: Expr, m: int, n: int) -> Expr:
    """Borcherds commutator identity on states; ``m`` and ``n`` may be negative."""
    alg = A.algebra
    eps = -1 if (A.parity() and B.parity()) else 1
    res = dict(alg.nth_terms(A.terms, alg.nth_terms(B.terms, C.terms, n), m))
    add_into(res, alg.nth_terms(B.terms, alg.nth_terms(A.terms, C.terms, m), n), -eps)
    top = max((alg.max_product(u, X) for u in A.terms for X in B.terms), default=-1)
    for j in range(0, top + 1):
        ab = alg.nth_terms(A.terms, B.terms, j)
        if ab:
            add_into(res, alg.nth_terms(ab, C.terms, m + n - j), -binom(m, j))
    return Expr(alg, res)
