"""Sparse exact linear algebra over :class:`~voa.scalar.Scalar`.

Vectors are dicts ``{key: Scalar}`` with hashable, mutually comparable keys.
"""

from __future__ import annotations

from .modes import add_into
from .scalar import ONE, Scalar, as_scalar

__all__ = ["Echelon", "kernel", "rank"]


class Echelon:
    """Fully reduced row echelon form of a growing span.

    Each row has a pivot (its largest key, coefficient 1) that appears in no
    other row, so :meth:`reduce` returns the unique normal form of a vector
    modulo the span whatever the insertion order was.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        out = dict(v)
        for p in [p for p in v if p in self.rows]:
            c = out.get(p)
            if c is not None:
                add_into(out, self.rows[p], -c)
        return out

    def add(self, v: dict) -> dict | None:
        """Insert ``v``; return the new normalized row, or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        p = max(r)
        inv = ONE / r[p]
        r = {k: c * inv for k, c in r.items()}
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                add_into(row, r, -c)
        self.rows[p] = r
        return r

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def kernel(columns: list[dict]) -> list[dict]:
    """Basis of ``{x : sum_i x_i columns[i] = 0}`` as dicts ``{i: Scalar}``."""
    rows: dict = {}      # pivot -> (vector, combination)
    out = []
    for i, col in enumerate(columns):
        v = dict(col)
        comb = {i: ONE}
        while True:
            hit = [p for p in v if p in rows]
            if not hit:
                break
            p = max(hit)
            c = v[p]
            rv, rc = rows[p]
            add_into(v, rv, -c)
            add_into(comb, rc, -c)
        if not v:
            out.append(comb)
            continue
        p = max(v)
        inv = ONE / v[p]
        rows[p] = ({k: c * inv for k, c in v.items()}, {k: c * inv for k, c in comb.items()})
    return out


def rank(vectors: list[dict]) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)
