"""Exact rational functions in named parameters.

Every coefficient handled by the toolkit is a :class:`Scalar`: a reduced
quotient of two multivariate polynomials with rational coefficients. The
polynomial arithmetic is delegated to FLINT (``python-flint``); this module
only keeps quotients canonical and handles parameter bookkeeping.

>>> k = Scalar.param("k")
>>> c = -(3*k + 8)*(8*k + 17)/(k + 4)
>>> c.specialize(k=-1)
Scalar(-15)
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Mapping, Union

import flint

__all__ = [
    "Scalar",
    "ScalarError",
    "PoleError",
    "ScalarParseError",
    "parse_scalar",
    "as_scalar",
    "ZERO",
    "ONE",
]


class ScalarError(ArithmeticError):
    """Raised on division by an identically zero scalar."""


class PoleError(ScalarError):
    """Raised when a specialization makes a denominator vanish."""

    def __init__(self, denominator: str, bindings: Mapping[str, object]):
        self.denominator = denominator
        self.bindings = dict(bindings)
        b = ", ".join(f"{k}={v}" for k, v in self.bindings.items())
        super().__init__(f"denominator {denominator} vanishes at {b}")


class ScalarParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at column {pos + 1} in {text!r}")


@lru_cache(maxsize=None)
def _ctx(names: tuple) -> flint.fmpq_mpoly_ctx:
    return flint.fmpq_mpoly_ctx.get(names, "deglex")


_CTX0 = _ctx(())


def _union(a, b):
    ca, cb = a.context(), b.context()
    if ca is cb:
        return a, b
    names = tuple(sorted(set(ca.names()) | set(cb.names())))
    ctx = _ctx(names)
    if ca is not ctx:
        a = a.project_to_context(ctx)
    if cb is not ctx:
        b = b.project_to_context(ctx)
    return a, b


def _shrink(p, q):
    """Drop parameters that no longer occur in either polynomial."""
    ctx = p.context()
    used = sorted(set(ctx.names()) - (set(p.unused_gens()) & set(q.unused_gens())))
    if len(used) == len(ctx.names()):
        return p, q
    small = _ctx(tuple(used))
    return p.project_to_context(small), q.project_to_context(small)


ScalarLike = Union["Scalar", int, Fraction, Rational]


class Scalar:
    """Canonical quotient ``num/den`` of rational-coefficient polynomials.

    Canonical form: ``gcd(num, den) == 1`` and the deglex-leading
    coefficient of ``den`` is 1. With that normalization equality is a
    term-by-term comparison.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0, _den=None, _reduced=False):
        if isinstance(value, flint.fmpq_mpoly):
            num = value
            den = _den if _den is not None else value.context().from_dict({})+1
            if not _reduced:
                num, den = _union(num, den)
                if den.is_zero():
                    raise ScalarError("division by zero")
                if not den.is_constant():
                    g = num.gcd(den)
                    if not g.is_one():
                        num = num / g
                        den = den / g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        else:
            if isinstance(value, Scalar):
                num, den = value.num, value.den
            else:
                num = _CTX0.from_dict({(): flint.fmpq(Fraction(value).numerator, Fraction(value).denominator)}) if value else _CTX0.from_dict({})
                den = _ONE_POLY
        self.num = num
        self.den = den
        self._hash = None

    # constructors -----------------------------------------------------

    @classmethod
    def param(cls, name: str) -> "Scalar":
        ctx = _ctx((name,))
        return cls(ctx.gens()[0], ctx.from_dict({(0,): 1}), _reduced=True)

    @classmethod
    def _make(cls, num, den):
        s = object.__new__(cls)
        s.num, s.den, s._hash = num, den, None
        return s

    # predicates -------------------------------------------------------

    @property
    def parameters(self) -> tuple:
        used = set(self.num.context().names()) - (
            set(self.num.unused_gens()) & set(self.den.unused_gens()))
        return tuple(sorted(used))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} depends on {self.parameters}")
        if self.num.is_zero():
            return Fraction(0)
        v = self.num.leading_coefficient() / self.den.leading_coefficient()
        return Fraction(int(v.p), int(v.q))

    # arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        o = as_scalar(other)
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        a, b = self, o
        if a.den.is_one() and b.den.is_one():
            n1, n2 = _union(a.num, b.num)
            s = n1 + n2
            return Scalar._make(s, s.context().from_dict({}) + 1)
        n1, d2 = _union(a.num, b.den)
        n2, d1 = _union(b.num, a.den)
        n1, n2 = _union(n1, n2)
        d1, d2 = _union(d1, d2)
        n1, d1 = _union(n1, d1)
        n2, d2 = _union(n2, d2)
        if d1 == d2:
            return Scalar(n1 + n2, d1)
        return Scalar(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._make(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        if isinstance(other, int):
            if other == 0:
                return ZERO
            if other == 1:
                return self
            return Scalar._make(self.num * other, self.den)
        o = as_scalar(other)
        if o.num.is_zero() or self.num.is_zero():
            return ZERO
        if self.den.is_one() and o.den.is_one():
            a, b = _union(self.num, o.num)
            p = a * b
            return Scalar._make(p, p.context().from_dict({}) + 1)
        if o.is_constant():
            c = o.num.leading_coefficient() / o.den.leading_coefficient()
            return Scalar._make(self.num * c, self.den)
        if self.is_constant():
            c = self.num.leading_coefficient() / self.den.leading_coefficient()
            return Scalar._make(o.num * c, o.den)
        n1, n2 = _union(self.num, o.num)
        d1, d2 = _union(self.den, o.den)
        n1, d1 = _union(n1, d1)
        n2, d2 = _union(n2, d2)
        n1, d2 = _union(n1, d2)
        n2, d1 = _union(n2, d1)
        return Scalar(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise ScalarError("division by zero")
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        o = as_scalar(other)
        if o.num.is_zero():
            raise ScalarError(f"division of {self} by zero")
        if o.is_constant():
            c = o.num.leading_coefficient() / o.den.leading_coefficient()
            return Scalar._make(self.num / c, self.den)
        return self * o.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, _NUMERIC):
            return NotImplemented
        return as_scalar(other) / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("only integer exponents are supported")
        if e < 0:
            return self.inverse() ** (-e)
        return Scalar._make(self.num ** e, self.den ** e)

    # comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, (Scalar, int, Fraction, Rational)):
            return NotImplemented
        o = as_scalar(other)
        a, b = _union(self.num, o.num)
        c, d = _union(self.den, o.den)
        a, c = _union(a, c)
        b, d = _union(b, d)
        a, d = _union(a, d)
        b, c = _union(b, c)
        return a == b and c == d

    def __hash__(self):
        if self._hash is None:
            names = self.num.context().names()
            self._hash = hash((_named_terms(self.num, names), _named_terms(self.den, names)))
        return self._hash

    # evaluation -------------------------------------------------------

    def specialize(self, bindings: Mapping[str, ScalarLike] | None = None, **kw) -> "Scalar":
        """Substitute rational values for parameters.

        Raises :class:`PoleError` if the denominator vanishes.
        """
        b = dict(bindings or {})
        b.update(kw)
        names = self.num.context().names()
        sub = {}
        for name, v in b.items():
            if name in names:
                f = Fraction(v.to_fraction() if isinstance(v, Scalar) else v)
                sub[name] = flint.fmpq(f.numerator, f.denominator)
        if not sub:
            return self
        num = self.num.subs(sub)
        den = self.den.subs(sub)
        if den.is_zero():
            raise PoleError(_fmt_poly(self.den), {k: b[k] for k in sub})
        num, den = _shrink(num, den)
        return Scalar(num, den)

    def __call__(self, **kw):
        return self.specialize(kw)

    def factor(self):
        """Return ``(unit, [(factor, multiplicity), ...])`` with negative
        multiplicities for denominator factors."""
        cn, fn = self.num.factor()
        cd, fd = self.den.factor()
        return Fraction(int((cn / cd).p), int((cn / cd).q)), (
            [(Scalar(f), m) for f, m in fn] + [(Scalar(f), -m) for f, m in fd])

    # printing ---------------------------------------------------------

    def __str__(self):
        n = _fmt_poly(self.num)
        if self.den.is_one():
            return n
        d = _fmt_poly(self.den)
        if self.num.is_constant() or _is_atom(n):
            return f"{n}/{_paren(d)}"
        return f"({n})/{_paren(d)}"

    def __repr__(self):
        return f"Scalar({self})"


def _named_terms(p, names):
    return tuple(sorted(
        (tuple((n, e) for n, e in zip(names, mon) if e), (int(c.p), int(c.q)))
        for mon, c in p.to_dict().items()))


def _fmt_poly(p) -> str:
    return str(p).replace(" ", "")


def _is_atom(s: str) -> bool:
    return re.fullmatch(r"-?[A-Za-z_][A-Za-z_0-9]*(\^\d+)?|-?\d+(/\d+)?", s) is not None


def _paren(s: str) -> str:
    if re.fullmatch(r"\d+|[A-Za-z_][A-Za-z_0-9]*", s):
        return s
    return f"({s})"


_NUMERIC = (Scalar, int, Fraction, Rational)
_ONE_POLY = _CTX0.from_dict({(): 1})
ZERO = Scalar(0)
ONE = Scalar(1)


def as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        if x == 0:
            return ZERO
        if x == 1:
            return ONE
        return Scalar._make(_CTX0.from_dict({(): x}), _ONE_POLY)
    if isinstance(x, (Fraction, Rational)):
        return Scalar(Fraction(x))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Scalar")


# parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse_scalar(text: str) -> Scalar:
    """Parse ``+ - * / ^ ( )`` expressions over integers and identifiers.

    ``p/q`` literals are ordinary division. Exponents must be integers.
    """
    toks = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.group(0).strip() == "":
            continue
        if m.group(1):
            toks.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2):
            toks.append(("id", m.group(2), m.start(2)))
        else:
            if m.group(3) not in "+-*/^()":
                raise ScalarParseError(text, m.start(3), f"unexpected character {m.group(3)!r}")
            toks.append((m.group(3), None, m.start(3)))
    toks.append(("end", None, len(text)))
    i = 0

    def peek():
        return toks[i][0]

    def take(kind=None):
        nonlocal i
        t = toks[i]
        if kind is not None and t[0] != kind:
            raise ScalarParseError(text, t[2], f"expected {kind!r}")
        i += 1
        return t

    def expr():
        v = term()
        while peek() in "+-" and peek() != "end":
            op = take()[0]
            r = term()
            v = v + r if op == "+" else v - r
        return v

    def term():
        v = unary()
        while peek() in ("*", "/"):
            op = take()[0]
            r = unary()
            if op == "*":
                v = v * r
            else:
                if r.is_zero():
                    raise ScalarParseError(text, toks[i - 1][2], "division by zero")
                v = v / r
        return v

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == "^":
            take()
            neg = False
            if peek() == "-":
                take()
                neg = True
            e = take("num")[1]
            return base ** (-e if neg else e)
        return base

    def atom():
        t = toks[i]
        if t[0] == "num":
            take()
            return as_scalar(t[1])
        if t[0] == "id":
            take()
            return Scalar.param(t[1])
        if t[0] == "(":
            take()
            v = expr()
            take(")")
            return v
        raise ScalarParseError(text, t[2], "unexpected token" if t[0] != "end" else "unexpected end")

    v = expr()
    if peek() != "end":
        raise ScalarParseError(text, toks[i][2], "trailing input")
    return v
