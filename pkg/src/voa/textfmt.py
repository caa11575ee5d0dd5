"""Line-oriented text format for algebra presentations.

::

    algebra n2
    param c
    grading Tt
    generator H parity=even weight=1
    generator E parity=odd weight=1/2 charge.H=1
    ope E F { 2: (2/3*c)*|0>; 1: (2)*H; 0: (2)*T + d^1(H); }
    field Tt = T + d^1(H)
    ideal { :(G+ G+); }

Expressions are sums of ``(coefficient)*atom`` where an atom is ``|0>``, a
generator, ``d^j(gen)`` or a right-nested normally ordered product
``:(a b ...)``. Printing is canonical: ``print_presentation(parse(text))``
returns ``text`` for printed input. ``grading``, ``field`` and ``meta`` lines
extend the core grammar so that presets round-trip with their named fields.
Blocks may continue over several lines until the braces balance.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import AlgebraPresentation, Expr, Generator, PresentationError
from .presets import nop
from .scalar import Scalar, ScalarParseError, parse_scalar

__all__ = ["ParseError", "parse_presentation", "print_presentation", "parse_expr", "print_expr"]


class ParseError(PresentationError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.msg, self.line, self.col = msg, line, col


# -- printing ------------------------------------------------------------------


def print_expr(e: Expr) -> str:
    return str(e)


def _frac(f: Fraction) -> str:
    return str(Fraction(f))


def print_presentation(P: AlgebraPresentation) -> str:
    lines = [f"algebra {P.name}"]
    if P.parameters:
        lines.append("param " + " ".join(P.parameters))
    if P.grading:
        lines.append(f"grading {P.grading}")
    for k in sorted(P.metadata):
        lines.append(f"meta {k} {json.dumps(P.metadata[k], sort_keys=True)}")
    for g in P.generators:
        t = f"generator {g.name} parity={'odd' if g.parity else 'even'} weight={_frac(g.weight)}"
        for gr, v in g.charges:
            t += f" charge.{gr}={_frac(v)}"
        lines.append(t)
    names = [g.name for g in P.generators]
    for (a, b) in sorted(P.table):
        entry = P.table[(a, b)]
        body = " ".join(f"{n}: {Expr(P, entry[n])};" for n in sorted(entry, reverse=True))
        lines.append(f"ope {names[a]} {names[b]} {{ {body} }}" if body
                     else f"ope {names[a]} {names[b]} {{ }}")
    for k in P.fields:
        lines.append(f"field {k} = {P.fields[k]}")
    if P.ideal:
        lines.append("ideal { " + " ".join(f"{e};" for e in P.ideal) + " }")
    return "\n".join(lines) + "\n"


# -- parsing -------------------------------------------------------------------


class _ExprParser:
    def __init__(self, P, text, line, col0):
        self.P, self.s, self.i = P, text, 0
        self.line, self.col0 = line, col0
        self.names = sorted((g.name for g in P.generators), key=len, reverse=True)

    def err(self, msg, at=None):
        raise ParseError(msg, self.line, self.col0 + (self.i if at is None else at) + 1)

    def ws(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self, t):
        self.ws()
        return self.s.startswith(t, self.i)

    def take(self, t):
        if not self.peek(t):
            self.err(f"expected {t!r}")
        self.i += len(t)

    def parse(self) -> Expr:
        self.ws()
        if self.s[self.i:].strip() == "0":
            return self.P.zero()
        total = self.P.zero()
        sign = 1
        if self.peek("-"):
            self.i += 1
            sign = -1
        while True:
            total = total + sign * self.term()
            self.ws()
            if self.i >= len(self.s):
                return total
            if self.peek("+"):
                self.i += 1
                sign = 1
            elif self.peek("-"):
                self.i += 1
                sign = -1
            else:
                self.err("expected '+' or '-' between terms")

    def coefficient(self):
        self.ws()
        start = self.i
        if self.peek("("):
            depth = 0
            j = self.i
            while j < len(self.s):
                if self.s[j] == "(":
                    depth += 1
                elif self.s[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            else:
                self.err("unbalanced parenthesis")
            txt = self.s[self.i + 1:j]
            try:
                c = parse_scalar(txt)
            except ScalarParseError as e:
                self.err(f"bad coefficient: {e}", at=self.i + 1 + e.pos)
            self._check_params(c, start)
            self.i = j + 1
            return c
        j = self.i
        while j < len(self.s) and (self.s[j].isdigit() or self.s[j] == "/"):
            j += 1
        if j > self.i and (j == len(self.s) or not self.s[j].isalpha()):
            c = Scalar(Fraction(self.s[self.i:j]))
            self.i = j
            return c
        return None

    def _check_params(self, c, at):
        extra = set(c.parameters) - set(self.P.parameters)
        if extra:
            self.err(f"undeclared parameter(s) {sorted(extra)}", at=at)

    def term(self) -> Expr:
        c = self.coefficient()
        if c is not None:
            self.ws()
            if self.peek("*"):
                self.i += 1
            else:
                return self.P.one * c
        a = self.atom()
        return a * c if c is not None else a

    def gen(self):
        self.ws()
        for n in self.names:
            if self.s.startswith(n, self.i):
                self.i += len(n)
                return self.P.gen(n)
        self.err("expected a generator name")

    def atom(self) -> Expr:
        self.ws()
        if self.peek("|0>"):
            self.i += 3
            return self.P.one
        if self.peek(":("):
            self.i += 2
            parts = []
            while not self.peek(")"):
                if self.i >= len(self.s):
                    self.err("unterminated ':('")
                parts.append(self.atom())
            self.i += 1
            if len(parts) < 2:
                self.err("normal ordering needs at least two factors")
            return nop(*parts)
        if self.peek("d^"):
            self.i += 2
            j0 = self.i
            while self.i < len(self.s) and self.s[self.i].isdigit():
                self.i += 1
            if self.i == j0:
                self.err("expected a derivative order")
            j = int(self.s[j0:self.i])
            self.take("(")
            g = self.gen()
            self.take(")")
            return g.d(j)
        return self.gen()


def parse_expr(P: AlgebraPresentation, text: str, line: int = 1, col: int = 0) -> Expr:
    return _ExprParser(P, text, line, col).parse()


def _split_items(body: str):
    """``'a; b;'`` -> ``[(offset, 'a'), (offset, ' b')]``."""
    out, start = [], 0
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ";" and depth == 0:
            out.append((start, body[start:i]))
            start = i + 1
    if body[start:].strip():
        out.append((start, body[start:]))
    return out


def _logical_lines(text: str):
    """Join lines until braces balance; yield ``(line_no, text)``."""
    buf, first = "", None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0] if not raw.lstrip().startswith("meta") else raw
        if not line.strip() and not buf:
            continue
        if first is None:
            first = no
        buf = buf + ("\n" if buf else "") + line
        if buf.count("{") == buf.count("}"):
            yield first, buf
            buf, first = "", None
    if buf:
        raise ParseError("unterminated block", first, 1)


def _offset(text, off, line):
    """Line and column of character ``off`` of a logical line starting at ``line``."""
    before = text[:off]
    return line + before.count("\n"), off - (before.rfind("\n") + 1)


def parse_presentation(text: str, validate: bool = True) -> AlgebraPresentation:
    name, params, grading, meta = None, [], None, {}
    gens: list = []
    opes: list = []
    fields: list = []
    ideal: list = []
    for line, t in _logical_lines(text):
        kw, _, rest = t.strip().partition(" ")
        col = t.find(rest) if rest else len(t)
        if kw == "algebra":
            if name is not None:
                raise ParseError("duplicate 'algebra' line", line, 1)
            name = rest.strip()
        elif kw == "param":
            params += rest.split()
        elif kw == "grading":
            grading = rest.strip()
        elif kw == "meta":
            k, _, v = rest.partition(" ")
            try:
                meta[k] = json.loads(v)
            except json.JSONDecodeError as e:
                raise ParseError(f"bad meta value: {e.msg}", line, col + len(k) + 2 + e.pos) from None
        elif kw == "generator":
            gens.append(_parse_generator(rest, line, col))
        elif kw == "ope":
            opes.append((line, t, rest))
        elif kw == "field":
            fname, eq, body = rest.partition("=")
            if not eq:
                raise ParseError("expected '=' in field line", line, col + 1)
            fields.append((line, fname.strip(), body, t.find(body, col)))
        elif kw == "ideal":
            ideal.append((line, t))
        else:
            raise ParseError(f"unknown directive {kw!r}", line, 1)
    if name is None:
        raise ParseError("missing 'algebra' line", 1, 1)
    P = AlgebraPresentation(name, gens, params, grading, meta)
    for line, t, rest in opes:
        _parse_ope(P, t, line)
    for line, fname, body, off in fields:
        P.fields[fname] = parse_expr(P, body, line, off)
    for line, t in ideal:
        P.ideal += _parse_block(P, t, line, keyed=False)
    if validate:
        from .checks import check_weights

        bad = [c for c in check_weights(P) if not c.ok]
        if bad:
            raise PresentationError(f"{P.name}: {bad[0].label} violates weight additivity")
    return P


def _parse_generator(rest, line, col):
    toks = rest.split()
    if not toks:
        raise ParseError("generator needs a name", line, col + 1)
    name, parity, weight, charges = toks[0], 0, None, []
    for tok in toks[1:]:
        key, eq, val = tok.partition("=")
        at = col + rest.find(tok) + 1
        if not eq:
            raise ParseError(f"expected key=value, got {tok!r}", line, at)
        try:
            if key == "parity":
                if val not in ("even", "odd"):
                    raise ParseError(f"parity must be even or odd, got {val!r}", line, at)
                parity = 1 if val == "odd" else 0
            elif key == "weight":
                weight = Fraction(val)
            elif key.startswith("charge."):
                charges.append((key[7:], Fraction(val)))
            else:
                raise ParseError(f"unknown generator attribute {key!r}", line, at)
        except ParseError:
            raise
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad number {val!r}", line, at) from None
    if weight is None:
        raise ParseError(f"generator {name} needs a weight", line, col + 1)
    return Generator(name, parity, weight, tuple(charges))


def _parse_ope(P, t, line):
    head, brace, _ = t.partition("{")
    parts = head.split()
    if len(parts) != 3:
        raise ParseError("expected 'ope <a> <b> { ... }'", line, 1)
    a, b = parts[1], parts[2]
    for nm in (a, b):
        if nm not in P.index:
            raise ParseError(f"unknown generator {nm!r}", line, t.find(nm) + 1)
    entries = _parse_block(P, t, line, keyed=True, what=f"ope {a} {b}")
    seen = {}
    want = P.generators[P.index[a]].weight + P.generators[P.index[b]].weight
    for n, e, (ln, cl) in entries:
        if n in seen:
            raise ParseError(f"ope {a} {b}: product index {n} given twice", ln, cl + 1)
        bad = [w for w in e.weights() if w != want - n - 1]
        if bad:
            raise ParseError(f"ope {a} {b}: product index {n} has weight {bad[0]}, "
                             f"expected {want - n - 1}", ln, cl + 1)
        seen[n] = e
    P.set_ope(a, b, seen)


def _parse_block(P, t, line, keyed, what="ideal"):
    i, j = t.find("{"), t.rfind("}")
    if i < 0 or j < i:
        raise ParseError(f"{what}: expected '{{ ... }}'", line, 1)
    body = t[i + 1:j]
    out = []
    for off, item in _split_items(body):
        if not item.strip():
            continue
        base = i + 1 + off
        if keyed:
            key, colon, ex = item.partition(":")
            if not colon or key.strip().startswith("("):
                ln, cl = _offset(t, base, line)
                raise ParseError(f"{what}: expected '<n>: <expr>'", ln, cl + 1)
            ln, cl = _offset(t, base + len(key) - len(key.lstrip()), line)
            try:
                n = int(key.strip())
            except ValueError:
                raise ParseError(f"{what}: product index {key.strip()!r} is not an integer",
                                 ln, cl + 1) from None
            if n < 0:
                raise ParseError(f"{what}: product index {n} is negative", ln, cl + 1)
            eoff = base + len(key) + 1
            ln, cl = _offset(t, eoff, line)
            e = parse_expr(P, ex, ln, cl)
            out.append((n, e, _offset(t, base + len(key) - len(key.lstrip()), line)))
        else:
            ln, cl = _offset(t, base, line)
            out.append(parse_expr(P, item, ln, cl))
    return out
