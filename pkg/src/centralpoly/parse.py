"""Text grammar for free-algebra polynomials and Grassmann elements.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := ("+" | "-") factor | atom ("^" INT)?
    atom   := INT | "x" INT | "e" INT | "(" expr ")" | "[" expr ("," expr)+ "]"

``x`` atoms are only accepted by :func:`parse_poly`, ``e`` atoms only by
:func:`parse_grassmann`. ``[a, b, c]`` is the left-normed commutator and
``/`` divides by a scalar.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError, UnitInNonunitary
from .exterior import GrassmannElement
from .field import QQ, Field
from .freealg import FreePoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([xe])(\d+)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append((m.group(2), int(m.group(3)), start))
        else:
            ch = m.group(4)
            if ch not in "+-*/^()[],":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append((ch, None, start))
        pos = m.end(0)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    # scalars stay Fractions while parsing and are lifted when they meet an element

    def __init__(self, text, atom_kind, make_atom, make_scalar, field, unitary):
        self.toks = _tokenize(text)
        self.i = 0
        self.atom_kind = atom_kind
        self.make_atom = make_atom
        self.make_scalar = make_scalar
        self.field = field
        self.unitary = unitary

    def lift(self, v):
        return self.make_scalar(v) if isinstance(v, Fraction) else v

    def add(self, a, b):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a + b
        return self.lift(a) + self.lift(b)

    def mul(self, a, b):
        if isinstance(a, Fraction) and isinstance(b, Fraction):
            return a * b
        if isinstance(a, Fraction):
            return b.scale(self.field(a))
        if isinstance(b, Fraction):
            return a.scale(self.field(b))
        return a * b

    def power(self, v, k):
        if isinstance(v, Fraction):
            return v ** k
        if k == 0:
            if not self.unitary:
                raise UnitInNonunitary("x^0 needs the unitary algebra")
            return self.make_scalar(Fraction(1))
        return v ** k

    def commutator(self, args):
        args = [self.lift(a) for a in args]
        r = args[0]
        for a in args[1:]:
            r = r.commutator(a)
        return r

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(tok[0])
            raise ParseError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty input", 0)
        v = self.expr()
        self.take("end")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            v = self.add(v, rhs if op == "+" else -rhs)
        return v

    def term(self):
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                v = self.mul(v, rhs)
            else:
                if not isinstance(rhs, Fraction):
                    raise ParseError("can only divide by a scalar", pos)
                if rhs == 0:
                    raise ParseError("division by zero", pos)
                v = self.mul(v, 1 / rhs)
        return v

    def factor(self):
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            v = self.factor()
            return -v if kind == "-" else v
        v = self.atom()
        if self.peek()[0] == "^":
            self.take()
            k = self.take("int")[1]
            return self.power(v, k)
        return v

    def atom(self):
        kind, val, pos = self.peek()
        if kind == "int":
            self.take()
            return Fraction(val)
        if kind in ("x", "e"):
            if kind != self.atom_kind:
                raise ParseError(f"'{kind}' variables are not allowed here", pos)
            if val < 1:
                raise ParseError("indices start at 1", pos)
            self.take()
            return self.make_atom(val)
        if kind == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        if kind == "[":
            self.take()
            args = [self.expr()]
            while self.peek()[0] == ",":
                self.take()
                args.append(self.expr())
            self.take("]")
            if len(args) < 2:
                raise ParseError("a commutator needs at least two entries", pos)
            return self.commutator(args)
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {kind!r}", pos)


def parse_poly(text: str, field: Field = QQ, unitary=False) -> FreePoly:
    """Parse polynomial text such as ``[x1,x2]*x1^2*x2^2 + 3*x3``."""

    def scalar(c):
        if not c:
            return FreePoly.zero(field, unitary)
        if not unitary:
            raise UnitInNonunitary("a nonzero constant needs the unitary algebra")
        return FreePoly.const(field(c), field)

    p = _Parser(text, "x", lambda i: FreePoly.var(i, field, unitary), scalar, field, unitary)
    return p.lift(p.parse())


def parse_grassmann(text: str, field: Field = QQ, unitary=False, truncation=0) -> GrassmannElement:
    """Parse Grassmann text such as ``e1*e2 + 3*e4`` (``1`` is the unit)."""

    def scalar(c):
        if not c:
            return GrassmannElement.zero(field, unitary, truncation)
        if not unitary:
            raise UnitInNonunitary("a nonzero constant needs the unitary algebra")
        return GrassmannElement.one(field, truncation).scale(field(c))

    def gen(i):
        if truncation and i > truncation:
            raise ParseError(f"e{i} exceeds the truncation {truncation}", 0)
        return GrassmannElement.generator(i, field, unitary, truncation)

    p = _Parser(text, "e", gen, scalar, field, unitary)
    return p.lift(p.parse())
