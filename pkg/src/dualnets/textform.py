"""Textual polynomial format: parser and printer.

Grammar (integers, variable names, ``w`` for the cube root of unity):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' nat)?
    base   := integer | varname | 'w' | '(' expr ')'

``/`` is accepted so that monic output (fractional coefficients) stays
round-trippable; the right operand must divide exactly, which for the
common case is just a nonzero integer.  Files hold one polynomial per
line; blank lines and ``#`` comment lines are skipped.
"""

from __future__ import annotations

import re

from .poly import exact_div
from .scalar import CycRat

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f" at line {line}, col {col}"
        super().__init__(f"{message}{where}")


def _tokenize(text, line=None):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            col = pos + (len(text[pos:]) - len(stripped)) + 1
            raise ParseError(f"unexpected character {stripped[0]!r}", line, col)
        if m.lastgroup == "int":
            out.append(("int", int(m.group("int")), m.start("int") + 1))
        elif m.lastgroup == "name":
            out.append(("name", m.group("name"), m.start("name") + 1))
        else:
            out.append(("op", m.group("op"), m.start("op") + 1))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    def __init__(self, text, ring, line=None):
        self.tokens = _tokenize(text, line)
        self.i = 0
        self.ring = ring
        self.line = line

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2])

    def parse(self):
        p = self.expr()
        kind, _, _ = self.peek()
        if kind != "end":
            self.fail("trailing input")
        return p

    def expr(self):
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.advance()
            negate = val == "-"
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                q = self.term()
                p = p - q if val == "-" else p + q
            else:
                return p

    def term(self):
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "*/":
                tok = self.advance()
                q = self.factor()
                if val == "*":
                    p = p * q
                else:
                    if q.is_zero:
                        self.fail("division by zero", tok)
                    if q.is_constant:
                        p = p / q.constant_value()
                    else:
                        d = exact_div(p, q)
                        if d is None:
                            self.fail("division is not exact", tok)
                        p = d
            else:
                return p

    def factor(self):
        p = self.base()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, _ = self.peek()
            if kind != "int":
                self.fail("exponent must be a natural number")
            self.advance()
            p = p**val
        return p

    def base(self):
        tok = self.advance()
        kind, val, _ = tok
        if kind == "int":
            return self.ring.const(val)
        if kind == "name":
            if val == "w":
                field = self.ring.field
                omega = getattr(field, "omega", None)
                if omega is None:
                    self.fail(
                        f"'w' needs a field with a cube root of unity, not {field.name}",
                        tok,
                    )
                return self.ring.const(omega)
            if val in self.ring._index:
                return self.ring.var(val)
            self.fail(f"unknown variable {val!r}", tok)
        if kind == "op" and val == "(":
            p = self.expr()
            kind, val, _ = self.peek()
            if not (kind == "op" and val == ")"):
                self.fail("expected ')'")
            self.advance()
            return p
        self.fail("expected integer, variable, or '('", tok)


def parse_poly(text, ring, line=None):
    return _Parser(text, ring, line).parse()


def parse_poly_file(text, ring):
    """One polynomial per non-comment line; returns a list."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        out.append(parse_poly(stripped, ring, line=lineno))
    return out


def scan_variables(text):
    """(variable names in first-appearance order, whether 'w' occurs).

    Used by the CLI to build a ring before parsing a polynomial file."""
    names = []
    uses_omega = False
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        for kind, val, _ in _tokenize(stripped):
            if kind == "name":
                if val == "w":
                    uses_omega = True
                elif val not in names:
                    names.append(val)
    return names, uses_omega


# -- printing -----------------------------------------------------------


def _coeff_str(field, c):
    """Render a coefficient; (needs_par, text).  Parenthesized when the
    textual form would not bind as a single factor."""
    if isinstance(c, CycRat):
        if c.r1 == 0:
            return _coeff_str_rational(c.r0)
        if c.r0 == 0:
            if c.r1 == 1:
                return False, "w"
            neg, t = _coeff_str_rational(c.r1)
            return neg, f"{t}*w"
        return False, f"({c})"
    if isinstance(c, int):
        return c < 0, str(c)
    return _coeff_str_rational(c)


def _coeff_str_rational(fr):
    if fr.denominator == 1:
        return fr < 0, str(fr.numerator)
    return fr < 0, f"{fr.numerator}/{fr.denominator}"


def _monom_str(ring, m):
    parts = []
    for name, e in zip(ring.names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_str(p):
    if not p.terms:
        return "0"
    ring = p.ring
    field = ring.field
    pieces = []
    for m, c in p.terms:
        mono = _monom_str(ring, m)
        _, ctext = _coeff_str(field, c)
        if not mono:
            text = ctext
        elif ctext == "1":
            text = mono
        elif ctext == "-1":
            text = f"-{mono}"
        else:
            text = f"{ctext}*{mono}"
        pieces.append(text)
    out = pieces[0]
    for text in pieces[1:]:
        if text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out
