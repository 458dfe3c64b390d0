"""Sparse multivariate polynomials over a pluggable exact field.

A :class:`PolyRing` fixes the coefficient field, an ordered tuple of
variable names, and a monomial order.  Polynomials are immutable: a tuple
of (exponent-vector, coefficient) pairs, strictly descending in the ring
order, with no zero coefficients.  The zero polynomial is the empty tuple.

Monomials are plain int tuples so they hash fast; all coefficient work
goes through the ring's field-method protocol (see ``scalar``), which is
what keeps prime-field runs on raw ints.

There is deliberately no general polynomial gcd here.  Where a quotient
of polynomials is needed the factors are known in advance, so repeated
``exact_div`` by the known factors does the job exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import QQ, CycRat, PrimeFieldElem


class RingMismatchError(ValueError):
    pass


class MonomialOrder:
    """'lex' or 'degrevlex', with an explicit variable precedence.

    ``precedence`` lists variable indices from most to least significant.
    ``key`` maps an exponent tuple to a flat int tuple that sorts the same
    way the order compares, so max()/sorted() do the comparisons.
    """

    __slots__ = ("kind", "precedence")

    def __init__(self, kind, precedence):
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.precedence = tuple(precedence)

    def key(self, monomial):
        perm = self.precedence
        if self.kind == "lex":
            return tuple(monomial[i] for i in perm)
        e = [monomial[i] for i in perm]
        out = [sum(e)]
        for x in reversed(e):
            out.append(-x)
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.precedence == self.precedence
        )

    def __hash__(self):
        return hash((self.kind, self.precedence))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.precedence!r})"


def _resolve_order(spec, names):
    """Accept 'lex', 'degrevlex', ('lex', [names...]) or a MonomialOrder."""
    if isinstance(spec, MonomialOrder):
        if sorted(spec.precedence) != list(range(len(names))):
            raise ValueError("order precedence does not cover the variables")
        return spec
    if isinstance(spec, str):
        return MonomialOrder(spec, range(len(names)))
    kind, ordered_names = spec
    index = {n: i for i, n in enumerate(names)}
    prec = []
    for n in ordered_names:
        if n not in index:
            raise ValueError(f"unknown variable {n!r} in order")
        prec.append(index[n])
    if sorted(prec) != list(range(len(names))):
        raise ValueError("order must mention every variable exactly once")
    return MonomialOrder(kind, prec)


class PolyRing:
    __slots__ = ("field", "names", "order", "_index", "_gens", "zero", "one", "_key")

    def __init__(self, field, names, order="lex"):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if "w" in names:
            raise ValueError("'w' is reserved for the cube root of unity")
        self.field = field
        self.names = names
        self.order = _resolve_order(order, names)
        self._key = self.order.key
        self._index = {n: i for i, n in enumerate(names)}
        self.zero = MultiPoly(self, ())
        one = field.one
        self.one = MultiPoly(self, (((0,) * len(names), one),))
        gens = []
        for i in range(len(names)):
            m = [0] * len(names)
            m[i] = 1
            gens.append(MultiPoly(self, ((tuple(m), one),)))
        self._gens = tuple(gens)

    @property
    def nvars(self):
        return len(self.names)

    def gens(self):
        return self._gens

    def var(self, name):
        return self._gens[self.index(name)]

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no variable {name!r} in ring {self.names}") from None

    def const(self, c):
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero
        return MultiPoly(self, (((0,) * self.nvars, c),))

    def from_dict(self, d):
        field = self.field
        terms = [(m, c) for m, c in d.items() if not field.is_zero(c)]
        terms.sort(key=lambda t: self._key(t[0]), reverse=True)
        return MultiPoly(self, tuple(terms))

    def from_terms(self, terms):
        acc = {}
        field = self.field
        for m, c in terms:
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            prev = acc.get(m)
            acc[m] = field.add(prev, c) if prev is not None else c
        return self.from_dict(acc)

    def with_order(self, order):
        return PolyRing(self.field, self.names, _resolve_order(order, self.names))

    def convert(self, p):
        """Bring a polynomial from a ring with the same names/field here."""
        if p.ring is self:
            return p
        if p.ring.names != self.names or p.ring.field != self.field:
            raise RingMismatchError("cannot convert between incompatible rings")
        return self.from_terms(p.terms)

    def parse(self, text):
        from .textform import parse_poly

        return parse_poly(text, self)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.names == self.names
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"{self.field.name}[{', '.join(self.names)}; {self.order.kind}]"


def _same_ring(a, b):
    if a.ring is b.ring:
        return a.ring
    if a.ring == b.ring:
        return a.ring
    raise RingMismatchError(f"mixed rings {a.ring!r} and {b.ring!r}")


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def leading_term(self, order=None):
        """(monomial, coefficient) maximal under `order` (ring order default)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order == self.ring.order:
            return self.terms[0]
        key = order.key
        return max(self.terms, key=lambda t: key(t[0]))

    def leading_monomial(self, order=None):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[1]

    def constant_value(self):
        if not self.terms:
            return self.ring.field.zero
        if len(self.terms) == 1 and not any(self.terms[0][0]):
            return self.terms[0][1]
        raise ValueError("polynomial is not constant")

    @property
    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def degree(self, vars=None):
        """Total degree, optionally restricted to a subset of variables.

        The zero polynomial has degree -1.
        """
        if not self.terms:
            return -1
        if vars is None:
            return max(sum(m) for m, _ in self.terms)
        idx = [self.ring.index(v) for v in vars]
        return max(sum(m[i] for i in idx) for m, _ in self.terms)

    def degree_in(self, name):
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(m[i] for m, _ in self.terms)

    def coefficients_in(self, name):
        """Coefficients of powers of one variable, as polynomials (index = power)."""
        i = self.ring.index(name)
        d = self.degree_in(name)
        if d < 0:
            return []
        buckets = [dict() for _ in range(d + 1)]
        for m, c in self.terms:
            stripped = list(m)
            e = stripped[i]
            stripped[i] = 0
            buckets[e][tuple(stripped)] = c
        return [self.ring.from_dict(b) for b in buckets]

    def variables(self):
        """Names that actually occur with positive exponent."""
        seen = set()
        for m, _ in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen.add(i)
        return tuple(self.ring.names[i] for i in sorted(seen))

    # -- arithmetic ------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, MultiPoly):
            _same_ring(self, other)
            return other
        if isinstance(other, (int, Fraction, CycRat, PrimeFieldElem)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        field = self.ring.field
        acc = dict(self.terms)
        for m, c in o.terms:
            prev = acc.get(m)
            if prev is None:
                acc[m] = c
            else:
                s = field.add(prev, c)
                if field.is_zero(s):
                    del acc[m]
                else:
                    acc[m] = s
        return self.ring.from_dict(acc)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        neg = self.ring.field.neg
        return MultiPoly(self.ring, tuple((m, neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        o = self._coerce_other(other)
        if o is None:
            return NotImplemented
        field = self.ring.field
        fmul, fadd, fzero = field.mul, field.add, field.is_zero
        a, b = self.terms, o.terms
        if len(a) > len(b):
            a, b = b, a
        acc = {}
        for m1, c1 in a:
            for m2, c2 in b:
                m = tuple(x + y for x, y in zip(m1, m2))
                prod = fmul(c1, c2)
                prev = acc.get(m)
                if prev is None:
                    acc[m] = prod
                else:
                    s = fadd(prev, prod)
                    if fzero(s):
                        del acc[m]
                    else:
                        acc[m] = s
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        """Division by a nonzero constant (scalar division only)."""
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        field = self.ring.field
        c = field.coerce(other)
        if field.is_zero(c):
            raise ZeroDivisionError("polynomial division by zero constant")
        cinv = field.inv(c)
        return MultiPoly(self.ring, tuple((m, field.mul(cc, cinv)) for m, cc in self.terms))

    def scale(self, c):
        field = self.ring.field
        c = field.coerce(c)
        if field.is_zero(c):
            return self.ring.zero
        return MultiPoly(self.ring, tuple((m, field.mul(cc, c)) for m, cc in self.terms))

    def monic(self, order=None):
        if not self.terms:
            return self
        return self / self.leading_coefficient(order)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if not (self.ring is other.ring or self.ring == other.ring):
                return False
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, CycRat, PrimeFieldElem)):
            o = self._coerce_other(other)
            return self.terms == o.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.terms))

    # -- structural operations ------------------------------------------

    def evaluate(self, point):
        """Value at a fully specified point; every occurring variable must
        be bound.  Returns a raw field element."""
        field = self.ring.field
        vals = {}
        for name, v in point.items():
            vals[self.ring.index(name)] = field.coerce(v)
        total = field.zero
        for m, c in self.terms:
            acc = c
            for i, e in enumerate(m):
                if e:
                    if i not in vals:
                        raise ValueError(f"unbound variable {self.ring.names[i]!r}")
                    acc = field.mul(acc, field.pow(vals[i], e))
            total = field.add(total, acc)
        return total

    def specialize(self, bindings):
        """Substitute variables by polynomials (or scalars); stays a polynomial."""
        ring = self.ring
        images = {}
        for name, v in bindings.items():
            if isinstance(v, RationalFunction):
                raise TypeError("specialize takes polynomial bindings; use substitute")
            if not isinstance(v, MultiPoly):
                v = ring.const(v)
            else:
                v = ring.convert(v)
            images[ring.index(name)] = v
        return _substitute_common_den(self, images, None)[0]

    def substitute(self, bindings):
        """Substitute variables by rational functions.

        Unbound variables pass through.  The result is a RationalFunction
        whose denominator is the product of the binding denominators raised
        to the degrees with which the bound variables occur.
        """
        ring = self.ring
        nums = {}
        dens = {}
        for name, v in bindings.items():
            i = ring.index(name)
            if isinstance(v, RationalFunction):
                if v.den.is_zero:
                    raise ZeroDivisionError("binding with zero denominator")
                nums[i] = ring.convert(v.num)
                dens[i] = ring.convert(v.den)
            else:
                if not isinstance(v, MultiPoly):
                    v = ring.const(v)
                else:
                    v = ring.convert(v)
                nums[i] = v
        num, den = _substitute_common_den(self, nums, dens)
        return RationalFunction(num, den)

    def map_coefficients(self, target_ring, hom):
        """Apply hom to every coefficient, rebuilding in target_ring.

        The target ring must use the same variable names (any order)."""
        if target_ring.names != self.ring.names:
            raise RingMismatchError("coefficient maps must preserve the variables")
        field = target_ring.field
        acc = {}
        for m, c in self.terms:
            v = hom(c)
            if not field.is_zero(v):
                acc[m] = v
        return target_ring.from_dict(acc)

    def __str__(self):
        from .textform import poly_to_str

        return poly_to_str(self)

    def __repr__(self):
        return f"<{self}>"


def _substitute_common_den(p, nums, dens):
    """Shared engine for specialize/substitute.

    nums: {index: numerator polynomial}; dens: {index: denominator} or None.
    Returns (numerator, denominator) with denominator = product of binding
    denominators raised to the max occurring degree of each bound variable.
    """
    ring = p.ring
    if not p.terms:
        return ring.zero, ring.one
    maxdeg = {}
    for m, _ in p.terms:
        for i in nums:
            e = m[i]
            if e and e > maxdeg.get(i, 0):
                maxdeg[i] = e
    for i in list(nums):
        if i not in maxdeg:
            maxdeg[i] = 0

    def powers(base, top):
        out = [ring.one]
        for _ in range(top):
            out.append(out[-1] * base)
        return out

    num_pows = {i: powers(nums[i], maxdeg[i]) for i in nums}
    den_pows = {}
    if dens:
        for i, d in dens.items():
            den_pows[i] = powers(d, maxdeg.get(i, 0))

    total = ring.zero
    for m, c in p.terms:
        rest = list(m)
        factor = ring.const(c)
        for i in nums:
            e = rest[i]
            rest[i] = 0
            factor = factor * num_pows[i][e]
            if i in den_pows:
                factor = factor * den_pows[i][maxdeg[i] - e]
        piece = MultiPoly(ring, ((tuple(rest), ring.field.one),)) * factor
        total = total + piece

    denominator = ring.one
    for i in den_pows:
        denominator = denominator * den_pows[i][maxdeg[i]]
    return total, denominator


def exact_div(p, q):
    """p / q when the division is exact; None otherwise.

    Dividing by the zero polynomial raises.  The check is constructive:
    the returned quotient satisfies quotient * q == p.
    """
    ring = _same_ring(p, q)
    if q.is_zero:
        raise ZeroDivisionError("exact division by zero polynomial")
    if p.is_zero:
        return ring.zero
    field = ring.field
    key = ring._key
    qm, qc = q.terms[0]
    qc_inv = field.inv(qc)
    qtail = q.terms[1:]
    rem = dict(p.terms)
    quot = {}
    # Cancel the leading term of the remainder against q's leading term
    # until the remainder is gone or the division fails.
    while rem:
        m = max(rem, key=key)
        c = rem.pop(m)
        t = tuple(a - b for a, b in zip(m, qm))
        if any(x < 0 for x in t):
            return None
        qcoef = field.mul(c, qc_inv)
        quot[t] = qcoef
        for mt, ct in qtail:
            mm = tuple(a + b for a, b in zip(t, mt))
            prev = rem.get(mm)
            delta = field.mul(qcoef, ct)
            if prev is None:
                rem[mm] = field.neg(delta)
            else:
                s = field.sub(prev, delta)
                if field.is_zero(s):
                    del rem[mm]
                else:
                    rem[mm] = s
    return ring.from_dict(quot)


def divides(monom_a, monom_b):
    """Componentwise <=: does x^a divide x^b."""
    return all(x <= y for x, y in zip(monom_a, monom_b))


def monom_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monom_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


class RationalFunction:
    """Quotient of two polynomials; equality by cross-multiplication.

    No canonical form is maintained, except that constant denominators are
    folded into the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        ring = num.ring
        if den is None:
            den = ring.one
        _same_ring(num, den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if den.is_constant:
            num = num / den.constant_value() if den != ring.one else num
            den = ring.one
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @property
    def is_zero(self):
        return self.num.is_zero

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, (int, Fraction, CycRat, PrimeFieldElem)):
            return RationalFunction(self.ring.const(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (no canonical form)")

    def __str__(self):
        if self.den == self.ring.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"<{self}>"
