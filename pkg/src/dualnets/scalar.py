"""Exact coefficient arithmetic: rationals, the cyclotomic field Q(w), prime fields.

Three fields are provided, all with eager normalization so equality is
structural:

* ``QQ`` -- the rationals.  Elements are :class:`fractions.Fraction`, which
  already guarantees lowest terms and a positive denominator.
* ``QW`` -- Q(w) for a primitive cube root of unity w, reduced against
  w**2 = -1 - w.  Elements are :class:`CycRat`, a rank-2 module over QQ.
* ``PrimeField(p)`` -- integers mod a prime p, elements kept as canonical
  ints in [0, p).  :class:`PrimeFieldElem` bundles a value with its field
  for standalone arithmetic; polynomial rings work on the raw ints through
  the field-method protocol below, which keeps the modular hot loops cheap.

Every field object implements the same small protocol (``zero``, ``one``,
``coerce``, ``add``, ``sub``, ``mul``, ``neg``, ``div``, ``inv``,
``is_zero``, ``eq``, ``pow``, ``to_str``) so rings and the elimination
engine never special-case the coefficient type.
"""

from __future__ import annotations

from fractions import Fraction

# Arbitrary-precision rational; reduced form and positive denominator are
# invariants of Fraction itself.
Rational = Fraction


class FieldError(ArithmeticError):
    pass


class UnsupportedPrimeError(FieldError):
    """Raised when p does not admit the requested structure (e.g. no cube
    root of unity because p is not 1 mod 3)."""


class BadPrimeError(FieldError):
    """Raised when a rational cannot be mapped mod p because p divides a
    denominator."""


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational")


class CycRat:
    """Element r0 + r1*w of Q(w), with w**2 + w + 1 = 0."""

    __slots__ = ("r0", "r1")

    def __init__(self, r0=0, r1=0):
        self.r0 = _as_fraction(r0)
        self.r1 = _as_fraction(r1)

    @property
    def is_rational(self):
        return self.r1 == 0

    def conjugate(self):
        """Image under the automorphism w -> w**2 = -1 - w."""
        return CycRat(self.r0 - self.r1, -self.r1)

    def norm(self):
        """self * self.conjugate(), always a rational."""
        return self.r0 * self.r0 - self.r0 * self.r1 + self.r1 * self.r1

    def _coerce(self, other):
        if isinstance(other, CycRat):
            return other
        if isinstance(other, (int, Fraction)):
            return CycRat(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycRat(self.r0 + o.r0, self.r1 + o.r1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycRat(self.r0 - o.r0, self.r1 - o.r1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycRat(o.r0 - self.r0, o.r1 - self.r1)

    def __neg__(self):
        return CycRat(-self.r0, -self.r1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (r0 + r1 w)(s0 + s1 w) with w**2 = -1 - w
        a, b, c, d = self.r0, self.r1, o.r0, o.r1
        bd = b * d
        return CycRat(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        c = self.conjugate()
        return CycRat(c.r0 / n, c.r1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = CycRat(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.r0 == o.r0 and self.r1 == o.r1

    def __hash__(self):
        # Agree with Fraction/int hashing on rational values.
        if self.r1 == 0:
            return hash(self.r0)
        return hash((self.r0, self.r1))

    def __bool__(self):
        return bool(self.r0) or bool(self.r1)

    def __repr__(self):
        return f"CycRat({self.r0!r}, {self.r1!r})"

    def __str__(self):
        if self.r1 == 0:
            return str(self.r0)
        if self.r1 == 1:
            wpart = "w"
        elif self.r1 == -1:
            wpart = "-w"
        else:
            wpart = f"{self.r1}*w"
        if self.r0 == 0:
            return wpart
        sep = "+" if not wpart.startswith("-") else ""
        return f"{self.r0}{sep}{wpart}"


OMEGA = CycRat(0, 1)


class _Field:
    """Default field-method protocol for element types with operators."""

    def coerce(self, x):  # pragma: no cover - overridden everywhere
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        if self.is_zero(b):
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return a / b

    def inv(self, a):
        return self.div(self.one, a)

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b

    def pow(self, a, n):
        if n < 0:
            return self.inv(self.pow(a, -n))
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def to_str(self, a):
        return str(a)

    def __repr__(self):
        return self.name


class RationalField(_Field):
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, CycRat) and x.is_rational:
            return x.r0
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class CyclotomicField(_Field):
    name = "QW"
    zero = CycRat(0)
    one = CycRat(1)
    omega = OMEGA

    def coerce(self, x):
        if isinstance(x, CycRat):
            return x
        if isinstance(x, (int, Fraction)):
            return CycRat(x)
        raise TypeError(f"cannot coerce {x!r} into Q(w)")

    def __eq__(self, other):
        return isinstance(other, CyclotomicField)

    def __hash__(self):
        return hash("QW")


QQ = RationalField()
QW = CyclotomicField()


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # Deterministic Miller-Rabin for n < 3.3e24 with the bases above.
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeFieldElem:
    """A residue together with its field, for standalone GF(p) arithmetic."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value % field.p
        self.field = field

    @property
    def modulus(self):
        return self.field.p

    def _val(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.field.p != self.field.p:
                raise ValueError("mixed prime moduli")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value + v, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value - v, self.field)

    def __rsub__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(v - self.value, self.field)

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.field)

    def __mul__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value * v, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(self.value * self.field.inv(v), self.field)

    def __rtruediv__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return PrimeFieldElem(v * self.field.inv(self.value), self.field)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return PrimeFieldElem(pow(self.field.inv(self.value), -n, self.field.p), self.field)
        return PrimeFieldElem(pow(self.value, n, self.field.p), self.field)

    def __eq__(self, other):
        v = self._val(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


class PrimeField(_Field):
    """GF(p) with raw-int element representation."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        p = self.p
        if isinstance(x, int):
            return x % p
        if isinstance(x, PrimeFieldElem):
            if x.field.p != p:
                raise ValueError("mixed prime moduli")
            return x.value
        if isinstance(x, Fraction):
            return self.from_rational(x)
        if isinstance(x, CycRat):
            return self.from_cyclotomic(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def from_rational(self, fr):
        if fr.denominator % self.p == 0:
            raise BadPrimeError(f"denominator {fr.denominator} vanishes mod {self.p}")
        return fr.numerator * pow(fr.denominator, -1, self.p) % self.p

    def from_cyclotomic(self, cy):
        if cy.r1 == 0:
            return self.from_rational(cy.r0)
        w = self.omega  # raises UnsupportedPrimeError when absent
        return (self.from_rational(cy.r0) + self.from_rational(cy.r1) * w) % self.p

    @property
    def omega(self):
        """A fixed nontrivial cube root of unity mod p (smallest generator)."""
        cached = getattr(self, "_omega", None)
        if cached is None:
            cached = cube_root_of_unity_mod(self.p).value
            self._omega = cached
        return cached

    def elem(self, x):
        return PrimeFieldElem(self.coerce(x), self)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


# Defaults sized so products of two elements fit comfortably in 64 bits.
DEFAULT_PRIME = 32003
DEFAULT_PRIMES = (32003, 31013, 30011)


def cube_root_of_unity_mod(p):
    """A nontrivial solution of w**3 = 1 in GF(p).

    Exists exactly when p = 1 mod 3; computed as g**((p-1)/3) for the first
    base g that gives a nontrivial power, so the choice is deterministic.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 3 != 1:
        raise UnsupportedPrimeError(f"no cube root of unity mod {p}: {p} != 1 mod 3")
    field = PrimeField(p)
    e = (p - 1) // 3
    for g in range(2, p):
        w = pow(g, e, p)
        if w != 1:
            assert (w * w + w + 1) % p == 0
            return PrimeFieldElem(w, field)
    raise AssertionError("unreachable for prime p")
