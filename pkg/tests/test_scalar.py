"""Field-layer tests: Q, Q(w), and GF(p) arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dualnets.scalar import (
    OMEGA,
    BadPrimeError,
    CycRat,
    PrimeField,
    PrimeFieldElem,
    QQ,
    QW,
    UnsupportedPrimeError,
    cube_root_of_unity_mod,
    DEFAULT_PRIME,
    DEFAULT_PRIMES,
)

rationals = st.fractions(min_value=-(10**6), max_value=10**6, max_denominator=10**4)
cycrats = st.builds(CycRat, rationals, rationals)


def test_omega_satisfies_minimal_polynomial():
    assert OMEGA * OMEGA + OMEGA + 1 == 0
    assert OMEGA**3 == 1
    assert OMEGA != 1


def test_omega_conjugate_is_square():
    assert OMEGA.conjugate() == OMEGA * OMEGA
    assert (OMEGA * OMEGA).conjugate() == OMEGA


def test_cycrat_str_forms():
    assert str(CycRat(0)) == "0"
    assert str(CycRat(3, 0)) == "3"
    assert str(OMEGA) == "w"
    assert str(-OMEGA) == "-w"
    assert str(CycRat(1, 1)) == "1+w"
    assert str(CycRat(Fraction(1, 2), -2)) == "1/2-2*w"


def test_cycrat_mixed_arithmetic_with_int_and_fraction():
    x = CycRat(2, 3)
    assert x + 1 == CycRat(3, 3)
    assert 1 + x == CycRat(3, 3)
    assert x - Fraction(1, 2) == CycRat(Fraction(3, 2), 3)
    assert Fraction(1, 2) - x == CycRat(Fraction(-3, 2), -3)
    assert 2 * x == CycRat(4, 6)
    assert 1 / OMEGA == OMEGA**2


def test_cycrat_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycRat(1) / CycRat(0)
    with pytest.raises(ZeroDivisionError):
        CycRat(0).inverse()


def test_cycrat_hash_agrees_with_rationals():
    assert hash(CycRat(5)) == hash(5)
    assert hash(CycRat(Fraction(1, 3))) == hash(Fraction(1, 3))


@given(cycrats, cycrats, cycrats)
def test_cycrat_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(cycrats)
def test_cycrat_inverse_roundtrip(x):
    if x:
        assert x * x.inverse() == 1
        assert (1 / x) * x == CycRat(1)


@given(cycrats)
def test_cycrat_norm_is_multiplicative_with_conjugate(x):
    n = x.norm()
    assert isinstance(n, Fraction)
    assert x * x.conjugate() == CycRat(n)
    # The norm form r0^2 - r0 r1 + r1^2 is positive definite.
    assert (n == 0) == (not x)


def test_qq_coerce():
    assert QQ.coerce(3) == Fraction(3)
    assert QQ.coerce(Fraction(2, 5)) == Fraction(2, 5)
    assert QQ.coerce(CycRat(7)) == Fraction(7)
    with pytest.raises(TypeError):
        QQ.coerce(OMEGA)
    with pytest.raises(TypeError):
        QQ.coerce("3")


def test_qw_coerce_and_constants():
    assert QW.coerce(2) == CycRat(2)
    assert QW.omega == OMEGA
    assert QW.one + QW.omega + QW.omega * QW.omega == QW.zero
    with pytest.raises(TypeError):
        QW.coerce(object())


def test_field_div_by_zero_message_names_field():
    with pytest.raises(ZeroDivisionError):
        QQ.div(QQ.one, QQ.zero)
    with pytest.raises(ZeroDivisionError):
        QW.div(QW.one, QW.zero)


def test_field_equality_is_structural():
    assert QQ == QQ
    assert QW == QW
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert QQ != QW


def test_prime_field_rejects_composites():
    for n in (0, 1, 4, 91, 32004):
        with pytest.raises(ValueError):
            PrimeField(n)


def test_prime_field_basic_ops():
    F = PrimeField(7)
    assert F.add(5, 4) == 2
    assert F.sub(1, 4) == 4
    assert F.mul(3, 5) == 1
    assert F.neg(2) == 5
    assert F.inv(3) == 5
    assert F.div(1, 3) == 5
    assert F.pow(3, -1) == 5
    assert F.pow(2, 6) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_prime_field_coerce_rational():
    F = PrimeField(11)
    assert F.coerce(Fraction(1, 2)) == 6
    assert F.coerce(-1) == 10
    with pytest.raises(BadPrimeError):
        F.coerce(Fraction(1, 11))


def test_prime_field_coerce_cyclotomic():
    F = PrimeField(31)  # 31 = 1 mod 3
    w = F.coerce(OMEGA)
    assert (w * w + w + 1) % 31 == 0
    assert F.coerce(CycRat(2, 5)) == (2 + 5 * w) % 31
    G = PrimeField(23)  # 23 = 2 mod 3
    with pytest.raises(UnsupportedPrimeError):
        G.coerce(OMEGA)
    assert G.coerce(CycRat(4)) == 4  # rational part alone is fine


def test_prime_field_elem_wrapper():
    F = PrimeField(13)
    a = F.elem(9)
    b = F.elem(7)
    assert (a + b).value == 3
    assert (a - b).value == 2
    assert (a * b).value == 63 % 13
    assert (a / b) * b == a
    assert (b ** -1) * b == F.elem(1)
    assert a + 4 == 0
    assert 4 + a == F.elem(0)
    assert a.modulus == 13
    with pytest.raises(ValueError):
        a + PrimeField(17).elem(1)


def test_cube_root_of_unity_mod():
    for p in (7, 13, 31, 30013):
        w = cube_root_of_unity_mod(p)
        assert isinstance(w, PrimeFieldElem)
        assert w != 1
        assert w**3 == 1
    with pytest.raises(UnsupportedPrimeError):
        cube_root_of_unity_mod(23)
    with pytest.raises(ValueError):
        cube_root_of_unity_mod(32004)


def test_default_primes_are_prime_and_distinct():
    # These serve the rational-coefficient systems, so no cube root of
    # unity is required of them; they just have to be distinct primes
    # large enough to dodge small-denominator collisions.
    assert DEFAULT_PRIME == DEFAULT_PRIMES[0]
    assert len(set(DEFAULT_PRIMES)) == len(DEFAULT_PRIMES) >= 3
    for p in DEFAULT_PRIMES:
        assert p > 12
        PrimeField(p)  # raises if composite


@given(st.integers(-200, 200), st.integers(-200, 200), st.integers(-200, 200))
def test_prime_field_is_a_field(a, b, c):
    F = PrimeField(101)
    a, b, c = F.coerce(a), F.coerce(b), F.coerce(c)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    if not F.is_zero(a):
        assert F.mul(a, F.inv(a)) == F.one
