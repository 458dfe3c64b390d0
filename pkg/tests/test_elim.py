"""Elimination engine: packed monomials, Buchberger, certificates, resultants."""

import pytest
from hypothesis import given, settings, strategies as st

from dualnets.elim import (
    BudgetExceededError,
    CertificationError,
    GroebnerBasis,
    buchberger,
    certify_basis,
    det_polymatrix,
    express_over_inputs,
    ideal_contains,
    normal_form,
    reduce_extended,
    resultant,
    spoly,
    sylvester_matrix,
    _codec_for,
    _small_codec_for,
)
from dualnets.poly import MonomialOrder, PolyRing, divides as tuple_divides, monom_lcm, monom_mul
from dualnets.scalar import QQ, PrimeField

R = PolyRing(QQ, ("x", "y", "z"))
x, y, z = R.gens()


# -- packed monomial codec ----------------------------------------------

monoms3 = st.tuples(st.integers(0, 40), st.integers(0, 40), st.integers(0, 40))
orders3 = st.sampled_from(
    [
        MonomialOrder("lex", (0, 1, 2)),
        MonomialOrder("lex", (2, 0, 1)),
        MonomialOrder("degrevlex", (0, 1, 2)),
        MonomialOrder("degrevlex", (1, 2, 0)),
    ]
)


@given(orders3, monoms3)
def test_codec_pack_unpack_roundtrip(order, m):
    codec = _codec_for(3, order)
    assert codec.unpack(codec.pack(m)) == m


@given(orders3, monoms3, monoms3)
def test_codec_int_comparison_is_the_monomial_order(order, a, b):
    codec = _codec_for(3, order)
    ka, kb = order.key(a), order.key(b)
    pa, pb = codec.pack(a), codec.pack(b)
    assert (pa < pb) == (ka < kb)
    assert (pa == pb) == (a == b)


@given(orders3, monoms3, monoms3)
def test_codec_divides_matches_tuples(order, a, b):
    codec = _codec_for(3, order)
    assert codec.divides(codec.pack(a), codec.pack(b)) == tuple_divides(a, b)


@given(orders3, monoms3, monoms3)
def test_codec_mul_quo_lcm(order, a, b):
    codec = _codec_for(3, order)
    pa, pb = codec.pack(a), codec.pack(b)
    prod = codec.mul(pa, pb)
    assert codec.unpack(prod) == monom_mul(a, b)
    assert codec.quo(prod, pb) == pa
    assert codec.unpack(codec.lcm(pa, pb)) == monom_lcm(a, b)
    assert codec.deg(pa) == sum(a)


def test_codec_overflow_guard():
    codec = _codec_for(3, MonomialOrder("lex", (0, 1, 2)))
    with pytest.raises(OverflowError):
        codec.pack((1 << 20, 0, 0))


# -- division -----------------------------------------------------------


def test_normal_form_reference():
    basis = [x**2 - 1, x * y - 1]
    # Among usable reducers the smallest leading monomial wins, so x^2*y
    # goes through x*y - 1 (lm x*y < x^2 in lex), not through x^2 - 1.
    assert normal_form(x**2 * y, basis) == x
    assert normal_form(x**2, basis) == R.one
    assert normal_form(x**3, basis) == x
    assert normal_form(z, basis) == z


def test_normal_form_irreducible_under_basis():
    basis = [x**2 + y, y**2 + z]
    p = (x**2 + y) * (x + 1) * y + (y**2 + z) * z + x * y + z + 3
    r = normal_form(p, basis)
    for m, _ in r.terms:
        assert not tuple_divides((2, 0, 0), m)
        assert not tuple_divides((0, 2, 0), m)


@st.composite
def _polys(draw, max_terms=4, max_exp=3):
    terms = draw(
        st.lists(
            st.tuples(
                st.tuples(*[st.integers(0, max_exp)] * 3), st.integers(-6, 6)
            ),
            max_size=max_terms,
        )
    )
    return R.from_terms(terms)


@given(_polys(), _polys(), _polys(), _polys())
@settings(max_examples=50, deadline=None)
def test_reduce_extended_is_a_division_identity(p, g1, g2, g3):
    basis = [g for g in (g1, g2, g3) if not g.is_zero]
    if not basis:
        return
    rem, quots = reduce_extended(p, basis)
    acc = rem
    for q, g in zip(quots, basis):
        acc = acc + q * g
    assert acc == p
    assert rem == normal_form(p, basis)


def test_spoly_cancels_leading_terms():
    f = x**2 * y + z
    g = x * y**2 - 1
    s = spoly(f, g)
    # The lcm monomial x^2 y^2 must be gone.
    assert all(m != (2, 2, 0) for m, _ in s.terms)
    assert s == z * y - (-x)  # (1/1) y*f - (1/1) x*g = yz + x


# -- Buchberger ---------------------------------------------------------


def test_textbook_basis():
    gb = buchberger([x**2 - 1, x * y - 1])
    gens = set(gb.generators)
    assert x - y in gens
    assert y**2 - 1 in gens
    assert ideal_contains(x - y, gb)
    assert not ideal_contains(x, gb)


def test_symmetric_system_lex_basis():
    gb = buchberger([x + y + z, x * y + y * z + z * x, x * y * z - 1])
    assert [str(g) for g in gb.generators] == [
        "z^3 - 1",
        "y^2 + y*z + z^2",
        "x + y + z",
    ]


def test_basis_is_minimal_monic_and_sorted():
    gb = buchberger([x**2 + y, x * y + z, y**3 - z])
    lms = [g.leading_monomial(gb.order) for g in gb.generators]
    assert lms == sorted(lms, key=gb.order.key)
    for i, a in enumerate(lms):
        assert gb.generators[i].leading_coefficient(gb.order) == 1
        for j, b in enumerate(lms):
            if i != j:
                assert not tuple_divides(a, b)


def test_ideal_membership_of_products():
    gb = buchberger([x**2 - y, y**2 - z])
    p = (x**2 - y) * (x + y + 1) + (y**2 - z) * (z**3 - x)
    assert ideal_contains(p, gb)
    assert not ideal_contains(p + 1, gb)


def test_extended_basis_cofactors_recombine():
    inputs = [x**2 - y, x * y - z, y**3 + z]
    gb = buchberger(inputs, extended=True)
    assert gb.cofactors is not None
    for g, row in zip(gb.generators, gb.cofactors):
        acc = R.zero
        for c, f in zip(row, gb.inputs):
            acc = acc + c * f
        assert acc == g


def test_express_over_inputs():
    inputs = [x**2 - y, y**2 - z]
    gb = buchberger(inputs, extended=True)
    p = (x**2 - y) * y + (y**2 - z) * (x + 3) + (z + 2)
    rem, cofs = express_over_inputs(p, gb)
    assert rem == z + 2
    acc = rem
    for c, f in zip(cofs, gb.inputs):
        acc = acc + c * f
    assert acc == p
    plain = buchberger(inputs)
    with pytest.raises(ValueError):
        express_over_inputs(p, plain)


def test_degrevlex_route():
    drl = R.with_order("degrevlex")
    a, b, c = drl.gens()
    gb = buchberger([a**2 + b * c, b**2 - c**2], order=drl.order)
    assert gb.order.kind == "degrevlex"
    assert ideal_contains((a**2 + b * c) * b, gb)


def test_unknown_selection_rejected():
    with pytest.raises(ValueError):
        buchberger([x], selection="fifo")
    with pytest.raises(ValueError):
        buchberger([])


def test_budget_enforced():
    # Zero budget trips on the first scheduled pair.
    with pytest.raises(BudgetExceededError) as e:
        buchberger(
            [x**3 - 2 * x * y, x**2 * y - 2 * y**2 + x, y**3 + x * z, z**2 * x - y],
            budget_secs=0.0,
        )
    assert e.value.basis_size is not None
    assert e.value.pairs_left is not None
    assert e.value.elapsed is not None


def test_modular_leading_monomials_agree_with_rational_run():
    gens_q = [x**2 + y - 1, x * y + z, y * z - 2]
    gb_q = buchberger(gens_q)
    lms_q = sorted(g.leading_monomial(gb_q.order) for g in gb_q.generators)
    for p in (32003, 31013, 30011):
        F = PrimeField(p)
        S = PolyRing(F, R.names, R.order)
        gens_p = [g.map_coefficients(S, F.coerce) for g in gens_q]
        gb_p = buchberger(gens_p)
        lms_p = sorted(g.leading_monomial(gb_p.order) for g in gb_p.generators)
        assert lms_p == lms_q


def test_certification_rejects_non_basis():
    fake = GroebnerBasis(
        ring=R,
        order=R.order,
        generators=(x**2 - 1, x * y - 1),  # not closed under S-polynomials
        inputs=(x**2 - 1, x * y - 1),
    )
    with pytest.raises(CertificationError):
        certify_basis(fake)


def test_certification_rejects_wrong_ideal():
    fake = GroebnerBasis(ring=R, order=R.order, generators=(x,), inputs=(y,))
    with pytest.raises(CertificationError):
        certify_basis(fake)


def test_certification_rejects_bad_cofactors():
    gb = buchberger([x**2 - y, y**2 - z], extended=True)
    bad = GroebnerBasis(
        ring=gb.ring,
        order=gb.order,
        generators=gb.generators,
        inputs=gb.inputs,
        cofactors=tuple(tuple(c + 1 for c in row) for row in gb.cofactors),
    )
    with pytest.raises(CertificationError):
        certify_basis(bad)


def test_certify_accepts_emitted_bases():
    gb = buchberger([x**2 + y * z - 1, y**2 - x, z**2 - y], extended=True)
    certify_basis(gb)  # must not raise


# -- vectorized reduction route -----------------------------------------

F32003 = PrimeField(32003)

# Kept small enough that products also fit the 31-per-variable packing cap.
small_monoms3 = st.tuples(st.integers(0, 10), st.integers(0, 10), st.integers(0, 10))


@given(orders3, small_monoms3, small_monoms3)
def test_small_codec_agrees_with_reference_codec(order, a, b):
    big = _codec_for(3, order)
    small = _small_codec_for(3, order)
    assert small.unpack(small.pack(a)) == a
    assert (small.pack(a) < small.pack(b)) == (big.pack(a) < big.pack(b))
    assert small.divides(small.pack(a), small.pack(b)) == big.divides(
        big.pack(a), big.pack(b)
    )
    assert small.deg(small.pack(a)) == sum(a)
    pab = small.mul(small.pack(a), small.pack(b))
    assert small.unpack(pab) == tuple(i + j for i, j in zip(a, b))
    assert small.quo(pab, small.pack(b)) == small.pack(a)
    assert small.unpack(small.lcm(small.pack(a), small.pack(b))) == tuple(
        max(i, j) for i, j in zip(a, b)
    )


def test_small_codec_exponent_cap():
    small = _small_codec_for(2, MonomialOrder("lex", (0, 1)))
    with pytest.raises(OverflowError):
        small.pack((32, 0))
    with pytest.raises(OverflowError):
        _small_codec_for(11, MonomialOrder("lex", tuple(range(11))))


def _mod_ring(names, order="lex"):
    S = PolyRing(F32003, names, order)
    return S, S.gens()


def test_matrix_route_matches_pair_by_pair_route():
    for order in ("lex", "degrevlex"):
        S, (a, b, c) = _mod_ring(("x", "y", "z"), order)
        gens = [a + b + c, a * b + b * c + c * a, a * b * c - 1]
        assert (
            buchberger(gens).generators
            == buchberger(gens, method="matrix").generators
        )


def test_matrix_route_on_random_systems():
    import random

    rnd = random.Random(11)
    S, gens = _mod_ring(("x", "y", "z"), "degrevlex")
    for _ in range(4):
        sys_ = []
        for _ in range(3):
            p = S.zero
            for _ in range(5):
                t = S.one * rnd.randrange(1, 32003)
                for g in gens:
                    t = t * g ** rnd.randrange(0, 3)
                p = p + t
            sys_.append(p)
        assert (
            buchberger(sys_).generators
            == buchberger(sys_, method="matrix").generators
        )


def test_matrix_certifier_accepts_and_rejects():
    S, (a, b, c) = _mod_ring(("x", "y", "z"), "degrevlex")
    gb = buchberger([a**2 + b * c - 1, b**2 - a, c**2 - b], method="matrix")
    certify_basis(gb, method="matrix")  # must not raise
    certify_basis(gb)  # the two certifiers accept the same objects
    broken = GroebnerBasis(
        ring=gb.ring,
        order=gb.order,
        generators=gb.generators[:-1] + (gb.generators[-1] + a,),
        inputs=gb.inputs,
    )
    with pytest.raises(CertificationError):
        certify_basis(broken, method="matrix")
    wrong_ideal = GroebnerBasis(
        ring=S, order=S.order, generators=(a,), inputs=(b,)
    )
    with pytest.raises(CertificationError):
        certify_basis(wrong_ideal, method="matrix")


def test_matrix_route_rejects_unsupported_setups():
    with pytest.raises(ValueError):
        buchberger([x**2 - 1, x * y - 1], method="matrix")  # rational field
    S, (a, b, c) = _mod_ring(("x", "y", "z"))
    with pytest.raises(ValueError):
        buchberger([a * b - 1], method="matrix", extended=True)
    with pytest.raises(ValueError):
        buchberger([a * b - 1], method="newton")


def test_matrix_route_honors_budget():
    S, (a, b, c) = _mod_ring(("x", "y", "z"), "degrevlex")
    with pytest.raises(BudgetExceededError):
        buchberger(
            [a**3 - 2 * a * b, a**2 * b - 2 * b**2 + a, b**3 + a * c],
            budget_secs=0.0,
            method="matrix",
        )


# -- determinants and resultants ---------------------------------------


def test_det_polymatrix_matches_expansion():
    rows = [[x, y, R.one], [R.zero, z, x], [y, R.one, R.zero]]
    expected = (
        x * (z * R.zero - x * R.one)
        - y * (R.zero * R.zero - x * y)
        + R.one * (R.zero * R.one - z * y)
    )
    assert det_polymatrix(rows) == expected


def test_det_polymatrix_bareiss_vs_laplace():
    # 4x4 with a zero pivot on the diagonal to force a row swap.
    m = [
        [R.zero, x, R.one, y],
        [x, R.one, R.zero, z],
        [y, R.zero, z, R.one],
        [R.one, z, y, x],
    ]

    def laplace(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = R.zero
        for j in range(n):
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = rows[0][j] * laplace(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    assert det_polymatrix(m) == laplace(m)
    with pytest.raises(ValueError):
        det_polymatrix([[x, y], [x]])
    with pytest.raises(ValueError):
        det_polymatrix([])


def test_sylvester_shape():
    f = x**2 * z + y  # degree 2 in x
    g = x**3 - z  # degree 3 in x
    m = sylvester_matrix(f, g, "x")
    assert len(m) == 5 and all(len(r) == 5 for r in m)
    with pytest.raises(ValueError):
        sylvester_matrix(f, y + 1, "x")


def test_resultant_of_common_root_vanishes():
    f = (x - y) * (x + z)
    g = (x - y) * (x - 1)
    assert resultant(f, g, "x").is_zero


def test_resultant_reference_value():
    T = PolyRing(QQ, ("t", "u", "v"))
    t, u, v = T.gens()
    # Classic parametrization check: eliminating t from t^2-u, t^3-v.
    assert resultant(t**2 - u, t**3 - v, "t") == v**2 - u**3


def test_resultant_lies_in_elimination_ideal():
    f = x**2 + y**2 - 1
    g = x * y - 1
    r = resultant(f, g, "x")
    assert r.degree_in("x") <= 0
    gb = buchberger([f, g])  # lex x > y > z eliminates x first
    assert ideal_contains(r, gb)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=40, deadline=None)
def test_resultant_multiplicative_in_first_slot(a, b, c, d):
    f = x - a
    g = x - b
    h = x**2 + c * x + d
    assert resultant(f * g, h, "x") == resultant(f, h, "x") * resultant(g, h, "x")
