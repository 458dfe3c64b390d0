"""Projective incidence layer: joins, meets, determinants, collineations."""

import pytest
from hypothesis import given, settings, strategies as st

from dualnets.geom import (
    Collineation,
    DegenerateIntersectionError,
    SingularMatrixError,
    collinear3,
    cross,
    det3,
    dot,
    idet,
    isect,
    is_zero_triple,
    proj_equal,
    scale_point,
)
from dualnets.poly import PolyRing
from dualnets.scalar import QQ

R = PolyRing(QQ, ("s", "t"))
s, t = R.gens()


def _const_triple():
    coord = st.integers(-7, 7)
    return (
        st.tuples(coord, coord, coord)
        .filter(lambda p: any(p))
        .map(lambda p: tuple(R.const(c) for c in p))
    )


def test_cross_is_antisymmetric():
    p = (R.const(1), R.const(2), R.const(3))
    q = (R.const(-1), R.const(0), R.const(5))
    assert cross(p, q) == tuple(-c for c in cross(q, p))
    assert is_zero_triple(cross(p, p))


@given(_const_triple(), _const_triple())
@settings(max_examples=100)
def test_cross_orthogonality(p, q):
    j = cross(p, q)
    assert dot(j, p).is_zero
    assert dot(j, q).is_zero


@given(_const_triple(), _const_triple(), _const_triple(), _const_triple())
@settings(max_examples=100)
def test_isect_lies_on_both_lines(a, b, c, d):
    try:
        p = isect(a, b, c, d)
    except DegenerateIntersectionError:
        return
    assert dot(p, cross(a, b)).is_zero
    assert dot(p, cross(c, d)).is_zero


@given(_const_triple(), _const_triple(), _const_triple())
@settings(max_examples=100)
def test_collinearity_antisymmetry(p, q, r):
    d = collinear3(p, q, r)
    assert collinear3(q, p, r) == -d
    assert collinear3(p, r, q) == -d
    assert collinear3(r, p, q) == d  # even permutation


def test_det3_reference_value():
    rows = [tuple(R.const(c) for c in row)
            for row in ((1, 2, 3), (4, 5, 6), (7, 8, 10))]
    assert det3(*rows) == R.const(-3)


def test_collinear_points_have_zero_det():
    p = (R.const(1), R.const(2), R.const(3))
    q = (R.const(2), R.const(4), R.const(6))
    r = (R.const(0), R.const(1), R.const(1))
    assert collinear3(p, q, r).is_zero


def test_isect_degenerate_raises():
    a = (R.const(1), R.const(0), R.const(0))
    b = (R.const(0), R.const(1), R.const(0))
    with pytest.raises(DegenerateIntersectionError):
        isect(a, b, a, b)
    with pytest.raises(DegenerateIntersectionError):
        isect(a, b, b, a)


def test_idet_vanishes_on_concurrent_lines():
    center = (R.const(1), R.const(1), R.const(1))
    a = (R.const(2), R.const(0), R.const(3))
    b = (R.const(0), R.const(5), R.const(-1))
    c = (R.const(4), R.const(-2), R.const(7))
    # Three lines through one common point are concurrent.
    assert idet(center, a, center, b, center, c).is_zero


def test_idet_generic_nonzero_and_symmetries():
    pts = [tuple(R.const(c) for c in p) for p in
           ((1, 0, 0), (0, 1, 2), (0, 1, 0), (1, 0, 3), (0, 0, 1), (1, 5, 0))]
    a1, a2, b1, b2, c1, c2 = pts
    d = idet(a1, a2, b1, b2, c1, c2)
    assert not d.is_zero
    # Cyclic rotation of the three line slots is an even column permutation.
    assert idet(b1, b2, c1, c2, a1, a2) == d
    assert idet(c1, c2, a1, a2, b1, b2) == d
    # Swapping two line slots flips the sign.
    assert idet(b1, b2, a1, a2, c1, c2) == -d
    # Swapping the endpoints of one line flips the sign too.
    assert idet(a2, a1, b1, b2, c1, c2) == -d


def test_idet_symbolic_concurrency():
    # A pencil with symbolic coordinates still gives identically zero.
    center = (s, t, R.one)
    a = (R.one, R.zero, t)
    b = (R.zero, s + 1, R.one)
    c = (t, R.one, s)
    assert idet(center, a, center, b, center, c).is_zero


def test_proj_equal():
    p = (s, t, R.one)
    assert proj_equal(p, scale_point(p, 5 * s + 1))
    assert not proj_equal(p, (t, s, R.one))
    with pytest.raises(ValueError):
        proj_equal(p, (R.zero, R.zero, R.zero))


def test_collineation_action_and_composition():
    M = Collineation.from_scalars(R, ((0, 1, 0), (0, 0, 1), (1, 0, 0)))
    N = Collineation.from_scalars(R, ((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    p = (s, t, R.one)
    assert (M @ N)(p) == M(N(p))
    assert M.power(3)(p) == p


def test_collineation_inverse_is_projective_identity():
    M = Collineation.from_scalars(R, ((2, 1, 0), (1, 1, 0), (0, 3, 1)))
    p = (s + 1, t, s * t + 2)
    q = M.inverse()(M(p))
    assert proj_equal(p, q)
    assert proj_equal(M.power(-2)(M.power(2)(p)), p)


def test_collineation_rejects_singular_and_misshapen():
    with pytest.raises(SingularMatrixError):
        Collineation.from_scalars(R, ((1, 2, 3), (2, 4, 6), (0, 0, 1)))
    with pytest.raises(ValueError):
        Collineation.from_scalars(R, ((1, 2), (3, 4)))


def test_collineation_call_shape_check():
    M = Collineation.from_scalars(R, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(ValueError):
        M((s, t))
