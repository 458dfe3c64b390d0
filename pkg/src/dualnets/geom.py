"""Projective plane over a polynomial ring: points, joins, meets, dets.

Points and lines are length-3 tuples of ring elements (homogeneous
coordinates, scaling irrelevant).  The same cross product computes the
line through two points and the point on two lines, so most functions
take plain triples and do not care which reading applies.
"""

from __future__ import annotations


class DegenerateIntersectionError(ValueError):
    """Two coincident (or zero) lines meet in a line, not a point."""


class SingularMatrixError(ValueError):
    pass


def _ring_of(triple):
    return triple[0].ring


def cross(p, q):
    """Cross product; the join of two points, or the meet of two lines."""
    a, b, c = p
    d, e, f = q
    return (b * f - c * e, c * d - a * f, a * e - b * d)


def dot(p, q):
    a, b, c = p
    d, e, f = q
    return a * d + b * e + c * f


def is_zero_triple(p):
    return p[0].is_zero and p[1].is_zero and p[2].is_zero


def isect(a, b, c, d):
    """Intersection point of line(a, b) with line(c, d).

    Raises DegenerateIntersectionError when the two lines coincide (the
    cross of the crosses vanishes identically)."""
    p = cross(cross(a, b), cross(c, d))
    if is_zero_triple(p):
        raise DegenerateIntersectionError("lines coincide; no unique intersection")
    return p


def det3(p, q, r):
    """3x3 determinant of the rows p, q, r."""
    a, b, c = p
    d, e, f = q
    g, h, i = r
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def collinear3(p, q, r):
    """det of the three coordinate rows; zero iff the points are collinear."""
    return det3(p, q, r)


def idet(a1, a2, b1, b2, c1, c2):
    """Determinant of the matrix whose columns are the three joins
    cross(a1, a2), cross(b1, b2), cross(c1, c2).

    Vanishes exactly when the three lines are concurrent."""
    u = cross(a1, a2)
    v = cross(b1, b2)
    w = cross(c1, c2)
    # Columns u, v, w; transposing does not change the determinant.
    return det3(u, v, w)


def scale_point(p, s):
    return tuple(x * s for x in p)


def proj_equal(p, q):
    """Projective equality: all 2x2 minors of the stacked 2x3 matrix vanish.

    Works symbolically; true means equal for every specialization, which
    is the right reading for coordinate formulas."""
    a, b, c = p
    d, e, f = q
    if is_zero_triple(p) or is_zero_triple(q):
        raise ValueError("zero triple is not a projective point")
    return (a * e - b * d).is_zero and (a * f - c * d).is_zero and (b * f - c * e).is_zero


class Collineation:
    """Invertible 3x3 matrix acting on column coordinate vectors.

    The inverse is the adjugate, which equals the true inverse up to the
    scalar det, hence the same projective map."""

    __slots__ = ("rows", "ring")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("need a 3x3 matrix")
        self.rows = rows
        self.ring = rows[0][0].ring
        if self.det().is_zero:
            raise SingularMatrixError("matrix determinant is identically zero")

    @classmethod
    def from_scalars(cls, ring, entries):
        return cls(
            tuple(tuple(ring.const(x) for x in row) for row in entries)
        )

    def det(self):
        return det3(*self.rows)

    def __call__(self, point):
        if len(point) != 3:
            raise ValueError("need a coordinate triple")
        return tuple(
            row[0] * point[0] + row[1] * point[1] + row[2] * point[2]
            for row in self.rows
        )

    def __matmul__(self, other):
        if isinstance(other, Collineation):
            rows = tuple(
                tuple(
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(3)),
                        self.ring.zero,
                    )
                    for j in range(3)
                )
                for i in range(3)
            )
            return Collineation(rows)
        return NotImplemented

    def inverse(self):
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        adj = (
            (e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d),
        )
        return Collineation(adj)

    def power(self, n):
        if n < 0:
            return self.inverse().power(-n)
        ring = self.ring
        result = Collineation.from_scalars(
            ring, ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        )
        for _ in range(n):
            result = result @ self
        return result

    def __repr__(self):
        return f"Collineation({self.rows!r})"
