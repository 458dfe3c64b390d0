"""Symbolic dual-3-net constructions and their constraint systems.

Two parameterized builds live here.  The nine-element case works over
Q(omega) in u, v, x, y, a, b: a coordinate frame, one generic point per
pencil, two order-3 collineations, and six meet-derived points; the
constraints are six concurrency determinants.  The twelve-element case
works over Q in a, b, c, d1..d6: the points of the whole net are derived
by repeated intersections (later definitions overwrite earlier
provisional ones, on purpose and order-sensitively), and the constraints
are the 144 collinearity determinants filtered against a known-nonzero
determinant list.

Every intersection step is recorded with the operand values it actually
used, so the defining incidences can be re-checked after the fact even
for points that were later overwritten.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .geom import Collineation, det3, idet, isect
from .groups import CayleyTable, builtin
from .poly import MultiPoly, PolyRing, exact_div
from .scalar import QQ, QW
from .textform import poly_to_str


class ConstructionError(AssertionError):
    """An exact division or incidence that must hold by construction failed."""


@dataclass(frozen=True)
class BuildStep:
    """One recorded intersection: target := line(a,b) meet line(c,d), then
    an optional exact division of all coordinates by ``divisor``."""

    target: tuple
    a: tuple
    b: tuple
    c: tuple
    d: tuple
    divisor: object = None
    result: tuple = None


@dataclass
class NetConstruction:
    ring: PolyRing
    group: CayleyTable
    points: dict
    steps: list = field(default_factory=list)
    side_conditions: list = field(default_factory=list)
    history: dict = field(default_factory=dict)

    def point(self, label, comp):
        return self.points[(label, comp)]

    def set_point(self, label, comp, value, record=True):
        key = (label, comp)
        if record:
            self.history.setdefault(key, []).append(value)
        self.points[key] = value

    def first_value(self, label, comp):
        """The first value ever assigned to a point (its provisional form
        when it was later overwritten)."""
        return self.history[(label, comp)][0]

    def intersect(self, label, comp, a, b, c, d, divisor=None):
        p = isect(a, b, c, d)
        if divisor is not None:
            out = []
            for coord in p:
                q = exact_div(coord, divisor)
                if q is None:
                    raise ConstructionError(
                        f"coordinate of {label}_{comp} not divisible by {divisor}"
                    )
                out.append(q)
            p = tuple(out)
        self.steps.append(
            BuildStep(target=(label, comp), a=a, b=b, c=c, d=d, divisor=divisor, result=p)
        )
        self.set_point(label, comp, p)
        return p

    def require_nonzero(self, poly, reason):
        self.side_conditions.append((poly, reason))


@dataclass(frozen=True)
class ConstraintSystem:
    ring: PolyRing
    equations: tuple
    equation_labels: tuple
    nonzeros: tuple
    nonzero_labels: tuple
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for lab, eq in zip(self.equation_labels, self.equations):
            if eq.is_zero:
                raise ConstructionError(f"equation {lab} is identically zero")
        for lab, nz in zip(self.nonzero_labels, self.nonzeros):
            if nz.is_zero:
                raise ConstructionError(f"nonzero condition {lab} is identically zero")

    def to_text(self):
        lines = []
        for lab, eq in zip(self.equation_labels, self.equations):
            lines.append(f"# {lab}")
            lines.append(poly_to_str(eq))
        for lab, nz in zip(self.nonzero_labels, self.nonzeros):
            lines.append(f"# nonzero {lab}")
            lines.append(poly_to_str(nz))
        return "\n".join(lines) + "\n"


# -- the nine-element abelian case --------------------------------------


def _const_triple(ring, *vals):
    return tuple(ring.const(v) for v in vals)


@lru_cache(maxsize=None)
def build_c3c3():
    """Points and collineations of the C3xC3 dual-net construction.

    Variable order u > v > x > y > a > b matches the lex order the
    companion Groebner computation runs under."""
    ring = PolyRing(QW, ("u", "v", "x", "y", "a", "b"), order="lex")
    u, v, x, y, a, b = ring.gens()
    one = ring.one
    zero = ring.zero
    net = NetConstruction(ring=ring, group=builtin("c3c3"), points={})

    alpha = Collineation.from_scalars(ring, ((0, 0, 1), (1, 0, 0), (0, 1, 0)))
    beta = Collineation(((zero, zero, u), (v, zero, zero), (zero, one, zero)))
    net.alpha = alpha
    net.beta = beta
    alpha_inv = alpha.inverse()

    net.set_point(0, 1, _const_triple(ring, 1, 0, 0))
    net.set_point(1, 1, _const_triple(ring, 0, 1, 0))
    net.set_point(2, 1, _const_triple(ring, 0, 0, 1))

    net.set_point(3, 2, (x, y, one))
    net.set_point(4, 2, beta(net.point(3, 2)))
    net.set_point(5, 2, beta(net.point(4, 2)))

    # The third pencil is traversed against the collineation direction.
    net.set_point(0, 3, (a, b, one))
    net.set_point(1, 3, alpha_inv(net.point(0, 3)))
    net.set_point(2, 3, alpha_inv(net.point(1, 3)))

    P = net.point
    net.intersect(0, 2, P(0, 1), P(0, 3), P(1, 1), P(1, 3))
    net.intersect(1, 2, P(0, 1), P(1, 3), P(1, 1), P(2, 3))
    net.intersect(2, 2, P(0, 1), P(2, 3), P(1, 1), P(0, 3))
    net.intersect(3, 3, P(0, 1), P(3, 2), P(1, 1), P(5, 2))
    net.intersect(4, 3, P(0, 1), P(4, 2), P(1, 1), P(3, 2))
    net.intersect(5, 3, P(0, 1), P(5, 2), P(1, 1), P(4, 2))

    net.require_nonzero(a, "first coordinate of the generic third-pencil point")
    net.require_nonzero(b, "second coordinate of the generic third-pencil point")
    net.require_nonzero(u, "collineation matrix entry")
    net.require_nonzero(v, "collineation matrix entry")
    net.require_nonzero(x, "first coordinate of the generic second-pencil point")
    net.require_nonzero(y, "second coordinate of the generic second-pencil point")
    return net


def c3c3_constraints(net=None):
    """The six concurrency constraints of the C3xC3 construction.

    The first three determinants carry a forced monomial factor a*b*v*x*y
    that is divided out exactly; all six results have degree exactly 3 in
    {x, y}."""
    if net is None:
        return _c3c3_constraints_cached()
    return _c3c3_constraints_of(net)


@lru_cache(maxsize=None)
def _c3c3_constraints_cached():
    return _c3c3_constraints_of(build_c3c3())


def _c3c3_constraints_of(net):
    ring = net.ring
    P = net.point
    u, v, x, y, a, b = ring.gens()
    cofactor = a * b * v * x * y

    raw = {
        "3_1": idet(P(0, 2), P(3, 3), P(1, 2), P(4, 3), P(2, 2), P(5, 3)),
        "4_1": idet(P(0, 2), P(4, 3), P(1, 2), P(5, 3), P(2, 2), P(3, 3)),
        "5_1": idet(P(0, 2), P(5, 3), P(1, 2), P(3, 3), P(2, 2), P(4, 3)),
        "6_1": idet(P(3, 2), P(0, 3), P(4, 2), P(1, 3), P(5, 2), P(2, 3)),
        "7_1": idet(P(3, 2), P(1, 3), P(4, 2), P(2, 3), P(5, 2), P(0, 3)),
        "8_1": idet(P(3, 2), P(2, 3), P(4, 2), P(0, 3), P(5, 2), P(1, 3)),
    }
    eqs = []
    labels = []
    for lab in ("3_1", "4_1", "5_1", "6_1", "7_1", "8_1"):
        p = raw[lab]
        if lab in ("3_1", "4_1", "5_1"):
            q = exact_div(p, cofactor)
            if q is None:
                raise ConstructionError(f"constraint {lab} lacks the forced a*b*v*x*y factor")
            p = q
        if p.degree(("x", "y")) != 3:
            raise ConstructionError(f"constraint {lab} has wrong degree in x,y")
        eqs.append(p)
        labels.append(lab)
    return ConstraintSystem(
        ring=ring,
        equations=tuple(eqs),
        equation_labels=tuple(labels),
        nonzeros=tuple(p for p, _ in net.side_conditions),
        nonzero_labels=tuple(reason for _, reason in net.side_conditions),
        meta={"case": "c3c3"},
    )


# -- the twelve-element nonabelian case ---------------------------------

# Determinant triples known nonzero in any proper realization: for each
# (i, j, k) here, i*j != k in the table, so i_1, j_2, k_3 cannot be
# collinear.  Constraint determinants are reduced against these.
ALT4_NONZERO_TRIPLES = (
    (1, 2, 6), (9, 1, 10), (1, 10, 8), (5, 9, 2),
    (9, 5, 2), (1, 10, 2), (1, 3, 11), (1, 4, 12),
    (1, 5, 7), (9, 1, 12), (9, 5, 4), (5, 9, 4),
    (1, 5, 6), (1, 6, 11), (1, 9, 12), (1, 12, 4),
    (1, 5, 8), (1, 7, 3), (1, 7, 12), (5, 9, 3),
    (9, 1, 11), (1, 12, 7), (1, 9, 11), (5, 1, 6),
    (5, 1, 7), (1, 6, 2), (1, 3, 7), (1, 8, 4),
    (1, 11, 6), (5, 1, 8), (9, 5, 3), (1, 8, 10),
    (1, 11, 3), (1, 4, 8), (1, 9, 10), (1, 2, 10),
)


@lru_cache(maxsize=None)
def build_alt4():
    """Points of the Alt4 dual-net candidate over Q[a,b,c,d1..d6].

    The rows for 5..12 are first seeded with generic forms, then
    redefined by intersections in a fixed order; an intersection may use
    a point's provisional value even though the point is later
    overwritten.  The order below is load-bearing."""
    ring = PolyRing(QQ, ("a", "b", "c", "d1", "d2", "d3", "d4", "d5", "d6"), order="degrevlex")
    a, b, c, d1, d2, d3, d4, d5, d6 = ring.gens()
    one = ring.one
    net = NetConstruction(ring=ring, group=builtin("alt4"), points={})

    net.set_point(1, 1, _const_triple(ring, 1, 0, 0))
    net.set_point(1, 2, _const_triple(ring, 0, 1, 0))
    net.set_point(1, 3, _const_triple(ring, 1, -1, 0))
    net.set_point(2, 1, _const_triple(ring, 0, 1, 1))
    net.set_point(2, 2, _const_triple(ring, 1, 0, 1))
    net.set_point(2, 3, _const_triple(ring, 0, 0, 1))
    net.set_point(3, 1, (a, b, c))
    net.set_point(3, 3, (a, one + b, c))
    net.set_point(5, 1, (d1, d2, one))
    net.set_point(5, 3, (d1, d3, one))
    net.set_point(9, 1, (d4, d5, one))
    net.set_point(9, 3, (d4, d6, one))

    P = net.point
    # The 2x2 subnet on rows 1..4; the stated divisors are exact.
    net.intersect(3, 2, P(3, 1), P(1, 3), P(1, 1), P(3, 3), divisor=c)
    net.intersect(4, 2, P(3, 1), P(2, 3), P(2, 1), P(3, 3), divisor=a)
    net.intersect(4, 1, P(3, 2), P(2, 3), P(2, 2), P(3, 3), divisor=one + b)
    net.intersect(4, 3, P(1, 1), P(4, 2), P(2, 1), P(3, 2), divisor=one + b - c)
    net.require_nonzero(c, "third coordinate of the generic 3_1")
    net.require_nonzero(a, "first coordinate of the generic 3_1")
    net.require_nonzero(one + b, "second coordinate of 3_3")
    net.require_nonzero(one + b - c, "divisor forced by the 4_3 intersection")

    # Provisional second-column points for rows 5 and 9.
    net.intersect(5, 2, P(1, 1), P(5, 3), P(9, 1), P(1, 3))
    net.intersect(9, 2, P(1, 1), P(9, 3), P(5, 1), P(1, 3))

    # Sequential redefinitions; each line reads the current values,
    # including provisional ones and ones redefined just above it.
    schedule = (
        ((5, 1), (9, 2), (1, 3), (1, 2), (5, 3)),
        ((5, 2), (9, 1), (1, 3), (1, 1), (5, 3)),
        ((5, 3), (5, 1), (1, 2), (1, 1), (5, 2)),
        ((6, 1), (9, 2), (4, 3), (2, 2), (5, 3)),
        ((6, 2), (9, 1), (2, 3), (4, 1), (5, 3)),
        ((6, 3), (5, 1), (2, 2), (4, 1), (5, 2)),
        ((7, 1), (9, 2), (2, 3), (3, 2), (5, 3)),
        ((7, 2), (9, 1), (3, 3), (2, 1), (5, 3)),
        ((7, 3), (5, 1), (3, 2), (2, 1), (5, 2)),
        ((8, 1), (9, 2), (3, 3), (4, 2), (5, 3)),
        ((8, 2), (9, 1), (4, 3), (3, 1), (5, 3)),
        ((8, 3), (5, 1), (4, 2), (3, 1), (5, 2)),
        ((9, 1), (5, 2), (1, 3), (1, 2), (9, 3)),
        ((9, 2), (5, 1), (1, 3), (1, 1), (9, 3)),
        ((9, 3), (9, 1), (1, 2), (1, 1), (9, 2)),
        ((10, 1), (5, 2), (3, 3), (2, 2), (9, 3)),
        ((10, 2), (5, 1), (2, 3), (3, 1), (9, 3)),
        ((10, 3), (9, 1), (2, 2), (3, 1), (9, 2)),
        ((11, 1), (5, 2), (4, 3), (3, 2), (9, 3)),
        ((11, 2), (5, 1), (3, 3), (4, 1), (9, 3)),
        ((11, 3), (9, 1), (3, 2), (4, 1), (9, 2)),
        ((12, 1), (5, 2), (2, 3), (4, 2), (9, 3)),
        ((12, 2), (5, 1), (4, 3), (2, 1), (9, 3)),
        ((12, 3), (9, 1), (4, 2), (2, 1), (9, 2)),
    )
    for target, ka, kb, kc, kd in schedule:
        net.intersect(target[0], target[1], P(*ka), P(*kb), P(*kc), P(*kd))
    return net


def alt4_collinearity_det(net, i, j, k):
    """det of the rows i_1, j_2, k_3; zero iff the triple is collinear."""
    return det3(net.point(i, 1), net.point(j, 2), net.point(k, 3))


def _saturate(p, divisors):
    """Divide out every listed divisor as often as it exactly divides.

    Constant divisors are skipped (dividing by them would never
    terminate and does not change the generated ideal)."""
    changed = True
    while changed:
        changed = False
        for d in divisors:
            if d.is_constant:
                continue
            while True:
                q = exact_div(p, d)
                if q is None:
                    break
                p = q
                changed = True
    return p


def alt4_constraints(net=None):
    """The reduced collinearity system of the Alt4 candidate.

    All 144 triple determinants are formed; identically-zero ones are
    dropped; each survivor is divided, repeatedly and exactly, by every
    determinant of the known-nonzero list it is divisible by."""
    if net is None:
        return _alt4_constraints_cached()
    return _alt4_constraints_of(net)


@lru_cache(maxsize=None)
def _alt4_constraints_cached():
    return _alt4_constraints_of(build_alt4())


def _alt4_constraints_of(net):
    table = net.group

    ydets = []
    ylabels = []
    for (i, j, k) in ALT4_NONZERO_TRIPLES:
        if table.mul(i, j) == k:
            raise ConstructionError(f"nonzero triple ({i},{j},{k}) is actually collinear")
        d = alt4_collinearity_det(net, i, j, k)
        if d.is_zero:
            raise ConstructionError(f"nonzero determinant d({i},{j},{k}) vanishes identically")
        ydets.append(d)
        ylabels.append(f"d_{i}_{j}_{k}")

    eqs = []
    labels = []
    raw_nonzero = 0
    for i in table.labels:
        for j in table.labels:
            k = table.mul(i, j)
            d = alt4_collinearity_det(net, i, j, k)
            if d.is_zero:
                continue
            raw_nonzero += 1
            eqs.append(_saturate(d, ydets))
            labels.append(f"d_{i}_{j}_{k}")

    side_nz = [p for p, _ in net.side_conditions]
    side_labels = [f"divisor: {reason}" for _, reason in net.side_conditions]
    return ConstraintSystem(
        ring=net.ring,
        equations=tuple(eqs),
        equation_labels=tuple(labels),
        nonzeros=tuple(ydets) + tuple(side_nz),
        nonzero_labels=tuple(ylabels) + tuple(side_labels),
        meta={"case": "alt4", "raw_nonzero_count": raw_nonzero},
    )
