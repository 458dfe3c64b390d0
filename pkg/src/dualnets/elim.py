"""Polynomial elimination: Groebner bases, normal forms, resultants.

The Buchberger loop keeps every basis element monic, prunes pairs with the
Gebauer-Moeller criteria, and reduces S-polynomials fully.  With
``extended=True`` it also tracks, for every basis element, cofactors over
the original inputs, so membership certificates can be re-multiplied and
checked exactly.

Every basis that leaves :func:`buchberger` has already passed a
certification pass: all pairwise S-polynomials reduce to zero, every
input reduces to zero, and (extended runs) the cofactor identities
re-multiply to the generators.  The pass prepares its reducers afresh
from the emitted polynomials and applies no pair criteria, so it
double-checks the optimized loop rather than trusting it.

Internally exponent vectors are packed into single integers so that
integer comparison is the monomial order, integer addition (up to a fixed
constant) is monomial multiplication, and divisibility is one masked
subtraction; a heap of packed keys finds the working leading term
without re-sorting.  Exponents must stay below 2^19 per variable, far
beyond anything the intended workloads produce.
"""

from __future__ import annotations

import heapq
import time
from bisect import bisect_right
from dataclasses import dataclass

from .poly import MultiPoly, RingMismatchError, monom_lcm
from .scalar import PrimeField


class CertificationError(AssertionError):
    """A computed basis failed its own certificate; indicates an engine bug."""


class BudgetExceededError(RuntimeError):
    def __init__(self, message, basis_size=None, pairs_left=None, elapsed=None):
        super().__init__(message)
        self.basis_size = basis_size
        self.pairs_left = pairs_left
        self.elapsed = elapsed


@dataclass(frozen=True)
class GroebnerBasis:
    ring: object
    order: object
    generators: tuple
    inputs: tuple
    cofactors: tuple | None = None

    def normal_form(self, p):
        return normal_form(p, self.generators, self.order)

    def contains(self, p):
        return self.normal_form(p).is_zero

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# -- packed monomials ---------------------------------------------------

_FIELD_BITS = 20
_FIELD_MASK = (1 << _FIELD_BITS) - 1
_CMPL = (1 << (_FIELD_BITS - 1)) - 1


class _Codec:
    """Packs exponent tuples into integers that mirror a monomial order.

    lex: exponents in precedence order, most significant first.
    degrevlex: a total-degree field on top, below it the complemented
    exponents in reversed precedence, so that the natural int order is
    exactly the monomial order in both cases.  Products are sums shifted
    by ``mulconst``; divisibility is a guard-bit masked subtraction.
    """

    __slots__ = ("n", "kind", "perm", "guards", "lowmask", "mulconst", "_shifts")

    def __init__(self, nvars, order):
        self.n = nvars
        self.kind = order.kind
        self.perm = order.precedence
        B = _FIELD_BITS
        self.guards = sum(1 << (t * B + B - 1) for t in range(nvars))
        if self.kind == "lex":
            self._shifts = tuple((nvars - 1 - t) * B for t in range(nvars))
            self.lowmask = 0
            self.mulconst = 0
        else:
            self._shifts = tuple(t * B for t in range(nvars))
            self.lowmask = (1 << (nvars * B)) - 1
            self.mulconst = sum(_CMPL << s for s in self._shifts)

    def pack(self, m):
        perm = self.perm
        shifts = self._shifts
        v = 0
        if self.kind == "lex":
            for t in range(self.n):
                e = m[perm[t]]
                if e > _CMPL:
                    raise OverflowError(f"exponent {e} too large to pack")
                v |= e << shifts[t]
            return v
        for t in range(self.n):
            e = m[perm[t]]
            if e > _CMPL:
                raise OverflowError(f"exponent {e} too large to pack")
            v |= (_CMPL - e) << shifts[t]
        return v | (sum(m) << (self.n * _FIELD_BITS))

    def unpack(self, v):
        out = [0] * self.n
        perm = self.perm
        shifts = self._shifts
        if self.kind == "lex":
            for t in range(self.n):
                out[perm[t]] = (v >> shifts[t]) & _FIELD_MASK
        else:
            for t in range(self.n):
                out[perm[t]] = _CMPL - ((v >> shifts[t]) & _FIELD_MASK)
        return tuple(out)

    def deg(self, v):
        if self.kind == "degrevlex":
            return v >> (self.n * _FIELD_BITS)
        return sum((v >> s) & _FIELD_MASK for s in self._shifts)

    def divides(self, a, b):
        """Does monomial a divide monomial b?"""
        if self.kind == "lex":
            d = b - a
        else:
            low = self.lowmask
            d = (a & low) - (b & low)
        return d >= 0 and not (d & self.guards)

    def mul(self, a, b):
        return a + b - self.mulconst

    def quo(self, a, b):
        """a divided by b; only meaningful when b divides a."""
        return a - b + self.mulconst

    def lcm(self, a, b):
        ea = self.unpack(a)
        eb = self.unpack(b)
        return self.pack(tuple(x if x >= y else y for x, y in zip(ea, eb)))


_codec_cache = {}


def _codec_for(nvars, order):
    k = (nvars, order.kind, order.precedence)
    c = _codec_cache.get(k)
    if c is None:
        c = _codec_cache[k] = _Codec(nvars, order)
    return c


_SMALL_BITS = 6
_SMALL_CMPL = (1 << (_SMALL_BITS - 1)) - 1  # 31: per-variable exponent cap


class _SmallCodec:
    """Same layout as :class:`_Codec` squeezed into 63 bits.

    Packed keys fit a machine word, so whole polynomials become int64
    arrays and batched reduction can run through vectorized arithmetic.
    The price is a hard cap: exponents at most 31 per variable, total
    degree at most 63, and few enough variables for the fields to fit
    (nine for degrevlex, ten for lex).  ``pack`` raises OverflowError
    beyond the caps; callers fall back to the wide codec.
    """

    __slots__ = ("n", "kind", "perm", "guards", "lowmask", "mulconst", "_shifts")

    def __init__(self, nvars, order):
        B = _SMALL_BITS
        need = nvars * B + (B if order.kind == "degrevlex" else 0)
        if need > 63:
            raise OverflowError(f"{nvars} variables do not fit a word-size codec")
        self.n = nvars
        self.kind = order.kind
        self.perm = order.precedence
        self.guards = sum(1 << (t * B + B - 1) for t in range(nvars))
        if self.kind == "lex":
            self._shifts = tuple((nvars - 1 - t) * B for t in range(nvars))
            self.lowmask = 0
            self.mulconst = 0
        else:
            self._shifts = tuple(t * B for t in range(nvars))
            self.lowmask = (1 << (nvars * B)) - 1
            self.mulconst = sum(_SMALL_CMPL << s for s in self._shifts)

    def pack(self, m):
        perm = self.perm
        shifts = self._shifts
        v = 0
        if self.kind == "lex":
            for t in range(self.n):
                e = m[perm[t]]
                if e > _SMALL_CMPL:
                    raise OverflowError(f"exponent {e} too large to pack")
                v |= e << shifts[t]
            return v
        total = sum(m)
        if total > 2 * _SMALL_CMPL + 1:
            raise OverflowError(f"degree {total} too large to pack")
        for t in range(self.n):
            e = m[perm[t]]
            if e > _SMALL_CMPL:
                raise OverflowError(f"exponent {e} too large to pack")
            v |= (_SMALL_CMPL - e) << shifts[t]
        return v | (total << (self.n * _SMALL_BITS))

    def unpack(self, v):
        out = [0] * self.n
        perm = self.perm
        shifts = self._shifts
        mask = (1 << _SMALL_BITS) - 1
        if self.kind == "lex":
            for t in range(self.n):
                out[perm[t]] = (v >> shifts[t]) & mask
        else:
            for t in range(self.n):
                out[perm[t]] = _SMALL_CMPL - ((v >> shifts[t]) & mask)
        return tuple(out)

    def deg(self, v):
        if self.kind == "degrevlex":
            return v >> (self.n * _SMALL_BITS)
        mask = (1 << _SMALL_BITS) - 1
        return sum((v >> s) & mask for s in self._shifts)

    def divides(self, a, b):
        if self.kind == "lex":
            d = b - a
        else:
            low = self.lowmask
            d = (a & low) - (b & low)
        return d >= 0 and not (d & self.guards)

    def mul(self, a, b):
        return a + b - self.mulconst

    def quo(self, a, b):
        return a - b + self.mulconst

    def lcm(self, a, b):
        ea = self.unpack(a)
        eb = self.unpack(b)
        return self.pack(tuple(x if x >= y else y for x, y in zip(ea, eb)))


_small_codec_cache = {}


def _small_codec_for(nvars, order):
    k = (nvars, order.kind, order.precedence)
    c = _small_codec_cache.get(k)
    if c is None:
        c = _small_codec_cache[k] = _SmallCodec(nvars, order)
    return c


def _modulus_of(field):
    return field.p if isinstance(field, PrimeField) else None


# -- reduction ----------------------------------------------------------


class _Entry:
    """Monic reduction unit: packed leading monomial plus packed tail."""

    __slots__ = ("lm", "low", "tail", "index", "sugar", "cof", "poly")

    def __init__(self, lm, low, tail, index=None, sugar=0, cof=None, poly=None):
        self.lm = lm
        self.low = low
        self.tail = tail
        self.index = index
        self.sugar = sugar
        self.cof = cof
        self.poly = poly


class _View:
    """Reducers sorted by increasing leading monomial, for cutoff search.

    Lookups are memoized: a found reducer stays valid because entries are
    never removed, and a miss is trusted only while the view is still the
    size it had when the miss was recorded."""

    __slots__ = ("entries", "lms", "_hit", "_miss")

    def __init__(self):
        self.entries = []
        self.lms = []
        self._hit = {}
        self._miss = {}

    def add(self, entry):
        at = bisect_right(self.lms, entry.lm)
        self.lms.insert(at, entry.lm)
        self.entries.insert(at, entry)

    def find_divisor(self, k, k_low, guards, lex):
        """First reducer whose leading monomial divides packed monomial k."""
        e = self._hit.get(k)
        if e is not None:
            return e
        entries = self.entries
        if self._miss.get(k) == len(entries):
            return None
        hi = bisect_right(self.lms, k)
        if lex:
            for at in range(hi):
                e = entries[at]
                d = k - e.lm
                if not (d & guards):
                    self._hit[k] = e
                    return e
        else:
            for at in range(hi):
                e = entries[at]
                d = e.low - k_low
                if d >= 0 and not (d & guards):
                    self._hit[k] = e
                    return e
        self._miss[k] = len(entries)
        return None


def _pack_poly(p, codec):
    pack = codec.pack
    return {pack(m): c for m, c in p.terms}


def _entry_from_dict(d, codec, field, pmod, index=None, sugar=0, cof=None):
    """Monic entry from a nonzero packed-dict polynomial (consumed)."""
    lm = max(d)
    lc = d[lm]
    if pmod is not None:
        if lc != 1:
            inv = pow(lc, -1, pmod)
            d = {m: c * inv % pmod for m, c in d.items()}
            if cof:
                cof = _cof_scale(cof, inv, field, pmod)
    else:
        if not field.eq(lc, field.one):
            inv = field.inv(lc)
            d = {m: field.mul(c, inv) for m, c in d.items()}
            if cof:
                cof = _cof_scale(cof, inv, field, pmod)
    tail = sorted(((m, c) for m, c in d.items() if m != lm), reverse=True)
    low = lm & codec.lowmask if codec.kind == "degrevlex" else lm
    return _Entry(lm, low, tuple(tail), index=index, sugar=sugar, cof=cof, poly=d)


def _view_from_polys(polys, codec, field, pmod):
    view = _View()
    for i, p in enumerate(polys):
        if p.is_zero:
            continue
        view.add(_entry_from_dict(_pack_poly(p, codec), codec, field, pmod, index=i))
    return view


def _packed_reduce(target, view, codec, field, pmod, track=False):
    """Fully reduce packed-dict ``target`` by the monic reducers in view.

    Returns (remainder dict, quotients) where quotients[j] is the packed
    multiplier of the reducer with original index j (only when track=True).
    The invariant is  input = sum_j quotients[j] * reducer_j + remainder.
    """
    work = dict(target)
    heap = [-k for k in work]
    heapq.heapify(heap)
    remainder = {}
    quotients = {} if track else None
    guards = codec.guards
    lowmask = codec.lowmask
    lex = codec.kind == "lex"
    mulconst = codec.mulconst
    find = view.find_divisor
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        k = -pop(heap)
        c = work.get(k)
        if c is None:
            continue
        del work[k]
        hit = find(k, k & lowmask, guards, lex)
        if hit is None:
            remainder[k] = c
            continue
        delta = k - hit.lm
        if track:
            q = quotients.setdefault(hit.index, {})
            qm = delta + mulconst
            prev = q.get(qm)
            if pmod is not None:
                q[qm] = (prev + c) % pmod if prev is not None else c
            else:
                q[qm] = field.add(prev, c) if prev is not None else c
        if pmod is not None:
            for mt, ct in hit.tail:
                mm = mt + delta
                prev = work.get(mm)
                if prev is None:
                    work[mm] = (-c * ct) % pmod
                    push(heap, -mm)
                else:
                    s = (prev - c * ct) % pmod
                    if s:
                        work[mm] = s
                    else:
                        del work[mm]
        else:
            fmul = field.mul
            fsub = field.sub
            fzero = field.is_zero
            for mt, ct in hit.tail:
                mm = mt + delta
                prev = work.get(mm)
                if prev is None:
                    nc = field.neg(fmul(c, ct))
                    if not fzero(nc):
                        work[mm] = nc
                        push(heap, -mm)
                else:
                    s = fsub(prev, fmul(c, ct))
                    if fzero(s):
                        del work[mm]
                    else:
                        work[mm] = s
    return remainder, quotients


def normal_form(p, basis, order=None):
    """Remainder of p under full reduction by basis (need not be monic).

    Deterministic: leading terms are cancelled largest-first, and among
    several usable reducers the one with the smallest leading monomial
    wins."""
    ring = p.ring
    order = order or ring.order
    basis = list(basis)
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("basis and polynomial in different rings")
    codec = _codec_for(ring.nvars, order)
    pmod = _modulus_of(ring.field)
    view = _view_from_polys(basis, codec, ring.field, pmod)
    rem, _ = _packed_reduce(_pack_poly(p, codec), view, codec, ring.field, pmod)
    return ring.from_dict({codec.unpack(k): c for k, c in rem.items()})


def reduce_extended(p, basis, order=None):
    """(remainder, quotients) with p = sum quotients[i]*basis[i] + remainder.

    The basis need not be monic; quotients refer to the polynomials as
    given."""
    ring = p.ring
    order = order or ring.order
    field = ring.field
    basis = list(basis)
    codec = _codec_for(ring.nvars, order)
    pmod = _modulus_of(field)
    view = _view_from_polys(basis, codec, field, pmod)
    rem, quot = _packed_reduce(_pack_poly(p, codec), view, codec, field, pmod, track=True)
    out = []
    for i, g in enumerate(basis):
        qd = quot.get(i) if quot else None
        if not qd:
            out.append(ring.zero)
            continue
        # reducers were scaled monic; fold the 1/lc into the quotient.
        lc = g.leading_coefficient(order)
        q = ring.from_dict({codec.unpack(k): c for k, c in qd.items()})
        if not field.eq(lc, field.one):
            q = q / lc
        out.append(q)
    return ring.from_dict({codec.unpack(k): c for k, c in rem.items()}), out


def spoly(f, g, order=None):
    ring = f.ring
    order = order or ring.order
    field = ring.field
    fm, fc = f.leading_term(order)
    gm, gc = g.leading_term(order)
    lcm = monom_lcm(fm, gm)
    tf = tuple(a - b for a, b in zip(lcm, fm))
    tg = tuple(a - b for a, b in zip(lcm, gm))
    mf = MultiPoly(ring, ((tf, field.inv(fc)),))
    mg = MultiPoly(ring, ((tg, field.inv(gc)),))
    return mf * f - mg * g


# -- Buchberger ---------------------------------------------------------


def _cof_combine(target, source, coef, q, field, pmod, mulconst):
    """target += coef * x^q * source, all packed-dict cofactors."""
    shift = q - mulconst
    for idx, poly in source.items():
        dst = target.setdefault(idx, {})
        if pmod is not None:
            for m, c in poly.items():
                mm = m + shift
                prev = dst.get(mm)
                s = (coef * c) % pmod if prev is None else (prev + coef * c) % pmod
                if s:
                    dst[mm] = s
                elif prev is not None:
                    del dst[mm]
        else:
            for m, c in poly.items():
                mm = m + shift
                add = field.mul(coef, c)
                prev = dst.get(mm)
                if prev is None:
                    if not field.is_zero(add):
                        dst[mm] = add
                else:
                    s = field.add(prev, add)
                    if field.is_zero(s):
                        del dst[mm]
                    else:
                        dst[mm] = s


def _cof_scale(cof, coef, field, pmod):
    out = {}
    for idx, poly in cof.items():
        if pmod is not None:
            d = {m: c * coef % pmod for m, c in poly.items()}
            d = {m: c for m, c in d.items() if c}
        else:
            d = {m: field.mul(c, coef) for m, c in poly.items()}
            d = {m: c for m, c in d.items() if not field.is_zero(c)}
        if d:
            out[idx] = d
    return out


def _reduce_entry(target, cof, view, codec, field, pmod, extended, top=False):
    """Reduce a packed-dict polynomial against the basis view, updating
    the cofactor combination in place when extended.  Returns
    (remainder, sugar carried in by the reducers used).

    With ``top`` the reduction stops at the first irreducible maximum:
    the lead is then in normal position but the tail stays as it lies.
    Dense systems stay far smaller this way; the full form is only
    needed for reported output and membership answers."""
    work = target
    heap = [-k for k in work]
    heapq.heapify(heap)
    remainder = {}
    sugar_extra = 0
    guards = codec.guards
    lowmask = codec.lowmask
    lex = codec.kind == "lex"
    mulconst = codec.mulconst
    deg = codec.deg
    find = view.find_divisor
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        k = -pop(heap)
        c = work.get(k)
        if c is None:
            continue
        del work[k]
        hit = find(k, k & lowmask, guards, lex)
        if hit is None:
            if top:
                work[k] = c
                return work, sugar_extra
            remainder[k] = c
            continue
        delta = k - hit.lm
        q = delta + mulconst
        s = hit.sugar + deg(q)
        if s > sugar_extra:
            sugar_extra = s
        if extended:
            nc = (-c) % pmod if pmod is not None else field.neg(c)
            _cof_combine(cof, hit.cof, nc, q, field, pmod, mulconst)
        if pmod is not None:
            for mt, ct in hit.tail:
                mm = mt + delta
                prev = work.get(mm)
                if prev is None:
                    work[mm] = (-c * ct) % pmod
                    push(heap, -mm)
                else:
                    sv = (prev - c * ct) % pmod
                    if sv:
                        work[mm] = sv
                    else:
                        del work[mm]
        else:
            fmul = field.mul
            fsub = field.sub
            fzero = field.is_zero
            for mt, ct in hit.tail:
                mm = mt + delta
                prev = work.get(mm)
                if prev is None:
                    nc = field.neg(fmul(c, ct))
                    if not fzero(nc):
                        work[mm] = nc
                        push(heap, -mm)
                else:
                    sv = fsub(prev, fmul(c, ct))
                    if fzero(sv):
                        del work[mm]
                    else:
                        work[mm] = sv
    return remainder, sugar_extra


def _update_pairs(G, P, h, m, codec, rank_of):
    """Gebauer-Moeller pair update: entry h will take index m in G.

    P maps index pairs (i, j), i < j, to (selection rank, pair lcm).
    Returns the updated map including the surviving new pairs."""
    lmh = h.lm
    lcms = {i: codec.lcm(G[i].lm, lmh) for i in range(m)}
    # Keep only pairs whose lcm no other new pair's lcm properly divides,
    # then one representative per lcm value, then the product criterion.
    minimal = []
    for i in range(m):
        lcm_i = lcms[i]
        drop = False
        for j in range(m):
            if j == i:
                continue
            lcm_j = lcms[j]
            if lcm_j != lcm_i and codec.divides(lcm_j, lcm_i):
                drop = True
                break
        if not drop:
            minimal.append(i)
    by_lcm = {}
    for i in minimal:
        by_lcm.setdefault(lcms[i], i)
    survivors = {}
    # Old pairs killed by the chain criterion through lmh.
    for (i, j), (rank, lcm_ij) in P.items():
        if (
            codec.divides(lmh, lcm_ij)
            and lcms[i] != lcm_ij
            and lcms[j] != lcm_ij
        ):
            continue
        survivors[(i, j)] = (rank, lcm_ij)
    for lcm_val, i in by_lcm.items():
        # Product criterion: coprime leading monomials reduce to zero.
        if lcm_val == codec.mul(G[i].lm, lmh):
            continue
        survivors[(i, m)] = (rank_of(G[i], h, lcm_val), lcm_val)
    return survivors


def _interreduce(pool, codec, field, pmod, extended, tick=None):
    """Top-reduce every seed against the others until no lead divides
    another.

    ``pool`` holds (packed dict, cofactor dict, sugar) triples and is
    consumed.  An entry whose lead a newcomer divides re-enters the
    queue; the leading-monomial multiset strictly decreases under the
    kicks, so the loop stops.  Tails stay as they lie on purpose:
    normalizing them inflates dense systems badly, and nothing
    downstream needs tidy tails before the final basis is assembled."""
    work = list(pool)
    entries = []
    while work:
        if tick is not None:
            tick(len(work))
        target, cof, sug = work.pop(0)
        view = _View()
        for e in entries:
            view.add(e)
        rem, extra = _reduce_entry(target, cof, view, codec, field, pmod, extended, top=True)
        if not rem:
            continue
        made = _entry_from_dict(
            rem, codec, field, pmod, sugar=max(sug, extra), cof=cof if extended else None
        )
        keep = []
        for e in entries:
            if codec.divides(made.lm, e.lm):
                work.append((dict(e.poly), e.cof if extended else {}, e.sugar))
            else:
                keep.append(e)
        keep.append(made)
        entries = keep
    entries.sort(key=lambda e: e.lm)
    return entries


# -- batched matrix reduction (prime fields) ----------------------------

# Probe hook: when set, called once per reduced block with a stats dict.
_MATRIX_TRACE = None


def _numpy():
    import numpy

    return numpy


class _BlockReducer:
    """Reduces blocks of packed polynomials against monic reducers by a
    structured column sweep over GF(p).

    Reducer rows are monomial shifts of basis elements, each led by the
    very column it pivots, so sweeping columns from the largest monomial
    down and only ever subtracting reducer rows from target rows replays
    ordinary multivariate division in bulk: every target ends up at a
    genuine normal form, just many at a time.  Targets are never combined
    with each other during the sweep, so row i of the result is exactly
    the remainder of target i.

    Works in a word-size codec so whole polynomials live in int64 arrays;
    every vectorized monomial product is guard-checked and overflow
    raises instead of aliasing.
    """

    def __init__(self, codec, pmod, budget_check=None):
        np = _numpy()
        self.np = np
        self.codec = codec
        self.p = pmod
        self.budget_check = budget_check or (lambda: None)
        if codec.kind == "degrevlex":
            self.limit = 1 << (codec.n * _SMALL_BITS + _SMALL_BITS)
        else:
            self.limit = 1 << (codec.n * _SMALL_BITS)
        self.entries = []
        self._full = {}
        self._tail = {}
        self._lms_arr = None
        self._reset_block()

    def _reset_block(self):
        self.cols = self.np.empty(0, dtype=self.np.int64)
        self.targets = []
        self._hits = {}
        self._pivots = {}

    def add_reducer(self, entry):
        self.entries.append(entry)
        self._lms_arr = None

    def _checked(self, arr):
        np = self.np
        if arr.size and (
            int(arr.max(initial=0)) >= self.limit
            or bool(np.bitwise_and(arr, self.codec.guards).any())
        ):
            raise OverflowError("monomial outgrew the word-size codec")
        return arr

    def full_arrays(self, entry):
        np = self.np
        got = self._full.get(id(entry))
        if got is None:
            monos = np.fromiter(entry.poly.keys(), dtype=np.int64, count=len(entry.poly))
            coeffs = np.fromiter(entry.poly.values(), dtype=np.int64, count=len(entry.poly))
            ix = np.argsort(monos)
            got = self._full[id(entry)] = (monos[ix], coeffs[ix])
        return got

    def _tail_arrays(self, entry):
        got = self._tail.get(id(entry))
        if got is None:
            monos, coeffs = self.full_arrays(entry)
            got = self._tail[id(entry)] = (monos[:-1], coeffs[:-1])
        return got

    def _lms(self):
        np = self.np
        if self._lms_arr is None:
            order = sorted(range(len(self.entries)), key=lambda i: self.entries[i].lm)
            self._by_lm = [self.entries[i] for i in order]
            self._lms_arr = np.fromiter(
                (e.lm for e in self._by_lm), dtype=np.int64, count=len(order)
            )
        return self._lms_arr

    def _resolve(self, monos):
        """Smallest reducer leading monomial dividing each of ``monos``
        (index into the by-lm list, -1 when none divides)."""
        np = self.np
        lms = self._lms()
        out = np.full(monos.shape, -1, dtype=np.int64)
        if not lms.size or not monos.size:
            return out
        guards = self.codec.guards
        chunk = max(256, int(4_000_000 // max(1, lms.size)))
        for at in range(0, monos.size, chunk):
            self.budget_check()
            part = monos[at : at + chunk]
            if self.codec.kind == "lex":
                diff = part[:, None] - lms[None, :]
            else:
                low = self.codec.lowmask
                diff = (lms & low)[None, :] - (part & low)[:, None]
            ok = (diff >= 0) & ((diff & guards) == 0)
            first = ok.argmax(axis=1)
            found = ok[np.arange(part.size), first]
            out[at : at + chunk] = np.where(found, first, -1)
        return out

    @property
    def ncols(self):
        return int(self.cols.size)

    def add_target(self, monos, coeffs):
        """Queue one packed row and grow the column closure around it."""
        np = self.np
        self.targets.append((monos, coeffs))
        fresh = np.setdiff1d(monos, self.cols)
        while fresh.size:
            self.cols = np.union1d(self.cols, fresh)
            picks = self._resolve(fresh)
            grown = []
            for m, k in zip(fresh.tolist(), picks.tolist()):
                if k < 0:
                    continue
                entry = self._by_lm[k]
                shift = m - entry.lm
                self._hits[m] = (entry, shift)
                tmon, _ = self._tail_arrays(entry)
                if tmon.size:
                    grown.append(self._checked(tmon + shift))
            if grown:
                fresh = np.setdiff1d(np.unique(np.concatenate(grown)), self.cols)
            else:
                fresh = np.empty(0, dtype=np.int64)

    def _matrix(self):
        np = self.np
        cols = self.cols
        M = np.zeros((len(self.targets), int(cols.size)), dtype=np.int64)
        for r, (monos, coeffs) in enumerate(self.targets):
            M[r, np.searchsorted(cols, monos)] = coeffs
        return M

    def _mask_of(self, occupied):
        """Occupancy bool vector to a python-int bitmask."""
        np = self.np
        return int.from_bytes(
            np.packbits(occupied, bitorder="little").tobytes(), "little"
        )

    def _scatter(self, jc):
        """Tail positions/coefficients of the reducer pivoting column jc,
        plus the positions as a bitmask (built on first use)."""
        got = self._pivots.get(jc)
        if got is None:
            np = self.np
            entry, shift = self._hits[int(self.cols[jc])]
            tmon, tco = self._tail_arrays(entry)
            idx = np.searchsorted(self.cols, self._checked(tmon + shift)) if tmon.size else tmon
            occ = np.zeros(self.cols.size, dtype=bool)
            occ[idx] = True
            got = self._pivots[jc] = (idx, tco, self._mask_of(occ))
        return got

    def sweep_full(self):
        """Fully reduce all queued targets, one result row per target in
        queue order; empty arrays mark complete cancellation.  Targets
        are never combined with each other, so row i is exactly the
        remainder of target i."""
        np = self.np
        p = self.p
        cols = self.cols
        M = self._matrix()
        R = M.shape[0]
        has_pivot = {
            int(np.searchsorted(cols, m)) for m in self._hits
        }
        n_done = 0
        for jc in sorted(has_pivot, reverse=True):
            n_done += 1
            if n_done % 2048 == 0:
                self.budget_check()
            col = M[:, jc]
            nz = np.flatnonzero(col)
            if not nz.size:
                continue
            idx, vals, _ = self._scatter(jc)
            if idx.size:
                M[np.ix_(nz, idx)] = (
                    M[np.ix_(nz, idx)] - col[nz, None] * vals[None, :]
                ) % p
            M[nz, jc] = 0
        out = []
        empty = np.empty(0, dtype=np.int64)
        for r in range(R):
            nzc = np.flatnonzero(M[r])
            if nzc.size:
                out.append((cols[nzc], M[r][nzc]))
            else:
                out.append((empty, empty))
        if _MATRIX_TRACE is not None:
            _MATRIX_TRACE(
                {
                    "rows": R,
                    "cols": int(cols.size),
                    "pivots": len(self._pivots),
                    "reducers": len(self.entries),
                    "new": sum(1 for m, _ in out if m.size),
                }
            )
        self._reset_block()
        return out

    def sweep_top(self):
        """Top-reduce all queued targets: chase each row's leading column
        through reducer rows until it is irreducible, leaving tails as
        they lie (the dict loop's discipline, which keeps rows sparse).
        Rows ending on a shared lead are merged, so returned leads are
        distinct.  Occupancy bitmasks per row make the next-lead scan a
        word operation instead of a column sweep."""
        np = self.np
        p = self.p
        cols = self.cols
        M = self._matrix()
        R = M.shape[0]
        bits = [self._mask_of(M[r] != 0) for r in range(R)]
        pending = {}
        for r in range(R):
            jl = bits[r].bit_length() - 1
            if jl >= 0:
                pending.setdefault(jl, []).append(r)
        done = {}
        steps = 0
        while pending:
            jc = max(pending)
            rows = pending.pop(jc)
            steps += 1
            if steps % 512 == 0:
                self.budget_check()
            mono = int(cols[jc])
            hit = self._hits.get(mono)
            if hit is None:
                # Irreducible lead: rows are finished; fold duplicates.
                keep = done.get(jc)
                for r in rows:
                    if keep is None:
                        keep = r
                        done[jc] = r
                        continue
                    c = int(M[r, jc]) * pow(int(M[keep, jc]), -1, p) % p
                    M[r] = (M[r] - c * M[keep]) % p
                    bits[r] = self._mask_of(M[r] != 0)
                    jl = self._next_lead(M, bits, r, jc)
                    if jl >= 0:
                        pending.setdefault(jl, []).append(r)
                continue
            idx, vals, pmask = self._scatter(jc)
            arr = np.asarray(rows)
            cvec = M[arr, jc]
            if idx.size:
                M[np.ix_(arr, idx)] = (
                    M[np.ix_(arr, idx)] - cvec[:, None] * vals[None, :]
                ) % p
            M[arr, jc] = 0
            off = ~(1 << jc)
            for r in rows:
                bits[r] = (bits[r] | pmask) & off
                jl = self._next_lead(M, bits, r, jc)
                if jl >= 0:
                    pending.setdefault(jl, []).append(r)
        out = []
        for jc, r in done.items():
            nzc = np.flatnonzero(M[r])
            out.append((cols[nzc], M[r][nzc]))
        if _MATRIX_TRACE is not None:
            _MATRIX_TRACE(
                {
                    "rows": R,
                    "cols": int(cols.size),
                    "pivots": len(self._pivots),
                    "reducers": len(self.entries),
                    "new": len(out),
                }
            )
        self._reset_block()
        return out

    def _next_lead(self, M, bits, r, jc):
        """Highest occupied column strictly below jc, clearing stale bits."""
        m = bits[r] & ((1 << jc) - 1)
        while m:
            jl = m.bit_length() - 1
            if M[r, jl]:
                bits[r] = m
                return jl
            m &= ~(1 << jl)
        bits[r] = 0
        return -1

    def spoly_arrays(self, gi, gj, lcm):
        """S-polynomial of two monic entries as sorted packed arrays."""
        np = self.np
        p = self.p
        mi, ci = self.full_arrays(gi)
        mj, cj = self.full_arrays(gj)
        monos = np.concatenate((self._checked(mi + (lcm - gi.lm)), self._checked(mj + (lcm - gj.lm))))
        coeffs = np.concatenate((ci, (p - cj) % p))
        u, inv = np.unique(monos, return_inverse=True)
        acc = np.bincount(inv, weights=coeffs.astype(np.float64), minlength=u.size)
        acc = acc.astype(np.int64) % p
        keep = np.flatnonzero(acc)
        return u[keep], acc[keep]


def _matrix_loop(G, P, codec, field, pmod, rank_of, out_of_budget, pair_cap=128, col_cap=100_000):
    """Drive the pair queue through block reduction until it drains.

    Mutates ``G`` in place exactly like the one-pair-at-a-time loop; the
    only behavioral difference is that several S-polynomials reduce
    against a shared column closure per round, so redundant generators
    whose leads divide one another can momentarily coexist (the pair
    update and final minimalization take care of them)."""
    red = _BlockReducer(codec, pmod, budget_check=lambda: out_of_budget(len(P)))
    for e in G:
        red.add_reducer(e)
    while P:
        out_of_budget(len(P))
        ranked = sorted(P.items(), key=lambda kv: (kv[1][0], kv[0]))
        batch_sugar = 0
        took = 0
        for (i, j), (_, lcm) in ranked:
            gi, gj = G[i], G[j]
            monos, coeffs = red.spoly_arrays(gi, gj, lcm)
            del P[(i, j)]
            if monos.size:
                red.add_target(monos, coeffs)
                took += 1
                batch_sugar = max(
                    batch_sugar,
                    gi.sugar + codec.deg(lcm - gi.lm + codec.mulconst),
                    gj.sugar + codec.deg(lcm - gj.lm + codec.mulconst),
                )
            if took >= pair_cap or red.ncols > col_cap:
                break
        if not took:
            continue
        for monos, coeffs in red.sweep_top():
            d = {int(m): int(c) for m, c in zip(monos.tolist(), coeffs.tolist())}
            entry = _entry_from_dict(
                d, codec, field, pmod, sugar=max(batch_sugar, codec.deg(max(d)))
            )
            P = _update_pairs(G, P, entry, len(G), codec, rank_of)
            G.append(entry)
            red.add_reducer(entry)


def buchberger(
    inputs,
    order=None,
    extended=False,
    budget_secs=None,
    selection=None,
    certify=True,
    method=None,
):
    """Groebner basis of the ideal generated by ``inputs``.

    Generators come back monic, minimal (no leading monomial divides
    another) and tail-interreduced, sorted by increasing leading monomial.
    With ``extended`` every generator g_j carries cofactors c_ji with
    g_j = sum_i c_ji * inputs[i], checked exactly during certification.

    ``selection`` is 'normal' (minimal lcm, the degrevlex default) or
    'sugar' (the lex default).  ``budget_secs`` bounds wall-clock time;
    exceeding it raises BudgetExceededError with progress diagnostics.

    ``method='matrix'`` reduces S-polynomials in blocks through int64
    matrices instead of one at a time; results are identical ideals with
    the same output conventions.  Prime coefficient fields only, no
    cofactor tracking, and the word-size monomial packing caps exponents
    at 31 per variable and total degree at 63 (OverflowError beyond).
    Certification then runs through the matching block certifier.
    """
    inputs = tuple(inputs)
    if not inputs:
        raise ValueError("empty generating set")
    ring = inputs[0].ring
    for p in inputs:
        if p.ring != ring:
            raise RingMismatchError("inputs from different rings")
    order = order or ring.order
    field = ring.field
    codec = _codec_for(ring.nvars, order)
    pmod = _modulus_of(field)
    if method not in (None, "matrix"):
        raise ValueError(f"unknown method {method!r}")
    if method == "matrix":
        if pmod is None:
            raise ValueError("matrix method needs a prime coefficient field")
        if extended:
            raise ValueError("matrix method does not track cofactors")
        try:
            codec = _small_codec_for(ring.nvars, order)
        except OverflowError as exc:
            raise ValueError(str(exc)) from None
    if selection is None:
        selection = "sugar" if order.kind == "lex" else "normal"
    if selection == "sugar":
        def rank_of(ei, ej, lcm):
            sug = max(
                ei.sugar + codec.deg(codec.quo(lcm, ei.lm)),
                ej.sugar + codec.deg(codec.quo(lcm, ej.lm)),
            )
            return (sug, lcm)
    elif selection == "normal":
        def rank_of(ei, ej, lcm):
            return (lcm,)
    else:
        raise ValueError(f"unknown selection strategy {selection!r}")
    t0 = time.monotonic()

    def out_of_budget(pairs_left):
        if budget_secs is None:
            return
        elapsed = time.monotonic() - t0
        if elapsed > budget_secs:
            raise BudgetExceededError(
                f"groebner computation exceeded {budget_secs}s "
                f"(basis size {len(G)}, {pairs_left} pairs left)",
                basis_size=len(G),
                pairs_left=pairs_left,
                elapsed=elapsed,
            )

    G = []
    view = _View()
    P = {}
    one_cof = codec.pack((0,) * ring.nvars)
    # Seed with the inputs in increasing leading-monomial order so small
    # generators (like linear relations) become reducers immediately, and
    # interreduce the batch to a fixpoint before any pair forms; dense
    # overlapping systems shrink considerably under this.
    seed = []
    for i, p in enumerate(inputs):
        if p.is_zero:
            continue
        d = _pack_poly(p, codec)
        seed.append((max(d), i, d))
    seed.sort()
    pool = []
    for _, i, target in seed:
        cof = {i: {one_cof: field.one}} if extended else {}
        pool.append((target, cof, inputs[i].degree()))
    for entry in _interreduce(pool, codec, field, pmod, extended, tick=out_of_budget):
        P = _update_pairs(G, P, entry, len(G), codec, rank_of)
        G.append(entry)
        view.add(entry)

    if method == "matrix":
        _matrix_loop(G, P, codec, field, pmod, rank_of, out_of_budget)
        P = {}

    while P:
        out_of_budget(len(P))
        (i, j), (_, lcm) = min(P.items(), key=lambda kv: (kv[1][0], kv[0]))
        del P[(i, j)]
        gi, gj = G[i], G[j]
        di = lcm - gi.lm
        dj = lcm - gj.lm
        # S-polynomial of two monic entries: x^ti*gi - x^tj*gj.
        target = {}
        for m, c in gi.poly.items():
            target[m + di] = c
        if pmod is not None:
            for m, c in gj.poly.items():
                mm = m + dj
                prev = target.get(mm)
                s = (-c) % pmod if prev is None else (prev - c) % pmod
                if s:
                    target[mm] = s
                elif prev is not None:
                    del target[mm]
        else:
            for m, c in gj.poly.items():
                mm = m + dj
                prev = target.get(mm)
                if prev is None:
                    target[mm] = field.neg(c)
                else:
                    s = field.sub(prev, c)
                    if field.is_zero(s):
                        del target[mm]
                    else:
                        target[mm] = s
        cof = {}
        if extended:
            _cof_combine(cof, gi.cof, field.one, di + codec.mulconst, field, pmod, codec.mulconst)
            neg_one = (-1) % pmod if pmod is not None else field.neg(field.one)
            _cof_combine(cof, gj.cof, neg_one, dj + codec.mulconst, field, pmod, codec.mulconst)
        rem, extra = _reduce_entry(target, cof, view, codec, field, pmod, extended, top=True)
        if not rem:
            continue
        pair_sugar = max(
            gi.sugar + codec.deg(di + codec.mulconst),
            gj.sugar + codec.deg(dj + codec.mulconst),
            extra,
        )
        entry = _entry_from_dict(rem, codec, field, pmod, sugar=pair_sugar, cof=cof if extended else None)
        P = _update_pairs(G, P, entry, len(G), codec, rank_of)
        G.append(entry)
        view.add(entry)

    # Minimalize: drop entries whose leading monomial another divides.
    keep = []
    for i, e in enumerate(G):
        redundant = False
        for j, other in enumerate(G):
            if j == i:
                continue
            if other.lm == e.lm and j > i:
                continue
            if codec.divides(other.lm, e.lm):
                redundant = True
                break
        if not redundant:
            keep.append(e)
    # Tail-interreduce the survivors (cofactors follow along).
    final = []
    for e in keep:
        others = _View()
        for x in keep:
            if x is not e:
                others.add(x)
        cof = {}
        if extended:
            _cof_combine(cof, e.cof, field.one, one_cof, field, pmod, codec.mulconst)
        rem, _ = _reduce_entry(dict(e.poly), cof, others, codec, field, pmod, extended)
        if not rem:
            continue
        final.append(
            _entry_from_dict(rem, codec, field, pmod, sugar=e.sugar, cof=cof if extended else None)
        )
    final.sort(key=lambda e: e.lm)

    unpack = codec.unpack
    generators = tuple(
        ring.from_dict({unpack(k): c for k, c in e.poly.items()}) for e in final
    )
    cofactors = None
    if extended:
        cofactors = tuple(
            tuple(
                ring.from_dict({unpack(k): c for k, c in (e.cof.get(i) or {}).items()})
                for i in range(len(inputs))
            )
            for e in final
        )
    gb = GroebnerBasis(ring=ring, order=order, generators=generators, inputs=inputs, cofactors=cofactors)
    if certify:
        certify_basis(gb, method=method)
    return gb


def certify_basis(gb, method=None):
    """Post-hoc certificate for a claimed Groebner basis.

    Checks, with freshly prepared reducers and no pair criteria: every
    pairwise S-polynomial reduces to zero; every input reduces to zero;
    and, when cofactors are present, each generator re-multiplies exactly
    from the inputs.  Raises CertificationError on any failure.

    ``method='matrix'`` runs the same checks through block reduction
    (prime fields only); targets are never combined with each other
    there, so each S-polynomial still vanishes through reducer rows
    alone."""
    if method not in (None, "matrix"):
        raise ValueError(f"unknown method {method!r}")
    if method == "matrix":
        _certify_matrix(gb)
        _certify_cofactors(gb)
        return
    gens = gb.generators
    order = gb.order
    ring = gb.ring
    field = ring.field
    codec = _codec_for(ring.nvars, order)
    pmod = _modulus_of(field)
    view = _view_from_polys(gens, codec, field, pmod)
    monic = [e for e in sorted(view.entries, key=lambda e: e.index)]
    n = len(monic)
    for a in range(n):
        for b in range(a + 1, n):
            ea, eb = monic[a], monic[b]
            lcm = codec.lcm(ea.lm, eb.lm)
            da = lcm - ea.lm
            db = lcm - eb.lm
            target = {m + da: c for m, c in ea.poly.items()}
            for m, c in eb.poly.items():
                mm = m + db
                prev = target.get(mm)
                if prev is None:
                    target[mm] = (-c) % pmod if pmod is not None else field.neg(c)
                else:
                    s = (prev - c) % pmod if pmod is not None else field.sub(prev, c)
                    if (s == 0) if pmod is not None else field.is_zero(s):
                        del target[mm]
                    else:
                        target[mm] = s
            rem, _ = _packed_reduce(target, view, codec, field, pmod)
            if rem:
                raise CertificationError(
                    f"S-polynomial ({monic[a].index},{monic[b].index}) does not reduce to zero"
                )
    for k, p in enumerate(gb.inputs):
        rem, _ = _packed_reduce(_pack_poly(p, codec), view, codec, field, pmod)
        if rem:
            raise CertificationError(f"input {k} is not in the span of the basis")
    _certify_cofactors(gb)


def _certify_cofactors(gb):
    if gb.cofactors is None:
        return
    for k, (g, row) in enumerate(zip(gb.generators, gb.cofactors)):
        acc = gb.ring.zero
        for c, p in zip(row, gb.inputs):
            if not c.is_zero:
                acc = acc + c * p
        if acc != g:
            raise CertificationError(f"cofactor identity fails for generator {k}")


def _certify_matrix(gb, row_cap=256, col_cap=100_000):
    """Block-reduction variant of the basis certificate.

    Every pairwise S-polynomial and every input goes through the sweep
    without inter-target elimination, so a nonzero remainder pins the
    offending pair exactly."""
    ring = gb.ring
    field = ring.field
    pmod = _modulus_of(field)
    if pmod is None:
        raise ValueError("matrix certification needs a prime coefficient field")
    try:
        codec = _small_codec_for(ring.nvars, gb.order)
    except OverflowError as exc:
        raise ValueError(str(exc)) from None
    entries = [
        _entry_from_dict(_pack_poly(p, codec), codec, field, pmod, index=i)
        for i, p in enumerate(gb.generators)
        if not p.is_zero
    ]
    red = _BlockReducer(codec, pmod)
    for e in entries:
        red.add_reducer(e)
    n = len(entries)
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    pairs.sort(key=lambda ab: codec.lcm(entries[ab[0]].lm, entries[ab[1]].lm))

    def flush(tags):
        for tag, (monos, _) in zip(tags, red.sweep_full()):
            if monos.size:
                raise CertificationError(tag)
        tags.clear()

    tags = []
    for a, b in pairs:
        ea, eb = entries[a], entries[b]
        monos, coeffs = red.spoly_arrays(ea, eb, codec.lcm(ea.lm, eb.lm))
        if not monos.size:
            continue
        red.add_target(monos, coeffs)
        tags.append(f"S-polynomial ({ea.index},{eb.index}) does not reduce to zero")
        if len(tags) >= row_cap or red.ncols > col_cap:
            flush(tags)
    flush(tags)
    np = red.np
    for k, p in enumerate(gb.inputs):
        if p.is_zero:
            continue
        d = _pack_poly(p, codec)
        monos = np.fromiter(d.keys(), dtype=np.int64, count=len(d))
        coeffs = np.fromiter(d.values(), dtype=np.int64, count=len(d))
        ix = np.argsort(monos)
        red.add_target(monos[ix], coeffs[ix])
        tags.append(f"input {k} is not in the span of the basis")
        if len(tags) >= row_cap or red.ncols > col_cap:
            flush(tags)
    flush(tags)


def ideal_contains(p, gb):
    return gb.contains(p)


def express_over_inputs(p, gb):
    """(remainder, cofactors) with p = sum cofactors[i]*inputs[i] + remainder.

    Wants an extended basis; composes the division quotients over the
    basis with the basis's own input cofactors."""
    if gb.cofactors is None:
        raise ValueError("needs an extended basis (cofactors)")
    rem, quots = reduce_extended(p, list(gb.generators), gb.order)
    ring = gb.ring
    out = [ring.zero for _ in gb.inputs]
    for q, row in zip(quots, gb.cofactors):
        if q.is_zero:
            continue
        for i, c in enumerate(row):
            if not c.is_zero:
                out[i] = out[i] + q * c
    return rem, out


# -- determinants and resultants ---------------------------------------


def det_polymatrix(rows):
    """Determinant of a square matrix of polynomials.

    Size <= 3 expands directly; larger matrices go through fraction-free
    Bareiss elimination with exact divisions."""
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return _bareiss([list(r) for r in rows], ring)


def _bareiss(m, ring):
    from .poly import exact_div

    n = len(m)
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        if m[k][k].is_zero:
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if swap is None:
                return ring.zero
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_div(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = ring.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(f, g, var):
    """Sylvester matrix of f and g with respect to one variable.

    Both polynomials must have positive degree in ``var``; the entries are
    their coefficient polynomials."""
    ring = f.ring
    if g.ring != ring:
        raise RingMismatchError("mixed rings")
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    df = len(fc) - 1
    dg = len(gc) - 1
    if df < 1 or dg < 1:
        raise ValueError(f"both polynomials need positive degree in {var!r}")
    size = df + dg
    zero = ring.zero
    rows = []
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    for i in range(dg):
        rows.append([zero] * i + frow + [zero] * (size - i - len(frow)))
    for i in range(df):
        rows.append([zero] * i + grow + [zero] * (size - i - len(grow)))
    return rows


def resultant(f, g, var):
    """Resultant of f and g in ``var`` via Bareiss on the Sylvester matrix."""
    rows = sylvester_matrix(f, g, var)
    if len(rows) <= 3:
        return det_polymatrix(rows)
    return _bareiss(rows, f.ring)
