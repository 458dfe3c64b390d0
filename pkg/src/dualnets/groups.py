"""Finite groups as explicit Cayley tables.

A table is stored as a dict (i, j) -> i*j over a fixed label tuple.
Validation checks the Latin-square property, a two-sided identity, and
full associativity by enumeration, so a table that constructs is a group
table, not merely a quasigroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class BadTableError(ValueError):
    pass


@dataclass(frozen=True)
class CayleyTable:
    name: str
    labels: tuple
    table: dict = field(compare=False)

    def __post_init__(self):
        self._validate()

    def _validate(self):
        labels = self.labels
        n = len(labels)
        if n == 0:
            raise BadTableError("empty label set")
        if len(set(labels)) != n:
            raise BadTableError("duplicate labels")
        lset = set(labels)
        for i in labels:
            for j in labels:
                v = self.table.get((i, j))
                if v not in lset:
                    raise BadTableError(f"entry ({i},{j}) missing or out of range: {v!r}")
        for i in labels:
            row = {self.table[(i, j)] for j in labels}
            col = {self.table[(j, i)] for j in labels}
            if row != lset or col != lset:
                raise BadTableError(f"row or column {i} is not a permutation")
        ident = self.identity()
        if ident is None:
            raise BadTableError("no two-sided identity")
        for i in labels:
            for j in labels:
                ij = self.table[(i, j)]
                for k in labels:
                    if self.table[(ij, k)] != self.table[(i, self.table[(j, k)])]:
                        raise BadTableError(f"associativity fails at ({i},{j},{k})")

    def identity(self):
        for e in self.labels:
            if all(
                self.table[(e, x)] == x and self.table[(x, e)] == x
                for x in self.labels
            ):
                return e
        return None

    def mul(self, i, j):
        try:
            return self.table[(i, j)]
        except KeyError:
            raise BadTableError(f"labels ({i},{j}) not in table") from None

    def __call__(self, i, j):
        return self.mul(i, j)

    @property
    def order(self):
        return len(self.labels)

    def element_order(self, x):
        e = self.identity()
        acc = x
        n = 1
        while acc != e:
            acc = self.table[(acc, x)]
            n += 1
            if n > len(self.labels):
                raise BadTableError("element order exceeds group order")
        return n

    def order_profile(self):
        """Sorted multiset of element orders, a quick isomorphism invariant."""
        return tuple(sorted(self.element_order(x) for x in self.labels))

    def inverse_of(self, x):
        e = self.identity()
        for y in self.labels:
            if self.table[(x, y)] == e:
                return y
        raise BadTableError(f"no inverse for {x}")

    def is_abelian(self):
        return all(
            self.table[(i, j)] == self.table[(j, i)]
            for i in self.labels
            for j in self.labels
        )

    def triples(self):
        """All (i, j, i*j); the collinearity pattern a dual net must realize."""
        for i in self.labels:
            for j in self.labels:
                yield (i, j, self.table[(i, j)])

    @classmethod
    def from_rows(cls, name, rows, labels=None):
        """Build from a list of rows; row r lists r*c for each column c.

        Rows and columns are both indexed by ``labels`` in order; when
        labels is None they default to 1..n, or 0..n-1 if 0 appears."""
        n = len(rows)
        if labels is None:
            flat = {v for row in rows for v in row}
            labels = tuple(range(n)) if 0 in flat else tuple(range(1, n + 1))
        table = {}
        for i, row in zip(labels, rows):
            if len(row) != n:
                raise BadTableError(f"row {i} has length {len(row)}, want {n}")
            for j, v in zip(labels, row):
                table[(i, j)] = v
        return cls(name=name, labels=tuple(labels), table=table)

    @classmethod
    def from_text(cls, name, text):
        """Parse a whitespace-separated grid of integer labels."""
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                rows.append([int(tok) for tok in line.split()])
            except ValueError as exc:
                raise BadTableError(f"non-integer entry in row {len(rows) + 1}") from exc
        if not rows:
            raise BadTableError("no rows found")
        return cls.from_rows(name, rows)


def _cyclic_rows(n, start):
    return [
        [((i + j) % n) + start for j in range(n)]
        for i in range(n)
    ]


def cyclic3():
    return CayleyTable.from_rows("C3", _cyclic_rows(3, 1))


def c3_times_c3():
    """Z3 x Z3 on labels 0..8 with k = 3q + r standing for (q, r)."""
    rows = []
    for i in range(9):
        qi, ri = divmod(i, 3)
        rows.append(
            [3 * ((qi + qj) % 3) + (ri + rj) % 3 for qj, rj in (divmod(j, 3) for j in range(9))]
        )
    return CayleyTable.from_rows("C3xC3", rows)


_C2C4_ROWS = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (2, 1, 4, 3, 6, 5, 8, 7),
    (3, 4, 1, 2, 7, 8, 5, 6),
    (4, 3, 2, 1, 8, 7, 6, 5),
    (5, 6, 7, 8, 2, 1, 4, 3),
    (6, 5, 8, 7, 1, 2, 3, 4),
    (7, 8, 5, 6, 4, 3, 2, 1),
    (8, 7, 6, 5, 3, 4, 1, 2),
)


def c2_times_c4():
    return CayleyTable.from_rows("C2xC4", _C2C4_ROWS)


_ALT4_ROWS = (
    (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12),
    (2, 1, 4, 3, 7, 8, 5, 6, 12, 11, 10, 9),
    (3, 4, 1, 2, 8, 7, 6, 5, 10, 9, 12, 11),
    (4, 3, 2, 1, 6, 5, 8, 7, 11, 12, 9, 10),
    (5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4),
    (6, 5, 8, 7, 11, 12, 9, 10, 4, 3, 2, 1),
    (7, 8, 5, 6, 12, 11, 10, 9, 2, 1, 4, 3),
    (8, 7, 6, 5, 10, 9, 12, 11, 3, 4, 1, 2),
    (9, 10, 11, 12, 1, 2, 3, 4, 5, 6, 7, 8),
    (10, 9, 12, 11, 3, 4, 1, 2, 8, 7, 6, 5),
    (11, 12, 9, 10, 4, 3, 2, 1, 6, 5, 8, 7),
    (12, 11, 10, 9, 2, 1, 4, 3, 7, 8, 5, 6),
)


def alternating4():
    return CayleyTable.from_rows("Alt4", _ALT4_ROWS)


BUILTIN_TABLES = {
    "c3": cyclic3,
    "c3c3": c3_times_c3,
    "c2c4": c2_times_c4,
    "alt4": alternating4,
}


def builtin(name):
    try:
        return BUILTIN_TABLES[name]()
    except KeyError:
        raise BadTableError(f"no builtin table {name!r}") from None
