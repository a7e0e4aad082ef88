"""Row-content tables of (tropical or combinatorial) tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Algebra, get_algebra
from .errors import BoundsError, LengthMismatch

__all__ = ["TableauContent"]


@dataclass(frozen=True)
class TableauContent:
    """Content table ``u[i][j]`` for ``1 <= i <= rows``, ``i <= j <= n``.

    Row ``i`` stores ``u[i][i], ..., u[i][n]``.  Combinatorially ``u[i][j]``
    is the number of letters ``j`` in row ``i``; entries left of the diagonal
    are implicit units and are never stored.
    """

    algebra: Algebra
    n: int
    rows: tuple

    def __init__(self, algebra, n, rows):
        alg = get_algebra(algebra)
        n = int(n)
        data = []
        for i, row in enumerate(rows, start=1):
            row = list(row)
            if len(row) == n and i > 1:
                # padded form: drop the leading units
                lead, row = row[: i - 1], row[i - 1 :]
                if any(alg.validate(v) != alg.one for v in lead):
                    raise LengthMismatch(f"row {i} has non-unit entries left of the diagonal")
            if len(row) != n - i + 1:
                raise LengthMismatch(f"row {i} should hold {n - i + 1} entries, got {len(row)}")
            data.append(tuple(alg.validate(v) for v in row))
        if len(data) > n:
            raise LengthMismatch(f"a tableau over {n} letters has at most {n} rows")
        object.__setattr__(self, "algebra", alg)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(data))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def u(self, i: int, j: int) -> Fraction:
        """Entry ``u[i][j]``; units left of the diagonal and below the last row."""
        if not (1 <= j <= self.n) or i < 1:
            raise BoundsError(f"({i}, {j}) outside a tableau over {self.n} letters")
        if j < i or i > self.nrows:
            return self.algebra.one
        return self.rows[i - 1][j - i]

    def padded(self):
        """Rows of length ``n`` with the implicit units written out."""
        one = self.algebra.one
        return [[one] * (i - 1) + list(r) for i, r in enumerate(self.rows, start=1)]

    def shape(self):
        """Row products ``lambda_i`` (row lengths, combinatorially)."""
        return [self.algebra.prod(r) for r in self.rows]

    def with_rows(self, nrows: int) -> "TableauContent":
        """Same content with unit rows appended (or trailing unit rows removed)."""
        one = self.algebra.one
        rows = [list(r) for r in self.rows]
        if nrows < len(rows):
            if any(v != one for r in rows[nrows:] for v in r):
                raise LengthMismatch("cannot drop rows with non-unit content")
            rows = rows[:nrows]
        for i in range(len(rows) + 1, nrows + 1):
            rows.append([one] * (self.n - i + 1))
        return TableauContent(self.algebra, self.n, rows)

    def column_strict(self) -> bool:
        """Combinatorial validity of a max-plus content table.

        Entries must be non-negative integers, and for every ``i`` and ``j`` the
        letters ``<= j`` in row ``i+1`` may not outnumber the letters ``< j`` in
        row ``i``.
        """
        if self.algebra.name != "maxplus":
            raise TypeError("column strictness is a combinatorial notion")
        for r in self.rows:
            for v in r:
                if v < 0 or v.denominator != 1:
                    return False
        for i in range(1, self.nrows):
            upper = 0
            lower = 0
            for j in range(1, self.n + 1):
                lower += self.u(i + 1, j) if j >= i + 1 else 0
                if lower > upper:
                    return False
                upper += self.u(i, j) if j >= i else 0
        return True

    def to_json(self):
        enc = self.algebra.encode
        return {"algebra": self.algebra.name, "rows": [[enc(v) for v in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj, n=None) -> "TableauContent":
        rows = obj["rows"]
        if n is None:
            n = obj.get("n")
        if n is None:
            if not rows:
                raise LengthMismatch("the alphabet size of an empty tableau must be given")
            n = len(rows[0])
        return cls(get_algebra(obj["algebra"]), n, rows)

    def __repr__(self):
        enc = self.algebra.encode
        body = [[enc(v) for v in r] for r in self.rows]
        return f"TableauContent({self.algebra.name}, n={self.n}, {body})"
