"""Row insertion, classical and tropical, and the word-to-tableau map.

A weakly increasing word ``1^{x_1} 2^{x_2} ... n^{x_n}`` is encoded by its
content vector ``x``.  Inserting ``a`` into a row ``x`` produces the new row
``y`` and the bumped word ``b`` through the prefix recurrence

    xi_j  = x_1 * ... * x_j
    eta_1 = xi_1 * a_1,   eta_j = (eta_{j-1} + xi_j) * a_j
    y_j   = eta_j / eta_{j-1},   b_1 = 1,   b_j = a_j x_j / y_j

written with semifield operations, so that the max-plus evaluation on
non-negative integers is exactly Schensted bumping of contents.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import MAXPLUS, RATIONAL, Algebra, Scalar, TransportMatrix, get_algebra
from .errors import AlgebraMismatch, InvalidWord, LengthMismatch
from .lattice_paths import Orientation, rect_minor_table
from .tableau import TableauContent

__all__ = [
    "RowOrder",
    "InsertionResult",
    "row_insert",
    "classical_bump_oracle",
    "classical_insert_word",
    "insert_word",
    "tableau_via_minors",
    "laplacian_content",
    "parse_word",
    "split_runs",
    "word_to_matrix",
]


class RowOrder(enum.Enum):
    """Which row of the matrix is inserted first."""

    TOP_DOWN = "top-down"
    BOTTOM_UP = "bottom-up"


@dataclass(frozen=True)
class InsertionResult:
    algebra: Algebra
    y: tuple
    b: tuple
    xi: tuple
    eta: tuple


def _coerce_pair(x, a, algebra):
    alg = None
    for v in list(x) + list(a):
        if isinstance(v, Scalar):
            if alg is not None and v.algebra is not alg:
                raise AlgebraMismatch("row vectors mix algebras")
            alg = v.algebra
    if algebra is not None:
        given = get_algebra(algebra)
        if alg is not None and alg is not given:
            raise AlgebraMismatch(f"scalars are {alg.name}, algebra {given.name} was requested")
        alg = given
    alg = alg or RATIONAL
    xs = tuple(alg.validate(v) for v in x)
    as_ = tuple(alg.validate(v) for v in a)
    if len(xs) != len(as_):
        raise LengthMismatch(f"row of length {len(xs)} cannot take a word of length {len(as_)}")
    return alg, xs, as_


def row_insert(x, a, algebra=None) -> InsertionResult:
    """Insert the word with content ``a`` into the row with content ``x``."""
    alg, x, a = _coerce_pair(x, a, algebra)
    n = len(x)
    if n == 0:
        return InsertionResult(alg, (), (), (), ())
    mul, add, div = alg.mul, alg.add, alg.div
    xi = [x[0]]
    for j in range(1, n):
        xi.append(mul(xi[-1], x[j]))
    eta = [mul(xi[0], a[0])]
    for j in range(1, n):
        eta.append(mul(add(eta[-1], xi[j]), a[j]))
    y = [eta[0]] + [div(eta[j], eta[j - 1]) for j in range(1, n)]
    b = [alg.one] + [div(mul(a[j], x[j]), y[j]) for j in range(1, n)]
    return InsertionResult(alg, tuple(y), tuple(b), tuple(xi), tuple(eta))


def _insert_vector(rows, vec, alg, n):
    """Insert one content vector into a list of tableau rows (row ``i`` covers ``i..n``)."""
    carry = list(vec)
    out = []
    for row in rows:
        res = row_insert(row, carry, alg)
        out.append(res.y)
        carry = list(res.b[1:])
    if len(out) < n:
        out.append(tuple(carry))
    return out


def insert_word(X: TransportMatrix, order=RowOrder.TOP_DOWN) -> TableauContent:
    """Insert the rows of ``X`` one after another into the empty tableau.

    ``TOP_DOWN`` inserts row 1 first; ``BOTTOM_UP`` inserts row ``m`` first.
    The result has ``min(m, n)`` rows.
    """
    order = RowOrder(order)
    alg, n = X.algebra, X.n
    words = X.rows if order is RowOrder.TOP_DOWN else X.rows[::-1]
    rows = []
    for vec in words:
        rows = _insert_vector(rows, vec, alg, n)
    return TableauContent(alg, n, rows)


def laplacian_content(tau, nrows: int, n: int, alg: Algebra):
    """Content table from a table of special minors by the discrete Laplacian.

    ``u^i_i = tau^i_i / tau^{i-1}_i`` and, for ``j > i``,
    ``u^i_j = tau^i_j tau^{i-1}_{j-1} / (tau^{i-1}_j tau^i_{j-1})``.
    """
    mul, div = alg.mul, alg.div
    rows = []
    for i in range(1, nrows + 1):
        row = []
        for j in range(i, n + 1):
            if j == i:
                row.append(div(tau.get(i, i), tau.get(i - 1, i)))
            else:
                num = mul(tau.get(i, j), tau.get(i - 1, j - 1))
                den = mul(tau.get(i - 1, j), tau.get(i, j - 1))
                row.append(div(num, den))
        rows.append(row)
    return TableauContent(alg, n, rows)


def tableau_via_minors(X: TransportMatrix, order=RowOrder.TOP_DOWN) -> TableauContent:
    """Same tableau as :func:`insert_word`, computed from nonintersecting paths."""
    order = RowOrder(order)
    if order is RowOrder.BOTTOM_UP:
        X = X.flip_rows()
    nrows = min(X.m, X.n)
    if nrows == 0:
        return TableauContent(X.algebra, X.n, [])
    tau = rect_minor_table(X, Orientation.INSERTION)
    return laplacian_content(tau, nrows, X.n, X.algebra)


# --------------------------------------------------------------------------
# words and the classical oracle


def parse_word(w) -> list:
    """Letters of a word given as a digit string, a separated string or a list."""
    if isinstance(w, str):
        text = w.strip()
        if any(sep in text for sep in ", "):
            parts = [p for p in text.replace(",", " ").split() if p]
            letters = [int(p) for p in parts]
        else:
            letters = [int(c) for c in text if c != "|"]
    else:
        letters = [int(c) for c in w]
    if any(c < 1 for c in letters):
        raise InvalidWord("letters are positive integers")
    return letters


def split_runs(letters) -> list:
    """Maximal weakly increasing runs of a word."""
    runs = []
    for c in letters:
        if runs and runs[-1][-1] <= c:
            runs[-1].append(c)
        else:
            runs.append([c])
    return runs


def word_to_matrix(w, n: int, blocks=None) -> TransportMatrix:
    """Max-plus matrix whose row ``i`` counts the letters of the ``i``-th block.

    Without ``blocks`` the word is cut into maximal weakly increasing runs.
    With explicit block lengths each block must itself be weakly increasing.
    """
    letters = parse_word(w)
    if any(c > n for c in letters):
        raise InvalidWord(f"letter out of range 1..{n}")
    if blocks is None:
        pieces = split_runs(letters)
    else:
        blocks = [int(b) for b in blocks]
        if sum(blocks) != len(letters) or any(b < 0 for b in blocks):
            raise InvalidWord("block lengths must add up to the word length")
        pieces, pos = [], 0
        for b in blocks:
            piece = letters[pos : pos + b]
            if any(p > q for p, q in zip(piece, piece[1:])):
                raise InvalidWord("every block must be weakly increasing")
            pieces.append(piece)
            pos += b
    rows = [[piece.count(k) for k in range(1, n + 1)] for piece in pieces]
    return TransportMatrix(MAXPLUS, rows, n)


def _weakly_increasing(w) -> bool:
    return all(p <= q for p, q in zip(w, w[1:]))


def classical_bump_oracle(row, v):
    """Schensted row insertion of the weakly increasing word ``v`` into ``row``.

    Letter by letter, each letter replaces the leftmost strictly larger entry,
    which is bumped.  Returns ``(new_row, bumped_word)``.
    """
    row = parse_word(row) if row not in ("", []) else []
    v = parse_word(v) if v not in ("", []) else []
    if not _weakly_increasing(row) or not _weakly_increasing(v):
        raise InvalidWord("row insertion needs weakly increasing words")
    row = list(row)
    bumped = []
    for c in v:
        for pos, r in enumerate(row):
            if r > c:
                bumped.append(r)
                row[pos] = c
                break
        else:
            row.append(c)
    return row, bumped


def classical_insert_word(letters, n: int) -> TableauContent:
    """Schensted insertion of a word letter by letter, as a content table."""
    tab = []
    for c in parse_word(letters) if letters not in ("", []) else []:
        carry = [c]
        for r, row in enumerate(tab):
            new_row, carry = classical_bump_oracle(row, carry)
            tab[r] = new_row
            if not carry:
                break
        if carry:
            tab.append(carry)
    nrows = min(len(tab), n)
    rows = [[row.count(j) for j in range(i, n + 1)] for i, row in enumerate(tab[:nrows], start=1)]
    return TableauContent(MAXPLUS, n, rows)
