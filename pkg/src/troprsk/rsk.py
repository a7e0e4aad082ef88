"""The path matrix, the involution iota and the RSK* correspondence.

``phi`` sends a positive matrix ``X`` to the matrix of single-path sums
``phi^i_j`` over paths ``(i, 1) -> (1, j)``.  Its largest square minor with
lower-right corner ``(i, j)`` equals the product ``x^a_b`` over the rectangle
``a <= i, b <= j``, so ``phi`` is inverted by a ratio of minors.

``iota`` is characterized by ``phi(iota(X)) = J phi(X) J``.  RSK* reads the
rows of ``X`` bottom to top into ``U`` and its columns right to left into
``V``; the pair determines the special minors of ``J phi(X) J`` and hence
``X`` again.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import RATIONAL, TransportMatrix
from .errors import (
    AlgebraMismatch,
    AlgebraUnsupported,
    NotInTauCell,
    PositivityViolation,
    ShapeMismatch,
    UnsupportedShape,
)
from .insertion import RowOrder, insert_word
from .lattice_paths import MinorTable, Orientation, rect_minor_table
from .schutzenberger import evacuate
from .structured_matrices import Matrix, flip_matrix, minor_det, reassemble_H
from .tableau import TableauContent

__all__ = [
    "Variant",
    "TableauPair",
    "GTPattern",
    "GaussFactors",
    "phi",
    "phi_tau",
    "phi_inverse",
    "iota",
    "rsk_star",
    "rsk_variants",
    "sigma_from_pair",
    "glued_gt_matrix",
    "gt_pattern",
    "inverse_rsk_star",
    "gauss_decompose",
    "inverse_via_gauss",
]


class Variant(enum.Enum):
    PQ = "PQ"
    PQt = "PQt"
    PtQ = "PtQ"
    PtQt = "PtQt"


@dataclass(frozen=True)
class TableauPair:
    """``U`` over letters ``1..n`` and ``V`` over letters ``1..m``."""

    U: TableauContent
    V: TableauContent

    def __post_init__(self):
        if self.U.algebra is not self.V.algebra:
            raise AlgebraMismatch("tableaux of a pair must share the algebra")
        rows = max(self.U.nrows, self.V.nrows)
        if _shape(self.U, rows) != _shape(self.V, rows):
            raise ShapeMismatch("the two tableaux have different shapes")

    @property
    def shape(self):
        return self.U.shape()

    def to_json(self):
        enc = self.U.algebra.encode
        return {
            "U": self.U.to_json(),
            "V": self.V.to_json(),
            "shape": [enc(v) for v in self.shape],
        }

    @classmethod
    def from_json(cls, obj, m=None, n=None) -> "TableauPair":
        return cls(TableauContent.from_json(obj["U"], n), TableauContent.from_json(obj["V"], m))


def _shape(U: TableauContent, rows: int):
    one = U.algebra.one
    return list(U.shape()) + [one] * (rows - U.nrows)


# --------------------------------------------------------------------------
# phi and iota


def _require_rational(X, what):
    if X.algebra is not RATIONAL:
        raise AlgebraUnsupported(f"{what} needs rational entries, got {X.algebra.name}")


def phi(X: TransportMatrix) -> Matrix:
    """Matrix of path sums ``(i, 1) -> (1, j)`` with steps up and right."""
    _require_rational(X, "phi")
    m, n = X.shape
    rows = [[None] * n for _ in range(m)]
    for i in range(m, 0, -1):
        # f[a][b]: paths from (i, 1) to (a, b)
        below = None
        for a in range(i, 0, -1):
            cur = []
            for b in range(1, n + 1):
                prev = Fraction(0)
                if a == i and b == 1:
                    prev = Fraction(1)
                if below is not None:
                    prev += below[b - 1]
                if b > 1:
                    prev += cur[-1]
                cur.append(prev * X.x(a, b))
            below = cur
        rows[i - 1] = below
    return Matrix._raw(rows)


def phi_tau(Phi, i: int, j: int) -> Fraction:
    """Largest square minor of ``Phi`` whose lower-right corner is ``(i, j)``."""
    if i == 0 or j == 0:
        return Fraction(1)
    r = min(i, j)
    return minor_det(Phi, range(i - r + 1, i + 1), range(j - r + 1, j + 1))


def phi_inverse(Phi) -> TransportMatrix:
    """Recover ``X`` from ``phi(X)`` by the ratio of special minors."""
    if isinstance(Phi, TransportMatrix):
        _require_rational(Phi, "phi_inverse")
    Phi = Phi if isinstance(Phi, Matrix) else Matrix(Phi)
    m, n = Phi.nrows, Phi.ncols
    tau = {}
    for i in range(m + 1):
        for j in range(n + 1):
            t = phi_tau(Phi, i, j)
            if t == 0:
                raise NotInTauCell(f"special minor tau^{i}_{j} vanishes", i=i, j=j)
            tau[(i, j)] = t
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, n + 1):
            v = tau[(i, j)] * tau[(i - 1, j - 1)] / (tau[(i - 1, j)] * tau[(i, j - 1)])
            if v <= 0:
                raise PositivityViolation(f"recovered entry x^{i}_{j} = {v} is not positive", i=i, j=j)
            row.append(v)
        rows.append(row)
    return TransportMatrix(RATIONAL, rows, n)


def _ratio_matrix(sigma, m, n, alg) -> TransportMatrix:
    mul, div = alg.mul, alg.div
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, n + 1):
            num = mul(sigma(i, j), sigma(i - 1, j - 1))
            den = mul(sigma(i - 1, j), sigma(i, j - 1))
            row.append(div(num, den))
        rows.append(row)
    return TransportMatrix(alg, rows, n)


def iota(X: TransportMatrix, method="dp") -> TransportMatrix:
    """The involution ``iota``, generic over the algebra."""
    if X.m == 0 or X.n == 0:
        return X
    table = rect_minor_table(X, Orientation.IOTA, method=method)
    return _ratio_matrix(table.get, X.m, X.n, X.algebra)


# --------------------------------------------------------------------------
# RSK*


def rsk_star(X: TransportMatrix) -> TableauPair:
    """``U`` from the rows of ``X`` bottom to top, ``V`` from its columns right to left."""
    U = insert_word(X, RowOrder.BOTTOM_UP)
    V = insert_word(X.transpose(), RowOrder.BOTTOM_UP)
    return TableauPair(U, V)


def rsk_variants(A: TransportMatrix, variant) -> TableauPair:
    """The four tableau pairs attached to ``A`` through ``X = J A``.

    ``PQ`` is the usual RSK pair ``(P, Q)``; ``t`` marks the evacuated member.
    """
    variant = Variant(variant)
    pair = rsk_star(A.flip_rows())
    U, V = pair.U, pair.V
    P, Pt = U, evacuate(U)
    Qt, Q = V, evacuate(V)
    first = P if variant in (Variant.PQ, Variant.PQt) else Pt
    second = Q if variant in (Variant.PQ, Variant.PtQ) else Qt
    return TableauPair(first, second)


def _prepare_pair(U: TableauContent, V: TableauContent):
    if U.algebra is not V.algebra:
        raise AlgebraMismatch("tableaux of a pair must share the algebra")
    n, m = U.n, V.n
    if m > n:
        raise UnsupportedShape(f"pair with m={m} > n={n}; swap the tableaux and transpose")
    rows = max(U.nrows, V.nrows)
    if rows > m:
        raise ShapeMismatch(f"{rows} rows do not fit an alphabet of {m} letters")
    U, V = U.with_rows(m), V.with_rows(m)
    if U.shape() != V.shape():
        raise ShapeMismatch("the two tableaux have different shapes")
    return U, V, m, n


def _sigma_values(U, V, m, n):
    alg = U.algebra
    # cumulative products over a <= i, b <= c
    def block(T, i, c):
        acc = alg.one
        for a in range(1, i + 1):
            for b in range(a, c + 1):
                acc = alg.mul(acc, T.u(a, b))
        return acc

    entries = {}
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            if i <= j:
                entries[(i, j)] = block(U, i, n - j + i)
            else:
                entries[(i, j)] = block(V, j, m - i + j)
    return entries


def sigma_from_pair(U: TableauContent, V: TableauContent) -> MinorTable:
    """Special minors of ``J phi(X) J``: upper part read off ``U``, lower part off ``V``."""
    U, V, m, n = _prepare_pair(U, V)
    return MinorTable(U.algebra, "pair", m, n, _sigma_values(U, V, m, n))


@dataclass(frozen=True)
class GTPattern:
    """``levels[j-1]`` holds ``mu^{(j)}_1, ..., mu^{(j)}_{min(j, rows)}``."""

    algebra: object
    levels: tuple

    def mu(self, j: int, i: int):
        return self.levels[j - 1][i - 1]

    def interlaces(self) -> bool:
        """``mu^{(j+1)}_i >= mu^{(j)}_i >= mu^{(j+1)}_{i+1}`` (max-plus only)."""
        if self.algebra.name != "maxplus":
            raise TypeError("interlacing is a combinatorial notion")
        for lo, hi in zip(self.levels, self.levels[1:]):
            for i, v in enumerate(lo):
                if not hi[i] >= v:
                    return False
                if i + 1 < len(hi) and not v >= hi[i + 1]:
                    return False
        return True

    def to_json(self):
        enc = self.algebra.encode
        return [[enc(v) for v in lv] for lv in self.levels]


def gt_pattern(U: TableauContent) -> GTPattern:
    """Partial row products ``mu^{(j)}_i = u^i_i ... u^i_j``."""
    alg = U.algebra
    levels = []
    for j in range(1, U.n + 1):
        level = []
        for i in range(1, min(j, U.nrows) + 1):
            level.append(alg.prod(U.u(i, b) for b in range(i, j + 1)))
        levels.append(tuple(level))
    return GTPattern(alg, tuple(levels))


def glued_gt_matrix(U: TableauContent, V: TableauContent) -> TransportMatrix:
    """The two Gelfand-Tsetlin patterns of a pair glued along the diagonal."""
    U, V, m, n = _prepare_pair(U, V)
    mu, nu = gt_pattern(U), gt_pattern(V)
    rows = []
    for i in range(1, m + 1):
        rows.append([mu.mu(n - j + i, i) if i <= j else nu.mu(m - i + j, j) for j in range(1, n + 1)])
    return TransportMatrix(U.algebra, rows, n)


def inverse_rsk_star(U: TableauContent, V: TableauContent | None = None) -> TransportMatrix:
    """The matrix ``X`` with ``rsk_star(X) == (U, V)``.

    A pair with more letters in ``V`` than in ``U`` is handled by swapping
    the tableaux and transposing the result.
    """
    if isinstance(U, TableauPair):
        U, V = U.U, U.V
    if V.n > U.n:
        return inverse_rsk_star(V, U).transpose()
    U, V, m, n = _prepare_pair(U, V)
    if m == 0:
        return TransportMatrix(U.algebra, [], n)
    entries = _sigma_values(U, V, m, n)
    one = U.algebra.one
    Y = _ratio_matrix(lambda i, j: one if i == 0 or j == 0 else entries[(i, j)], m, n, U.algebra)
    return iota(Y)


# --------------------------------------------------------------------------
# Gauss decomposition


@dataclass(frozen=True)
class GaussFactors:
    """``minus`` lower unitriangular ``m x m``, ``zero`` diagonal, ``plus`` upper unitriangular ``m x n``."""

    minus: Matrix
    zero: Matrix
    plus: Matrix

    def product(self) -> Matrix:
        return self.minus @ self.zero @ self.plus

    def to_json(self):
        return {"minus": self.minus.to_json(), "zero": self.zero.to_json(), "plus": self.plus.to_json()}


def gauss_decompose(U: TableauContent, V: TableauContent | None = None) -> GaussFactors:
    """Factors of ``J phi(X) J`` written through minors of ``H_U`` and ``H_V``."""
    if isinstance(U, TableauPair):
        U, V = U.U, U.V
    if U.algebra is not RATIONAL or V.algebra is not RATIONAL:
        raise AlgebraUnsupported("the Gauss factors live over the rationals")
    U, V, m, n = _prepare_pair(U, V)
    HU = reassemble_H(U.rows, n)
    HV = reassemble_H(V.rows, m)
    zero = Fraction(0)

    plus = []
    for i in range(1, m + 1):
        den = minor_det(HU, range(1, i + 1), range(n - i + 1, n + 1))
        row = []
        for j in range(1, n + 1):
            if j < i:
                row.append(zero)
            else:
                cols = [n - j + 1] + list(range(n - i + 2, n + 1))
                row.append(minor_det(HU, range(1, i + 1), cols) / den)
        plus.append(row)

    minus = [[zero] * m for _ in range(m)]
    for j in range(1, m + 1):
        den = minor_det(HV, range(1, j + 1), range(m - j + 1, m + 1))
        for i in range(j, m + 1):
            cols = [m - i + 1] + list(range(m - j + 2, m + 1))
            minus[i - 1][j - 1] = minor_det(HV, range(1, j + 1), cols) / den

    lam = U.shape()
    diag = [[lam[i] if i == k else zero for k in range(m)] for i in range(m)]
    return GaussFactors(Matrix._raw(minus), Matrix._raw(diag), Matrix._raw(plus))


def inverse_via_gauss(U: TableauContent, V: TableauContent | None = None) -> TransportMatrix:
    """Second inverse of RSK*: rebuild ``Psi``, conjugate by ``J`` and invert ``phi``."""
    if isinstance(U, TableauPair):
        U, V = U.U, U.V
    if V.n > U.n:
        return inverse_via_gauss(V, U).transpose()
    factors = gauss_decompose(U, V)
    Psi = factors.product()
    Phi = flip_matrix(Psi.nrows) @ Psi @ flip_matrix(Psi.ncols)
    return phi_inverse(Phi)
