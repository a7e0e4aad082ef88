"""Structured matrices, exact minors and the canonical triangular factorizations.

Everything here works over the full field of rationals: the sign matrix
``D = diag((-1)^(i-1))`` and inverses of the structured matrices are needed to
state the identities being checked.  Max-plus data is refused; tropical minors
live in :mod:`troprsk.lattice_paths`.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MAXPLUS, Scalar, TransportMatrix, parse_fraction
from .errors import (
    AlgebraUnsupported,
    BoundsError,
    DecompositionObstruction,
    LengthMismatch,
    SpectralPole,
)

__all__ = [
    "Matrix",
    "CanonicalFactors",
    "identity",
    "shift_matrix",
    "sign_matrix",
    "flip_matrix",
    "det",
    "det_cofactor",
    "minor_det",
    "build_E",
    "build_H",
    "reassemble_E",
    "reassemble_H",
    "tau_minor",
    "decompose_triangular_E",
    "decompose_triangular_H",
    "conjugate_J",
    "transpose",
    "build_spectral_E",
    "build_spectral_H",
    "build_G",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _field(v) -> Fraction:
    if isinstance(v, Scalar):
        if v.algebra is MAXPLUS:
            raise AlgebraUnsupported("structured matrices are defined over the rationals only")
        return v.value
    return parse_fraction(v)


@dataclass(frozen=True)
class Matrix:
    """Dense matrix of exact rationals (any sign)."""

    rows: tuple

    def __init__(self, rows):
        data = tuple(tuple(_field(v) for v in r) for r in rows)
        if data and any(len(r) != len(data[0]) for r in data):
            raise LengthMismatch("ragged matrix")
        object.__setattr__(self, "rows", data)

    @classmethod
    def _raw(cls, rows) -> "Matrix":
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", tuple(tuple(r) for r in rows))
        return obj

    @classmethod
    def of(cls, obj) -> "Matrix":
        if isinstance(obj, Matrix):
            return obj
        if isinstance(obj, TransportMatrix):
            if obj.algebra is MAXPLUS:
                raise AlgebraUnsupported("minors of max-plus matrices are path sums, not determinants")
            return cls._raw(obj.rows)
        return cls(obj)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, key) -> Fraction:
        i, j = key
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise LengthMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows))
        return Matrix._raw(
            [[sum((a * b for a, b in zip(r, c)), _ZERO) for c in cols] for r in self.rows]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "Matrix":
        c = _field(c)
        return Matrix._raw([[c * a for a in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix._raw(list(zip(*self.rows)))

    def submatrix(self, rows, cols) -> "Matrix":
        for i in rows:
            if not 1 <= i <= self.nrows:
                raise BoundsError(f"row {i} outside 1..{self.nrows}")
        for j in cols:
            if not 1 <= j <= self.ncols:
                raise BoundsError(f"column {j} outside 1..{self.ncols}")
        return Matrix._raw([[self.rows[i - 1][j - 1] for j in cols] for i in rows])

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise LengthMismatch("only square matrices have inverses")
        a = [list(r) + [_ONE if i == j else _ZERO for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[col], a[piv] = a[piv], a[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[col])]
        return Matrix._raw([r[n:] for r in a])

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def to_json(self):
        return [[_encode(v) for v in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.to_json()})"


def _encode(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def identity(n: int) -> Matrix:
    return Matrix._raw([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])


def shift_matrix(n: int, k: int = 1) -> Matrix:
    """``Lambda_{>=k}``: unit superdiagonal entries in rows ``k..n-1``."""
    return Matrix._raw(
        [[_ONE if (j == i + 1 and i + 1 >= k) else _ZERO for j in range(n)] for i in range(n)]
    )


def sign_matrix(n: int) -> Matrix:
    """``D = diag(1, -1, 1, ...)``."""
    return Matrix._raw([[Fraction((-1) ** i) if i == j else _ZERO for j in range(n)] for i in range(n)])


def flip_matrix(n: int) -> Matrix:
    """The antidiagonal permutation matrix ``J_n``."""
    return Matrix._raw([[_ONE if i + j == n - 1 else _ZERO for j in range(n)] for i in range(n)])


def det(M) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    M = Matrix.of(M)
    n = M.nrows
    if n != M.ncols:
        raise LengthMismatch("determinant of a non-square matrix")
    if n == 0:
        return _ONE
    a = [list(r) for r in M.rows]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return _ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(M) -> Fraction:
    """Determinant by cofactor expansion; an independent check for small sizes."""
    M = Matrix.of(M)
    n = M.nrows
    if n == 0:
        return _ONE
    if n == 1:
        return M.rows[0][0]
    total = _ZERO
    for j in range(n):
        entry = M.rows[0][j]
        if entry:
            rest = Matrix._raw([r[:j] + r[j + 1 :] for r in M.rows[1:]])
            total += (-1) ** j * entry * det_cofactor(rest)
    return total


def minor_det(M, rows, cols) -> Fraction:
    """``det M^{rows}_{cols}`` with 1-based, strictly increasing index lists."""
    M = Matrix.of(M)
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise LengthMismatch("a minor needs as many rows as columns")
    for idx in (rows, cols):
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError("minor indices must be strictly increasing")
    sub = M.submatrix(rows, cols)
    value = det(sub)
    if os.environ.get("TRSK_DEBUG") and len(rows) <= 4:
        assert value == det_cofactor(sub), "determinant cross-check failed"
    return value


# --------------------------------------------------------------------------
# E and H


def _vector(x, k: int = 1):
    vals = [_field(v) for v in x]
    for j in range(min(k - 1, len(vals))):
        vals[j] = _ONE
    return vals


def build_E(x, k: int = 1) -> Matrix:
    """``E_k(x) = diag(x) + Lambda_{>=k}``, with ``x_j = 1`` for ``j < k``."""
    vals = _vector(x, k)
    n = len(vals)
    return Matrix._raw(
        [
            [vals[i] if i == j else (_ONE if (j == i + 1 and i + 1 >= k) else _ZERO) for j in range(n)]
            for i in range(n)
        ]
    )


def build_H(x, k: int = 1) -> Matrix:
    """``H_k(x)``: entry ``(i, j)`` is ``x_i ... x_j`` for ``k <= i <= j``."""
    vals = _vector(x, k)
    n = len(vals)
    rows = []
    for i in range(n):
        row = [_ZERO] * n
        if i + 1 < k:
            row[i] = _ONE
        else:
            acc = _ONE
            for j in range(i, n):
                acc *= vals[j]
                row[j] = acc
        rows.append(row)
    return Matrix._raw(rows)


def _padded(vec, i: int, n: int):
    vec = [_field(v) for v in vec]
    if len(vec) == n - i + 1:
        return [_ONE] * (i - 1) + vec
    if len(vec) == n:
        return vec
    raise LengthMismatch(f"factor {i} should have {n - i + 1} or {n} entries")


def reassemble_E(factors, n: int) -> Matrix:
    """``E_1(v^1) E_2(v^2) ... E_m(v^m)``."""
    out = identity(n)
    for i, v in enumerate(factors, start=1):
        out = out @ build_E(_padded(v, i, n), i)
    return out


def reassemble_H(factors, n: int) -> Matrix:
    """``H_m(u^m) ... H_2(u^2) H_1(u^1)``."""
    out = identity(n)
    for i, u in enumerate(factors, start=1):
        out = build_H(_padded(u, i, n), i) @ out
    return out


def tau_minor(H, i: int, j: int) -> Fraction:
    """``tau^i_j(H) = det H^{1..i}_{j-i+1..j}``; ``tau^0_j = 1``."""
    if i == 0:
        return _ONE
    return minor_det(H, range(1, i + 1), range(j - i + 1, j + 1))


@dataclass(frozen=True)
class CanonicalFactors:
    """Factor vectors; ``factors[i-1]`` holds entries ``i..n`` of the ``i``-th one."""

    n: int
    factors: tuple

    def entry(self, i: int, j: int) -> Fraction:
        if j < i or i > len(self.factors):
            return _ONE
        return self.factors[i - 1][j - i]

    def to_json(self):
        return {"n": self.n, "factors": [[_encode(v) for v in f] for f in self.factors]}


def decompose_triangular_E(M, m: int) -> CanonicalFactors:
    """Factor ``M = E_1(v^1) ... E_m(v^m)`` through the minors ``Q_{i,j}``.

    ``Q_{i,j} = det M^{1..j-i+1}_{i..j}`` and ``v^i_j`` is the ratio
    ``Q_{i,j} Q_{i+1,j-1} / (Q_{i+1,j} Q_{i,j-1})`` (``v^i_i = Q_{i,i}``).
    """
    M = Matrix.of(M)
    n = M.nrows
    if not 1 <= m <= n:
        raise ValueError(f"band parameter must lie in 1..{n}")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            a = M[i, j]
            if (j < i or j > i + m) and a != 0:
                raise DecompositionObstruction(i, j, f"entry ({i}, {j}) lies outside the band")
            if j == i + m and a != 1:
                raise DecompositionObstruction(i, j, f"entry ({i}, {j}) must equal 1")

    def Q(i, j):
        if j - i + 1 == 0:
            return _ONE
        return minor_det(M, range(1, j - i + 2), range(i, j + 1))

    factors = []
    for i in range(1, m + 1):
        vec = []
        for j in range(i, n + 1):
            q = Q(i, j)
            if q == 0:
                raise DecompositionObstruction(i, j)
            if j == i:
                vec.append(q)
            else:
                den = Q(i + 1, j) * Q(i, j - 1)
                if den == 0:
                    raise DecompositionObstruction(i, j)
                vec.append(q * Q(i + 1, j - 1) / den)
        factors.append(tuple(vec))
    return CanonicalFactors(n, tuple(factors))


def decompose_triangular_H(H, m: int) -> CanonicalFactors:
    """Factor ``H = H_m(u^m) ... H_1(u^1)`` through the minors ``tau^i_j(H)``."""
    H = Matrix.of(H)
    n = H.nrows
    if not 1 <= m <= n:
        raise ValueError(f"number of factors must lie in 1..{n}")
    if not H.is_upper_triangular():
        raise DecompositionObstruction(0, 0, "matrix is not upper triangular")
    tau = {}
    for i in range(0, n + 1):
        for j in range(max(i, 1), n + 1):
            tau[i, j] = tau_minor(H, i, j)
    for i in range(m + 1, n + 1):
        for j in range(i, n + 1):
            want = tau[m, j] if i == j else _ZERO
            if tau[i, j] != want:
                raise DecompositionObstruction(i, j, f"minor tau^{i}_{j} violates the degeneracy pattern")
    factors = []
    for i in range(1, m + 1):
        vec = []
        for j in range(i, n + 1):
            if tau[i, j] == 0:
                raise DecompositionObstruction(i, j)
            if j == i:
                vec.append(tau[i, i] / tau[i - 1, i])
            else:
                den = tau[i - 1, j] * tau[i, j - 1]
                if den == 0:
                    raise DecompositionObstruction(i, j)
                vec.append(tau[i, j] * tau[i - 1, j - 1] / den)
        factors.append(tuple(vec))
    return CanonicalFactors(n, tuple(factors))


def conjugate_J(M):
    """``J_m M J_n`` for a rectangular matrix (both index orders reversed)."""
    if isinstance(M, TransportMatrix):
        return M.conjugate_J()
    M = Matrix.of(M)
    return Matrix._raw([r[::-1] for r in M.rows[::-1]])


def transpose(M):
    if isinstance(M, TransportMatrix):
        return M.transpose()
    return Matrix.of(M).transpose()


# --------------------------------------------------------------------------
# spectral variants


def build_spectral_E(x, z) -> Matrix:
    """``E(x; z) = diag(x) + Lambda + z E_{n,1}``."""
    vals = [_field(v) for v in x]
    z = _field(z)
    n = len(vals)
    E = [list(r) for r in build_E(vals).rows]
    E[n - 1][0] += z
    return Matrix._raw(E)


def build_spectral_H(x, z) -> Matrix:
    """``H(x; z) = (diag(1/x) - Lambda - z E_{n,1})^{-1}``, by its closed form."""
    vals = [_field(v) for v in x]
    z = _field(z)
    n = len(vals)
    full = _ONE
    for v in vals:
        full *= v
    den = 1 - full * z
    if den == 0:
        raise SpectralPole(f"z = {z} is a pole of H(x; z)")
    prefix = [_ONE]
    for v in vals:
        prefix.append(prefix[-1] * v)
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i <= j:
                row.append(prefix[j] / prefix[i - 1] / den)
            else:
                row.append(prefix[j] * (full / prefix[i - 1]) * z / den)
        rows.append(row)
    return Matrix._raw(rows)


def build_G(l: int, u, z, n: int) -> Matrix:
    """``G_l(u; z)``: ``1 + E_{l+1,l}/u`` for ``l >= 1`` and ``1 + E_{1,n}/(u z)`` for ``l = 0``."""
    u = _field(u)
    z = _field(z)
    if u == 0:
        raise ZeroDivisionError("G_l needs a nonzero parameter")
    rows = [list(r) for r in identity(n).rows]
    if l == 0:
        if z == 0:
            raise SpectralPole("G_0(u; z) has a pole at z = 0")
        rows[0][n - 1] += 1 / (u * z)
    elif 1 <= l <= n - 1:
        rows[l][l - 1] += 1 / u
    else:
        raise BoundsError(f"G_l is defined for 0 <= l <= {n - 1}")
    return Matrix._raw(rows)


def _all_minors(M: Matrix, size: int):
    """Every ``size``-minor of ``M`` as a dict keyed by ``(rows, cols)``."""
    out = {}
    for rows in itertools.combinations(range(1, M.nrows + 1), size):
        for cols in itertools.combinations(range(1, M.ncols + 1), size):
            out[rows, cols] = minor_det(M, rows, cols)
    return out
