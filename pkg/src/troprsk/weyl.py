"""Birational affine Weyl group actions on matrices and on tableaux.

Entries are extended to all of ``Z x Z`` by ``x^{i+m}_j = q^{-1} x^i_j`` and
``x^i_{j+n} = p^{-1} x^i_j``.  The row reflections ``r_k`` and the column
reflections ``s_l`` are ratios of the two-row (two-column) path sums ``P``
and ``Q``; ``omega`` and ``pi`` shift rows and columns by one.  Everything
is written with the semifield operations, so the same code gives the
piecewise-linear action on integer matrices under max-plus.

Words act on points from left to right: ``apply_word([a, b], X)`` is
``b(a(X))``, which is the action of the automorphism product ``a b``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import RATIONAL, Algebra, Scalar, TransportMatrix, get_algebra
from .errors import (
    AlgebraMismatch,
    AlgebraUnsupported,
    BoundsError,
    GenericityFailure,
    InvalidWord,
    SpectralPole,
    UnsupportedShape,
)
from .structured_matrices import Matrix, build_G, build_spectral_H, identity
from .tableau import TableauContent

__all__ = [
    "WeylParams",
    "ExtendedIndexer",
    "WeylGenerator",
    "parse_generators",
    "P_poly",
    "Q_poly",
    "apply_generator",
    "apply_word",
    "row_permutation",
    "g0_from_matrix",
    "g0_from_tableau",
    "g_chain",
    "A_poly",
    "s_on_tableau",
    "spectral_H",
    "spectral_check_r_invariance",
    "spectral_check_s_conjugation",
    "toda_residual",
    "sample_z",
]


@dataclass(frozen=True)
class WeylParams:
    """Period multipliers ``p`` and ``q``; the defaults are the unit."""

    algebra: Algebra
    p: Fraction
    q: Fraction

    def __init__(self, p=None, q=None, algebra=RATIONAL):
        alg = get_algebra(algebra)
        vals = []
        for v in (p, q):
            if isinstance(v, Scalar):
                if v.algebra is not alg:
                    raise AlgebraMismatch(f"parameter is {v.algebra.name}, not {alg.name}")
                v = v.value
            vals.append(alg.one if v is None else alg.validate(v))
        object.__setattr__(self, "algebra", alg)
        object.__setattr__(self, "p", vals[0])
        object.__setattr__(self, "q", vals[1])

    def to_json(self):
        enc = self.algebra.encode
        return {"p": enc(self.p), "q": enc(self.q)}


def _params_for(X, params):
    if params is None:
        return WeylParams(algebra=X.algebra)
    if params.algebra is not X.algebra:
        raise AlgebraMismatch(f"parameters are {params.algebra.name}, matrix is {X.algebra.name}")
    return params


class ExtendedIndexer:
    """``x^i_j`` for arbitrary integers, folded into the base block."""

    def __init__(self, X: TransportMatrix, params: WeylParams | None = None):
        self.X = X
        self.params = _params_for(X, params)
        self.algebra = X.algebra
        self.m, self.n = X.shape
        if self.m == 0 or self.n == 0:
            raise UnsupportedShape("extended indexing needs a nonempty matrix")

    def __call__(self, i: int, j: int) -> Fraction:
        alg, m, n = self.algebra, self.m, self.n
        a, i0 = divmod(i - 1, m)
        b, j0 = divmod(j - 1, n)
        v = self.X.rows[i0][j0]
        if a:
            v = alg.mul(v, alg.power(self.params.q, -a))
        if b:
            v = alg.mul(v, alg.power(self.params.p, -b))
        return v


@dataclass(frozen=True)
class WeylGenerator:
    """``kind`` is ``"r"``, ``"s"``, ``"omega"`` or ``"pi"``; rotations may be inverted."""

    kind: str
    index: int = 0
    inverse: bool = False

    def token(self) -> str:
        if self.kind in ("r", "s"):
            return f"{self.kind}{self.index}"
        base = "w" if self.kind == "omega" else "p"
        return base + ("^-1" if self.inverse else "")


_TOKEN = re.compile(r"^(?:([rs])(-?\d+)|([wp])(\^-1)?)$")


def parse_generators(word, m=None, n=None) -> list:
    """Generators from ``"r1,s0,w,p"`` (``w`` is omega, ``p`` is pi, ``^-1`` inverts).

    Reflection indices are reduced mod ``m`` (rows) or ``n`` (columns) when
    the size is known.
    """
    if isinstance(word, str):
        tokens = [t.strip() for t in word.split(",") if t.strip()]
    else:
        tokens = list(word)
    out = []
    for t in tokens:
        if isinstance(t, WeylGenerator):
            out.append(t)
            continue
        hit = _TOKEN.match(str(t))
        if not hit:
            raise InvalidWord(f"unknown generator token {t!r}")
        if hit.group(1):
            kind, k = hit.group(1), int(hit.group(2))
            mod = m if kind == "r" else n
            out.append(WeylGenerator(kind, k % mod if mod else k))
        else:
            kind = "omega" if hit.group(3) == "w" else "pi"
            out.append(WeylGenerator(kind, 0, bool(hit.group(4))))
    return out


# --------------------------------------------------------------------------
# path sums


def P_poly(X, params, i: int, j: int) -> Fraction:
    """``P^i_j = sum_k x^{i+1}_{j+1} ... x^{i+1}_{j+k} x^i_{j+k} ... x^i_{j+n}``."""
    x = X if isinstance(X, ExtendedIndexer) else ExtendedIndexer(X, params)
    alg, n = x.algebra, x.n
    mul = alg.mul
    terms = []
    for k in range(1, n + 1):
        t = alg.one
        for c in range(j + 1, j + k + 1):
            t = mul(t, x(i + 1, c))
        for c in range(j + k, j + n + 1):
            t = mul(t, x(i, c))
        terms.append(t)
    return alg.sum(terms)


def Q_poly(X, params, i: int, j: int) -> Fraction:
    """``Q^i_j = sum_k x^{i+1}_{j+1} ... x^{i+k}_{j+1} x^{i+k}_j ... x^{i+m}_j``."""
    x = X if isinstance(X, ExtendedIndexer) else ExtendedIndexer(X, params)
    alg, m = x.algebra, x.m
    mul = alg.mul
    terms = []
    for k in range(1, m + 1):
        t = alg.one
        for r in range(i + 1, i + k + 1):
            t = mul(t, x(r, j + 1))
        for r in range(i + k, i + m + 1):
            t = mul(t, x(r, j))
        terms.append(t)
    return alg.sum(terms)


# --------------------------------------------------------------------------
# generators


def _apply_r(x: ExtendedIndexer, k: int):
    alg, m, n = x.algebra, x.m, x.n
    if m < 2:
        raise UnsupportedShape("row reflections need at least two rows")
    p, q = x.params.p, x.params.q
    mul, div = alg.mul, alg.div
    i = k % m or m
    P = [P_poly(x, None, i, j) for j in range(0, n + 1)]
    top = [mul(mul(p, x(i + 1, j)), div(P[j], P[j - 1])) for j in range(1, n + 1)]
    low = [mul(mul(alg.inv(p), x(i, j)), div(P[j - 1], P[j])) for j in range(1, n + 1)]
    rows = [list(r) for r in x.X.rows]
    rows[i - 1] = top
    if i < m:
        rows[i] = low
    else:
        # row m + 1 is q^{-1} times row 1
        rows[0] = [mul(q, v) for v in low]
    return rows


def _apply_s(x: ExtendedIndexer, l: int):
    alg, m, n = x.algebra, x.m, x.n
    if n < 2:
        raise UnsupportedShape("column reflections need at least two columns")
    p, q = x.params.p, x.params.q
    mul, div = alg.mul, alg.div
    j = l % n or n
    Q = [Q_poly(x, None, i, j) for i in range(0, m + 1)]
    rows = [list(r) for r in x.X.rows]
    for i in range(1, m + 1):
        left = mul(mul(q, x(i, j + 1)), div(Q[i], Q[i - 1]))
        right = mul(mul(alg.inv(q), x(i, j)), div(Q[i - 1], Q[i]))
        rows[i - 1][j - 1] = left
        if j < n:
            rows[i - 1][j] = right
        else:
            rows[i - 1][0] = mul(p, right)
    return rows


def apply_generator(g, X: TransportMatrix, params: WeylParams | None = None) -> TransportMatrix:
    """One generator applied to the point ``X``."""
    if isinstance(g, str):
        (g,) = parse_generators(g, X.m, X.n)
    x = ExtendedIndexer(X, params)
    m, n = x.m, x.n
    if g.kind == "r":
        rows = _apply_r(x, g.index)
    elif g.kind == "s":
        rows = _apply_s(x, g.index)
    elif g.kind == "omega":
        d = -1 if g.inverse else 1
        rows = [[x(i + d, j) for j in range(1, n + 1)] for i in range(1, m + 1)]
    elif g.kind == "pi":
        d = -1 if g.inverse else 1
        rows = [[x(i, j + d) for j in range(1, n + 1)] for i in range(1, m + 1)]
    else:
        raise InvalidWord(f"unknown generator kind {g.kind!r}")
    return TransportMatrix(X.algebra, rows, n)


def apply_word(word, X: TransportMatrix, params: WeylParams | None = None) -> TransportMatrix:
    """Apply the generators of ``word`` to ``X`` from left to right."""
    for g in parse_generators(word, X.m, X.n):
        X = apply_generator(g, X, params)
    return X


def row_permutation(word, m: int):
    """``(sigma, shift)`` with ``rowprod_i(w X) = p^{shift[i]} rowprod_{sigma(i)}(X)``.

    Only reflections ``r_1 .. r_{m-1}`` are accepted; ``shift[i] = i - sigma(i)``.
    """
    sigma = list(range(1, m + 1))
    for g in parse_generators(word, m, None):
        if g.kind != "r" or not 1 <= g.index <= m - 1:
            raise InvalidWord("row covariants are tracked for r_1 .. r_{m-1} only")
        k = g.index
        # sigma <- sigma o t with t = (k, k+1)
        t = {k: k + 1, k + 1: k}
        sigma = [sigma[t.get(i, i) - 1] for i in range(1, m + 1)]
    return {i: sigma[i - 1] for i in range(1, m + 1)}, {i: i - sigma[i - 1] for i in range(1, m + 1)}


# --------------------------------------------------------------------------
# g_0 and the tableau action


def _rational(X, what):
    if X.algebra is not RATIONAL:
        raise AlgebraUnsupported(f"{what} is defined over the rationals")


def _check_l(l: int, n: int):
    if not 1 <= l <= n - 1:
        raise BoundsError(f"l must lie in 1..{n - 1}, got {l}")


def g_chain(X: TransportMatrix, params, l: int):
    """``g_0, ..., g_m`` for the column reflection ``s_l``."""
    x = ExtendedIndexer(X, params)
    alg, m = x.algebra, x.m
    qi = alg.inv(x.params.q)
    out = []
    for i in range(0, m + 1):
        den_a = alg.mul(qi, alg.prod(x(r, l + 1) for r in range(i + 1, i + m + 1)))
        den_b = alg.prod(x(r, l) for r in range(i + 1, i + m + 1))
        if alg is RATIONAL:
            den = den_a - den_b
            if den == 0:
                raise GenericityFailure(f"denominator of g_{i} vanishes", i=i)
        else:
            raise AlgebraUnsupported("g_i involves a subtraction")
        out.append(Q_poly(x, None, i, l) / den)
    return out


def g0_from_matrix(X: TransportMatrix, params, l: int) -> Fraction:
    _rational(X, "g_0")
    _check_l(l, X.n) if X.n > 1 else None
    return g_chain(X, params, l)[0]


def _q_inv(q, alg):
    return alg.inv(alg.validate(q.value if isinstance(q, Scalar) else (alg.one if q is None else q)))


def A_poly(U: TableauContent, l: int, i: int, q=None, m=None) -> Fraction:
    """The polynomial ``A^i_l`` in the entries of ``U``, ``0 <= i <= min(l, m)``."""
    alg = U.algebra
    m = U.nrows if m is None else min(int(m), U.n)
    top = min(l, m)
    if not 0 <= i <= top:
        raise BoundsError(f"A^i_l needs 0 <= i <= {top}")
    u, mul, prod = U.u, alg.mul, alg.prod
    qi = _q_inv(q, alg)
    terms = []
    head = prod(u(a, l) for a in range(1, i + 1))
    for k in range(i + 1, top + 1):
        t = prod(u(a, l + 1) for a in range(i + 1, k + 1))
        t = mul(t, prod(u(a, l) for a in range(k, top + 1)))
        terms.append(mul(head, t))
    if i >= 1:
        tail_rows = range(i + 1, min(l + 1, m) + 1)
        tail = mul(qi, prod(u(a, l + 1) for a in tail_rows))
        for k in range(1, i + 1):
            t = prod(u(a, l + 1) for a in range(1, k + 1))
            t = mul(t, prod(u(a, l) for a in range(k, i + 1)))
            terms.append(mul(tail, t))
    return alg.sum(terms)


def g0_from_tableau(U: TableauContent, params, l: int, m=None) -> Fraction:
    """``g_0`` written in the entries of ``U = rsk_star(X).U``."""
    if U.algebra is not RATIONAL:
        raise AlgebraUnsupported("g_0 is defined over the rationals")
    _check_l(l, U.n)
    m = U.nrows if m is None else min(int(m), U.n)
    q = params.q if params is not None else Fraction(1)
    u = U.u
    top = min(l, m)
    den = (1 / q) * _prod(u(a, l + 1) for a in range(1, min(l + 1, m) + 1)) - _prod(
        u(a, l) for a in range(1, top + 1)
    )
    if den == 0:
        raise GenericityFailure("denominator of g_0 vanishes")
    return A_poly(U, l, 0, q, m) / den


def _prod(vals):
    acc = Fraction(1)
    for v in vals:
        acc *= v
    return acc


def s_on_tableau(l: int, U: TableauContent, q=None, m=None) -> TableauContent:
    """Action of ``s_l`` on the entries of ``U`` through the ratios ``A^i_l / A^{i-1}_l``."""
    _check_l(l, U.n)
    alg = U.algebra
    m = U.nrows if m is None else min(int(m), U.n)
    if m > U.nrows:
        U = U.with_rows(m)
    A = [A_poly(U, l, i, q, m) for i in range(0, min(l, m) + 1)]
    rows = [list(r) for r in U.rows]
    mul, div = alg.mul, alg.div
    for i in range(1, min(l, m) + 1):
        a, b = U.u(i, l), U.u(i, l + 1)
        rows[i - 1][l - i] = mul(b, div(A[i], A[i - 1]))
        rows[i - 1][l + 1 - i] = mul(a, div(A[i - 1], A[i]))
    return TableauContent(alg, U.n, rows)


# --------------------------------------------------------------------------
# spectral matrices


def spectral_H(X: TransportMatrix, params, z) -> Matrix:
    """``H(X; z) = H(x^m; z) H(x^{m-1}; p z) ... H(x^1; p^{m-1} z)``."""
    _rational(X, "the spectral matrix")
    params = _params_for(X, params)
    z = Fraction(z)
    out = identity(X.n)
    for i in range(X.m, 0, -1):
        out = out @ build_spectral_H(X.row(i), params.p ** (X.m - i) * z)
    return out


def sample_z(rng: random.Random, count: int = 5, bad=()):
    """Distinct nonzero rationals, avoiding the values in ``bad``."""
    out = []
    bad = set(Fraction(b) for b in bad)
    while len(out) < count:
        z = Fraction(rng.randint(1, 97), rng.randint(1, 97)) * rng.choice((1, -1))
        if z not in bad and z not in out:
            out.append(z)
    return out


def _report(relation, ok, lhs, rhs, **extra):
    rep = {"relation": relation, "pass": bool(ok), "lhs": lhs, "rhs": rhs}
    rep.update(extra)
    return rep


def _enc(M):
    return M.to_json() if isinstance(M, Matrix) else M


def _spectral_samples(fn, zs, rng, tries=50):
    """Evaluate ``fn(z)`` at each sample, replacing samples that hit a pole."""
    out = []
    for z in zs:
        for _ in range(tries):
            try:
                out.append((z, fn(z)))
                break
            except (SpectralPole, ZeroDivisionError):
                z = sample_z(rng, 1, [s for s, _ in out])[0]
        else:
            raise SpectralPole("could not find a regular sample point")
    return out


def spectral_check_r_invariance(X, params, k, zs=None, seed=0) -> dict:
    """``H(r_k X; z) == H(X; z)`` at every sample."""
    params = _params_for(X, params)
    rng = random.Random(seed)
    zs = list(zs) if zs is not None else sample_z(rng)
    Y = apply_word([WeylGenerator("r", k)], X, params)
    pairs = _spectral_samples(lambda z: (spectral_H(Y, params, z), spectral_H(X, params, z)), zs, rng)
    ok = all(a.to_json() == b.to_json() for _, (a, b) in pairs)
    return _report(
        f"H(r_{k} X; z) = H(X; z)",
        ok,
        [_enc(a) for _, (a, _) in pairs],
        [_enc(b) for _, (_, b) in pairs],
        z=[str(z) for z, _ in pairs],
    )


def spectral_check_s_conjugation(X, params, l, zs=None, seed=0) -> dict:
    """``H(s_l X; z) == G_l(g_0/q; z_L)^{-1} H(X; z) G_l(g_0; z_R)`` at every sample.

    ``G_l`` does not depend on ``z`` for ``l >= 1``.  For the affine node the
    spectral arguments are ``z_L = z / p`` and ``z_R = p^{m-1} z``, which is
    the form that holds for the product ``H(X; z)`` built by :func:`spectral_H`.
    """
    params = _params_for(X, params)
    rng = random.Random(seed)
    zs = list(zs) if zs is not None else sample_z(rng)
    n = X.n
    Y = apply_word([WeylGenerator("s", l)], X, params)
    g0 = g_chain(X, params, l % n)[0]
    m, p = X.m, params.p

    def both(z):
        G_left = build_G(l % n, g0 / params.q, z / p, n).inverse()
        G_right = build_G(l % n, g0, p ** (m - 1) * z, n)
        return spectral_H(Y, params, z), G_left @ spectral_H(X, params, z) @ G_right

    pairs = _spectral_samples(both, zs, rng)
    ok = all(a.to_json() == b.to_json() for _, (a, b) in pairs)
    return _report(
        f"H(s_{l} X; z) = G_{l}(g0/q)^-1 H(X; z) G_{l}(g0)",
        ok,
        [_enc(a) for _, (a, _) in pairs],
        [_enc(b) for _, (_, b) in pairs],
        z=[str(z) for z, _ in pairs],
        g0=str(g0),
    )


# --------------------------------------------------------------------------
# discrete Toda residuals


def _relation(alg, name, lhs, rhs):
    return _report(name, lhs == rhs, alg.encode(lhs), alg.encode(rhs))


def _recip_sum(alg, a, b):
    return alg.add(alg.inv(a), alg.inv(b))


def _toda_rows(X, Y, params, k):
    x, y = ExtendedIndexer(X, params), ExtendedIndexer(Y, params)
    alg, m, n = x.algebra, x.m, x.n
    i = k % m or m
    p = x.params.p
    out = []
    for j in range(1, n + 1):
        out.append(
            _relation(alg, f"x^{i}_{j} x^{i+1}_{j} = y^{i}_{j} y^{i+1}_{j}",
                      alg.mul(x(i, j), x(i + 1, j)), alg.mul(y(i, j), y(i + 1, j)))
        )
        out.append(
            _relation(alg, f"1/x^{i}_{j} + 1/x^{i+1}_{j+1} = 1/y^{i}_{j} + 1/y^{i+1}_{j+1}",
                      _recip_sum(alg, x(i, j), x(i + 1, j + 1)), _recip_sum(alg, y(i, j), y(i + 1, j + 1)))
        )
    lhs = alg.prod(y(i, j) for j in range(1, n + 1))
    rhs = alg.mul(alg.inv(p), alg.prod(x(i + 1, j) for j in range(1, n + 1)))
    out.append(_relation(alg, f"prod_j y^{i}_j = p^-1 prod_j x^{i+1}_j", lhs, rhs))
    others = [r for r in range(1, m + 1) if r != i and r != (i % m) + 1]
    untouched = all(X.row(r) == Y.row(r) for r in others)
    out.append(_report("rows other than i, i+1 fixed", untouched, others, others))
    return out


def _toda_cols(X, Y, params, l):
    x, y = ExtendedIndexer(X, params), ExtendedIndexer(Y, params)
    alg, m, n = x.algebra, x.m, x.n
    j = l % n or n
    q = x.params.q
    out = []
    for i in range(1, m + 1):
        out.append(
            _relation(alg, f"x^{i}_{j} x^{i}_{j+1} = y^{i}_{j} y^{i}_{j+1}",
                      alg.mul(x(i, j), x(i, j + 1)), alg.mul(y(i, j), y(i, j + 1)))
        )
        out.append(
            _relation(alg, f"1/x^{i}_{j} + 1/x^{i+1}_{j+1} = 1/y^{i}_{j} + 1/y^{i+1}_{j+1}",
                      _recip_sum(alg, x(i, j), x(i + 1, j + 1)), _recip_sum(alg, y(i, j), y(i + 1, j + 1)))
        )
    lhs = alg.prod(y(i, j) for i in range(1, m + 1))
    rhs = alg.mul(alg.inv(q), alg.prod(x(i, j + 1) for i in range(1, m + 1)))
    out.append(_relation(alg, f"prod_i y^i_{j} = q^-1 prod_i x^i_{j+1}", lhs, rhs))
    others = [c for c in range(1, n + 1) if c != j and c != (j % n) + 1]
    untouched = all(X.column(c) == Y.column(c) for c in others)
    out.append(_report("columns other than j, j+1 fixed", untouched, others, others))
    return out


def _toda_tableau(U, T, q, l, m):
    alg = U.algebra
    u, t = U.u, T.u
    q = alg.validate(q.value if isinstance(q, Scalar) else (alg.one if q is None else q))
    qi = alg.inv(q)
    mul, prod = alg.mul, alg.prod
    top = min(l, m)
    out = []
    for i in range(1, top + 1):
        out.append(_relation(alg, f"t^{i}_{l} t^{i}_{l+1} = u^{i}_{l} u^{i}_{l+1}",
                             mul(t(i, l), t(i, l + 1)), mul(u(i, l), u(i, l + 1))))
    for i in range(1, top):
        out.append(_relation(alg, f"1/t^{i}_{l} + 1/t^{i+1}_{l+1} = 1/u^{i}_{l} + 1/u^{i+1}_{l+1}",
                             _recip_sum(alg, t(i, l), t(i + 1, l + 1)), _recip_sum(alg, u(i, l), u(i + 1, l + 1))))
    if l <= m - 1:
        out.append(_relation(alg, f"t^{l+1}_{l+1} = u^{l+1}_{l+1}", t(l + 1, l + 1), u(l + 1, l + 1)))
        lhs = alg.add(alg.inv(t(l, l)), alg.div(q, mul(t(l + 1, l + 1), t(1, l + 1))))
        rhs = alg.add(alg.inv(u(l, l)), alg.div(q, mul(u(l + 1, l + 1), u(1, l + 1))))
        out.append(_relation(alg, f"1/t^{l}_{l} + q/(t^{l+1}_{l+1} t^1_{l+1}) = same in u", lhs, rhs))
    else:
        lhs = alg.add(alg.inv(t(m, l)), alg.div(q, t(1, l + 1)))
        rhs = alg.add(alg.inv(u(m, l)), alg.div(q, u(1, l + 1)))
        out.append(_relation(alg, f"1/t^{m}_{l} + q/t^1_{l+1} = same in u", lhs, rhs))
    up = min(l + 1, m)
    out.append(_relation(alg, "prod t_l = q^-1 prod u_{l+1}",
                         prod(t(a, l) for a in range(1, top + 1)),
                         mul(qi, prod(u(a, l + 1) for a in range(1, up + 1)))))
    out.append(_relation(alg, "prod t_{l+1} = q prod u_l",
                         prod(t(a, l + 1) for a in range(1, up + 1)),
                         mul(q, prod(u(a, l) for a in range(1, top + 1)))))
    return out


def toda_residual(X, Y, params=None, kind="RowAction", index=1, m=None) -> dict:
    """Check the discrete Toda system relating ``X`` and ``Y = g(X)``.

    ``kind`` is ``RowAction`` (``g = r_index``), ``ColumnAction``
    (``g = s_index``), or ``TableauAction-lo`` / ``TableauAction-hi`` for the
    action of ``s_index`` on tableaux ``X = U``, ``Y = T`` with
    ``index <= m - 1`` resp. ``index >= m``.  ``params`` carries ``q`` for
    the tableau kinds.
    """
    if kind == "RowAction":
        rels = _toda_rows(X, Y, params, index)
    elif kind == "ColumnAction":
        rels = _toda_cols(X, Y, params, index)
    elif kind in ("TableauAction-lo", "TableauAction-hi"):
        m = X.nrows if m is None else min(int(m), X.n)
        lo = index <= m - 1
        if lo != (kind == "TableauAction-lo"):
            raise BoundsError(f"{kind} does not cover l={index} with m={m}")
        q = params.q if params is not None else None
        rels = _toda_tableau(X.with_rows(m) if m > X.nrows else X, Y.with_rows(m) if m > Y.nrows else Y, q, index, m)
    else:
        raise ValueError(f"unknown residual kind {kind!r}")
    return {
        "relation": f"{kind} Toda system, index {index}",
        "pass": all(r["pass"] for r in rels),
        "relations": rels,
    }
