"""Independent reference implementations used only by the tests.

Nothing here imports the package: paths are enumerated literally, the
piecewise-linear formulas are written with ``max``/``min`` on plain ints,
and tableaux are lists of letters.
"""

from bisect import bisect_right
from fractions import Fraction
from itertools import product


# --------------------------------------------------------------------------
# lattice paths


def monotone_paths(start, end):
    """All unit-step paths from ``start`` to ``end`` moving monotonically."""
    (r0, c0), (r1, c1) = start, end
    dr = (r1 > r0) - (r1 < r0)
    dc = (c1 > c0) - (c1 < c0)
    out = []

    def walk(r, c, acc):
        acc = acc + [(r, c)]
        if (r, c) == (r1, c1):
            out.append(acc)
            return
        if r != r1:
            walk(r + dr, c, acc)
        if c != c1:
            walk(r, c + dc, acc)

    walk(r0, c0, [])
    return out


def nonintersecting(starts, ends, exists=lambda p: True):
    fams = []
    options = [[p for p in monotone_paths(s, e) if all(exists(v) for v in p)] for s, e in zip(starts, ends)]
    for fam in product(*options):
        seen = set()
        ok = True
        for path in fam:
            for v in path:
                if v in seen:
                    ok = False
                    break
                seen.add(v)
            if not ok:
                break
        if ok:
            fams.append(fam)
    return fams


def family_value(weight, starts, ends, tropical, exists=lambda p: True):
    """Sum (or max) over families of the product (or sum) of vertex weights."""
    vals = []
    for fam in nonintersecting(starts, ends, exists):
        if tropical:
            vals.append(sum(weight(v) for path in fam for v in path))
        else:
            w = Fraction(1)
            for path in fam:
                for v in path:
                    w *= weight(v)
            vals.append(w)
    if not vals:
        return None
    return max(vals) if tropical else sum(vals)


def iota_maxplus(X):
    """Combinatorial involution by its literal max formula on an int matrix."""
    m, n = len(X), len(X[0])

    def sigma(i, j):
        if i == 0 or j == 0:
            return 0
        r = min(i, j)
        starts = [(m - i + k, 1) for k in range(1, r + 1)]
        ends = [(1, n - j + k) for k in range(1, r + 1)]
        return family_value(lambda v: X[v[0] - 1][v[1] - 1], starts, ends, True)

    return [
        [sigma(i, j) - sigma(i - 1, j) - sigma(i, j - 1) + sigma(i - 1, j - 1) for j in range(1, n + 1)]
        for i in range(1, m + 1)
    ]


# --------------------------------------------------------------------------
# classical tableaux


def schensted(letters):
    """Row insertion of a word letter by letter; rows as lists of letters."""
    rows = []
    for c in letters:
        for row in rows:
            pos = bisect_right(row, c)
            if pos == len(row):
                row.append(c)
                break
            row[pos], c = c, row[pos]
        else:
            rows.append([c])
    return rows


def content(rows, n):
    """Row-content table: entry ``[i][j-i]`` counts the letters ``j`` in row ``i``."""
    return [[row.count(j) for j in range(i, n + 1)] for i, row in enumerate(rows, start=1)]


def from_content(table):
    rows = []
    for i, counts in enumerate(table, start=1):
        row = []
        for off, c in enumerate(counts):
            row += [i + off] * c
        rows.append(row)
    return rows


def reading_word(rows):
    """Rows from bottom to top, each left to right."""
    return [c for row in reversed(rows) for c in row]


def evacuation(rows, n):
    """Classical evacuation: insert the complemented reversed reading word."""
    w = reading_word(rows)
    return schensted([n + 1 - c for c in reversed(w)])


def pad(table, nrows, n):
    table = [list(r) for r in table]
    while len(table) < nrows:
        table.append([0] * (n - len(table)))
    while len(table) > nrows and not any(table[-1]):
        table.pop()
    return table


# --------------------------------------------------------------------------
# piecewise-linear Weyl group action


class Ext:
    """Extended indexing ``x^{i+m}_j = x^i_j - q``, ``x^i_{j+n} = x^i_j - p``."""

    def __init__(self, X, p, q):
        self.X, self.p, self.q = X, p, q
        self.m, self.n = len(X), len(X[0])

    def __call__(self, i, j):
        a, i0 = divmod(i - 1, self.m)
        b, j0 = divmod(j - 1, self.n)
        return self.X[i0][j0] - a * self.q - b * self.p


def P_max(x, i, j):
    n = x.n
    return max(
        sum(x(i + 1, j + a) for a in range(1, k + 1)) + sum(x(i, j + a) for a in range(k, n + 1))
        for k in range(1, n + 1)
    )


def R_min(x, i, j):
    n = x.n
    return min(
        sum(x(i, j + a) for a in range(1, k)) + sum(x(i + 1, j + a) for a in range(k + 1, n + 1))
        for k in range(1, n + 1)
    )


def Q_max(x, i, j):
    m = x.m
    return max(
        sum(x(i + a, j + 1) for a in range(1, k + 1)) + sum(x(i + a, j) for a in range(k, m + 1))
        for k in range(1, m + 1)
    )


def r_action(X, p, q, k, form="max"):
    x = Ext(X, p, q)
    m, n = x.m, x.n
    i = k % m or m
    Y = [list(r) for r in X]
    for j in range(1, n + 1):
        if form == "max":
            top = x(i + 1, j) + P_max(x, i, j) - P_max(x, i, j - 1) + p
            low = x(i, j) + P_max(x, i, j - 1) - P_max(x, i, j) - p
        else:
            top = x(i + 1, j) - R_min(x, i, j) + R_min(x, i, j - 1) - p
            low = x(i, j) + R_min(x, i, j) - R_min(x, i, j - 1) + p
        Y[i - 1][j - 1] = top
        if i < m:
            Y[i][j - 1] = low
        else:
            Y[0][j - 1] = low + q
    return Y


def s_action(X, p, q, l):
    x = Ext(X, p, q)
    m, n = x.m, x.n
    j = l % n or n
    Y = [list(r) for r in X]
    for i in range(1, m + 1):
        left = x(i, j + 1) + Q_max(x, i, j) - Q_max(x, i - 1, j) + q
        right = x(i, j) + Q_max(x, i - 1, j) - Q_max(x, i, j) - q
        Y[i - 1][j - 1] = left
        if j < n:
            Y[i - 1][j] = right
        else:
            Y[i - 1][0] = right + p
    return Y


def omega_action(X, p, q):
    x = Ext(X, p, q)
    return [[x(i + 1, j) for j in range(1, x.n + 1)] for i in range(1, x.m + 1)]


def pi_action(X, p, q):
    x = Ext(X, p, q)
    return [[x(i, j + 1) for j in range(1, x.n + 1)] for i in range(1, x.m + 1)]


def s_on_content(table, l, q, m):
    """Piecewise-linear action of ``s_l`` on a content table with ``m`` rows."""
    n = len(table[0]) if table else 0

    def u(i, j):
        if j < i or i > len(table):
            return 0
        return table[i - 1][j - i]

    top = min(l, m)
    up = min(l + 1, m)

    def A(i):
        cands = []
        for k in range(i + 1, top + 1):
            cands.append(
                sum(u(a, l) for a in range(1, i + 1))
                + sum(u(a, l + 1) for a in range(i + 1, k + 1))
                + sum(u(a, l) for a in range(k, top + 1))
            )
        for k in range(1, i + 1):
            cands.append(
                sum(u(a, l + 1) for a in range(i + 1, up + 1))
                + sum(u(a, l + 1) for a in range(1, k + 1))
                + sum(u(a, l) for a in range(k, i + 1))
                - q
            )
        return max(cands)

    out = [list(r) for r in table]
    As = [A(i) for i in range(0, top + 1)]
    for i in range(1, top + 1):
        out[i - 1][l - i] = u(i, l + 1) + As[i] - As[i - 1]
        out[i - 1][l + 1 - i] = u(i, l) + As[i - 1] - As[i]
    assert all(len(r) == n - i for i, r in enumerate(out))
    return out


# --------------------------------------------------------------------------
# row insertion by its piecewise-linear formula


def row_insert_maxplus(x, a):
    n = len(x)
    xi = [sum(x[: j + 1]) for j in range(n)]
    eta = [xi[0] + a[0]]
    for j in range(1, n):
        eta.append(max(eta[-1], xi[j]) + a[j])
    y = [eta[0]] + [eta[j] - eta[j - 1] for j in range(1, n)]
    b = [0] + [a[j] + x[j] - y[j] for j in range(1, n)]
    return y, b


def classical_rsk(A):
    """Biword RSK of a nonnegative integer matrix: ``(P, Q)`` as lists of rows.

    The biword lists ``(i, j)`` with multiplicity ``A[i][j]`` in lexicographic
    order; the ``j`` are row-inserted and the ``i`` recorded.
    """
    P, Q = [], []
    for i, row in enumerate(A, start=1):
        for j, mult in enumerate(row, start=1):
            for _ in range(mult):
                c = j
                r = 0
                while True:
                    if r == len(P):
                        P.append([c])
                        Q.append([i])
                        break
                    pos = bisect_right(P[r], c)
                    if pos == len(P[r]):
                        P[r].append(c)
                        Q[r].append(i)
                        break
                    P[r][pos], c = c, P[r][pos]
                    r += 1
    return P, Q
