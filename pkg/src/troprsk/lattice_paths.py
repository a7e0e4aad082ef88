"""Lattice paths and families of nonintersecting paths on weighted grids.

Vertices are 1-based ``(row, col)`` pairs with rows numbered top to bottom.
A vertex-weighted path has as weight the semifield product of the weights of
the vertices it visits, and a family of vertex-disjoint paths the product of
the path weights.  The semifield sum of family weights is what every minor
table in the package is built from.

Two evaluators are provided: exhaustive enumeration (:func:`lgv_minor`, the
test oracle) and a row-sweep dynamic program (:func:`family_sum`).  For
max-plus grids with integer weights the dynamic program runs in a compiled
kernel when one is available.
"""

from __future__ import annotations

import enum
import itertools
import os
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

from .algebra import MAXPLUS, RATIONAL, Algebra, TransportMatrix, get_algebra
from .errors import BoundsError, CapExceeded, EmptyFamily, ZeroMinor
from .tableau import TableauContent

try:  # compiled fast path; the pure-Python code below is the reference
    from . import _kernels
except ImportError:  # pragma: no cover - exercised when the extension is absent
    _kernels = None

__all__ = [
    "GridPoint",
    "WeightGrid",
    "Orientation",
    "MinorTable",
    "DEFAULT_ENUM_CAP",
    "enum_cap",
    "as_grid",
    "tableau_grid",
    "enumerate_paths",
    "path_weight",
    "nonintersecting_tuples",
    "lgv_minor",
    "family_sum",
    "rect_minor_table",
    "e_diagram_entry",
    "trapezoid_minor",
    "kernel_available",
]

GridPoint = namedtuple("GridPoint", ["row", "col"])

DEFAULT_ENUM_CAP = 14

_DIRECTIONS = {
    "up-right": (-1, 1),
    "down-right": (1, 1),
    "down-left": (1, -1),
    "up-left": (-1, -1),
}


def enum_cap() -> int:
    """Largest ``drow + dcol`` the brute-force enumerators accept."""
    raw = os.environ.get("TRSK_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def kernel_available() -> bool:
    return _kernels is not None and not os.environ.get("TRSK_PURE_PYTHON")


@dataclass(frozen=True)
class WeightGrid:
    """Rectangular vertex weights; ``None`` marks a vertex that does not exist."""

    algebra: Algebra
    cells: tuple

    @property
    def nrows(self) -> int:
        return len(self.cells)

    @property
    def ncols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def weight(self, p) -> Fraction:
        r, c = p
        if not (1 <= r <= self.nrows and 1 <= c <= self.ncols):
            raise BoundsError(f"vertex {tuple(p)} outside a {self.nrows}x{self.ncols} grid")
        w = self.cells[r - 1][c - 1]
        if w is None:
            raise BoundsError(f"vertex {tuple(p)} is not part of the diagram")
        return w

    def exists(self, p) -> bool:
        r, c = p
        return (
            1 <= r <= self.nrows
            and 1 <= c <= self.ncols
            and self.cells[r - 1][c - 1] is not None
        )


def tableau_grid(U: TableauContent, m: int | None = None) -> WeightGrid:
    """The staircase diagram of a tableau: vertex ``(a, b)`` exists iff ``a <= b``.

    ``m`` is the number of rows of the diagram (default: rows of ``U``);
    rows past the stored ones carry unit weights.
    """
    m = U.nrows if m is None else m
    cells = tuple(
        tuple(U.u(a, b) if a <= b else None for b in range(1, U.n + 1))
        for a in range(1, m + 1)
    )
    return WeightGrid(U.algebra, cells)


def as_grid(obj) -> WeightGrid:
    if isinstance(obj, WeightGrid):
        return obj
    if isinstance(obj, TransportMatrix):
        return WeightGrid(obj.algebra, obj.rows)
    if isinstance(obj, TableauContent):
        return tableau_grid(obj)
    raise TypeError(f"cannot use {type(obj).__name__} as a weight grid")


def _empty(alg: Algebra, detail: str):
    cls = ZeroMinor if alg is RATIONAL else EmptyFamily
    return cls(detail)


# --------------------------------------------------------------------------
# enumeration (oracle)


def _direction_of(start, end):
    dr = (end[0] > start[0]) - (end[0] < start[0])
    dc = (end[1] > start[1]) - (end[1] < start[1])
    return dr, dc


def _walk(start, end, sr, sc, cap):
    """All shortest paths from ``start`` to ``end`` using steps ``(sr,0)``/``(0,sc)``."""
    nr = (end[0] - start[0]) * sr
    nc = (end[1] - start[1]) * sc
    if nr < 0 or nc < 0:
        return []
    if cap is not None and nr + nc > cap:
        raise CapExceeded(
            f"enumeration of paths with {nr + nc} steps exceeds the cap of {cap}"
            " (set TRSK_ENUM_CAP to raise it)"
        )
    out = []
    for vertical in itertools.combinations(range(nr + nc), nr):
        r, c = start
        pts = [GridPoint(r, c)]
        vset = set(vertical)
        for step in range(nr + nc):
            if step in vset:
                r += sr
            else:
                c += sc
            pts.append(GridPoint(r, c))
        out.append(tuple(pts))
    return out


def enumerate_paths(start, end, bounds, direction="up-right", cap=None):
    """Every shortest lattice path from ``start`` to ``end`` inside ``bounds``.

    The default direction follows the rectangle diagram: each step either
    decreases the row or increases the column.  ``direction`` may also be
    ``"down-right"``, ``"down-left"``, ``"up-left"`` or ``"auto"`` (inferred
    from the endpoints).  An endpoint that cannot be reached in the chosen
    direction gives an empty list.
    """
    start, end = GridPoint(*start), GridPoint(*end)
    m, n = bounds
    for p in (start, end):
        if not (1 <= p.row <= m and 1 <= p.col <= n):
            raise BoundsError(f"{tuple(p)} outside a {m}x{n} grid")
    if direction == "auto":
        dr, dc = _direction_of(start, end)
        sr, sc = (dr or 1), (dc or 1)
    else:
        try:
            sr, sc = _DIRECTIONS[direction]
        except KeyError:
            raise ValueError(f"unknown direction {direction!r}") from None
    return _walk(start, end, sr, sc, enum_cap() if cap is None else cap)


def path_weight(X, path) -> Fraction:
    """Semifield product of the vertex weights along ``path``."""
    grid = as_grid(X)
    alg = grid.algebra
    return alg.prod(grid.weight(p) for p in path)


def _family_direction(starts, ends):
    drs, dcs = set(), set()
    for s, e in zip(starts, ends):
        dr, dc = _direction_of(s, e)
        if dr:
            drs.add(dr)
        if dc:
            dcs.add(dc)
    if len(drs) > 1 or len(dcs) > 1:
        raise ValueError("all paths of a family must run in one monotone direction")
    return (drs.pop() if drs else 1), (dcs.pop() if dcs else 1)


def nonintersecting_tuples(starts, ends, bounds, grid=None, cap=None):
    """All vertex-disjoint families ``(g_1, ..., g_r)`` with ``g_k: starts[k] -> ends[k]``.

    Paths are shortest paths in the common direction of the endpoint pairs.
    When ``grid`` is given, paths through non-existent vertices are dropped.
    """
    starts = [GridPoint(*p) for p in starts]
    ends = [GridPoint(*p) for p in ends]
    if len(starts) != len(ends):
        raise ValueError("starts and ends must have equal length")
    if not starts:
        return [()]
    m, n = bounds
    for p in starts + ends:
        if not (1 <= p.row <= m and 1 <= p.col <= n):
            raise BoundsError(f"{tuple(p)} outside a {m}x{n} grid")
    sr, sc = _family_direction(starts, ends)
    cap = enum_cap() if cap is None else cap
    choices = []
    for s, e in zip(starts, ends):
        paths = _walk(s, e, sr, sc, cap)
        if grid is not None:
            paths = [p for p in paths if all(grid.exists(v) for v in p)]
        choices.append(paths)
    out = []
    for family in itertools.product(*choices):
        if sum(len(p) for p in family) == len(set().union(*family)):
            out.append(family)
    return out


def lgv_minor(X, starts, ends, cap=None) -> Fraction:
    """Weighted sum over nonintersecting families, by exhaustive enumeration."""
    grid = as_grid(X)
    alg = grid.algebra
    families = nonintersecting_tuples(
        starts, ends, (grid.nrows, grid.ncols), grid=grid, cap=cap
    )
    if not families:
        raise _empty(alg, "no nonintersecting family joins the given endpoints")
    return alg.sum(alg.prod(grid.weight(v) for path in fam for v in path) for fam in families)


# --------------------------------------------------------------------------
# dynamic program


def _normalize(grid: WeightGrid, starts, ends):
    """Flip the grid so that every path runs down and to the right (0-based)."""
    sr, sc = _family_direction(starts, ends)
    cells = [list(r) for r in grid.cells]
    R, C = grid.nrows, grid.ncols
    s0 = [(p[0] - 1, p[1] - 1) for p in starts]
    e0 = [(p[0] - 1, p[1] - 1) for p in ends]
    if sr < 0:
        cells = cells[::-1]
        s0 = [(R - 1 - r, c) for r, c in s0]
        e0 = [(R - 1 - r, c) for r, c in e0]
    if sc < 0:
        cells = [row[::-1] for row in cells]
        s0 = [(r, C - 1 - c) for r, c in s0]
        e0 = [(r, C - 1 - c) for r, c in e0]
    return cells, s0, e0


def _family_dp(alg: Algebra, cells, starts, ends):
    """Row sweep over down-right families; ``None`` when no family exists.

    The state after a row records, for each path still running, the column
    where it steps down.  Within a row every path occupies a contiguous
    segment; segments of distinct paths must be disjoint and vertical steps
    carry no interior vertices, so this is exactly vertex-disjointness.
    """
    r = len(starts)
    if r == 0:
        return alg.one
    ncols = len(cells[0]) if cells else 0
    mul, add = alg.mul, alg.add
    first = min(s[0] for s in starts)
    last = max(e[0] for e in ends)
    states = {(None,) * r: alg.one}
    for a in range(first, last + 1):
        row = cells[a]
        new_states = {}
        for state, weight in states.items():
            entries = []
            for k in range(r):
                if starts[k][0] == a:
                    entries.append((starts[k][1], k))
                elif starts[k][0] < a <= ends[k][0]:
                    entries.append((state[k], k))
            if not entries:
                key = state
                prev = new_states.get(key)
                new_states[key] = weight if prev is None else add(prev, weight)
                continue
            entries.sort()
            base = list(state)
            _extend_row(row, ncols, entries, 0, -1, weight, base, a, ends, new_states, mul, add)
        states = new_states
        if not states:
            return None
    total = None
    for state, weight in states.items():
        if all(c is None for c in state):
            total = weight if total is None else add(total, weight)
    return total


def _extend_row(row, ncols, entries, t, prev_exit, weight, exits, a, ends, out, mul, add):
    if t == len(entries):
        key = tuple(exits)
        prev = out.get(key)
        out[key] = weight if prev is None else add(prev, weight)
        return
    c_in, k = entries[t]
    if c_in <= prev_exit:
        return
    limit = entries[t + 1][0] if t + 1 < len(entries) else ncols
    ends_here = ends[k][0] == a
    target = ends[k][1]
    if ends_here and not (c_in <= target < limit):
        return
    if not ends_here:
        limit = min(limit, target + 1)
    w = weight
    for c in range(c_in, limit):
        cell = row[c]
        if cell is None:
            return
        w = mul(w, cell)
        if ends_here:
            if c == target:
                saved = exits[k]
                exits[k] = None
                _extend_row(row, ncols, entries, t + 1, c, w, exits, a, ends, out, mul, add)
                exits[k] = saved
                return
        else:
            saved = exits[k]
            exits[k] = c
            _extend_row(row, ncols, entries, t + 1, c, w, exits, a, ends, out, mul, add)
            exits[k] = saved


_KERNEL_BOUND = 1 << 40


def _int_cells(cells):
    """Integer weights for the compiled kernel, or ``None`` if unsuitable."""
    if sum(len(r) for r in cells) > 1 << 20:
        return None
    out = []
    for row in cells:
        new = []
        for v in row:
            if v is None:
                new.append(None)
            elif v.denominator != 1 or abs(v.numerator) > _KERNEL_BOUND:
                return None
            else:
                new.append(int(v.numerator))
        out.append(new)
    return out


def family_sum(X, starts, ends, use_kernel=None):
    """Weighted sum over nonintersecting families by dynamic programming.

    Returns the same value as :func:`lgv_minor` and raises the same
    empty-family error.
    """
    grid = as_grid(X)
    alg = grid.algebra
    starts = [GridPoint(*p) for p in starts]
    ends = [GridPoint(*p) for p in ends]
    if len(starts) != len(ends):
        raise ValueError("starts and ends must have equal length")
    for p in starts + ends:
        if not (1 <= p.row <= grid.nrows and 1 <= p.col <= grid.ncols):
            raise BoundsError(f"{tuple(p)} outside a {grid.nrows}x{grid.ncols} grid")
    cells, s0, e0 = _normalize(grid, starts, ends)
    if any(r0 > r1 or c0 > c1 for (r0, c0), (r1, c1) in zip(s0, e0)):
        raise _empty(alg, "an endpoint cannot be reached")
    value = None
    if use_kernel is None:
        use_kernel = kernel_available()
    if use_kernel and alg is MAXPLUS and _kernels is not None:
        ints = _int_cells(cells)
        if ints is not None:
            try:
                res = _kernels.family_max(ints, s0, e0)
            except OverflowError:
                res = False
            if res is None:
                raise _empty(alg, "no nonintersecting family joins the given endpoints")
            if res is not False:
                return Fraction(res)
    value = _family_dp(alg, cells, s0, e0)
    if value is None:
        raise _empty(alg, "no nonintersecting family joins the given endpoints")
    return value


# --------------------------------------------------------------------------
# minor tables


class Orientation(enum.Enum):
    """Endpoint conventions for the special minor tables.

    ``INSERTION``: ``g_k: (1, k) -> (m, j-i+k)``, word to tableau.
    ``IOTA``: ``g_k: (m-i+k, 1) -> (1, n-j+k)``, ``k <= min(i, j)``.
    ``SCHUTZ``: ``g_k: (1, n-i+k) -> (min(m, n-j+k), n-j+k)`` on a tableau.
    """

    INSERTION = "insertion"
    IOTA = "iota"
    SCHUTZ = "schutz"


@dataclass(frozen=True)
class MinorTable:
    """Table of special minors indexed by ``(i, j)``; index 0 reads as the unit."""

    algebra: Algebra
    orientation: str
    m: int
    n: int
    entries: dict

    def get(self, i: int, j: int) -> Fraction:
        if i == 0 or j == 0:
            return self.algebra.one
        return self.entries[(i, j)]

    def __getitem__(self, key):
        return self.get(*key)

    def rows(self):
        """Nested lists, row ``i`` holding the defined entries in column order."""
        out = []
        for i in range(1, self.m + 1):
            cols = sorted(j for (a, j) in self.entries if a == i)
            if cols:
                out.append([self.entries[(i, j)] for j in cols])
        return out

    def to_json(self):
        enc = self.algebra.encode
        return {
            "algebra": self.algebra.name,
            "orientation": self.orientation,
            "rows": [[enc(v) for v in r] for r in self.rows()],
        }


def _table_endpoints(orientation: Orientation, m: int, n: int):
    """Yield ``((i, j), starts, ends)`` for every entry of the table."""
    if orientation is Orientation.INSERTION:
        for i in range(1, min(m, n) + 1):
            for j in range(i, n + 1):
                yield (i, j), [(1, k) for k in range(1, i + 1)], [
                    (m, j - i + k) for k in range(1, i + 1)
                ]
    elif orientation is Orientation.IOTA:
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                r = min(i, j)
                yield (i, j), [(m - i + k, 1) for k in range(1, r + 1)], [
                    (1, n - j + k) for k in range(1, r + 1)
                ]
    elif orientation is Orientation.SCHUTZ:
        for i in range(1, m + 1):
            for j in range(i, n + 1):
                yield (i, j), [(1, n - i + k) for k in range(1, i + 1)], [
                    (min(m, n - j + k), n - j + k) for k in range(1, i + 1)
                ]
    else:  # pragma: no cover
        raise ValueError(orientation)


def rect_minor_table(X, orientation, m=None, method="dp") -> MinorTable:
    """Full table of special minors for one orientation.

    ``X`` is a :class:`TransportMatrix` for ``INSERTION`` and ``IOTA`` and a
    :class:`TableauContent` for ``SCHUTZ`` (``m`` then bounds the rows of the
    staircase diagram).  ``method="enumerate"`` uses the brute-force oracle.
    """
    orientation = Orientation(orientation)
    if isinstance(X, TableauContent):
        grid = tableau_grid(X, m)
    else:
        grid = as_grid(X)
    rows, cols = grid.nrows, grid.ncols
    evaluate = family_sum if method == "dp" else lgv_minor
    entries = {}
    for key, starts, ends in _table_endpoints(orientation, rows, cols):
        entries[key] = evaluate(grid, starts, ends)
    return MinorTable(grid.algebra, orientation.value, rows, cols, entries)


def e_diagram_entry(vectors, i: int, j: int, algebra=RATIONAL) -> Fraction:
    """Entry ``(i, j)`` of ``E(x^1) ... E(x^m)`` as a sum over diagram paths.

    The diagram has ``m + 1`` levels; between level ``a-1`` and ``a`` a path
    either stays in its column ``b`` (weight ``x^a_b``) or moves from ``b`` to
    ``b+1`` along a slanted edge of unit weight.
    """
    alg = get_algebra(algebra)
    xs = [[alg.validate(v) for v in x] for x in vectors]
    m = len(xs)
    n = len(xs[0]) if xs else 0
    if not (1 <= i <= n and 1 <= j <= n):
        raise BoundsError(f"({i}, {j}) outside an {n}x{n} matrix")
    shift = j - i
    if shift < 0 or shift > m:
        raise _empty(alg, "entries outside the band of the product vanish")
    terms = []
    for slanted in itertools.combinations(range(m), shift):
        sl = set(slanted)
        b = i
        w = alg.one
        for a in range(m):
            if a in sl:
                b += 1
            else:
                w = alg.mul(w, xs[a][b - 1])
        terms.append(w)
    return alg.sum(terms)


def trapezoid_minor(U: TableauContent, row_idx, col_idx, method="dp") -> Fraction:
    """Minor of ``H_U`` with the given rows and columns, as a path sum.

    Path ``k`` runs up and to the right through the staircase diagram of
    ``U`` from ``(min(i_k, m), i_k)`` to ``(1, j_k)``, ``m`` being the number
    of rows of ``U``.
    """
    grid = tableau_grid(U)
    m = U.nrows
    starts = [(min(i, m), i) for i in row_idx]
    ends = [(1, j) for j in col_idx]
    if any(j < i for i, j in zip(row_idx, col_idx)):
        # a path would have to step left: H_U is upper triangular there
        raise _empty(U.algebra, "no up-right family joins the given endpoints")
    evaluate = family_sum if method == "dp" else lgv_minor
    return evaluate(grid, starts, ends)
