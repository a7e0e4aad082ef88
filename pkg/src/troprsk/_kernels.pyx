# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled max-plus row sweep over nonintersecting down-right families.

Same recursion as ``lattice_paths._family_dp`` with integer weights, ``+``
for the product and ``max`` for the sum.  A state packs the exit column of
every running path (``-1`` for none) into one 64-bit key.
"""

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from cython.operator cimport dereference as deref

ctypedef long long i64
ctypedef unordered_map[i64, i64] StateMap


cdef inline i64 _pack(const int* exits, int r, i64 base) noexcept nogil:
    cdef i64 key = 0
    cdef int k
    for k in range(r - 1, -1, -1):
        key = key * base + (exits[k] + 1)
    return key


cdef inline void _unpack(i64 key, int* exits, int r, i64 base) noexcept nogil:
    cdef int k
    for k in range(r):
        exits[k] = <int>(key % base) - 1
        key //= base


cdef inline void _merge(StateMap& out, i64 key, i64 w) noexcept nogil:
    cdef StateMap.iterator it = out.find(key)
    if it == out.end():
        out[key] = w
    elif w > deref(it).second:
        deref(it).second = w


cdef void _extend(const i64* row, const char* mask, int ncols, int nent,
                  const int* ent_col, const int* ent_k, int t, int prev_exit,
                  i64 w, int* exits, int r, int a, const int* end_row,
                  const int* end_col, i64 base, StateMap& out) noexcept nogil:
    cdef int c_in, k, limit, target, c, saved
    cdef bint ends_here
    if t == nent:
        _merge(out, _pack(exits, r, base), w)
        return
    c_in = ent_col[t]
    k = ent_k[t]
    if c_in <= prev_exit:
        return
    limit = ent_col[t + 1] if t + 1 < nent else ncols
    ends_here = end_row[k] == a
    target = end_col[k]
    if ends_here and not (c_in <= target < limit):
        return
    if not ends_here and target + 1 < limit:
        limit = target + 1
    for c in range(c_in, limit):
        if mask[c]:
            return
        w += row[c]
        if ends_here:
            if c == target:
                saved = exits[k]
                exits[k] = -1
                _extend(row, mask, ncols, nent, ent_col, ent_k, t + 1, c, w,
                        exits, r, a, end_row, end_col, base, out)
                exits[k] = saved
                return
        else:
            saved = exits[k]
            exits[k] = c
            _extend(row, mask, ncols, nent, ent_col, ent_k, t + 1, c, w,
                    exits, r, a, end_row, end_col, base, out)
            exits[k] = saved


def family_max(cells, starts, ends):
    """Best family weight, or ``None`` when no family exists.

    ``cells`` holds Python ints or ``None`` (masked); ``starts`` and ``ends``
    are 0-based ``(row, col)`` pairs of a down-right family.
    """
    cdef int r = len(starts)
    if r == 0:
        return 0
    cdef int nrows = len(cells)
    cdef int ncols = len(cells[0]) if nrows else 0
    cdef i64 base = ncols + 1
    cdef double span = 1.0
    cdef int k, a, t, s, c
    for k in range(r):
        span *= base
    if span >= 9.0e18:
        raise OverflowError("too many paths to pack a state key")

    cdef vector[i64] weights = vector[i64](nrows * ncols)
    cdef vector[char] masks = vector[char](nrows * ncols)
    for a in range(nrows):
        for c in range(ncols):
            v = cells[a][c]
            if v is None:
                masks[a * ncols + c] = 1
            else:
                weights[a * ncols + c] = v

    cdef vector[int] st_row = vector[int](r)
    cdef vector[int] st_col = vector[int](r)
    cdef vector[int] end_row = vector[int](r)
    cdef vector[int] end_col = vector[int](r)
    for k in range(r):
        st_row[k], st_col[k] = starts[k]
        end_row[k], end_col[k] = ends[k]

    cdef int first = st_row[0], last = end_row[0]
    for k in range(r):
        first = min(first, st_row[k])
        last = max(last, end_row[k])

    cdef vector[int] exits = vector[int](r)
    cdef vector[int] ent_col = vector[int](r)
    cdef vector[int] ent_k = vector[int](r)
    cdef StateMap states, fresh
    cdef pair[i64, i64] item
    cdef int nent, tc, tk
    for k in range(r):
        exits[k] = -1
    states[_pack(exits.data(), r, base)] = 0

    with nogil:
        for a in range(first, last + 1):
            fresh.clear()
            for item in states:
                _unpack(item.first, exits.data(), r, base)
                nent = 0
                for k in range(r):
                    if st_row[k] == a:
                        ent_col[nent] = st_col[k]
                    elif st_row[k] < a <= end_row[k]:
                        ent_col[nent] = exits[k]
                    else:
                        continue
                    ent_k[nent] = k
                    # insertion sort by (column, path)
                    t = nent
                    while t > 0 and (ent_col[t - 1] > ent_col[t] or
                                     (ent_col[t - 1] == ent_col[t] and ent_k[t - 1] > ent_k[t])):
                        tc = ent_col[t]; ent_col[t] = ent_col[t - 1]; ent_col[t - 1] = tc
                        tk = ent_k[t]; ent_k[t] = ent_k[t - 1]; ent_k[t - 1] = tk
                        t -= 1
                    nent += 1
                if nent == 0:
                    _merge(fresh, item.first, item.second)
                    continue
                _extend(&weights[a * ncols], &masks[a * ncols], ncols, nent,
                        ent_col.data(), ent_k.data(), 0, -1, item.second,
                        exits.data(), r, a, end_row.data(), end_col.data(), base, fresh)
            states.swap(fresh)
            if states.empty():
                break

    if states.empty():
        return None
    for k in range(r):
        exits[k] = -1
    cdef StateMap.iterator it = states.find(_pack(exits.data(), r, base))
    if it == states.end():
        return None
    return deref(it).second
