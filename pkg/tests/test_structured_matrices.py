import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troprsk import MAXPLUS, TransportMatrix, make_maxplus
from troprsk.errors import AlgebraUnsupported, BoundsError, DecompositionObstruction, SpectralPole
from troprsk.structured_matrices import (
    Matrix,
    build_E,
    build_G,
    build_H,
    build_spectral_E,
    build_spectral_H,
    conjugate_J,
    decompose_triangular_E,
    decompose_triangular_H,
    det,
    det_cofactor,
    flip_matrix,
    identity,
    minor_det,
    reassemble_E,
    reassemble_H,
    shift_matrix,
    sign_matrix,
    tau_minor,
    transpose,
)

from strategies import positive

F = Fraction
vectors = st.integers(1, 5).flatmap(lambda n: st.lists(positive, min_size=n, max_size=n))


def factor_lists(n, m):
    return st.tuples(*[st.lists(positive, min_size=n - i, max_size=n - i) for i in range(m)])


def increasing(n, r):
    return st.sets(st.integers(1, n), min_size=r, max_size=r).map(sorted)


def test_build_examples():
    a, b, c = F(2), F(3), F(5)
    assert build_E([a, b]) == Matrix([[a, 1], [0, b]])
    assert build_E([a, b, c], 3) == Matrix([[1, 0, 0], [0, 1, 0], [0, 0, c]])
    assert build_E([c]) == Matrix([[c]])
    assert build_H([a, b]) == Matrix([[a, a * b], [0, b]])
    assert build_H([1, 1, c], 3) == Matrix([[1, 0, 0], [0, 1, 0], [0, 0, c]])
    assert shift_matrix(3, 3) == Matrix([[0] * 3] * 3)
    assert sign_matrix(3) == Matrix([[1, 0, 0], [0, -1, 0], [0, 0, 1]])


@given(vectors)
def test_H_is_conjugated_inverse_of_E(x):
    n = len(x)
    D = sign_matrix(n)
    bar = [1 / v for v in x]
    assert build_H(x) == D @ build_E(bar).inverse() @ D.inverse()


def test_maxplus_refused():
    with pytest.raises(AlgebraUnsupported):
        build_E([make_maxplus(1)])
    with pytest.raises(AlgebraUnsupported):
        det(TransportMatrix(MAXPLUS, [[1]]))


def test_minor_examples():
    assert minor_det(identity(3), [1, 2], [1, 2]) == 1
    assert det(build_E([F(2), F(7)])) == 14
    assert minor_det(build_E([F(2), F(7), F(3)]), [1], [2]) == 1
    with pytest.raises(ValueError):
        minor_det(identity(3), [2, 1], [1, 2])


@given(st.integers(1, 5), st.data())
def test_bareiss_matches_cofactor(n, data):
    vals = st.integers(-5, 5).map(F)
    M = Matrix([data.draw(st.lists(vals, min_size=n, max_size=n)) for _ in range(n)])
    assert det(M) == det_cofactor(M)


def test_debug_cross_check(monkeypatch):
    monkeypatch.setenv("TRSK_DEBUG", "1")
    H = build_H([F(2), F(3), F(5)])
    assert minor_det(H, [1, 2], [1, 3]) == det_cofactor(H.submatrix([1, 2], [1, 3])) == 30


@given(vectors, st.data())
def test_E_minor_pattern(x, data):
    n = len(x)
    r = data.draw(st.integers(1, n))
    rows, cols = data.draw(increasing(n, r)), data.draw(increasing(n, r))
    value = minor_det(build_E(x), rows, cols)
    if all(j in (i, i + 1) for i, j in zip(rows, cols)):
        expected = F(1)
        for i, j in zip(rows, cols):
            if i == j:
                expected *= x[i - 1]
    else:
        expected = 0
    assert value == expected


@given(vectors, st.data())
def test_H_minor_pattern(x, data):
    n = len(x)
    r = data.draw(st.integers(1, n))
    rows, cols = data.draw(increasing(n, r)), data.draw(increasing(n, r))
    value = minor_det(build_H(x), rows, cols)
    ok = all(i <= j for i, j in zip(rows, cols)) and all(j < i2 for j, i2 in zip(cols, rows[1:]))
    expected = F(0)
    if ok:
        expected = F(1)
        for i, j in zip(rows, cols):
            for b in range(i, j + 1):
                expected *= x[b - 1]
    assert value == expected


@given(st.integers(1, 4), st.data())
def test_minors_are_multiplicative(n, data):
    vals = st.integers(-4, 4).map(F)
    A = Matrix([[data.draw(vals) if j >= i else 0 for j in range(n)] for i in range(n)])
    B = Matrix([[data.draw(vals) if j >= i else 0 for j in range(n)] for i in range(n)])
    r = data.draw(st.integers(1, n))
    rows, cols = data.draw(increasing(n, r)), data.draw(increasing(n, r))
    expansion = sum(
        (minor_det(A, rows, list(k)) * minor_det(B, list(k), cols) for k in itertools.combinations(range(1, n + 1), r)),
        F(0),
    )
    assert minor_det(A @ B, rows, cols) == expansion


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.data())
def test_E_decomposition_roundtrip(nm, data):
    n, m = nm
    factors = data.draw(factor_lists(n, m))
    M = reassemble_E(factors, n)
    got = decompose_triangular_E(M, m)
    assert [list(f) for f in got.factors] == [list(f) for f in factors]
    assert reassemble_E(got.factors, n) == M


def test_E_decomposition_single_factor():
    v = [F(2), F(3), F(5)]
    assert list(decompose_triangular_E(build_E(v), 1).factors[0]) == v


def test_E_decomposition_obstruction():
    M = Matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]]) - Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])
    with pytest.raises(DecompositionObstruction) as err:
        decompose_triangular_E(M, 1)
    assert (err.value.info["i"], err.value.info["j"]) == (1, 1)
    with pytest.raises(DecompositionObstruction):
        decompose_triangular_E(Matrix([[1, 2], [0, 1]]), 1)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))), st.data())
def test_H_decomposition_roundtrip(nm, data):
    n, m = nm
    factors = data.draw(factor_lists(n, m))
    H = reassemble_H(factors, n)
    got = decompose_triangular_H(H, m)
    assert [list(f) for f in got.factors] == [list(f) for f in factors]
    assert reassemble_H(got.factors, n) == H
    for i in range(1, m + 1):
        for j in range(i, n + 1):
            expected = F(1)
            for a in range(1, i + 1):
                for b in range(a, j + 1):
                    expected *= got.entry(a, b)
            assert tau_minor(H, i, j) == expected


def test_H_decomposition_single_row():
    x = [F(3), F(1, 2), F(4)]
    assert list(decompose_triangular_H(build_H(x), 1).factors[0]) == x


def test_H_decomposition_obstructions():
    with pytest.raises(DecompositionObstruction):
        decompose_triangular_H(Matrix([[1, 0], [1, 1]]), 1)
    # a full-rank 2x2 upper triangular matrix is not a single H factor
    with pytest.raises(DecompositionObstruction):
        decompose_triangular_H(Matrix([[1, 5], [0, 1]]), 1)


def test_conjugation_and_transpose():
    a, b, c, d = map(F, (1, 2, 3, 4))
    M = Matrix([[a, b], [c, d]])
    assert conjugate_J(M) == Matrix([[d, c], [b, a]])
    assert conjugate_J(conjugate_J(M)) == M
    assert transpose(M) == Matrix([[a, c], [b, d]])
    for n in range(1, 5):
        J = flip_matrix(n)
        assert J @ shift_matrix(n).transpose() @ J == shift_matrix(n)
    R = Matrix([[1, 2, 3], [4, 5, 6]])
    assert conjugate_J(R) == Matrix([[6, 5, 4], [3, 2, 1]])


@given(vectors)
def test_spectral_at_zero(x):
    assert build_spectral_H(x, 0) == build_H(x)
    assert build_spectral_E(x, 0) == build_E(x)


@given(vectors, st.builds(F, st.integers(-9, 9), st.integers(1, 9)))
def test_spectral_H_closed_form(x, z):
    n = len(x)
    bar = Matrix([[1 / x[i] if i == j else 0 for j in range(n)] for i in range(n)])
    lam = shift_matrix(n)
    corner = Matrix([[z if (i, j) == (n - 1, 0) else 0 for j in range(n)] for i in range(n)])
    full = F(1)
    for v in x:
        full *= v
    if full * z == 1:
        with pytest.raises(SpectralPole):
            build_spectral_H(x, z)
        return
    assert build_spectral_H(x, z) == (bar - lam - corner).inverse()


def test_spectral_pole():
    with pytest.raises(SpectralPole):
        build_spectral_H([F(2), F(1, 2)], 1)


def test_G_matrices():
    u = F(3, 2)
    for l in range(1, 4):
        assert build_G(l, u, 5, 4) @ build_G(l, -u, 5, 4) == identity(4)
    G0 = build_G(0, u, F(2), 3)
    assert G0 == Matrix([[1, 0, F(1, 3)], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(SpectralPole):
        build_G(0, u, 0, 3)
    with pytest.raises(BoundsError):
        build_G(3, u, 1, 3)
