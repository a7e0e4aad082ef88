import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troprsk import MAXPLUS, RATIONAL, TableauContent, TransportMatrix
from troprsk.errors import AlgebraMismatch, BoundsError, GenericityFailure, InvalidWord, UnsupportedShape
from troprsk.insertion import insert_word
from troprsk.rsk import rsk_star
from troprsk.schutzenberger import evacuate
from troprsk.weyl import (
    ExtendedIndexer,
    P_poly,
    Q_poly,
    WeylGenerator,
    WeylParams,
    apply_generator,
    apply_word,
    g0_from_matrix,
    g0_from_tableau,
    g_chain,
    parse_generators,
    row_permutation,
    s_on_tableau,
    sample_z,
    spectral_check_r_invariance,
    spectral_check_s_conjugation,
    toda_residual,
)

import oracles
from strategies import maxplus_matrices, maxplus_params, positive, rational_matrices, rational_params

F = Fraction
X22 = TransportMatrix(RATIONAL, [[1, 2], [3, 4]])
UNIT = WeylParams()


def ints(M):
    return [[int(v) for v in r] for r in M.rows]


def test_params():
    assert WeylParams().p == 1
    assert WeylParams(algebra=MAXPLUS).q == 0
    assert WeylParams("1/2", 3).to_json() == {"p": "1/2", "q": "3"}
    with pytest.raises(AlgebraMismatch):
        apply_word("r1", X22, WeylParams(algebra=MAXPLUS))


@given(rational_matrices(lo=1), rational_params(), st.integers(-6, 6), st.integers(-6, 6))
def test_extended_indexing(X, P, i, j):
    x = ExtendedIndexer(X, P)
    assert x(i + X.m, j) == x(i, j) / P.q
    assert x(i, j + X.n) == x(i, j) / P.p


def test_parse_generators():
    gens = parse_generators("r1,s0,w,p,w^-1,p^-1,r5", m=3, n=2)
    assert [g.token() for g in gens] == ["r1", "s0", "w", "p", "w^-1", "p^-1", "r2"]
    assert parse_generators(["s3"], n=2)[0].index == 1
    with pytest.raises(InvalidWord):
        parse_generators("x1")


def test_P_poly_examples():
    assert [P_poly(X22, UNIT, 1, j) for j in (0, 1, 2)] == [30, 20, 30]
    ones = TransportMatrix(RATIONAL, [[1] * 3] * 2)
    assert P_poly(ones, UNIT, 1, 2) == 3
    M = TransportMatrix(MAXPLUS, [[0, 2, 1], [1, 0, 3]])
    P = WeylParams(algebra=MAXPLUS)
    x = oracles.Ext([[0, 2, 1], [1, 0, 3]], 0, 0)
    assert all(P_poly(M, P, 1, j) == oracles.P_max(x, 1, j) for j in range(-2, 4))


@given(rational_matrices(lo=2), rational_params(), st.integers(-3, 3), st.integers(-3, 3))
def test_P_Q_periodicity(X, P, i, j):
    m, n = X.shape
    assert P_poly(X, P, i, j + n) == P.p ** (-n - 1) * P_poly(X, P, i, j)
    assert Q_poly(X, P, i + m, j) == P.q ** (-m - 1) * Q_poly(X, P, i, j)


def test_r1_worked_example():
    Y = apply_word("r1", X22, UNIT)
    assert Y == TransportMatrix(RATIONAL, [[2, 6], ["3/2", "4/3"]])
    rep = toda_residual(X22, Y, UNIT, "RowAction", 1)
    assert rep["pass"]
    for j in range(2):
        assert X22.x(1, j + 1) * X22.x(2, j + 1) == Y.x(1, j + 1) * Y.x(2, j + 1)
    assert [X22.x(1, j) * X22.x(2, j) for j in (1, 2)] == [3, 8]


def test_r1_worked_example_maxplus():
    X = TransportMatrix(MAXPLUS, [[1, 2], [3, 4]])
    Y = apply_word("r1", X, WeylParams(algebra=MAXPLUS))
    assert toda_residual(X, Y, None, "RowAction", 1)["pass"]
    assert min(X.x(1, 1), X.x(2, 2)) == min(Y.x(1, 1), Y.x(2, 2))


def test_fixed_point_and_trivial_residuals():
    X = TransportMatrix(RATIONAL, [[2, 3, 5], [2, 3, 5]])
    assert apply_word("r1", X, UNIT) == X
    assert toda_residual(X, X, UNIT, "RowAction", 1)["pass"]


@given(rational_matrices(lo=2), rational_params())
def test_rotations(X, P):
    assert apply_word("w,w^-1", X, P) == X
    assert apply_word("p^-1,p", X, P) == X
    Y = apply_word("w", X, P)
    assert Y.rows[:-1] == X.rows[1:]
    assert Y.row(X.m) == tuple(v / P.q for v in X.row(1))


def test_small_shapes():
    with pytest.raises(UnsupportedShape):
        apply_word("r0", TransportMatrix(RATIONAL, [[1, 2]]), UNIT)
    with pytest.raises(UnsupportedShape):
        apply_word("s0", TransportMatrix(RATIONAL, [[1], [2]]), UNIT)


@given(rational_matrices(lo=2, hi=3), rational_params(), st.data())
def test_group_relations(X, P, data):
    m, n = X.shape
    k = data.draw(st.integers(0, m - 1))
    l = data.draw(st.integers(0, n - 1))
    act = lambda w: apply_word(w, X, P)
    assert act(f"r{k},r{k}") == X
    assert act(f"s{l},s{l}") == X
    assert act(f"r{k},s{l}") == act(f"s{l},r{k}")
    assert act(f"w,r{k}") == act(f"r{(k + 1) % m},w")
    assert act(f"p,s{l}") == act(f"s{(l + 1) % n},p")
    assert act(f"w,s{l}") == act(f"s{l},w")
    assert act(f"p,r{k}") == act(f"r{k},p")
    if m >= 3:
        k1 = (k + 1) % m
        assert act(f"r{k},r{k1},r{k}") == act(f"r{k1},r{k},r{k1}")
    if n >= 3:
        l1 = (l + 1) % n
        assert act(f"s{l},s{l1},s{l}") == act(f"s{l1},s{l},s{l1}")


def test_far_commutation():
    rng = random.Random(5)
    X = TransportMatrix(RATIONAL, [[rng.randint(1, 9) for _ in range(2)] for _ in range(4)])
    P = WeylParams(F(2, 3), F(5, 2))
    assert apply_word("r0,r2", X, P) == apply_word("r2,r0", X, P)
    assert apply_word("r1,r3", X, P) == apply_word("r3,r1", X, P)


@given(maxplus_matrices(lo=2), maxplus_params())
def test_maxplus_generators_match_formulas(X, P):
    rows = ints(X)
    p, q = int(P.p), int(P.q)
    for k in range(X.m):
        got = ints(apply_word(f"r{k}", X, P))
        assert got == oracles.r_action(rows, p, q, k)
        assert got == oracles.r_action(rows, p, q, k, form="min")
    for l in range(X.n):
        assert ints(apply_word(f"s{l}", X, P)) == oracles.s_action(rows, p, q, l)
    assert ints(apply_word("w", X, P)) == oracles.omega_action(rows, p, q)
    assert ints(apply_word("p", X, P)) == oracles.pi_action(rows, p, q)


@given(rational_matrices(lo=2), rational_params(), st.data())
def test_row_product_covariants(X, P, data):
    m = X.m
    word = data.draw(st.lists(st.integers(1, m - 1), max_size=5))
    tokens = ",".join(f"r{k}" for k in word)
    Y = apply_word(tokens, X, P) if word else X
    sigma, shift = row_permutation(tokens, m) if word else ({i: i for i in range(1, m + 1)}, {i: 0 for i in range(1, m + 1)})

    def rowprod(M, i):
        acc = F(1)
        for v in M.row(i):
            acc *= v
        return acc

    for i in range(1, m + 1):
        assert rowprod(Y, i) == P.p ** shift[i] * rowprod(X, sigma[i])


def test_row_permutation_rejects_affine():
    with pytest.raises(InvalidWord):
        row_permutation("r0", 3)


@given(rational_matrices(lo=2), rational_params())
def test_u_invariance_and_equivariance(X, P):
    U = rsk_star(X).U
    for k in range(1, X.m):
        assert rsk_star(apply_word(f"r{k}", X, P)).U == U
    for l in range(1, X.n):
        assert rsk_star(apply_word(f"s{l}", X, P)).U == s_on_tableau(l, U, P.q, X.m)


@given(maxplus_matrices(lo=2, entries=st.integers(0, 3)), maxplus_params())
def test_equivariance_maxplus(X, P):
    U = rsk_star(X).U
    for l in range(1, X.n):
        assert rsk_star(apply_word(f"s{l}", X, P)).U == s_on_tableau(l, U, P.q, X.m)


@given(rational_matrices(lo=2), rational_params())
def test_evacuation_conjugates_tableau_action(X, P):
    if X.m > X.n:
        X = X.transpose()
    U, m, n = rsk_star(X).U, X.m, X.n
    for l in range(1, n):
        assert evacuate(s_on_tableau(l, U, P.q, m)) == s_on_tableau(n - l, evacuate(U), 1 / P.q, m)


def test_tableau_action_single_row():
    for alg in (RATIONAL, MAXPLUS):
        U = TableauContent(alg, 2, [[3, 5]])
        assert s_on_tableau(1, U, None, 1).rows == ((5, 3),)
    with pytest.raises(BoundsError):
        s_on_tableau(2, TableauContent(RATIONAL, 2, [[3, 5]]))


@given(st.integers(2, 4), st.data())
def test_tableau_action_is_involution(n, data):
    rows = data.draw(st.integers(1, n))
    U = TableauContent(RATIONAL, n, [data.draw(st.lists(positive, min_size=n - i, max_size=n - i)) for i in range(rows)])
    q = data.draw(positive)
    l = data.draw(st.integers(1, n - 1))
    m = data.draw(st.integers(1, n))
    T = s_on_tableau(l, U, q, m)
    back = s_on_tableau(l, T, q, m)
    assert back == U.with_rows(max(U.nrows, min(m, n)))
    kind = "TableauAction-lo" if l <= min(m, n) - 1 else "TableauAction-hi"
    assert toda_residual(U, T, WeylParams(q=q), kind, l, m)["pass"]


@given(maxplus_matrices(lo=2, entries=st.integers(0, 3)), st.integers(-3, 3), st.data())
def test_tableau_action_matches_formula(X, q, data):
    U = insert_word(X)
    n = X.n
    m = data.draw(st.integers(U.nrows, n)) if U.nrows else 1
    l = data.draw(st.integers(1, n - 1))
    T = s_on_tableau(l, U, q, m)
    table = ints(U.with_rows(m))
    assert ints(T)[:m] == oracles.s_on_content(table, l, q, m)


@given(rational_matrices(lo=1, hi=3), rational_params(), st.data())
def test_g0_routes_agree(X, P, data):
    if X.n < 2:
        return
    l = data.draw(st.integers(1, X.n - 1))
    try:
        g = g0_from_matrix(X, P, l)
    except GenericityFailure:
        return
    assert g == g0_from_tableau(rsk_star(X).U, P, l, X.m)


def test_g0_single_row():
    X = TransportMatrix(RATIONAL, [[3, 2, 7]])
    P = WeylParams(q=2)
    a, b = F(2), F(7)
    assert g0_from_matrix(X, P, 2) == b * a / (b / 2 - a)


def test_g0_genericity_failure():
    X = TransportMatrix(RATIONAL, [[2, 4]])
    with pytest.raises(GenericityFailure):
        g0_from_matrix(X, WeylParams(q=2), 1)


@given(rational_matrices(lo=2, hi=3), rational_params(), st.data())
def test_g_chain_recurrence(X, P, data):
    m, n = X.shape
    l = data.draw(st.integers(0, n - 1))
    try:
        g = g_chain(X, P, l)
    except GenericityFailure:
        return
    x = ExtendedIndexer(X, P)
    y = ExtendedIndexer(apply_word(f"s{l}", X, P), P)
    assert g[m] == g[0] / P.q
    for i in range(1, m + 1):
        assert g[i] == x(i, l) + x(i, l) / x(i, l + 1) * g[i - 1]
        assert 1 / y(i, l) == 1 / x(i, l) - 1 / g[i]
        assert 1 / y(i, l + 1) == 1 / x(i, l + 1) + 1 / g[i - 1]


def test_spectral_worked_example():
    zs = [F(1, 7), F(3, 5)]
    assert spectral_check_r_invariance(X22, UNIT, 1, zs)["pass"]
    assert spectral_check_r_invariance(X22, UNIT, 1, [F(1, 7)])["z"] == ["1/7"]


@given(rational_matrices(lo=2, hi=3), rational_params(), st.integers(0, 1000))
def test_spectral_identities(X, P, seed):
    for k in range(1, X.m):
        assert spectral_check_r_invariance(X, P, k, seed=seed)["pass"]
    for l in range(X.n):
        try:
            assert spectral_check_s_conjugation(X, P, l, seed=seed)["pass"]
        except GenericityFailure:
            pass


def test_sample_z():
    zs = sample_z(random.Random(0), 5, bad=[1])
    assert len(set(zs)) == 5 and 0 not in zs and 1 not in zs


@given(rational_matrices(lo=2), rational_params())
def test_toda_residuals_vanish(X, P):
    for k in range(X.m):
        assert toda_residual(X, apply_word(f"r{k}", X, P), P, "RowAction", k)["pass"]
    for l in range(X.n):
        assert toda_residual(X, apply_word(f"s{l}", X, P), P, "ColumnAction", l)["pass"]


def test_toda_detects_wrong_image():
    Y = TransportMatrix(RATIONAL, [[2, 6], [1, 1]])
    rep = toda_residual(X22, Y, UNIT, "RowAction", 1)
    assert not rep["pass"]
    assert any(not r["pass"] for r in rep["relations"])
    with pytest.raises(ValueError):
        toda_residual(X22, X22, UNIT, "Nope", 1)


def test_apply_generator_object():
    g = WeylGenerator("r", 1)
    assert apply_generator(g, X22, UNIT) == apply_word("r1", X22, UNIT)
