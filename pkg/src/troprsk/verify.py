"""Randomized verification suites.

Each suite draws its trials from ``random.Random(seed)`` (Mersenne Twister),
so a seed pins the exact sequence of matrices on every platform.  A suite
returns one record per relation: how many instances were checked, whether
all of them held exactly, and the first counterexample if one did not.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import MAXPLUS, RATIONAL, TransportMatrix
from .insertion import classical_insert_word, insert_word, word_to_matrix
from .lattice_paths import Orientation, rect_minor_table
from .rsk import inverse_rsk_star, inverse_via_gauss, iota, phi, phi_inverse, rsk_star
from .schutzenberger import evacuate
from .weyl import (
    WeylParams,
    apply_word,
    s_on_tableau,
    spectral_check_r_invariance,
    spectral_check_s_conjugation,
    toda_residual,
)

__all__ = ["SUITES", "run_suite", "random_rational", "random_counts", "random_params"]


def random_rational(rng: random.Random, m: int, n: int, top: int = 9) -> TransportMatrix:
    rows = [[Fraction(rng.randint(1, top), rng.randint(1, 4)) for _ in range(n)] for _ in range(m)]
    return TransportMatrix(RATIONAL, rows, n)


def random_counts(rng: random.Random, m: int, n: int, top: int = 3) -> TransportMatrix:
    return TransportMatrix(MAXPLUS, [[rng.randint(0, top) for _ in range(n)] for _ in range(m)], n)


def random_params(rng: random.Random) -> WeylParams:
    return WeylParams(Fraction(rng.randint(1, 5), rng.randint(1, 5)), Fraction(rng.randint(1, 5), rng.randint(1, 5)))


class _Tally:
    def __init__(self):
        self.records = {}

    def check(self, relation, ok, lhs=None, rhs=None):
        rec = self.records.setdefault(relation, {"relation": relation, "pass": True, "checked": 0, "lhs": None, "rhs": None})
        rec["checked"] += 1
        if not ok and rec["pass"]:
            rec["pass"] = False
            rec["lhs"] = lhs.to_json() if hasattr(lhs, "to_json") else lhs
            rec["rhs"] = rhs.to_json() if hasattr(rhs, "to_json") else rhs

    def same(self, relation, lhs, rhs):
        self.check(relation, lhs == rhs, lhs, rhs)

    def report(self):
        return list(self.records.values())


def _size(rng, m, n, lo=1, hi=4):
    return (m if m is not None else rng.randint(lo, hi)), (n if n is not None else rng.randint(lo, hi))


def _weyl_relations(tally, rng, m, n):
    m, n = _size(rng, m, n, lo=2)
    X, P = random_rational(rng, m, n), random_params(rng)

    def act(word):
        return apply_word(word, X, P)

    for k in range(m):
        tally.same("r_k r_k = 1", act(f"r{k},r{k}"), X)
        tally.same("omega r_k = r_{k+1} omega", act(f"w,r{k}"), act(f"r{(k + 1) % m},w"))
        tally.same("pi r_k = r_k pi", act(f"p,r{k}"), act(f"r{k},p"))
        if m >= 3:
            k1 = (k + 1) % m
            tally.same("r_k r_{k+1} r_k = r_{k+1} r_k r_{k+1}", act(f"r{k},r{k1},r{k}"), act(f"r{k1},r{k},r{k1}"))
        for j in range(m):
            if (j - k) % m not in (0, 1, m - 1):
                tally.same("r_k r_j = r_j r_k (far)", act(f"r{k},r{j}"), act(f"r{j},r{k}"))
        for l in range(n):
            tally.same("r_k s_l = s_l r_k", act(f"r{k},s{l}"), act(f"s{l},r{k}"))
    for l in range(n):
        tally.same("s_l s_l = 1", act(f"s{l},s{l}"), X)
        tally.same("pi s_l = s_{l+1} pi", act(f"p,s{l}"), act(f"s{(l + 1) % n},p"))
        tally.same("omega s_l = s_l omega", act(f"w,s{l}"), act(f"s{l},w"))
        if n >= 3:
            l1 = (l + 1) % n
            tally.same("s_l s_{l+1} s_l = s_{l+1} s_l s_{l+1}", act(f"s{l},s{l1},s{l}"), act(f"s{l1},s{l},s{l1}"))
        for j in range(n):
            if (j - l) % n not in (0, 1, n - 1):
                tally.same("s_l s_j = s_j s_l (far)", act(f"s{l},s{j}"), act(f"s{j},s{l}"))
    tally.same("omega pi = pi omega", act("w,p"), act("p,w"))


def _toda(tally, rng, m, n):
    m, n = _size(rng, m, n, lo=2)
    for X, P in ((random_rational(rng, m, n), random_params(rng)), (random_counts(rng, m, n), None)):
        name = X.algebra.name
        for k in range(m):
            Y = apply_word(f"r{k}", X, P)
            tally.check(f"{name} Toda system of r_k", toda_residual(X, Y, P, "RowAction", k)["pass"])
        for l in range(n):
            Y = apply_word(f"s{l}", X, P)
            tally.check(f"{name} Toda system of s_l", toda_residual(X, Y, P, "ColumnAction", l)["pass"])


def _spectral(tally, rng, m, n):
    m, n = _size(rng, m, n, lo=2)
    X, P = random_rational(rng, m, n), random_params(rng)
    seed = rng.randrange(1 << 30)
    for k in range(1, m):
        tally.check("H(r_k X; z) = H(X; z)", spectral_check_r_invariance(X, P, k, seed=seed)["pass"])
    for l in range(n):
        tally.check("H(s_l X; z) = G^-1 H(X; z) G", spectral_check_s_conjugation(X, P, l, seed=seed)["pass"])


def _roundtrip(tally, rng, m, n):
    m, n = _size(rng, m, n)
    for X in (random_counts(rng, m, n), random_rational(rng, m, n)):
        name = X.algebra.name
        pair = rsk_star(X)
        tally.same(f"{name} inverse_rsk_star(rsk_star(X)) = X", inverse_rsk_star(pair.U, pair.V), X)
        tally.same(f"{name} iota(iota(X)) = X", iota(iota(X)), X)
        U = pair.U
        tally.same(f"{name} evacuate(evacuate(U)) = U", evacuate(evacuate(U)), U)
        if X.algebra is RATIONAL:
            tally.same("phi_inverse(phi(X)) = X", phi_inverse(phi(X)), X)
            tally.same("Gauss route inverse = X", inverse_via_gauss(pair.U, pair.V), X)


def _oracles(tally, rng, m, n):
    m, n = _size(rng, m, n)
    for X in (random_counts(rng, m, n), random_rational(rng, m, n)):
        for orient in (Orientation.INSERTION, Orientation.IOTA):
            dp = rect_minor_table(X, orient)
            brute = rect_minor_table(X, orient, method="enumerate")
            tally.same(f"{X.algebra.name} {orient.value} table: DP = enumeration", dp.entries, brute.entries)
    letters = [rng.randint(1, n) for _ in range(rng.randint(0, 12))]
    tally.same(
        "insert_word = classical Schensted",
        insert_word(word_to_matrix(letters, n)).with_rows(n),
        classical_insert_word(letters, n).with_rows(n),
    )


def _equivariance(tally, rng, m, n):
    m, n = _size(rng, m, n, lo=2)
    X, P = random_rational(rng, m, n), random_params(rng)
    U = rsk_star(X).U
    for k in range(1, m):
        tally.same("rsk_star(r_k X).U = U", rsk_star(apply_word(f"r{k}", X, P)).U, U)
    for l in range(1, n):
        tally.same("rsk_star(s_l X).U = s_l(U)", rsk_star(apply_word(f"s{l}", X, P)).U, s_on_tableau(l, U, P.q, m))
        if m <= n:
            lhs = evacuate(s_on_tableau(l, U, P.q, m))
            rhs = s_on_tableau(n - l, evacuate(U), 1 / P.q, m)
            tally.same("evacuate s_l^q = s_{n-l}^{1/q} evacuate", lhs, rhs)


SUITES = {
    "weyl-relations": _weyl_relations,
    "toda": _toda,
    "spectral": _spectral,
    "roundtrip": _roundtrip,
    "oracles": _oracles,
    "equivariance": _equivariance,
}


def run_suite(name: str, trials: int = 25, seed: int = 0, m=None, n=None) -> dict:
    """Run ``trials`` random trials of one suite and aggregate per relation."""
    if name not in SUITES:
        raise KeyError(name)
    rng = random.Random(seed)
    tally = _Tally()
    for _ in range(trials):
        SUITES[name](tally, rng, m, n)
    relations = tally.report()
    return {
        "suite": name,
        "seed": seed,
        "trials": trials,
        "m": m,
        "n": n,
        "pass": all(r["pass"] for r in relations),
        "relations": relations,
    }
