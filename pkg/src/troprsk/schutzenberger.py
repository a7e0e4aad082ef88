"""The Schuetzenberger involution on words and on tableaux.

On words it reverses the order and complements every letter ``k -> n-k+1``.
On tableaux it is given by nonintersecting paths in the staircase diagram:
``sigma^i_j`` sums over families ``g_k: (1, n-i+k) -> (min(m, n-j+k), n-j+k)``
and the evacuated content is the discrete Laplacian of ``sigma``.
"""

from __future__ import annotations

from .errors import UnsupportedShape
from .insertion import insert_word, laplacian_content, parse_word, word_to_matrix
from .lattice_paths import MinorTable, Orientation, rect_minor_table
from .tableau import TableauContent

__all__ = ["word_star", "sigma_table", "evacuate", "evacuation_consistency"]


def word_star(w, n: int) -> list:
    """``w* = k_l* ... k_1*`` with ``k* = n - k + 1``."""
    letters = parse_word(w) if w not in ("", []) else []
    if any(c > n for c in letters):
        raise ValueError(f"letter out of range 1..{n}")
    return [n - c + 1 for c in reversed(letters)]


def _row_bound(U: TableauContent, m):
    m = U.nrows if m is None else int(m)
    if m > U.n:
        raise UnsupportedShape(f"evacuation needs at most {U.n} rows, got {m}")
    if m < U.nrows:
        U = U.with_rows(m)
    return U, m


def sigma_table(U: TableauContent, m=None, method="dp") -> MinorTable:
    U, m = _row_bound(U, m)
    return rect_minor_table(U, Orientation.SCHUTZ, m=m, method=method)


def evacuate(U: TableauContent, m=None, n=None) -> TableauContent:
    """Evacuated content table of ``U``, with ``m`` rows (default: those of ``U``).

    ``n`` defaults to the alphabet size of ``U``; passing a different value
    first re-reads ``U`` over that alphabet.
    """
    if n is not None and int(n) != U.n:
        raise UnsupportedShape(f"tableau is over {U.n} letters, not {n}")
    U, m = _row_bound(U, m)
    if m == 0:
        return U
    sigma = rect_minor_table(U, Orientation.SCHUTZ, m=m)
    return laplacian_content(sigma, m, U.n, U.algebra)


def evacuation_consistency(w, n: int) -> dict:
    """Check ``P(w*) = evacuate(P(w))`` and report both sides as JSON."""
    letters = parse_word(w) if w not in ("", []) else []
    P = insert_word(word_to_matrix(letters, n))
    P_star = insert_word(word_to_matrix(word_star(letters, n), n))
    rows = max(P.nrows, P_star.nrows)
    lhs = P_star.with_rows(rows)
    rhs = evacuate(P.with_rows(rows))
    return {
        "relation": "P(w*) = evacuate(P(w))",
        "pass": lhs == rhs,
        "lhs": lhs.to_json(),
        "rhs": rhs.to_json(),
        "P": P.to_json(),
    }
