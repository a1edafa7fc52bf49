"""Exact rank and right kernel of rational matrices.

Rows are first cleared of denominators, then reduced by Bareiss'
fraction-free elimination so every intermediate entry stays an integer.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

__all__ = ["bareiss_echelon", "rank_and_kernel", "normalize_integer_vector"]


def _integer_rows(matrix: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    return rows


def bareiss_echelon(matrix: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Row echelon form of ``matrix`` and its pivot columns.

    Entries of the returned rows are integers (Bareiss' divisions are exact).
    """
    m = _integer_rows(matrix)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, nrows):
            a = m[i][c]
            for j in range(c + 1, ncols):
                m[i][j] = (piv * m[i][j] - a * m[r][j]) // prev
            m[i][c] = 0
        # columns left of c are zero below the pivot rows already
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def normalize_integer_vector(vec: Sequence[Fraction]) -> list[int]:
    """Scale to coprime integers with the first non-zero entry positive."""
    den = lcm(*(Fraction(x).denominator for x in vec)) if vec else 1
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def rank_and_kernel(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[int, list[list[int]]]:
    """Rank of ``matrix`` and a normalized basis of ``{x : matrix @ x = 0}``.

    ``ncols`` is needed when ``matrix`` has no rows.  Basis vectors are
    ordered by their free column and normalized by
    :func:`normalize_integer_vector`.
    """
    if ncols is None:
        ncols = len(matrix[0])
    if not matrix:
        basis = []
        for f in range(ncols):
            v = [0] * ncols
            v[f] = 1
            basis.append(v)
        return 0, basis
    echelon, pivots = bareiss_echelon(matrix)
    rank = len(pivots)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(rank - 1, -1, -1):
            c = pivots[r]
            s = sum((echelon[r][j] * x[j] for j in range(c + 1, ncols)), Fraction(0))
            x[c] = -s / echelon[r][c]
        basis.append(normalize_integer_vector(x))
    return rank, basis
