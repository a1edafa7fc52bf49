"""Bounded-degree search for polynomial relations among series.

Every monomial ``w_1^{e_1} ... w_k^{e_k}`` of total degree at most ``d`` is
expanded exactly; a relation is a rational kernel vector of the matrix of
their coefficients.  For jets only coefficients below the common guarantee
are used, so a kernel vector is merely a candidate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Sequence

from .errors import ResourceError, UsageError
from .exponents import Exponent, format_rational
from .schanuel import coefficient_matrix, trusted_region
from .linalg import rank_and_kernel
from .series import Series, s_mul

__all__ = ["RelationReport", "find_relation", "monomial_exponents", "DEFAULT_CAP"]

DEFAULT_CAP = 5000

VERIFIED = "verified"
CANDIDATE = "candidate"
NONE_FOUND = "none_found"


def monomial_exponents(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples of total degree ``<= degree`` in graded lex order.

    >>> monomial_exponents(2, 2)
    [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    """
    out = []
    for d in range(degree + 1):
        layer = [e for e in product(range(d + 1), repeat=nvars) if sum(e) == d]
        out.extend(sorted(layer, reverse=True))
    return out


def _monomial_name(e: tuple[int, ...]) -> str:
    factors = []
    for i, k in enumerate(e, start=1):
        if k == 1:
            factors.append(f"w{i}")
        elif k > 1:
            factors.append(f"w{i}^{k}")
    return "*".join(factors) or "1"


def format_polynomial(coeffs: Sequence, monomials: Sequence[tuple[int, ...]]) -> str:
    """Render e.g. ``w2 - w1^2``."""
    parts = []
    for c, e in zip(coeffs, monomials):
        c = Fraction(c)
        if not c:
            continue
        name = _monomial_name(e)
        mag = abs(c)
        if name == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{format_rational(mag)}*{name}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) or "0"


@dataclass(frozen=True)
class RelationReport:
    degree_bound: int
    monomial_count: int
    monomials: tuple[tuple[int, ...], ...]
    outcome: str
    coeffs: tuple[int, ...] | None = None
    valid_below: Exponent | None = None
    trusted_constraints: int = 0

    def polynomial(self) -> str | None:
        if self.coeffs is None:
            return None
        return format_polynomial(self.coeffs, self.monomials)

    def to_dict(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "monomial_count": self.monomial_count,
            "monomials": [_monomial_name(e) for e in self.monomials],
            "outcome": self.outcome,
            "coeffs": None if self.coeffs is None else list(self.coeffs),
            "relation": self.polynomial(),
            "valid_below": None if self.valid_below is None else self.valid_below.render(),
            "trusted_constraints": self.trusted_constraints,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"


def _expand_monomials(ws: Sequence[Series], monos: Sequence[tuple[int, ...]]) -> list[Series]:
    powers = {}

    def power(i, k):
        if (i, k) not in powers:
            powers[(i, k)] = Series.one() if k == 0 else s_mul(power(i, k - 1), ws[i])
        return powers[(i, k)]

    out = []
    for e in monos:
        term = Series.one()
        for i, k in enumerate(e):
            if k:
                term = s_mul(term, power(i, k))
        out.append(term)
    return out


def combine(coeffs: Sequence, columns: Sequence[Series]) -> Series:
    total = Series.zero()
    for c, s in zip(coeffs, columns):
        if c:
            total = total + s.scale(c)
    return total


def find_relation(ws: Sequence[Series], degree: int, cap: int = DEFAULT_CAP) -> RelationReport:
    """Look for a rational polynomial ``P`` of degree ``<= degree`` with ``P(ws) = 0``."""
    if not ws:
        raise UsageError("find_relation needs at least one series")
    if degree < 1:
        raise UsageError("degree must be at least 1")
    count = comb(len(ws) + degree, degree)
    if count > cap:
        raise ResourceError(f"{count} monomials exceed the cap of {cap}")
    monos = monomial_exponents(len(ws), degree)
    columns = _expand_monomials(ws, monos)
    region = trusted_region(columns)
    rows, matrix = coefficient_matrix(columns, region)
    _, kernel = rank_and_kernel(matrix, len(columns))
    common = dict(degree_bound=degree, monomial_count=count, monomials=tuple(monos), trusted_constraints=len(rows))
    if not kernel:
        return RelationReport(outcome=NONE_FOUND, **common)
    coeffs = tuple(kernel[0])
    if region is None:
        residual = combine(coeffs, columns)
        if not residual.is_zero():
            raise AssertionError(f"kernel vector does not annihilate the monomials: {residual.render()}")
        return RelationReport(outcome=VERIFIED, coeffs=coeffs, **common)
    return RelationReport(outcome=CANDIDATE, coeffs=coeffs, valid_below=region, **common)
