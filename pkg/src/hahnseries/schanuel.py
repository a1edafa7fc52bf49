"""Transcendence certificates from rational linear independence.

For ``y_1, ..., y_n`` in a differential valued exponential field, if the
shifted elements ``y_i - co_A(y_i)`` are linearly independent over the
rationals then ``td C(y_1..y_n, exp(y_1)..exp(y_n)) >= n + 1``.  Here
``co_A(y)`` is the constant term of ``y``.  This module checks the
hypothesis exactly and packages the outcome as a :class:`Certificate`; the
implication itself is taken as a theorem.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import UsageError
from .exponents import Exponent
from .linalg import rank_and_kernel
from .series import Series, decompose, min_bound

__all__ = [
    "Certificate",
    "Lemma2Check",
    "shift_by_coA",
    "trusted_region",
    "coefficient_matrix",
    "qlin_rank",
    "check_corollary",
    "verify_lemma2",
]

CERTIFIED = "certified"
DEPENDENT = "dependent"
INCONCLUSIVE = "inconclusive"


def shift_by_coA(y: Series) -> Series:
    """``y`` minus its constant term."""
    parts = decompose(y)
    return y - Series.constant(parts.constant_term)


def trusted_region(series: Sequence[Series]) -> Exponent | None:
    return min_bound(*(s.guarantee for s in series))


def coefficient_matrix(series: Sequence[Series], region: Exponent | None = None) -> tuple[list[Exponent], list[list[Fraction]]]:
    """Rows indexed by the union of supports below ``region``, one column per series."""
    rows: set[Exponent] = set()
    for s in series:
        for g, _ in s.terms:
            if region is None or g < region:
                rows.add(g)
    order = sorted(rows)
    lookup = [dict(s.terms) for s in series]
    matrix = [[col.get(g, Fraction(0)) for col in lookup] for g in order]
    return order, matrix


def qlin_rank(vectors: Sequence[Series]) -> tuple[int, list[list[int]]]:
    """Rank over the rationals and a normalized kernel basis.

    Only coefficients below the common guarantee of the inputs are used.
    """
    if not vectors:
        raise UsageError("qlin_rank needs at least one series")
    _, matrix = coefficient_matrix(vectors, trusted_region(vectors))
    return rank_and_kernel(matrix, len(vectors))


@dataclass(frozen=True)
class Certificate:
    inputs: tuple[Series, ...]
    shifted_inputs: tuple[Series, ...]
    matrix_rank: int
    outcome: str
    witness: tuple[int, ...] | None = None
    conclusion: str | None = None
    trusted_region: Exponent | None = None
    reason: str | None = None

    @property
    def n(self) -> int:
        return len(self.inputs)

    def to_dict(self) -> dict:
        return {
            "inputs": [s.render() for s in self.inputs],
            "shifted_inputs": [s.render() for s in self.shifted_inputs],
            "rank": self.matrix_rank,
            "outcome": self.outcome,
            "witness": None if self.witness is None else list(self.witness),
            "conclusion": self.conclusion,
            "trusted_region": None if self.trusted_region is None else self.trusted_region.render(),
            "reason": self.reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=True) + "\n"


def check_corollary(ys: Sequence[Series]) -> Certificate:
    """Decide the independence hypothesis for ``ys`` and emit a certificate.

    Full rank on trusted coefficients certifies ``td >= n + 1``.  A rank
    deficiency is a genuine dependence only for exact inputs; for jets the
    outcome is inconclusive.
    """
    if not ys:
        raise UsageError("check needs at least one series")
    shifted = tuple(shift_by_coA(y) for y in ys)
    region = trusted_region(shifted)
    rank, kernel = qlin_rank(shifted)
    n = len(ys)
    common = dict(inputs=tuple(ys), shifted_inputs=shifted, matrix_rank=rank, trusted_region=region)
    if rank == n:
        return Certificate(outcome=CERTIFIED, conclusion=f"td >= {n + 1}", **common)
    if region is None:
        return Certificate(outcome=DEPENDENT, witness=tuple(kernel[0]), **common)
    return Certificate(
        outcome=INCONCLUSIVE,
        reason=f"rank {rank} < {n} on coefficients below t^{{{region.render()}}}; higher terms may break the relation",
        **common,
    )


@dataclass(frozen=True)
class Lemma2Check:
    holds: bool
    vacuous: bool

    def __bool__(self):
        return self.holds


def verify_lemma2(ys: Sequence[Series], m: Sequence) -> Lemma2Check:
    """If ``sum m_i y_i`` is a constant, check ``sum m_i (y_i - co_A(y_i)) == 0``.

    When the premise fails the result is vacuously true and flagged.
    """
    if len(ys) != len(m):
        raise UsageError("coefficient vector and series list differ in length")
    total = Series.zero()
    shifted = Series.zero()
    for y, q in zip(ys, m):
        total = total + y.scale(Fraction(q))
        shifted = shifted + shift_by_coA(y).scale(Fraction(q))
    parts = decompose(total)
    if not parts.negative_part.is_zero() or not parts.infinitesimal_part.is_zero():
        return Lemma2Check(True, True)
    return Lemma2Check(shifted.is_zero(), False)
