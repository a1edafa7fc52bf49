"""Generalized power series with finite support and an accuracy bound.

A :class:`Series` is a finite sum ``sum c_g t^g`` with rational coefficients
and :class:`~hahnseries.exponents.Exponent` exponents.  Infinite series
(exponentials, logarithms, inverses) are stored as *jets*: partial sums
tagged with a ``guarantee`` exponent ``w`` such that every coefficient at an
exponent ``< w`` is exact.  Terms at or above ``w`` are discarded on
construction.  ``guarantee=None`` means the series is exact everywhere.

Guarantees are propagated soundly by every operation: the true value of a
result agrees with the stored terms below the result's guarantee whenever
the same holds for the operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import UndefinedValuationError
from .exponents import Exponent, format_rational

__all__ = [
    "Series",
    "Decomposition",
    "min_bound",
    "s_add",
    "s_mul",
    "s_inv",
    "v_min",
    "decompose",
    "power_sum",
]

ZERO_EXP = Exponent()


def min_bound(*bounds: Exponent | None) -> Exponent | None:
    """Least of the given bounds, None standing for +infinity."""
    present = [b for b in bounds if b is not None]
    if not present:
        return None
    return min(present)


def _add_bound(a: Exponent | None, b: Exponent | None) -> Exponent | None:
    if a is None or b is None:
        return None
    return a + b


class Series:
    """Immutable generalized series; see the module docstring."""

    __slots__ = ("_terms", "_guarantee")

    def __init__(self, terms: Iterable[tuple[Exponent, object]] = (), guarantee: Exponent | None = None):
        acc: dict[Exponent, Fraction] = {}
        for g, c in terms:
            c = Fraction(c)
            if c:
                acc[g] = acc.get(g, 0) + c
        items = [(g, c) for g, c in acc.items() if c]
        if guarantee is not None:
            items = [(g, c) for g, c in items if g < guarantee]
        items.sort(key=lambda gc: gc[0])
        self._terms = tuple(items)
        self._guarantee = guarantee

    @classmethod
    def _sorted(cls, terms: tuple, guarantee) -> Series:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._guarantee = guarantee
        return obj

    @classmethod
    def constant(cls, c) -> Series:
        return cls([(ZERO_EXP, c)])

    @classmethod
    def monomial(cls, g: Exponent, c=1) -> Series:
        return cls([(g, c)])

    @classmethod
    def zero(cls) -> Series:
        return cls()

    @classmethod
    def one(cls) -> Series:
        return cls.constant(1)

    @property
    def terms(self) -> tuple[tuple[Exponent, Fraction], ...]:
        return self._terms

    @property
    def guarantee(self) -> Exponent | None:
        return self._guarantee

    def is_exact(self) -> bool:
        return self._guarantee is None

    def is_zero(self) -> bool:
        """True when no terms are stored (a jet may still hide higher terms)."""
        return not self._terms

    def exponents(self) -> list[Exponent]:
        return [g for g, _ in self._terms]

    def coefficient(self, g: Exponent) -> Fraction:
        for h, c in self._terms:
            if h == g:
                return c
        return Fraction(0)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise UndefinedValuationError("valuation of the zero series is undefined")
        return self._terms[0]

    def v_min(self) -> Exponent:
        return self.leading_term()[0]

    def truncate(self, bound: Exponent | None) -> Series:
        """Drop terms ``>= bound`` and lower the guarantee to ``bound``."""
        return Series(self._terms, min_bound(self._guarantee, bound))

    def with_guarantee(self, bound: Exponent | None) -> Series:
        return Series(self._terms, bound)

    def exact_part(self) -> Series:
        return Series._sorted(self._terms, None)

    def agrees_with(self, other: Series, below: Exponent | None) -> bool:
        """Compare coefficients at every exponent strictly below ``below``."""
        if below is None:
            return self._terms == other._terms
        mine = [(g, c) for g, c in self._terms if g < below]
        theirs = [(g, c) for g, c in other._terms if g < below]
        return mine == theirs

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Series(self._terms + other._terms, min_bound(self._guarantee, other._guarantee))

    __radd__ = __add__

    def __neg__(self):
        return Series._sorted(tuple((g, -c) for g, c in self._terms), self._guarantee)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return s_mul(self, other)

    __rmul__ = __mul__

    def scale(self, q) -> Series:
        q = Fraction(q)
        if not q:
            return Series((), self._guarantee)
        return Series._sorted(tuple((g, c * q) for g, c in self._terms), self._guarantee)

    def shift_exponents(self, h: Exponent) -> Series:
        """Multiply by the monomial ``t^h``."""
        return Series._sorted(tuple((g + h, c) for g, c in self._terms), _add_bound(self._guarantee, h))

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._terms == other._terms and self._guarantee == other._guarantee

    def __hash__(self):
        return hash((self._terms, self._guarantee))

    # -- text ---------------------------------------------------------------

    def render(self) -> str:
        """Canonical text such as ``1 - 1/2*t^{2*e(0)}``; the zero series is ``0``."""
        parts = []
        for g, c in self._terms:
            mag = format_rational(abs(c))
            body = mag if g.is_zero() else f"{mag}*t^{{{g.render()}}}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts) or "0"

    __str__ = render

    def __repr__(self):
        if self._guarantee is None:
            return f"Series({self.render()!r})"
        return f"Series({self.render()!r}, guarantee={self._guarantee.render()!r})"


def _coerce(x) -> Series | None:
    if isinstance(x, Series):
        return x
    if isinstance(x, (int, Fraction)):
        return Series.constant(x)
    return None


@dataclass(frozen=True)
class Decomposition:
    """``y = negative_part + constant_term + infinitesimal_part``."""

    negative_part: Series
    constant_term: Fraction
    infinitesimal_part: Series

    def reconstruct(self) -> Series:
        return self.negative_part + Series.constant(self.constant_term) + self.infinitesimal_part

    @property
    def co_a(self) -> Fraction:
        return self.constant_term


def s_add(a: Series, b: Series) -> Series:
    return a + b


def _product_bound(a: Series, b: Series) -> Exponent | None:
    # the error of (a + r)(b + s) is rb + as + rs; v(0) counts as +infinity
    va = None if a.is_zero() else a.v_min()
    vb = None if b.is_zero() else b.v_min()
    wa, wb = a.guarantee, b.guarantee
    return min_bound(_add_bound(wa, vb), _add_bound(wb, va), _add_bound(wa, wb))


def s_mul(a: Series, b: Series, bound: Exponent | None = None) -> Series:
    """Convolution product.

    ``bound`` optionally truncates the result further (terms ``>= bound``
    are never formed), which keeps repeated products of jets small.
    """
    guarantee = min_bound(_product_bound(a, b), bound)
    acc: dict[Exponent, Fraction] = {}
    for g, c in a.terms:
        for h, d in b.terms:
            e = g + h
            if guarantee is not None and not e < guarantee:
                continue
            acc[e] = acc.get(e, 0) + c * d
    return Series(acc.items(), guarantee)


def v_min(a: Series) -> Exponent:
    return a.v_min()


def decompose(y: Series) -> Decomposition:
    """Split ``y`` along ``K = A + C + M`` by the sign of each exponent."""
    neg, pos = [], []
    const = Fraction(0)
    for g, c in y.terms:
        s = g.sign()
        if s < 0:
            neg.append((g, c))
        elif s > 0:
            pos.append((g, c))
        else:
            const = c
    neg_bound = y.guarantee if y.guarantee is not None and y.guarantee.sign() <= 0 else None
    return Decomposition(Series._sorted(tuple(neg), neg_bound), const, Series._sorted(tuple(pos), y.guarantee))


def power_sum(eps: Series, coeffs: list[Fraction], bound: Exponent | None) -> Series:
    """``sum coeffs[k] * eps**k`` with every partial product cut at ``bound``.

    ``eps`` must be exact and infinitesimal, so cutting early never loses a
    term below ``bound``.
    """
    total = Series.constant(coeffs[0]).truncate(bound)
    power = Series.one().truncate(bound)
    for k in range(1, len(coeffs)):
        power = s_mul(power, eps, bound)
        if power.is_zero():
            break
        if coeffs[k]:
            total = total + power.scale(coeffs[k])
    return total.with_guarantee(bound)


def s_inv(a: Series, depth: int) -> Series:
    """Inverse of ``a = c t^g (1 + eps)`` by ``depth`` terms of the Neumann series."""
    if a.is_zero():
        raise UndefinedValuationError("division by the zero series")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    g, c = a.leading_term()
    inv_lead = -g
    eps = Series._sorted(tuple((h - g, d / c) for h, d in a.terms[1:]), None)
    relative = None if eps.is_zero() else eps.v_min() * (depth + 1)
    if a.guarantee is not None:
        relative = min_bound(relative, a.guarantee - g)
    coeffs = [Fraction((-1) ** k) for k in range(depth + 1)]
    body = power_sum(eps, coeffs, relative)
    return body.scale(1 / c).shift_exponents(inv_lead)
