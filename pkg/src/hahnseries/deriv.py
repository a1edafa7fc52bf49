"""Series derivations defined on the basis monomials ``t^{e(i)}``.

Every construction fixes the logarithmic derivative of each basis monomial,
``D(t^{e(i)}) / t^{e(i)} = t^{h(i)}``, and extends to all of ``k((G))``:

* strong Leibniz rule: ``D(t^g) = sum_i g_i t^{g + h(i)}``;
* strong linearity: ``D(sum a_g t^g) = sum a_g D(t^g)``.

The available choices of ``h`` are

==============  ===========================================================
``Case1``       ``h(i) = -e(i + offset)``
``Case2Max``    ``h(i) = f(i) * e(i_max)``
``Case2Cofinal`` ``h(i) = f(i) * e(c_{n+1})`` for ``c_n <= i < c_{n+1}``
``EL``          ``h(i) = -tau(i)``
==============  ===========================================================
"""

from __future__ import annotations

import bisect
from math import ceil
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import ConfigurationError, DomainError
from .exponents import Exponent, ShiftMap, format_rational
from .series import Series, min_bound

__all__ = [
    "Affine",
    "Table",
    "CofinalSequence",
    "Case1",
    "Case2Max",
    "Case2Cofinal",
    "EL",
    "d_monomial",
    "d_series",
    "DEFAULT_TAIL_DEPTH",
]

DEFAULT_TAIL_DEPTH = 8


@dataclass(frozen=True)
class Affine:
    """The embedding ``i -> slope * i + offset``."""

    slope: Fraction
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "offset", Fraction(self.offset))
        if self.slope <= 0:
            raise ConfigurationError("an affine embedding needs a positive slope to preserve order")

    def __call__(self, phi) -> Fraction:
        return self.slope * Fraction(phi) + self.offset

    def lower_bound(self, points) -> Fraction | None:
        return min((self(p) for p in points), default=None)

    def describe(self) -> str:
        return f"affine({format_rational(self.slope)},{format_rational(self.offset)})"


@dataclass(frozen=True)
class Table:
    """An embedding given on finitely many index points."""

    values: tuple

    def __init__(self, values):
        pairs = tuple(sorted((Fraction(k), Fraction(v)) for k, v in dict(values).items()))
        for (_, v0), (_, v1) in zip(pairs, pairs[1:]):
            if not v0 < v1:
                raise ConfigurationError("table embedding is not strictly increasing")
        object.__setattr__(self, "values", pairs)

    def __call__(self, phi) -> Fraction:
        phi = Fraction(phi)
        for k, v in self.values:
            if k == phi:
                return v
        raise ConfigurationError(f"index point {format_rational(phi)} is outside the embedding table")

    def lower_bound(self, points) -> Fraction | None:
        # unknown terms may use any tabulated point
        return self.values[0][1] if self.values else None

    def describe(self) -> str:
        inner = ",".join(f"{format_rational(k)}:{format_rational(v)}" for k, v in self.values)
        return f"table({inner})"


@dataclass(frozen=True)
class CofinalSequence:
    """A strictly increasing unbounded sequence ``c_0 < c_1 < ...``.

    Index points below ``c_0`` lie outside every interval ``[c_n, c_{n+1})``.
    """

    name: str
    term: Callable[[int], Fraction] = field(compare=False)

    def locate(self, phi) -> int:
        """The ``n`` with ``c_n <= phi < c_{n+1}``."""
        phi = Fraction(phi)
        prefix = [Fraction(self.term(0))]
        if phi < prefix[0]:
            raise ConfigurationError(
                f"index point {format_rational(phi)} lies below the first partition point {format_rational(prefix[0])}"
            )
        while prefix[-1] <= phi:
            nxt = Fraction(self.term(len(prefix)))
            if not nxt > prefix[-1]:
                raise ConfigurationError(f"cofinal sequence {self.name} is not strictly increasing")
            prefix.append(nxt)
        return bisect.bisect_right(prefix, phi) - 1

    def __getitem__(self, n: int) -> Fraction:
        return Fraction(self.term(n))

    @classmethod
    def powers2(cls) -> CofinalSequence:
        """0, 1, 2, 4, 8, ..."""
        return cls("powers2", lambda n: Fraction(0) if n == 0 else Fraction(2) ** (n - 1))

    @classmethod
    def naturals(cls) -> CofinalSequence:
        return cls("naturals", lambda n: Fraction(n))

    @classmethod
    def arithmetic(cls, start, step) -> CofinalSequence:
        start, step = Fraction(start), Fraction(step)
        if step <= 0:
            raise ConfigurationError("arithmetic cofinal sequence needs a positive step")
        return cls(f"arith({format_rational(start)},{format_rational(step)})", lambda n: start + n * step)


def _integer_point(phi: Fraction, mode: str) -> None:
    if phi.denominator != 1:
        raise DomainError(f"{mode} derivation needs integer index points, got {format_rational(phi)}")


def _no_tails(g: Exponent, mode: str) -> None:
    if g.has_tails():
        raise DomainError(f"{mode} derivation is undefined on exponents with tail components: {g.render()}")


@dataclass(frozen=True)
class Case1:
    """Right-shift construction: ``D(t^{e(i)}) = t^{e(i) - e(i + offset)}``."""

    shift: ShiftMap = ShiftMap(1)
    name = "case1"

    def h(self, phi) -> Exponent:
        _integer_point(phi, self.name)
        return Exponent.atom(self.shift(phi), -1)

    def check(self, g: Exponent) -> None:
        _no_tails(g, self.name)

    def error_shift(self, w: Exponent) -> Exponent:
        # D(t^g) - w >= -e(s(mu)) for every g >= w, mu = least support point of w
        mu = w.leading_index()
        if mu is None:
            return Exponent()
        return Exponent.atom(mu + self.shift.offset, -1)

    def describe(self) -> str:
        return f"case1:shift={self.shift.offset}"


@dataclass(frozen=True)
class Case2Max:
    """``D(t^{e(i)}) / t^{e(i)} = t^{f(i) e(i_max)}`` for a greatest point ``i_max``."""

    f: Affine | Table
    phi_max: Fraction
    name = "case2max"

    def __post_init__(self):
        object.__setattr__(self, "phi_max", Fraction(self.phi_max))

    def h(self, phi) -> Exponent:
        phi = Fraction(phi)
        if phi > self.phi_max:
            raise ConfigurationError(
                f"index point {format_rational(phi)} exceeds the greatest point {format_rational(self.phi_max)}"
            )
        return Exponent.atom(self.phi_max, self.f(phi))

    def check(self, g: Exponent) -> None:
        _no_tails(g, self.name)

    def error_shift(self, w: Exponent) -> Exponent:
        points = [p for p in w.atoms if p <= self.phi_max] + [self.phi_max]
        low = min(Fraction(0), self.f.lower_bound(points))
        return Exponent.atom(self.phi_max, low)

    def describe(self) -> str:
        return f"case2max:f={self.f.describe()},phiM={format_rational(self.phi_max)}"


@dataclass(frozen=True)
class Case2Cofinal:
    """``D(t^{e(i)}) / t^{e(i)} = t^{f(i) e(c_{n+1})}`` with ``f > 0``."""

    f: Affine | Table
    seq: CofinalSequence
    name = "case2cof"

    def h(self, phi) -> Exponent:
        n = self.seq.locate(phi)
        value = self.f(phi)
        if value <= 0:
            raise ConfigurationError(f"embedding must be positive; f({format_rational(Fraction(phi))}) = {format_rational(value)}")
        return Exponent.atom(self.seq[n + 1], value)

    def check(self, g: Exponent) -> None:
        _no_tails(g, self.name)

    def error_shift(self, w: Exponent) -> Exponent:
        # every h(i) is positive
        return Exponent()

    def describe(self) -> str:
        return f"case2cof:f={self.f.describe()},seq={self.seq.name}"


@dataclass(frozen=True)
class EL:
    """Exponential-logarithmic construction: ``D(t^g) = sum_i g_i t^{g - tau(i)}``."""

    shift: ShiftMap = ShiftMap(1)
    name = "el"

    def h(self, phi) -> Exponent:
        _integer_point(phi, self.name)
        return Exponent.tail(phi, self.shift, -1)

    def check(self, g: Exponent) -> None:
        if g.shift is not None and g.shift != self.shift.offset:
            raise ConfigurationError(f"exponent uses shift +{g.shift}, derivation uses +{self.shift.offset}")

    def error_shift(self, w: Exponent) -> Exponent:
        mu = w.leading_index()
        if mu is None:
            return Exponent()
        return Exponent.tail(ceil(mu), self.shift, -1)

    def describe(self) -> str:
        return f"el:shift={self.shift.offset}"


def d_monomial(spec, g: Exponent, depth: int = DEFAULT_TAIL_DEPTH) -> Series:
    """``D(t^g)`` by the strong Leibniz rule.

    Exact unless ``g`` has tail components (EL only): the derivative is then
    an infinite sum and the ``tau(p)`` part is cut after ``depth`` points.
    """
    spec.check(g)
    terms = [(g + spec.h(phi), q) for phi, q in g.atoms.items()]
    if not g.has_tails():
        return Series(terms)
    s = spec.shift.offset
    bound = None
    for p, q in g.tails.items():
        for n in range(1, depth + 1):
            terms.append((g + spec.h(p + n * s), q))
        bound = min_bound(bound, g + spec.h(p + (depth + 1) * s))
    return Series(terms, bound)


def d_series(spec, a: Series, depth: int = DEFAULT_TAIL_DEPTH) -> Series:
    """``D(a)`` by strong linearity.

    For a jet with guarantee ``w`` the result is exact below
    ``w + spec.error_shift(w)``, a lower bound for every exponent of
    ``D(t^g)`` with ``g >= w``.
    """
    terms = []
    bound = None
    for g, c in a.terms:
        part = d_monomial(spec, g, depth)
        terms.extend((h, c * d) for h, d in part.terms)
        bound = min_bound(bound, part.guarantee)
    if a.guarantee is not None:
        bound = min_bound(bound, a.guarantee + spec.error_shift(a.guarantee))
    return Series(terms, bound)
