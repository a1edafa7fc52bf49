"""Exponential and logarithm as jets with sound accuracy bounds.

``exp`` is defined on infinitesimals only and ``log`` on series with leading
coefficient 1: both maps would otherwise leave the rational constants.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DomainError, UnsupportedConstantLogError
from .exponents import Exponent, ShiftMap, format_rational
from .series import Series, min_bound, power_sum

__all__ = ["s_exp", "s_log", "log_monomial"]


def _check_infinitesimal(eps: Series) -> None:
    for g, c in eps.terms:
        s = g.sign()
        if s < 0:
            raise DomainError(f"exp needs an infinitesimal argument; it has negative support at t^{{{g.render()}}}")
        if s == 0:
            raise DomainError(f"exp needs an infinitesimal argument; it has constant term {format_rational(c)}")
    if eps.guarantee is not None and eps.guarantee.sign() <= 0:
        raise DomainError("exp argument is only known below a non-positive exponent")


def s_exp(eps: Series, depth: int) -> Series:
    """Taylor partial sum ``sum_{k<=depth} eps**k / k!``.

    The result is exact below ``(depth + 1) * v(eps)`` (and below the
    argument's own guarantee, since ``v(exp(eps)) = 0``).
    """
    _check_infinitesimal(eps)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    bound = None if eps.is_zero() else eps.v_min() * (depth + 1)
    bound = min_bound(bound, eps.guarantee)
    coeffs = [Fraction(1, factorial(k)) for k in range(depth + 1)]
    return power_sum(eps.exact_part(), coeffs, bound)


def log_monomial(g: Exponent, sigma) -> Series:
    """``log(t^g)`` in the exponential-logarithmic construction.

    Each atom contributes ``log(t^{e(i)}) = -t^{-e(i + offset)}``.  The
    minus sign makes ``D(log a) = D(a)/a`` hold for the matching derivation.
    """
    offset = sigma.offset if isinstance(sigma, ShiftMap) else int(sigma)
    if g.has_tails():
        raise DomainError(f"log(t^{{{g.render()}}}) is not defined for exponents with tail components")
    terms = []
    for phi, q in g.atoms.items():
        if phi.denominator != 1:
            raise DomainError(f"index point {format_rational(phi)} is not an integer")
        terms.append((Exponent.atom(phi + offset, -1), -q))
    return Series(terms)


def s_log(a: Series, depth: int, el_shift=None) -> Series:
    """Logarithm of ``a = t^g (1 + eps)``.

    Returns ``log(t^g) + sum_{n<=depth} (-1)**(n+1) eps**n / n``.  A
    non-zero leading exponent needs ``el_shift`` (a ShiftMap or offset).
    """
    if a.is_zero():
        raise DomainError("log of the zero series")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    g, c = a.leading_term()
    if c != 1:
        raise UnsupportedConstantLogError(
            f"log needs leading coefficient 1, got {format_rational(c)}; log of rational constants is not rational"
        )
    if not g.is_zero() and el_shift is None:
        raise DomainError(f"log(t^{{{g.render()}}}) needs the exponential-logarithmic mode (el spec)")
    eps = Series(((h - g, d) for h, d in a.terms[1:]))
    bound = None if eps.is_zero() else eps.v_min() * (depth + 1)
    if a.guarantee is not None:
        bound = min_bound(bound, a.guarantee - g)
    coeffs = [Fraction(0)] + [Fraction((-1) ** (n + 1), n) for n in range(1, depth + 1)]
    body = power_sum(eps, coeffs, bound)
    if g.is_zero():
        return body
    return (log_monomial(g, el_shift) + body).with_guarantee(bound)
