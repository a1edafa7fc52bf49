"""Random exponents and series for property checks.

All functions take a :class:`random.Random` so runs are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .deriv import EL, Affine, Case1, Case2Cofinal, Case2Max, CofinalSequence
from .exponents import Exponent
from .series import Series

INDICES = (0, 1, 2, 3)


def all_specs() -> dict:
    """One representative of every derivation construction."""
    return {
        "case1": Case1(),
        "case2max": Case2Max(Affine(1, -1), 4),
        "case2cof": Case2Cofinal(Affine(1, 1), CofinalSequence.powers2()),
        "el": EL(),
    }


def rational(rng: random.Random, bound: int = 5, nonzero: bool = True) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        if q or not nonzero:
            return q


def exponent(rng: random.Random, indices=INDICES, size: int = 2) -> Exponent:
    picks = rng.sample(list(indices), k=rng.randint(1, min(size, len(indices))))
    return Exponent({i: Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2))) for i in picks})


def positive_exponent(rng: random.Random, indices=INDICES) -> Exponent:
    while True:
        g = exponent(rng, indices)
        if g.sign() > 0:
            return g
        if g.sign() < 0:
            return -g


def tail_exponent(rng: random.Random, shift: int, lo: int = -3, hi: int = 3) -> Exponent:
    atoms = {rng.randint(lo, hi): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))}
    tails = {rng.randint(lo, hi): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))}
    return Exponent(atoms, tails, shift if any(tails.values()) else None)


def series(rng: random.Random, terms: int = 3, indices=INDICES, constant: bool = True) -> Series:
    out = [(exponent(rng, indices), rational(rng)) for _ in range(rng.randint(1, terms))]
    if constant and rng.random() < 0.5:
        out.append((Exponent(), rational(rng)))
    return Series(out)


def infinitesimal(rng: random.Random, terms: int = 3, indices=INDICES) -> Series:
    return Series([(positive_exponent(rng, indices), rational(rng)) for _ in range(rng.randint(1, terms))])
