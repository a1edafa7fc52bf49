"""Seeded invariant checks, runnable as ``hahnseries selftest``.

Each check returns ``(passed, total)``; a check that raises counts every
remaining case as failed.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable

from . import sampling
from .deriv import EL, d_series
from .exponents import Exponent, ShiftMap, tail_unfold
from .frontend.parser import ParseError, parse, unparse
from .linalg import rank_and_kernel
from .schanuel import verify_lemma2
from .series import Series, min_bound, s_inv
from .translog import s_exp, s_log

CHECKS: dict[str, Callable[[random.Random], tuple[int, int]]] = {}


def check(fn):
    CHECKS[fn.__name__] = fn
    return fn


def _agree(a: Series, b: Series) -> bool:
    return a.agrees_with(b, min_bound(a.guarantee, b.guarantee))


@check
def leibniz(rng):
    ok = total = 0
    for spec in sampling.all_specs().values():
        for _ in range(50):
            a, b = sampling.series(rng), sampling.series(rng)
            total += 1
            ok += d_series(spec, a * b) == a * d_series(spec, b) + b * d_series(spec, a)
    return ok, total


@check
def exp_log_derivative(rng):
    ok = total = 0
    for spec in sampling.all_specs().values():
        for _ in range(25):
            eps = sampling.infinitesimal(rng)
            e = s_exp(eps, 8)
            total += 1
            ok += _agree(d_series(spec, e), d_series(spec, eps) * e)
    return ok, total


@check
def exp_homomorphism(rng):
    ok = 0
    for _ in range(50):
        x, y = sampling.infinitesimal(rng), sampling.infinitesimal(rng)
        ok += _agree(s_exp(x + y, 8), s_exp(x, 8) * s_exp(y, 8))
    return ok, 50


@check
def exp_log_round_trip(rng):
    ok = 0
    for _ in range(50):
        eps = sampling.infinitesimal(rng)
        back = s_log(s_exp(eps, 8), 8)
        forth = s_exp(s_log(1 + eps, 8), 8)
        ok += back.agrees_with(eps, back.guarantee) and forth.agrees_with(1 + eps, forth.guarantee)
    return ok, 50


@check
def el_log_derivative(rng):
    ok = 0
    for _ in range(50):
        offset = rng.randint(1, 3)
        spec = EL(ShiftMap(offset))
        g = sampling.exponent(rng, indices=range(-3, 4), size=3)
        mono = Series.monomial(g)
        ok += d_series(spec, s_log(mono, 8, spec.shift)) == d_series(spec, mono) * s_inv(mono, 0)
    return ok, 50


@check
def tail_identity(rng):
    ok = 0
    for _ in range(50):
        sigma = ShiftMap(rng.randint(1, 3))
        phi = rng.randint(-20, 20)
        head, rest = tail_unfold(phi, sigma)
        ok += (head + rest).cmp(Exponent.tail(phi, sigma)) == 0
    return ok, 50


@check
def order_axioms(rng):
    ok = 0
    for _ in range(100):
        shift = rng.randint(1, 3)
        a, b, c = (sampling.tail_exponent(rng, shift) for _ in range(3))
        ok += a.cmp(b) == -b.cmp(a) and a.cmp(b) == (a + c).cmp(b + c) and a.sign() == -(-a).sign()
    return ok, 100


@check
def lemma2(rng):
    ok = 0
    for _ in range(100):
        n = rng.randint(1, 4)
        ys = [sampling.series(rng) for _ in range(n - 1)]
        m = [sampling.rational(rng) for _ in range(n)]
        rest = Series.constant(sampling.rational(rng, nonzero=False))
        for y, q in zip(ys, m):
            rest = rest - y.scale(q)
        ys.append(rest.scale(1 / m[-1]))
        result = verify_lemma2(ys, m)
        ok += result.holds and not result.vacuous
    return ok, 100


def _naive_rank(rows):
    rows = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


@check
def rank_oracle(rng):
    ok = 0
    for _ in range(50):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        m = [[sampling.rational(rng, 3, nonzero=False) for _ in range(c)] for _ in range(r)]
        rank, kernel = rank_and_kernel(m)
        ok += rank == _naive_rank(m) and len(kernel) == c - rank
    return ok, 50


_MALFORMED = ["log(", "1 +", "t^{", "t^{2*q(0)}", "foo(t)", "(1", "1 */ 2", "t^{e(0)", "3 $ 4", "exp()"]


@check
def parser_round_trip(rng):
    ok = total = 0
    for _ in range(50):
        text = _random_expression(rng, 3)
        tree = parse(text)
        total += 1
        ok += parse(unparse(tree)) == tree
    for text in _MALFORMED:
        total += 1
        try:
            parse(text)
        except ParseError as err:
            ok += err.line >= 1 and err.column >= 1
    return ok, total


def _random_expression(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return str(sampling.rational(rng)).replace("-", "")
        return f"t^{{{sampling.exponent(rng).render()}}}"
    kind = rng.choice(["+", "-", "*", "/", "neg", "pow", "fn"])
    if kind == "neg":
        return f"-({_random_expression(rng, depth - 1)})"
    if kind == "pow":
        return f"({_random_expression(rng, depth - 1)})^{rng.randint(-2, 3)}"
    if kind == "fn":
        return f"{rng.choice(['exp', 'log', 'inv', 'D'])}({_random_expression(rng, depth - 1)})"
    return f"({_random_expression(rng, depth - 1)}) {kind} {_random_expression(rng, depth - 1)}"


def run_all(seed: int = 0, out=print) -> bool:
    """Run every check; print one line each and return overall success."""
    all_ok = True
    start = time.perf_counter()
    for name, fn in CHECKS.items():
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        try:
            passed, total = fn(rng)
        except Exception as err:  # reported, not raised: selftest must finish
            out(f"FAIL {name}: raised {type(err).__name__}: {err}")
            all_ok = False
            continue
        status = "PASS" if passed == total else "FAIL"
        all_ok &= passed == total
        out(f"{status} {name}: {passed}/{total} ({time.perf_counter() - t0:.2f}s)")
    out(f"{'all checks passed' if all_ok else 'some checks failed'} in {time.perf_counter() - start:.2f}s")
    return all_ok
