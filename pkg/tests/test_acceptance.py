"""The eleven acceptance criteria, each at its stated count and tolerance.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""

import json
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import e, mono, tau  # noqa: E402
from hahnseries import (  # noqa: E402
    EL,
    Exponent,
    Series,
    ShiftMap,
    check_corollary,
    d_series,
    find_relation,
    qlin_rank,
    s_exp,
    s_inv,
    s_log,
    sampling,
    tail_unfold,
    verify_lemma2,
)
from hahnseries.frontend import ParseError, parse, unparse  # noqa: E402
from hahnseries.oracle import combine, monomial_exponents  # noqa: E402
from hahnseries.selftest import run_all  # noqa: E402
from hahnseries.series import min_bound  # noqa: E402
from test_linalg import naive_rank  # noqa: E402
from test_oracle import planted  # noqa: E402
from test_parser import CORPUS, MALFORMED  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}
T = mono(e(0))


def _agree(a, b):
    return a.agrees_with(b, min_bound(a.guarantee, b.guarantee))


def criterion_1():
    rng = random.Random(1)
    failures, start = 0, time.perf_counter()
    for spec in sampling.all_specs().values():
        for _ in range(200):
            a, b = sampling.series(rng), sampling.series(rng)
            failures += d_series(spec, a * b) != a * d_series(spec, b) + b * d_series(spec, a)
    elapsed = time.perf_counter() - start
    return failures == 0 and elapsed < 5, f"Leibniz 4 modes x 200 pairs, {failures} failures, {elapsed:.2f}s (limit 5s)"


def criterion_2():
    rng = random.Random(2)
    failures = 0
    for spec in sampling.all_specs().values():
        for _ in range(100):
            eps = sampling.infinitesimal(rng)
            x = s_exp(eps, 8)
            failures += not _agree(d_series(spec, x), d_series(spec, eps) * x)
    return failures == 0, f"D(exp eps) = D(eps) exp(eps), 4 modes x 100, {failures} failures"


def criterion_3():
    rng = random.Random(3)
    failures = 0
    for _ in range(100):
        x, y = sampling.infinitesimal(rng), sampling.infinitesimal(rng)
        failures += not _agree(s_exp(x + y, 8), s_exp(x, 8) * s_exp(y, 8))
    return failures == 0, f"exp(x+y) = exp(x)exp(y), 100 pairs, {failures} failures"


def criterion_4():
    rng = random.Random(4)
    failures = 0
    for _ in range(100):
        eps = sampling.infinitesimal(rng)
        back = s_log(s_exp(eps, 8), 8)
        forth = s_exp(s_log(1 + eps, 8), 8)
        failures += not (back.agrees_with(eps, back.guarantee) and forth.agrees_with(1 + eps, forth.guarantee))
    got = s_log(mono(e(0)), 8, ShiftMap(1))
    stated = mono(-e(1))
    verbatim = got == stated
    detail = f"round trips 100, {failures} failures; EL log(t^{{e(0)}}) = {got.render()}, stated {stated.render()}"
    return failures == 0 and verbatim, detail


def criterion_5():
    rng = random.Random(5)
    failures = 0
    for _ in range(100):
        spec = EL(ShiftMap(rng.randint(1, 3)))
        g = sampling.exponent(rng, indices=range(-3, 4), size=3)
        t_g = mono(g)
        lhs = d_series(spec, s_log(t_g, 8, spec.shift))
        failures += not (lhs.is_exact() and lhs == d_series(spec, t_g) * s_inv(t_g, 0))
    tail_failures = 0
    for _ in range(100):
        offset = rng.randint(1, 3)
        phi = rng.randint(-50, 50)
        head, rest = tail_unfold(phi, ShiftMap(offset))
        tail_failures += head != e(phi + offset) or head + rest != tau(phi, shift=offset)
    ok = failures == 0 and tail_failures == 0
    return ok, f"log-derivative 100 atom-only g, {failures} failures; tail identity 100 phi, {tail_failures} failures"


def criterion_6():
    rng = random.Random(6)
    failures = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        ys = [sampling.series(rng, indices=(-2, -1, 0, 1, 2)) for _ in range(n - 1)]
        m = [sampling.rational(rng) for _ in range(n)]
        rest = Series.constant(sampling.rational(rng, nonzero=False))
        for y, q in zip(ys, m):
            rest = rest - y.scale(q)
        ys.append(rest.scale(1 / m[-1]))
        res = verify_lemma2(ys, m)
        failures += not res.holds or res.vacuous
    return failures == 0, f"constant combinations on 200 engineered families, {failures} failures"


def _cli_json(*exprs):
    argv = [sys.executable, "-m", "hahnseries", "check"]
    for x in exprs:
        argv += ["-e", x]
    return subprocess.run(argv, capture_output=True, check=True).stdout


def criterion_7():
    t_inv = mono(-e(0))
    a = check_corollary([t_inv + 3, t_inv * t_inv])
    b = check_corollary([t_inv + 3, t_inv.scale(2) - 1])
    c = check_corollary([Series.constant(5)])
    ok_api = (a.outcome, a.conclusion) == ("certified", "td >= 3") and (b.outcome, b.witness) == ("dependent", (2, -1)) and c.outcome == "dependent"
    runs = [_cli_json("t^{-1*e(0)} + 3", "t^{-2*e(0)}") for _ in range(2)]
    stable = runs[0] == runs[1] and json.loads(runs[0])["conclusion"] == "td >= 3"
    return ok_api and stable, f"certified/dependent/dependent as stated: {ok_api}; byte-stable CLI JSON: {stable}"


def criterion_8():
    found = 0
    for seed in range(20):
        ws, degree = planted(random.Random(800 + seed))
        rep = find_relation(ws, degree)
        if rep.outcome == "verified":
            cols = []
            for m in rep.monomials:
                term = Series.one()
                for w, p in zip(ws, m):
                    for _ in range(p):
                        term = term * w
                cols.append(term)
            found += combine(rep.coeffs, cols).is_zero()
    sq = find_relation([T, T * T], 2)
    ex = find_relation([s_exp(T, 8), s_exp(T.scale(2), 8)], 2)
    rng = random.Random(8)
    independent_ok = 0
    for _ in range(10):
        exps = rng.sample([e(0), -e(0), e(1), -e(1), e(0) - e(1), e(0, 2), e(2)], k=rng.randint(1, 4))
        ys = [mono(g, sampling.rational(rng)) for g in exps]
        independent_ok += check_corollary(ys).outcome == "certified" and find_relation(ys, 1).outcome == "none_found"
    ok = (
        found == 20
        and (sq.outcome, sq.polynomial()) == ("verified", "w2 - w1^2")
        and (ex.outcome, ex.polynomial()) == ("candidate", "w2 - w1^2")
        and ex.valid_below is not None
        and independent_ok == 10
    )
    detail = (
        f"planted {found}/20; (t,t^2) {sq.outcome} {sq.polynomial()}; "
        f"(exp t, exp 2t) {ex.outcome} {ex.polynomial()} below {ex.valid_below.render()}; independent {independent_ok}/10"
    )
    return ok, detail


def criterion_9():
    rng = random.Random(9)
    failures = 0
    for _ in range(50):
        eps = sampling.infinitesimal(rng)
        for f in (s_exp, lambda x, d: s_log(1 + x, d), lambda x, d: s_inv(1 + x, d)):
            lo, hi = f(eps, 6), f(eps, 10)
            failures += not lo.agrees_with(hi, lo.guarantee)
    return failures == 0, f"depth 6 vs 10 for exp/log/inv on 50 eps, {failures} failures"


def criterion_10():
    rng = random.Random(10)
    failures = 0
    for _ in range(100):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        zero = rng.random() * 0.7
        m = [[F(0) if rng.random() < zero else F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(c)] for _ in range(r)]
        if rng.random() < 0.3 and r > 1:
            m[-1] = [x + 2 * y for x, y in zip(m[0], m[1 % r])]
        cols = [Series([(e(i), m[i][j]) for i in range(r)]) for j in range(c)]
        failures += qlin_rank(cols)[0] != naive_rank(m)
    return failures == 0, f"qlin_rank vs naive elimination on 100 matrices up to 8x8, {failures} failures"


def criterion_11():
    corpus = CORPUS[:50]
    round_trips = sum(parse(unparse(parse(s))) == parse(s) for s in corpus)
    positioned = 0
    for s in MALFORMED:
        try:
            parse(s)
        except ParseError as err:
            positioned += err.line >= 1 and err.column >= 1
    start = time.perf_counter()
    selftest_ok = run_all(0, out=lambda line: None)
    elapsed = time.perf_counter() - start
    ok = round_trips == 50 and positioned == len(MALFORMED) and selftest_ok and elapsed < 60
    return ok, f"round trips {round_trips}/50; positioned diagnostics {positioned}/{len(MALFORMED)}; selftest {'passed' if selftest_ok else 'failed'} in {elapsed:.1f}s"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 12)}


def line(n, ok, detail):
    return f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    RESULTS[n] = (ok, detail)
    print(line(n, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(line(n, ok, detail))
    sys.exit(1 if failed else 0)
