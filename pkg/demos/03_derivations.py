"""Four series derivations and the axioms they satisfy.

Each derivation fixes D(t^{e(i)}) / t^{e(i)} on the basis and extends by the
strong Leibniz rule.  We check the Leibniz rule and compatibility with exp
on a few random inputs.
"""

import random

from hahnseries import EL, Case1, Exponent, Series, ShiftMap, d_monomial, d_series, s_exp, s_inv, s_log, sampling

e = Exponent.atom
print("case1: D(t^{e(0)}) =", d_monomial(Case1(), e(0)).render())
print("el:    D(t^{e(0)}) =", d_monomial(EL(), e(0)).render())
print("el:    D(t^{-e(1)}) =", d_monomial(EL(), -e(1)).render())

rng = random.Random(0)
for name, spec in sampling.all_specs().items():
    a, b = sampling.series(rng), sampling.series(rng)
    leibniz = d_series(spec, a * b) == a * d_series(spec, b) + b * d_series(spec, a)
    eps = sampling.infinitesimal(rng)
    lhs, rhs = d_series(spec, s_exp(eps, 8)), d_series(spec, eps) * s_exp(eps, 8)
    compatible = lhs.agrees_with(rhs, min(lhs.guarantee, rhs.guarantee))
    print(f"{spec.describe():40s} Leibniz {leibniz}  D(exp) = D(.)exp {compatible}")

# In the exponential-logarithmic mode logs of monomials exist, and the
# logarithmic derivative identity holds with no truncation at all.
spec = EL(ShiftMap(1))
g = e(0, 2) - e(3)
t_g = Series.monomial(g)
log_tg = s_log(t_g, 8, spec.shift)
print("log(t^{" + g.render() + "}) =", log_tg.render())
print("D(log t^g) == D(t^g)/t^g:", d_series(spec, log_tg) == d_series(spec, t_g) * s_inv(t_g, 0))
