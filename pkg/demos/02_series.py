"""Series arithmetic with guarantee bounds.

Finite sums are exact.  Infinite results (inverses, exp, log) are jets: the
guarantee tells you below which exponent every coefficient is correct.
"""

from hahnseries import Exponent, Series, decompose, s_exp, s_inv, s_log

t = Series.monomial(Exponent.atom(0))

print("(1 + t)(1 - t) =", ((1 + t) * (1 - t)).render())

inv = s_inv(1 - t, 5)
print("1/(1 - t) ~", inv.render(), " exact below t^{" + inv.guarantee.render() + "}")

x = s_exp(t, 4)
print("exp(t) ~", x.render())
print("log(exp(t)) ~", s_log(x, 6).render())

# A jet multiplied by an exact series keeps a shifted guarantee.
y = x * t
print("t exp(t) exact below t^{" + y.guarantee.render() + "}")

# Every series splits into negative, constant and infinitesimal parts.
z = Series.monomial(-Exponent.atom(0), 2) + 7 + t
parts = decompose(z)
print("negative:", parts.negative_part.render(), "| constant:", parts.constant_term, "| infinitesimal:", parts.infinitesimal_part.render())
