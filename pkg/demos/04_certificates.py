"""Transcendence certificates.

If y_1 - c_1, ..., y_n - c_n are linearly independent over the rationals
(c_i the constant terms), then y_1..y_n, exp(y_1)..exp(y_n) have
transcendence degree at least n + 1.  The check is exact linear algebra.
"""

from hahnseries import Exponent, Series, check_corollary, s_exp, verify_lemma2

t_inv = Series.monomial(-Exponent.atom(0))
t = Series.monomial(Exponent.atom(0))

print(check_corollary([t_inv + 3, t_inv * t_inv]).to_json())
print(check_corollary([t_inv + 3, t_inv.scale(2) - 1]).to_json())

# Truncated inputs can certify independence but never prove dependence.
x = s_exp(t, 4) - 1
print(check_corollary([x, x.scale(3)]).outcome)

# A constant combination of the y_i forces the shifted combination to vanish.
print(verify_lemma2([t + 1, -t + 2], [1, 1]))
