"""Searching for polynomial relations at bounded degree.

Exact inputs yield verified relations.  Jets yield candidates that hold
below the common guarantee.  Failing to find a relation is evidence, not
proof, of algebraic independence.
"""

from hahnseries import Exponent, Series, find_relation, s_exp

t = Series.monomial(Exponent.atom(0))

rep = find_relation([t, t * t], 2)
print(rep.outcome, rep.polynomial())

rep = find_relation([s_exp(t, 8), s_exp(t.scale(2), 8)], 2)
print(rep.outcome, rep.polynomial(), "valid below t^{" + rep.valid_below.render() + "}")

rep = find_relation([t, s_exp(t, 12)], 2)
print(rep.outcome, f"({rep.trusted_constraints} constraints, {rep.monomial_count} monomials)")
