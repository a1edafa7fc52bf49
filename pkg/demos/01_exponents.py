"""Exponents: atoms, tails and the lexicographic order.

An exponent is a rational combination of atoms e(i) and tails tau(i), where
tau(i) = e(i+1) + e(i+2) + ... for the shift i -> i + 1.  Smaller index
points dominate, so e(0) is bigger than any combination of later atoms.
"""

from hahnseries import Exponent, ShiftMap, tail_unfold

e0, e1 = Exponent.atom(0), Exponent.atom(1)
tau0 = Exponent.tail(0, ShiftMap(1))

print("e(0) > e(1) > 0:", e0 > e1 > Exponent.zero())
print("tau(0) sits between e(1) and e(0):", e1 < tau0 < e0)

# Tails have infinite support but a canonical finite description.
print("e(1) + tau(1) =", (e1 + Exponent.tail(1, 1)).render())
print("e(0) - tau(-1) =", (e0 - Exponent.tail(-1, 1)).render())

head, rest = tail_unfold(0, ShiftMap(1))
print(f"tau(0) = {head.render()} + {rest.render()}")

# Coefficients of 2*e(0) - tau(0) at the points 0..6
print("expansion:", {int(k): str(v) for k, v in (e0 * 2 - tau0).expand(6).items()})
