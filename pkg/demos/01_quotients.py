"""Second quotients: the coordinates everything else is written in.

A polynomial with positive coefficients is fixed, up to the scaling
x -> c x and an overall factor, by its second quotients
q_k = a_{k-1}^2 / (a_{k-2} a_k).  Here we build one from its quotients, read
them back, and ask the exact oracle whether it is real-rooted.
"""
from fractions import Fraction

from hutchinson import from_quotients, is_hyperbolic, normalize, quotients
from hutchinson.poly import Polynomial

# Hutchinson's constant: every quotient equal to 4
p = from_quotients([4, 4, 4, 4])
print("q = 4 polynomial:", [str(c) for c in p.coeffs])
print("real-rooted:", is_hyperbolic(p))

# Any positive polynomial normalizes to 1 + x + ... without changing its quotients
raw = Polynomial([2, 6, 9, 5])
print("normalized:", [str(c) for c in normalize(raw).coeffs])
print("same quotients:", quotients(raw) == quotients(normalize(raw)))

# Just below 4 the small-degree cases are already lost: 1 + x + x^2/q needs q >= 4
p = from_quotients([Fraction(16, 5)])
print("q = 16/5, degree 2, real-rooted:", is_hyperbolic(p))
