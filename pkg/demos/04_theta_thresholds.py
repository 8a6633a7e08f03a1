"""Sections of the partial theta function.

With every quotient equal to s, the degree-n section is real-rooted once s
passes a threshold.  At degree 4 that threshold is exactly 1 + sqrt(5).  From
degree 8 on it sits near 3.2336, close to the known limit 3.23363666.
Degree 60 takes about two minutes, so it is left out here.
"""
from fractions import Fraction

from hutchinson.special import Q_INFINITY, theta_threshold

for n in (4, 8, 16, 32):
    t = theta_threshold(n, Fraction(1, 10000))
    print(f"degree {n:2d}: threshold {float(t):.6f}  ({t})")
print("limit:", float(Q_INFINITY))
