"""Where the admissible segment [alpha, 8/(alpha(4-alpha))] comes from.

The worst quartic over a segment [alpha, beta] is S_{alpha,beta,alpha}.
Substituting x = alpha sqrt(beta) y and w = y + 1/y turns it into a
quadratic in w whose discriminant is alpha^2 beta - 4 alpha beta + 8.
That discriminant vanishes exactly at beta = 8/(alpha(4-alpha)).
"""
from fractions import Fraction

from hutchinson.lemma import (IntervalSpec, beta_bound, condition_b, extremal_quartic, has_nonpositive_point,
                              lemma_statement_a, reduced_discriminant)

alpha = Fraction(7, 2)
bound = beta_bound(alpha)
print("beta bound at alpha = 7/2:", bound)

for beta in (bound - Fraction(1, 100), bound, bound + Fraction(1, 100)):
    spec = IntervalSpec(alpha, beta)
    point = has_nonpositive_point(extremal_quartic(spec), alpha)
    print(f"beta = {beta}: discriminant {reduced_discriminant(spec)}, condition holds {condition_b(spec)}, "
          f"dip point {point}")

# brute force over a grid of quartics agrees with the two-quartic reduction
print("grid check:", lemma_statement_a(IntervalSpec(alpha, bound), grid_resolution=6))
