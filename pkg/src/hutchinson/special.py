"""Extremal families: partial-theta sections and alternating-quotient truncations.

The partial theta function ``sum z**k a**(-k**2)`` has every second quotient
equal to ``a**2``.  Its coefficients are irrational for most rational
``a**2``, but a polynomial is fixed by its quotients once ``a0`` and ``a1``
are chosen, and the choice only rescales the variable.  So the sections are
realized exactly through :func:`from_quotients` with a constant sequence.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable

from .errors import InvalidInput, NonMonotoneThreshold
from .poly import Polynomial, SignedPolynomial, alternate, as_rational, from_quotients
from .sturm import is_hyperbolic

log = logging.getLogger(__name__)

#: limit of the section thresholds (threshold of the full partial theta function)
Q_INFINITY = Fraction("3.23363666")


def theta_section(a_squared, degree: int) -> Polynomial:
    s = as_rational(a_squared)
    if s <= 1:
        raise InvalidInput("a_squared must exceed 1")
    if degree < 2:
        raise InvalidInput("degree must be at least 2")
    return from_quotients([s] * (degree - 1), 1, 1)


def _balanced_theta(s: Fraction, degree: int) -> Polynomial:
    # a1 = s**m puts the largest coefficient mid-way and keeps the integers small
    return from_quotients([s] * (degree - 1), 1, s ** ((degree - 1) // 2))


def theta_hyperbolic(s, degree: int) -> bool:
    return is_hyperbolic(_balanced_theta(as_rational(s), degree))


def _simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator strictly inside ``(lo, hi)``."""
    d = 1
    while True:
        # smallest numerator p with p/d > lo
        p = (lo.numerator * d) // lo.denominator + 1
        x = Fraction(p, d)
        if x < hi:
            return x
        d += 1


def theta_threshold(degree: int, tolerance=Fraction(1, 10000), bracket=(2, 5),
                    monotone_probes: int = 2) -> Fraction:
    """Smallest ``s`` (to within ``tolerance``) with ``theta_section(s, degree)`` hyperbolic.

    Bisects the bracket keeping ``lo`` non-hyperbolic and ``hi`` hyperbolic,
    always probing a simple rational from the middle half of the bracket.
    Monotonicity in ``s`` is assumed; ``monotone_probes`` extra points on each
    side of the final bracket are re-checked and :class:`NonMonotoneThreshold`
    is raised if any disagrees.  Returns the hyperbolic end of the bracket.
    """
    if degree < 4:
        raise InvalidInput("degree must be at least 4")
    tol = as_rational(tolerance)
    if tol <= 0:
        raise InvalidInput("tolerance must be positive")
    lo, hi = (as_rational(b) for b in bracket)
    if theta_hyperbolic(lo, degree) or not theta_hyperbolic(hi, degree):
        raise InvalidInput(f"no sign change of hyperbolicity on [{lo}, {hi}] at degree {degree}")
    while hi - lo > tol:
        quarter = (hi - lo) / 4
        mid = _simplest_between(lo + quarter, hi - quarter)
        if theta_hyperbolic(mid, degree):
            hi = mid
        else:
            lo = mid
    width = Fraction(bracket[1]) - Fraction(bracket[0])
    for i in range(1, monotone_probes + 1):
        above = _simplest_between(hi, hi + width * Fraction(i, 4 * monotone_probes))
        below = _simplest_between(lo - width * Fraction(i, 4 * monotone_probes), lo)
        if not theta_hyperbolic(above, degree) or theta_hyperbolic(below, degree):
            raise NonMonotoneThreshold(f"hyperbolicity not monotone near s = {hi} at degree {degree}")
    log.debug("degree %d threshold in (%s, %s]", degree, lo, hi)
    return hi


def threshold_ladder(degrees: Iterable[int], tolerance=Fraction(1, 10000), workers: int = 1) -> dict:
    """Thresholds for several degrees; runs them in parallel when ``workers > 1``."""
    degrees = list(degrees)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(theta_threshold, degrees, [tolerance] * len(degrees)))
    else:
        values = [theta_threshold(d, tolerance) for d in degrees]
    return dict(zip(degrees, values))


def alternating_quotients(alpha, beta, degree: int) -> list[Fraction]:
    """``q2 = q4 = ... = alpha`` and ``q3 = q5 = ... = beta``."""
    a, b = as_rational(alpha), as_rational(beta)
    return [a if k % 2 == 0 else b for k in range(2, degree + 1)]


def alternating_truncation(alpha, beta, degree: int, signed: bool = False):
    """Degree-``degree`` truncation with alternating quotients, normalized so ``a0 = a1 = 1``.

    With ``signed=True`` returns ``1 - x + ...`` instead.
    """
    a, b = as_rational(alpha), as_rational(beta)
    if not 1 < a < b:
        raise InvalidInput("need 1 < alpha < beta")
    if degree < 4:
        raise InvalidInput("degree must be at least 4")
    p = from_quotients(alternating_quotients(a, b, degree))
    return alternate(p) if signed else p


def first_failing_degree(make, degrees: Iterable[int]):
    """First degree ``d`` for which ``make(d)`` is not hyperbolic, or None."""
    for d in degrees:
        if not is_hyperbolic(make(d)):
            return d
    return None
