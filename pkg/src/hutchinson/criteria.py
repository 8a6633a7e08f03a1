"""Sufficient conditions for real-rootedness in terms of second quotients.

Three tests are offered, all exact:

* Hutchinson: every quotient is at least 4.
* The interval test: all quotients lie in ``[alpha, 8/(alpha(4-alpha))]``
  for some ``1 + sqrt(5) <= alpha < 4`` (degree at least 4).
* The older fixed segment ``[alpha, 0.95/(2 sqrt(alpha) - alpha)]``
  with ``alpha`` in ``[3.43, 4]``.

None of these ever consult the Sturm oracle, except that :func:`certify`
decides degrees 2 and 3 exactly because no quotient criterion covers them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Optional

from .errors import HypothesisViolation, InvalidInput
from .lemma import beta_bound, threshold_check
from .poly import Polynomial, QuotientSequence, as_quotients, as_rational, format_rational, quotients
from .sturm import is_hyperbolic

THEOREM_C_LOW = Fraction(343, 100)
THEOREM_C_NUMERATOR = Fraction(19, 20)


def hutchinson_check(q) -> bool:
    q = as_quotients(q)
    return all(v >= 4 for v in q)


def interval_check(q, alpha) -> bool:
    """All quotients in ``[alpha, beta_bound(alpha)]``; needs degree >= 4 and an admissible alpha."""
    q = as_quotients(q)
    alpha = as_rational(alpha)
    if q.degree < 4:
        raise HypothesisViolation("Theorem 1 requires n >= 4")
    if not threshold_check(alpha):
        raise HypothesisViolation(f"alpha = {alpha} is outside [1+sqrt(5), 4)")
    hi = beta_bound(alpha)
    return all(alpha <= v <= hi for v in q)


class AlphaSearch(NamedTuple):
    alpha: Optional[Fraction]
    hutchinson_applies: bool


def find_alpha(q) -> AlphaSearch:
    """Most permissive alpha for the interval test, or None.

    The bound ``8/(alpha(4-alpha))`` increases with alpha on (2, 4), so the
    largest admissible alpha, ``min(q)``, is the only candidate worth trying.
    """
    q = as_quotients(q)
    if q.degree < 4:
        raise HypothesisViolation("Theorem 1 requires n >= 4")
    if hutchinson_check(q):
        return AlphaSearch(None, True)
    lo, hi = q.minimum(), q.maximum()
    if threshold_check(lo) and hi <= beta_bound(lo):
        return AlphaSearch(lo, False)
    return AlphaSearch(None, False)


def _theorem_c_upper_ok(value: Fraction, alpha: Fraction) -> bool:
    # value (2 sqrt(alpha) - alpha) <= 19/20  <=>  2 value sqrt(alpha) <= 19/20 + value alpha,
    # both sides nonnegative, so square.
    rhs = THEOREM_C_NUMERATOR + value * alpha
    return 4 * value * value * alpha <= rhs * rhs


def theorem_c_slack(value: Fraction, alpha: Fraction) -> Fraction:
    """Squared-form slack ``(19/20 + v alpha)^2 - 4 v^2 alpha``; nonnegative iff the upper bound holds."""
    rhs = THEOREM_C_NUMERATOR + value * alpha
    return rhs * rhs - 4 * value * value * alpha


def theorem_c_check(q, alpha) -> bool:
    """All quotients in ``[alpha, 0.95 / (2 sqrt(alpha) - alpha)]`` for ``alpha`` in ``[3.43, 4]``.

    At ``alpha = 4`` the upper bound is infinite and only ``q >= 4`` remains.
    """
    q = as_quotients(q)
    alpha = as_rational(alpha)
    if not THEOREM_C_LOW <= alpha <= 4:
        raise HypothesisViolation(f"alpha = {alpha} is outside [3.43, 4]")
    return all(v >= alpha and _theorem_c_upper_ok(v, alpha) for v in q)


def find_theorem_c_alpha(q) -> Optional[Fraction]:
    """The bound ``0.95/(2 sqrt(a) - a)`` grows with ``a`` on [3.43, 4], so try ``min(min q, 4)``."""
    q = as_quotients(q)
    a = min(q.minimum(), Fraction(4))
    if a < THEOREM_C_LOW:
        return None
    return a if theorem_c_check(q, a) else None


@dataclass(frozen=True)
class CriterionReport:
    hutchinson: bool
    interval_alpha: Optional[Fraction]
    interval_holds: bool
    theorem_c_alpha: Optional[Fraction]
    theorem_c_holds: bool
    q_min: Fraction
    q_max: Fraction
    degree: int
    margins: dict = field(default_factory=dict)
    scope: str = "theorem1"
    small_degree_hyperbolic: Optional[bool] = None

    @property
    def certified(self) -> bool:
        return (self.hutchinson or self.interval_holds or self.theorem_c_holds
                or bool(self.small_degree_hyperbolic))

    def to_json(self) -> dict:
        def r(x):
            return None if x is None else format_rational(x)

        return {
            "degree": self.degree,
            "scope": self.scope,
            "hutchinson": self.hutchinson,
            "interval_alpha": r(self.interval_alpha),
            "interval_holds": self.interval_holds,
            "theorem_c_alpha": r(self.theorem_c_alpha),
            "theorem_c_holds": self.theorem_c_holds,
            "q_min": r(self.q_min),
            "q_max": r(self.q_max),
            "margins": {k: r(v) for k, v in self.margins.items()},
            "small_degree_hyperbolic": self.small_degree_hyperbolic,
            "certified": self.certified,
        }


def certify(p: Polynomial, alpha=None) -> CriterionReport:
    """Run every criterion on ``p`` and record exact slacks.

    ``alpha`` overrides the automatic choice for the interval test.  Margins
    are ``q_min - 4`` (Hutchinson), ``q_min - alpha`` and
    ``beta_bound(alpha) - q_max`` (interval), and the squared-form slack of
    the upper fixed-segment inequality at ``q_max``.
    """
    if p.degree < 2:
        raise InvalidInput("certify needs degree >= 2")
    q = quotients(p)
    q_min, q_max = q.minimum(), q.maximum()
    margins: dict = {"hutchinson": q_min - 4}
    hut = hutchinson_check(q)

    interval_alpha, interval_holds = None, False
    scope = "theorem1"
    small = None
    if p.degree < 4:
        scope = "below-theorem1"
        small = is_hyperbolic(p)
    else:
        if alpha is not None:
            interval_alpha = as_rational(alpha)
            interval_holds = interval_check(q, interval_alpha)
        else:
            interval_alpha = find_alpha(q).alpha
            interval_holds = interval_alpha is not None
        if interval_alpha is not None:
            margins["interval_lower"] = q_min - interval_alpha
            margins["interval_upper"] = beta_bound(interval_alpha) - q_max

    tc_alpha = find_theorem_c_alpha(q)
    if tc_alpha is not None:
        margins["theorem_c_lower"] = q_min - tc_alpha
        margins["theorem_c_upper"] = theorem_c_slack(q_max, tc_alpha)

    return CriterionReport(
        hutchinson=hut,
        interval_alpha=interval_alpha,
        interval_holds=interval_holds,
        theorem_c_alpha=tc_alpha,
        theorem_c_holds=tc_alpha is not None,
        q_min=q_min,
        q_max=q_max,
        degree=p.degree,
        margins=margins,
        scope=scope,
        small_degree_hyperbolic=small,
    )
