"""The degree-four gadget behind the interval criterion.

``S_{q2,q3,q4}(x) = 1 - x + x^2/q2 - x^3/(q2^2 q3) + x^4/(q2^3 q3^2 q4)``.

For a segment ``[alpha, beta]`` two statements are equivalent:

(a) every such quartic with ``q2, q3, q4`` in the segment has a point
    ``x0`` in the open interval ``(1, alpha)`` where it is ``<= 0``;
(b) ``alpha >= 1 + sqrt(5)`` and, when ``alpha < 4``,
    ``beta <= 8 / (alpha (4 - alpha))``.

Everything here is exact.  ``1 + sqrt(5)`` and ``sqrt(beta)`` are never
formed; comparisons against them are squared out with the sign cases
handled explicitly.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidInput, OracleDisagreement
from .poly import as_rational, evaluate
from .sturm import RootInterval, isolate_roots, squarefree_decomposition, to_integer_poly


@dataclass(frozen=True)
class LemmaQuartic:
    q2: Fraction
    q3: Fraction
    q4: Fraction

    def __init__(self, q2, q3, q4):
        vals = [as_rational(v) for v in (q2, q3, q4)]
        if any(v <= 0 for v in vals):
            raise InvalidInput("quartic parameters must be positive")
        for name, v in zip(("q2", "q3", "q4"), vals):
            object.__setattr__(self, name, v)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        q2, q3, q4 = self.q2, self.q3, self.q4
        return (Fraction(1), Fraction(-1), 1 / q2, -1 / (q2 ** 2 * q3), 1 / (q2 ** 3 * q3 ** 2 * q4))

    def __call__(self, x) -> Fraction:
        return evaluate(self.coeffs, x)


@dataclass(frozen=True)
class IntervalSpec:
    """A segment ``[alpha, beta]`` of admissible quotients, ``0 < alpha <= beta``."""

    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha, beta):
        a, b = as_rational(alpha), as_rational(beta)
        if not 0 < a <= b:
            raise InvalidInput(f"need 0 < alpha <= beta, got alpha={a}, beta={b}")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)


def beta_bound(alpha) -> Fraction:
    """Upper end ``8 / (alpha (4 - alpha))`` of the admissible segment."""
    alpha = as_rational(alpha)
    if alpha >= 4:
        raise InvalidInput("bound undefined for alpha >= 4; no upper constraint is needed there")
    if alpha <= 0:
        raise InvalidInput("alpha must be positive")
    return 8 / (alpha * (4 - alpha))


def at_least_golden(alpha) -> bool:
    """``alpha >= 1 + sqrt(5)``, decided as ``alpha > 1 and (alpha - 1)**2 >= 5``."""
    alpha = as_rational(alpha)
    return alpha > 1 and (alpha - 1) ** 2 >= 5


def threshold_check(alpha) -> bool:
    """``1 + sqrt(5) <= alpha < 4``."""
    alpha = as_rational(alpha)
    return at_least_golden(alpha) and alpha < 4


def condition_b(spec: IntervalSpec) -> bool:
    if not at_least_golden(spec.alpha):
        return False
    return spec.alpha >= 4 or spec.beta <= beta_bound(spec.alpha)


def lemma_quartic(q2, q3, q4) -> LemmaQuartic:
    return LemmaQuartic(q2, q3, q4)


def extremal_quartic(spec: IntervalSpec) -> LemmaQuartic:
    """``S_{alpha, beta, alpha}``, the pointwise largest quartic over the segment on ``(1, alpha)``."""
    return LemmaQuartic(spec.alpha, spec.beta, spec.alpha)


def reduced_discriminant(spec: IntervalSpec) -> Fraction:
    """Discriminant ``alpha^2 beta - 4 alpha beta + 8`` of ``w^2 - alpha sqrt(beta) w + alpha beta - 2``.

    The quadratic comes from putting ``x = alpha sqrt(beta) y`` into
    ``S_{alpha,beta,alpha}``, which makes it self-reciprocal, and then
    ``w = y + 1/y``.
    """
    a, b = spec.alpha, spec.beta
    return a * a * b - 4 * a * b + 8


NonpositivePoint = Union[Fraction, RootInterval]


def _open_interval_roots(factor, lo: Fraction, hi: Fraction) -> list[RootInterval]:
    """Isolating intervals, strictly inside ``(lo, hi)``, of the roots of ``factor`` there."""
    out = []
    for r in isolate_roots(factor, lo=lo, hi=hi):
        if evaluate(list(map(int, r.poly)), hi) == 0 and r.contains(hi):
            continue
        # shrink until the closed interval sits inside (lo, hi)
        while r.lo <= lo or r.hi >= hi:
            r = r.refine(r.width / 2)
        out.append(r)
    return out


def has_nonpositive_point(s, alpha, grid: int = 16) -> Optional[NonpositivePoint]:
    """A point ``x0`` in the open interval ``(1, alpha)`` with ``s(x0) <= 0``, or None.

    The answer is exact.  A rational witness is returned whenever one
    exists.  When ``s`` only touches zero at an irrational double root the
    witness is that root, given as a :class:`RootInterval` of a square-free
    factor of ``s`` lying strictly inside ``(1, alpha)``.
    """
    alpha = as_rational(alpha)
    if alpha <= 1:
        raise InvalidInput("need alpha > 1 for the interval (1, alpha) to be nonempty")
    coeffs = list(s.coeffs) if hasattr(s, "coeffs") else list(s)
    lo, hi = Fraction(1), alpha
    step = (hi - lo) / grid
    for i in range(1, grid):
        x = lo + i * step
        if evaluate(coeffs, x) <= 0:
            return x

    touching = []
    for factor, mult in squarefree_decomposition(coeffs):
        for r in _open_interval_roots(factor, lo, hi):
            if mult % 2 == 0:
                touching.append((factor, r))
                continue
            # sign change: squeeze until an endpoint has s < 0
            while True:
                for x in (r.lo, r.hi):
                    if evaluate(coeffs, x) <= 0:
                        return x
                r = r.refine(r.width / 2)
    if touching:
        factor, r = touching[0]
        if len(factor) == 2:
            return Fraction(-int(factor[0]), int(factor[1]))
        return r
    # no roots inside: the sign is constant there and the grid midpoint is positive
    return None


def _point_exists(args) -> bool:
    q2, q3, q4, alpha = args
    return has_nonpositive_point(LemmaQuartic(q2, q3, q4), alpha) is not None


def grid_points(spec: IntervalSpec, resolution: int) -> list[Fraction]:
    """Endpoint-inclusive uniform subdivision of ``[alpha, beta]`` into ``resolution`` points."""
    if resolution < 2:
        raise InvalidInput("grid resolution must be at least 2")
    a, b = spec.alpha, spec.beta
    return [a + (b - a) * Fraction(i, resolution - 1) for i in range(resolution)]


def reduction_answer(spec: IntervalSpec) -> bool:
    """Statement (a) via the proof's reduction to one or two extremal quartics."""
    a = spec.alpha
    if a <= 1:
        return False
    if has_nonpositive_point(LemmaQuartic(a, a, a), a) is None:
        return False
    return has_nonpositive_point(extremal_quartic(spec), a) is not None


def lemma_statement_a(spec: IntervalSpec, grid_resolution: int = 12, workers: int = 1) -> bool:
    """Statement (a) decided two ways: by reduction and by a brute-force grid.

    Returns the grid answer.  Raises :class:`OracleDisagreement` if the two
    routes differ, which can only mean a bug.  The grid is a falsifier, not a
    proof, for the continuum of quartics; the reduction route is the proof.
    """
    alpha = spec.alpha
    pts = grid_points(spec, grid_resolution)
    reduced = reduction_answer(spec)
    if alpha <= 1:
        direct = False
    else:
        cells = [(q2, q3, q4, alpha) for q2, q3, q4 in itertools.product(pts, repeat=3)]
        # extremal corners first so failing segments stop early
        cells.sort(key=lambda c: (c[0] != alpha, c[1] != spec.beta, c[2] != alpha))
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                direct = all(pool.map(_point_exists, cells, chunksize=64))
        else:
            direct = all(_point_exists(c) for c in cells)
    if reduced != direct:
        raise OracleDisagreement(
            f"reduction says {reduced}, grid says {direct} for [{spec.alpha}, {spec.beta}]")
    return direct
