"""Sign-alternation certificates for the interval criterion.

For a normalized ``T`` and ``Q(x) = T(-x)`` the windows
``(q2...qj, q2...qj q_{j+1})``, j = 1..n-1, are disjoint and increasing.  If
each window holds a rational ``x_j`` with ``(-1)**(j-1) Q(x_j) < 0`` then
``Q`` changes sign n times on ``[0, inf)``, so it has n positive zeros and
``T`` is real-rooted.  A certificate is just those points; checking it takes
n exact polynomial evaluations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .criteria import interval_check
from .errors import HypothesisViolation, InvalidInput, WitnessSearchExhausted
from .lemma import LemmaQuartic, has_nonpositive_point
from .poly import QuotientSequence, SignedPolynomial, as_quotients, as_rational, evaluate, format_rational
from .sturm import RootInterval

DEFAULT_BUDGET = 200


@dataclass(frozen=True)
class WindowDecomposition:
    sigma1: Fraction
    g: Fraction
    sigma2: Fraction
    g_range: tuple[int, int]

    @property
    def total(self) -> Fraction:
        return self.sigma1 + self.g + self.sigma2


@dataclass(frozen=True)
class SignAlternationCertificate:
    points: tuple[Fraction, ...]
    windows: tuple[tuple[Fraction, Fraction], ...]
    mode: str = "strict"

    def to_json(self) -> dict:
        return {
            "points": [format_rational(x) for x in self.points],
            "windows": [[format_rational(a), format_rational(b)] for a, b in self.windows],
            "mode": self.mode,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SignAlternationCertificate":
        try:
            points = tuple(as_rational(x) for x in doc["points"])
            windows = tuple((as_rational(a), as_rational(b)) for a, b in doc["windows"])
            mode = doc.get("mode", "strict")
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"malformed certificate: {exc}") from exc
        if mode not in ("strict", "signs-only"):
            raise InvalidInput(f"unknown certificate mode {mode!r}")
        return cls(points, windows, mode)


@dataclass(frozen=True)
class Verification:
    ok: bool
    failed_index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _quotients_of(Q: SignedPolynomial) -> QuotientSequence:
    a = [abs(c) for c in Q.coeffs]
    return QuotientSequence(a[k - 1] ** 2 / (a[k - 2] * a[k]) for k in range(2, len(a)))


def windows(q) -> list[tuple[Fraction, Fraction]]:
    """``(q2...qj, q2...qj q_{j+1})`` for j = 1..n-1; the empty product is 1."""
    q = as_quotients(q)
    out = []
    lo = Fraction(1)
    for j in range(1, q.degree):
        hi = lo * q.q(j + 1)
        out.append((lo, hi))
        lo = hi
    return out


def _g_range(n: int, j: int) -> tuple[int, int]:
    if j <= n // 2:
        lo, hi = j - 1, j + 3
    else:
        lo, hi = j - 3, j + 1
    return max(lo, 0), min(hi, n)


def decompose(Q: SignedPolynomial, q, j: int, x) -> WindowDecomposition:
    """Split ``(-1)**(j-1) Q(x)`` into head, five-term middle ``g_j`` and tail.

    For ``j <= n // 2`` the middle is terms ``j-1..j+3``, otherwise ``j-3..j+1``
    (clipped to ``0..n``).
    """
    n = Q.degree
    if not 1 <= j <= n - 1:
        raise InvalidInput(f"window index {j} outside 1..{n - 1}")
    x = as_rational(x)
    if x <= 0:
        raise InvalidInput("x must be positive")
    lo, hi = _g_range(n, j)
    sign = 1 if (j - 1) % 2 == 0 else -1
    parts = [Fraction(0), Fraction(0), Fraction(0)]
    power = Fraction(1)
    for k, c in enumerate(Q.coeffs):
        term = sign * c * power
        parts[0 if k < lo else (1 if k <= hi else 2)] += term
        power *= x
    return WindowDecomposition(parts[0], parts[1], parts[2], (lo, hi))


def term_magnitudes(q, x) -> list[Fraction]:
    """``|a_k| x**k`` for the normalized polynomial with quotients ``q``."""
    q = as_quotients(q)
    x = as_rational(x)
    out = [Fraction(1), x]
    for k in range(2, q.degree + 1):
        out.append(out[-1] * out[-1] / (out[-2] * q.q(k)))
    return out


def window_monotonicity(q, j: int, x) -> bool:
    """Term magnitudes rise strictly up to index j and fall strictly after it."""
    q = as_quotients(q)
    x = as_rational(x)
    if not 1 <= j <= q.degree - 1:
        raise InvalidInput(f"window index {j} outside 1..{q.degree - 1}")
    lo, hi = windows(q)[j - 1]
    if not lo < x < hi:
        raise InvalidInput(f"x = {x} is not inside window {j} = ({lo}, {hi})")
    m = term_magnitudes(q, x)
    rising = all(m[k] < m[k + 1] for k in range(j))
    falling = all(m[k] > m[k + 1] for k in range(j, len(m) - 1))
    return rising and falling


def bracket_quartic(q, j: int) -> tuple[LemmaQuartic, bool]:
    """The normalized middle block of window ``j`` as a Lemma quartic in ``y``.

    Returns ``(S, low)``; for the low regime ``x = q2...qj * y`` and for the
    high regime ``x = q2...q_{j+1} / y``, with ``y`` in ``(1, q_{j+1})`` in both.
    When ``q_{j+3}`` is past the end (only n = 4, j = 2) the last parameter is
    repeated, which majorizes the cubic block by a quartic.
    """
    q = as_quotients(q)
    n = q.degree
    if j <= n // 2:
        q4 = q.q(j + 3) if j + 3 <= n else q.q(j + 2)
        return LemmaQuartic(q.q(j + 1), q.q(j + 2), q4), True
    return LemmaQuartic(q.q(j + 1), q.q(j), q.q(j - 1)), False


def _vertex_seed(s: LemmaQuartic) -> Optional[Fraction]:
    """Preimage of the reduced parabola's vertex ``w = a sqrt(b) / 2`` as a rational ``y``."""
    a, b = float(s.q2), float(s.q3)
    scale = a * math.sqrt(b)
    w = scale / 2
    if w <= 2:
        return None
    u = (w - math.sqrt(w * w - 4)) / 2
    return Fraction(scale * u).limit_denominator(10 ** 6)


def _point_of(y) -> Fraction:
    if isinstance(y, RootInterval):
        return (y.lo + y.hi) / 2
    return y


def _search_window(Q: SignedPolynomial, q: QuotientSequence, j: int, alpha: Fraction,
                   budget: int) -> Fraction:
    n = Q.degree
    lo, hi = windows(q)[j - 1]
    sign = 1 if (j - 1) % 2 == 0 else -1
    s, low = bracket_quartic(q, j)
    top = q.q(j + 1)

    def to_x(y: Fraction) -> Fraction:
        return lo * y if low else hi / y

    def f(y: Fraction) -> Fraction:
        return sign * evaluate(Q.coeffs, to_x(y))

    def good(y: Fraction) -> bool:
        return 1 < y < top and f(y) < 0

    seeds = []
    v = _vertex_seed(s)
    if v is not None:
        seeds.append(v)
    lemma_point = has_nonpositive_point(s, alpha)
    if lemma_point is not None:
        seeds.append(_point_of(lemma_point))
    for y in seeds:
        if good(y):
            return to_x(y)

    # coarse grid over (1, top), then golden-section refinement around the best cell
    evals = 0
    grid = 16
    ys = [1 + (top - 1) * Fraction(i, grid) for i in range(1, grid)]
    vals = []
    for y in ys:
        fy = f(y)
        evals += 1
        if fy < 0:
            return to_x(y)
        vals.append(fy)
    best = min(range(len(ys)), key=vals.__getitem__)
    a = ys[best - 1] if best > 0 else Fraction(1)
    b = ys[best + 1] if best + 1 < len(ys) else top
    inv_phi = Fraction(618034, 1000000)
    c = b - (b - a) * inv_phi
    d = a + (b - a) * inv_phi
    fc, fd = f(c), f(d)
    while evals < budget:
        for y, fy in ((c, fc), (d, fd)):
            if fy < 0 and 1 < y < top:
                return to_x(y)
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * inv_phi
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * inv_phi
            fd = f(d)
        evals += 1
        # keep denominators in check
        c = c.limit_denominator(10 ** 12) if c.denominator > 10 ** 15 else c
        d = d.limit_denominator(10 ** 12) if d.denominator > 10 ** 15 else d
    raise WitnessSearchExhausted(f"witness search exhausted in window {j} after {evals} evaluations")


def build_witness(Q: SignedPolynomial, q, alpha, budget: int = DEFAULT_BUDGET) -> SignAlternationCertificate:
    """Find one point per window where ``Q`` has the required sign.

    Requires the interval hypotheses (degree >= 4, admissible ``alpha``, every
    quotient in ``[alpha, beta_bound(alpha)]``).  The returned certificate is
    re-verified exactly before it is handed back.
    """
    q = as_quotients(q)
    alpha = as_rational(alpha)
    if Q.degree != q.degree or _quotients_of(Q) != q:
        raise InvalidInput("quotient sequence does not belong to Q")
    if not Q.coeffs[0] == 1 or not Q.coeffs[1] == -1:
        raise InvalidInput("Q must come from a normalized polynomial (Q(x) = 1 - x + ...)")
    if not interval_check(q, alpha):
        raise HypothesisViolation(f"quotients leave [alpha, 8/(alpha(4-alpha))] for alpha = {alpha}")
    points = tuple(_search_window(Q, q, j, alpha, budget) for j in range(1, Q.degree))
    cert = SignAlternationCertificate(points, tuple(windows(q)))
    check = verify_certificate(Q, cert)
    if not check:
        raise WitnessSearchExhausted(f"internal: built certificate failed verification ({check.reason})")
    return cert


def verify_certificate(Q: SignedPolynomial, cert: SignAlternationCertificate,
                       mode: Optional[str] = None) -> Verification:
    """Re-check a certificate with exact arithmetic.

    ``mode="strict"`` (the default) checks signs and window membership;
    ``"signs-only"`` checks the sign pattern alone, which is already enough to
    prove n real zeros.
    """
    mode = mode or "strict"
    if mode not in ("strict", "signs-only"):
        raise InvalidInput(f"unknown verification mode {mode!r}")
    n = Q.degree
    pts = cert.points
    if len(pts) != n - 1:
        return Verification(False, None, f"expected {n - 1} points, got {len(pts)}")
    if evaluate(Q.coeffs, 0) <= 0:
        return Verification(False, 0, "Q(0) is not positive")
    prev = Fraction(0)
    for j, x in enumerate(pts, start=1):
        if not x > prev:
            return Verification(False, j, f"point {j} is not strictly increasing")
        prev = x
    for j, x in enumerate(pts, start=1):
        val = evaluate(Q.coeffs, x)
        if (val if j % 2 == 0 else -val) <= 0:
            return Verification(False, j, f"(-1)^(j-1) Q(x_j) is not negative at j = {j}")
    lead = Q.coeffs[-1]
    if (lead if n % 2 == 0 else -lead) <= 0:
        return Verification(False, n, "(-1)^n Q(+inf) is not positive")
    if mode == "strict":
        expected = windows(_quotients_of(Q))
        if len(cert.windows) != len(expected):
            return Verification(False, None, "window list has the wrong length")
        for j, (x, w, e) in enumerate(zip(pts, cert.windows, expected), start=1):
            if tuple(w) != e:
                return Verification(False, j, f"window {j} does not match the quotients of Q")
            if not e[0] < x < e[1]:
                return Verification(False, j, f"point {j} lies outside its window")
    return Verification(True)
