"""Exact positive-coefficient polynomials and their second quotients.

Coefficients are stored lowest degree first as :class:`fractions.Fraction`.
The second quotient of index ``k`` is ``a[k-1]**2 / (a[k-2] * a[k])``; a
polynomial with ``a0 = a1 = 1`` is determined by its quotient sequence.
"""

from __future__ import annotations

import json
import numbers
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidInput

RationalLike = Union[int, Fraction, str, Decimal]


def as_rational(value) -> Fraction:
    """Convert ``value`` to a Fraction without ever passing through a binary float.

    Accepts ints, Fractions, Decimals and strings such as ``"7/2"``, ``"3.25"``
    or ``"1e-4"``.  Floats are refused because their binary expansion is
    rarely the number the caller meant.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"cannot parse rational {value!r}") from exc
    if isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    raise InvalidInput(f"refusing to convert {type(value).__name__} {value!r} to an exact rational")


def format_rational(x: Fraction) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(x)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with strictly positive rational coefficients ``a0..an``, n >= 1.

    ``shift`` records a power of x that was factored out (see :func:`section`);
    it is metadata and does not take part in equality.
    """

    coeffs: tuple[Fraction, ...]
    shift: int = field(default=0, compare=False)

    def __init__(self, coeffs: Iterable[RationalLike], shift: int = 0):
        cs = tuple(as_rational(c) for c in coeffs)
        if len(cs) < 2:
            raise InvalidInput("a polynomial needs degree >= 1 (at least two coefficients)")
        for k, c in enumerate(cs):
            if c <= 0:
                raise InvalidInput(f"coefficient a{k} = {c} is not positive")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "shift", int(shift))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_normalized(self) -> bool:
        return self.coeffs[0] == 1 and self.coeffs[1] == 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(len(self), len(other))
        a = self.coeffs + (Fraction(0),) * (n - len(self))
        b = other.coeffs + (Fraction(0),) * (n - len(other))
        return Polynomial(x + y for x, y in zip(a, b))

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, doc) -> "Polynomial":
        if isinstance(doc, (str, bytes)):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise InvalidInput(f"malformed polynomial JSON: {exc}") from exc
        if not isinstance(doc, dict) or not isinstance(doc.get("coeffs"), list):
            raise InvalidInput('polynomial JSON must be an object with a "coeffs" list')
        for c in doc["coeffs"]:
            if not isinstance(c, (str, int)) or isinstance(c, bool):
                raise InvalidInput(f"coefficient {c!r} must be a string 'p/q', a decimal string, or an integer")
        return cls(doc["coeffs"])


@dataclass(frozen=True)
class SignedPolynomial:
    """Polynomial whose coefficient of x**k has sign (-1)**k."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(as_rational(c) for c in coeffs)
        if len(cs) < 2:
            raise InvalidInput("a polynomial needs degree >= 1")
        for k, c in enumerate(cs):
            if c == 0 or (c > 0) != (k % 2 == 0):
                raise InvalidInput(f"coefficient {k} = {c} breaks the alternating sign pattern")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def magnitudes(self) -> Polynomial:
        return Polynomial(abs(c) for c in self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}


@dataclass(frozen=True)
class QuotientSequence:
    """Second quotients ``q2..qn``; ``values[0]`` is q2."""

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[RationalLike]):
        vs = tuple(as_rational(v) for v in values)
        if not vs:
            raise InvalidInput("quotient sequence is empty")
        for i, v in enumerate(vs):
            if v <= 0:
                raise InvalidInput(f"q{i + 2} = {v} is not positive")
        object.__setattr__(self, "values", vs)

    @property
    def degree(self) -> int:
        """Degree of any polynomial having this quotient sequence."""
        return len(self.values) + 1

    def q(self, k: int) -> Fraction:
        """The quotient with 1-based coefficient index ``k`` (2 <= k <= degree)."""
        if not 2 <= k <= self.degree:
            raise IndexError(f"quotient index {k} outside 2..{self.degree}")
        return self.values[k - 2]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def minimum(self) -> Fraction:
        return min(self.values)

    def maximum(self) -> Fraction:
        return max(self.values)


def as_quotients(q) -> QuotientSequence:
    return q if isinstance(q, QuotientSequence) else QuotientSequence(q)


def quotients(p: Polynomial) -> QuotientSequence:
    """Second quotients ``a[k-1]**2 / (a[k-2] a[k])`` for k = 2..n."""
    a = p.coeffs
    if len(a) < 3:
        raise InvalidInput("no quotients defined for degree < 2")
    return QuotientSequence(a[k - 1] ** 2 / (a[k - 2] * a[k]) for k in range(2, len(a)))


def normalize(p: Polynomial) -> Polynomial:
    """Rescale to ``a0 = a1 = 1`` via ``x -> (a0/a1) x`` and division by a0.

    Zeros are scaled by a positive factor, so real-rootedness and all second
    quotients are preserved.
    """
    a0, a1 = p.coeffs[0], p.coeffs[1]
    t = a0 / a1
    out = []
    power = Fraction(1)
    for c in p.coeffs:
        out.append(c * power / a0)
        power *= t
    return Polynomial(out)


def from_quotients(q, a0: RationalLike = 1, a1: RationalLike = 1) -> Polynomial:
    """Rebuild coefficients from quotients and the first two coefficients.

    Uses the recurrence ``a[k] = a[k-1]**2 / (a[k-2] q[k])`` which unrolls to
    ``a[n] = a1 (a1/a0)**(n-1) / (q2**(n-1) q3**(n-2) ... qn)``.
    """
    q = as_quotients(q)
    a0, a1 = as_rational(a0), as_rational(a1)
    if a0 <= 0 or a1 <= 0:
        raise InvalidInput("a0 and a1 must be positive")
    a = [a0, a1]
    for qk in q:
        a.append(a[-1] * a[-1] / (a[-2] * qk))
    return Polynomial(a)


def alternate(p: Polynomial) -> SignedPolynomial:
    """``Q(x) = T(-x)`` for a normalized ``T``; roots of Q are the negated roots of T."""
    if not p.is_normalized():
        raise InvalidInput("alternate() expects a normalized polynomial (a0 = a1 = 1)")
    return SignedPolynomial(c if k % 2 == 0 else -c for k, c in enumerate(p.coeffs))


def section(p: Polynomial, m: int, n: int) -> Polynomial:
    """Consecutive-term section ``sum_{k=m}^{n} a_k x^k`` with ``x**m`` factored out.

    The removed power is kept in ``.shift`` of the result.
    """
    if not 0 <= m < n <= p.degree:
        raise InvalidInput(f"section needs 0 <= m < n <= {p.degree}, got m={m}, n={n}")
    return Polynomial(p.coeffs[m:n + 1], shift=m)


def evaluate(p: Union[Polynomial, SignedPolynomial, Sequence], x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    coeffs = p.coeffs if hasattr(p, "coeffs") else p
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def load_polynomial(text: str) -> Polynomial:
    return Polynomial.from_json(text)


def dump_polynomial(p: Polynomial, **kwargs) -> str:
    return json.dumps(p.to_json(), **kwargs)
