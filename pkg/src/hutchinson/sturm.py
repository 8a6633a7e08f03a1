"""Sturm-sequence real-root counting over exact rationals.

Polynomials are converted to primitive integer coefficient lists (lowest
degree first).  The chain is built with the subresultant pseudo-remainder
sequence, which needs only exact integer division and no content gcds; the
sign of every element is then fixed up so that each one is a positive
multiple of the classical negated remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Optional, Sequence

import gmpy2
from gmpy2 import mpz

from .errors import InvalidInput
from .poly import as_rational

IntPoly = list  # list[int], lowest degree first, no trailing zeros


def _strip(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _coeffs(p) -> list:
    return list(p.coeffs) if hasattr(p, "coeffs") else list(p)


def to_integer_poly(p) -> IntPoly:
    """Primitive integer polynomial with the same roots and the same sign pattern."""
    cs = [as_rational(c) for c in _coeffs(p)]
    den = reduce(lcm, (c.denominator for c in cs), 1)
    ints = _strip([mpz(c.numerator) * (den // c.denominator) for c in cs])
    if not ints:
        raise InvalidInput("the zero polynomial has no finite root count")
    return primitive(ints)


def primitive(a: IntPoly) -> IntPoly:
    c = reduce(gmpy2.gcd, a, mpz(0))
    if c > 1:
        return [gmpy2.divexact(x, c) for x in a]
    return [mpz(x) for x in a]


def derivative(a: IntPoly) -> IntPoly:
    return _strip([k * a[k] for k in range(1, len(a))])


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: ``lc(b)**(deg a - deg b + 1) * a mod b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    for i in range(len(a) - len(b) + 1):
        top_index = len(a) - 1 - i
        top = r[top_index]
        r = [lb * x for x in r]
        if top:
            off = top_index - db
            for k, bk in enumerate(b):
                r[off + k] -= top * bk
    r = r[:db] if db > 0 else []
    return _strip(r)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _subresultant_chain(a: IntPoly, b: IntPoly) -> list[IntPoly]:
    """Sturm-signed remainder chain starting ``a, b`` (deg a > deg b).

    Each element after the first two is a positive multiple of
    ``-rem(previous-previous, previous)``.
    """
    chain = [a, b]
    signs = [1, 1]
    s_prev, s_cur = a, b
    g, h = mpz(1), mpz(1)
    while True:
        delta = len(s_prev) - len(s_cur)
        r = prem(s_prev, s_cur)
        if not r:
            break
        lc_cur = s_cur[-1]
        divisor = g * h ** delta
        nxt = [gmpy2.divexact(x, divisor) for x in r]
        # s_next = lc_cur**(delta+1) / divisor * rem(s_prev, s_cur)
        c_sign = _sign(lc_cur) ** (delta + 1) * _sign(divisor)
        sigma = -c_sign * signs[-2]
        signs.append(sigma)
        chain.append(nxt if sigma > 0 else [-x for x in nxt])
        s_prev, s_cur = s_cur, nxt
        g = s_prev[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = gmpy2.divexact(g ** delta, h ** (delta - 1))
        if len(nxt) == 1:
            break
    return chain


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        g = primitive(a)
    elif len(b) == 1:
        return [1]
    else:
        g = primitive(_subresultant_chain(a, b)[-1])
    return g if g[-1] > 0 else [-x for x in g]


def exact_divide(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient of ``a`` by a divisor ``b`` over Q, returned primitive and sign-preserving."""
    return to_integer_poly(_div_q(a, b))


def _sign_at(a: IntPoly, x: Optional[Fraction], at_plus: bool = True) -> int:
    """Sign of ``a(x)``; ``x=None`` means +inf if ``at_plus`` else -inf."""
    if x is None:
        s = _sign(a[-1])
        if not at_plus and (len(a) - 1) % 2 == 1:
            s = -s
        return s
    p, q = x.numerator, x.denominator
    d = len(a) - 1
    acc = a[-1]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + a[i] * qpow
    return _sign(acc)


def _variations(signs) -> int:
    last = 0
    v = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


@dataclass(frozen=True)
class SturmChain:
    """Sturm chain of the square-free part of a polynomial.

    ``count(lo, hi)`` is the number of distinct real roots in ``(lo, hi]``;
    ``None`` endpoints stand for -inf / +inf.
    """

    chain: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, p) -> "SturmChain":
        a = to_integer_poly(p)
        if len(a) == 1:
            return cls(((a[0],),))
        ch = _subresultant_chain(a, derivative(a))
        if len(ch[-1]) > 1:
            # repeated roots: rebuild on the square-free part
            sq = exact_divide(a, primitive(ch[-1]))
            ch = _subresultant_chain(sq, derivative(sq)) if len(sq) > 1 else [sq]
        return cls(tuple(tuple(c) for c in ch))

    @property
    def squarefree(self) -> IntPoly:
        return list(self.chain[0])

    def variations(self, x: Optional[Fraction], at_plus: bool = True) -> int:
        return _variations(_sign_at(list(c), x, at_plus) for c in self.chain)

    def count(self, lo=None, hi=None) -> int:
        lo = None if lo is None else as_rational(lo)
        hi = None if hi is None else as_rational(hi)
        if lo is not None and hi is not None and lo >= hi:
            raise InvalidInput(f"empty interval ({lo}, {hi}]")
        return self.variations(lo, at_plus=False) - self.variations(hi, at_plus=True)


def _extended(x):
    if x is None:
        return None
    if isinstance(x, float) and x in (float("inf"), float("-inf")):
        return None
    return as_rational(x)


def count_real_roots(p, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``lo``/``hi`` may be ``None`` or ``float('-inf')``/``float('inf')`` for
    unbounded ends; finite ends must be exact rationals.
    """
    return SturmChain.of(p).count(_extended(lo), _extended(hi))


def squarefree_decomposition(p) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: ``[(f_i, i), ...]`` with ``p ~ prod f_i**i``, each f_i square-free.

    Divisions are carried out over Q with a common divisor at each step so
    the recurrence stays consistently scaled; factors are returned primitive.
    """
    f = to_integer_poly(p)
    if len(f) == 1:
        return []
    df = derivative(f)
    g = poly_gcd(f, df)
    b = _div_q(f, g)
    c = _div_q(df, g)
    d = _sub(c, _deriv_q(b))
    out = []
    i = 1
    while len(b) > 1:
        a = poly_gcd(to_integer_poly(b), to_integer_poly(d)) if any(d) else to_integer_poly(b)
        if len(a) > 1:
            out.append((a, i))
        b = _div_q(b, a)
        c = _div_q(d, a) if any(d) else [Fraction(0)]
        d = _sub(c, _deriv_q(b))
        i += 1
    return out


def _div_q(a, b) -> list:
    """Exact quotient ``a / b`` over Q (``b`` must divide ``a``)."""
    r = [x if isinstance(x, Fraction) else Fraction(int(x)) for x in a]
    b = [int(x) for x in b]
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lb = b[-1]
    for i in range(len(q) - 1, -1, -1):
        coef = r[i + len(b) - 1] / lb
        q[i] = coef
        if coef:
            for k, bk in enumerate(b):
                r[i + k] -= coef * bk
    if any(r):
        raise InvalidInput("polynomial division is not exact")
    return q


def _deriv_q(a) -> list:
    return [k * (a[k] if isinstance(a[k], Fraction) else Fraction(int(a[k]))) for k in range(1, len(a))] \
        or [Fraction(0)]


def _sub(a, b) -> list:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    out = [Fraction(x) - Fraction(y) for x, y in zip(a, b)]  # inputs are Fraction or int
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def balanced(p) -> list:
    """Rescale ``x -> c x`` (``c > 0``) so coefficient sizes peak near the middle.

    Root signs and counts over (-inf, 0), {0}, (0, inf) are unchanged while
    the integer coefficient sizes of theta-like sequences shrink roughly
    fourfold, which is what makes high-degree Sturm chains affordable.
    """
    cs = [as_rational(c) for c in _coeffs(p)]
    m = len(cs) // 2
    if len(cs) < 4 or not cs[m] or not cs[m - 1]:
        return cs
    c = abs(cs[m - 1] / cs[m])
    out, power = [], Fraction(1)
    for x in cs:
        out.append(x * power)
        power *= c
    return out


def real_root_count_with_multiplicity(p) -> int:
    a = to_integer_poly(balanced(p))
    if len(a) == 1:
        return 0
    ch = _subresultant_chain(a, derivative(a))
    if len(ch[-1]) == 1:
        chain = SturmChain(tuple(tuple(c) for c in ch))
        return chain.count()
    return sum(i * SturmChain.of(f).count() for f, i in squarefree_decomposition(a))


def is_hyperbolic(p) -> bool:
    """True iff every zero of ``p`` is real (counted with multiplicity)."""
    a = to_integer_poly(balanced(p))
    if len(a) < 2:
        raise InvalidInput("is_hyperbolic needs degree >= 1")
    return real_root_count_with_multiplicity(a) == len(a) - 1


def is_squarefree(p) -> bool:
    a = to_integer_poly(p)
    return len(a) < 3 or len(poly_gcd(a, derivative(a))) == 1


def root_bound(a: IntPoly) -> Fraction:
    """Power of two strictly exceeding every root modulus (Cauchy bound)."""
    lead = abs(a[-1])
    m = max((abs(x) for x in a[:-1]), default=0)
    bound = 1 + Fraction(m, lead)
    b = 1
    while b <= bound:
        b *= 2
    return Fraction(b)


@dataclass(frozen=True)
class RootInterval:
    """Half-open ``(lo, hi]`` containing exactly one root of ``poly``."""

    poly: tuple[int, ...]
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def refine(self, width) -> "RootInterval":
        width = as_rational(width)
        chain = SturmChain.of(list(self.poly))
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            mid = (lo + hi) / 2
            if chain.count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        return RootInterval(self.poly, lo, hi)

    def contains(self, x) -> bool:
        return self.lo < as_rational(x) <= self.hi


def isolate_roots(p, width=None, lo=None, hi=None) -> list[RootInterval]:
    """Disjoint intervals ``(lo, hi]``, one per distinct real root, in increasing order.

    ``p`` must be square-free.  Optional ``lo``/``hi`` restrict the search to
    ``(lo, hi]``.  With ``width`` every interval is refined to at most that width.
    """
    a = to_integer_poly(p)
    if len(a) < 2:
        return []
    if not is_squarefree(a):
        raise InvalidInput("isolate_roots expects a square-free polynomial")
    chain = SturmChain(tuple(tuple(c) for c in _subresultant_chain(a, derivative(a)))) if len(a) > 2 \
        else SturmChain((tuple(a), (a[1],)))
    b = root_bound(a)
    lo = -b if lo is None else max(as_rational(lo), -b)
    hi = b if hi is None else min(as_rational(hi), b)
    if lo >= hi:
        return []
    out = []
    stack = [(lo, hi, chain.count(lo, hi))]
    while stack:
        l, h, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(RootInterval(tuple(a), l, h))
            continue
        mid = (l + h) / 2
        left = chain.count(l, mid)
        stack.append((mid, h, n - left))
        stack.append((l, mid, left))
    out.sort(key=lambda r: r.lo)
    if width is not None:
        out = [r.refine(width) for r in out]
    return out


def all_negative_and_simple(p) -> bool:
    """True iff ``p`` is square-free, hyperbolic and all its roots are < 0."""
    a = to_integer_poly(balanced(p))
    if len(a) < 2:
        raise InvalidInput("degree >= 1 required")
    if not is_squarefree(a):
        return False
    chain = SturmChain.of(a)
    if chain.count() != len(a) - 1:
        return False
    return a[0] != 0 and chain.count(Fraction(0), None) == 0
