"""A checkable proof of real-rootedness.

Under the interval hypotheses, Q(x) = T(-x) changes sign once in each window
(q2...qj, q2...qj q_{j+1}).  Finding one point per window with the right
sign proves n real zeros; a third party re-checks it with n evaluations.
"""
import json
from fractions import Fraction

from hutchinson import alternate, from_quotients
from hutchinson.special import alternating_quotients
from hutchinson.witness import build_witness, verify_certificate

q = alternating_quotients(Fraction(7, 2), Fraction(32, 7), 7)
Q = alternate(from_quotients(q))
cert = build_witness(Q, q, Fraction(7, 2))
print(json.dumps(cert.to_json(), indent=1))
print("verified:", verify_certificate(Q, cert).ok)

# tamper with it: swap two points
pts = list(cert.points)
pts[1], pts[2] = pts[2], pts[1]
bad = type(cert)(tuple(pts), cert.windows)
print("tampered:", verify_certificate(Q, bad))
