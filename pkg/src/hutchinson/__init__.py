"""Exact real-rootedness certificates from second coefficient quotients."""

from .criteria import (CriterionReport, certify, find_alpha, hutchinson_check, interval_check,
                       theorem_c_check)
from .errors import (HutchinsonError, HypothesisViolation, InvalidInput, NonMonotoneThreshold,
                     OracleDisagreement, WitnessSearchExhausted)
from .lemma import (IntervalSpec, LemmaQuartic, beta_bound, condition_b, extremal_quartic,
                    has_nonpositive_point, lemma_statement_a, reduced_discriminant, threshold_check)
from .poly import (Polynomial, QuotientSequence, SignedPolynomial, alternate, evaluate, from_quotients,
                   normalize, quotients, section)
from .sturm import all_negative_and_simple, count_real_roots, is_hyperbolic, isolate_roots

__version__ = "0.1.0"
