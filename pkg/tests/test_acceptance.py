"""Acceptance suite: one test per numbered criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
The one frozen value, the first failing degree for q = 16/5, is derived by
hand next to its constant.
"""

import json
import random
import time
from fractions import Fraction as F

import pytest

from hutchinson.cli import main
from hutchinson.criteria import interval_check
from hutchinson.explorer import SweepConfig, sweep
from hutchinson.lemma import (IntervalSpec, beta_bound, condition_b, extremal_quartic, has_nonpositive_point,
                              lemma_statement_a, reduced_discriminant)
from hutchinson.poly import Polynomial, alternate, from_quotients, quotients, section
from hutchinson.special import alternating_quotients, first_failing_degree, theta_section, theta_threshold
from hutchinson.sturm import all_negative_and_simple, count_real_roots, is_hyperbolic
from hutchinson.witness import SignAlternationCertificate, build_witness, verify_certificate

# first degree at which the constant-16/5 sequence stops being real-rooted; degree 2 already
# needs q >= 4 (discriminant 1 - 4/q of 1 + x + x^2/q), so the answer is 2
SHARPNESS_FIRST_FAILING_DEGREE = 2
LADDER_DEGREES = (4, 8, 16, 32, 60)


def random_rational(rng, lo, hi, den):
    return F(lo) + (F(hi) - F(lo)) * F(rng.randint(0, den), den)


def test_criterion_01_roundtrip(record_criterion):
    rng = random.Random(1)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        n = rng.randint(2, 50)
        q = [F(rng.randint(1, 400), rng.randint(1, 100)) for _ in range(n - 1)]
        t = from_quotients(q)
        if not (t.is_normalized() and list(quotients(t)) == q and from_quotients(quotients(t)) == t):
            failures += 1
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 60
    record_criterion(1, "roundtrip exactness", ok, f"{failures} failures, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 60


def test_criterion_02_boundary_algebra(record_criterion):
    alpha = F(7, 2)
    eps = F(1, 10 ** 9)
    checks = {
        "beta_bound": beta_bound(alpha) == F(32, 7),
        "discriminant": reduced_discriminant(IntervalSpec(alpha, F(32, 7))) == 0,
        "at_bound": condition_b(IntervalSpec(alpha, F(32, 7))),
        "past_bound": not condition_b(IntervalSpec(alpha, F(32, 7) + eps)),
        "inside": condition_b(IntervalSpec(alpha, F(32, 7) - eps)),
        # the discriminant changes sign with the condition
        "disc_sign": reduced_discriminant(IntervalSpec(alpha, F(32, 7) + eps)) < 0,
    }
    ok = all(checks.values())
    record_criterion(2, "boundary algebra", ok, ", ".join(k for k, v in checks.items() if not v))
    assert ok, checks


def test_criterion_03_lemma_equivalence(record_criterion):
    start = time.perf_counter()
    mismatches, positive_failures, cells = [], [], 0
    for alpha in (F(13, 4), F(33, 10), F(7, 2), F(19, 5)):
        bound = beta_bound(alpha)
        for beta in (bound * F(999, 1000), bound, bound * F(1001, 1000)):
            spec = IntervalSpec(alpha, beta)
            a = lemma_statement_a(spec, grid_resolution=12)
            b = condition_b(spec)
            cells += 1
            if a != b:
                mismatches.append((alpha, beta))
            if not b and has_nonpositive_point(extremal_quartic(spec), alpha) is not None:
                positive_failures.append((alpha, beta))
    elapsed = time.perf_counter() - start
    ok = cells == 12 and not mismatches and not positive_failures and elapsed < 600
    record_criterion(3, "lemma equivalence", ok,
                     f"{cells} cells, {len(mismatches)} mismatches, {elapsed:.1f}s")
    assert not mismatches
    assert not positive_failures
    assert elapsed < 600


def test_criterion_04_theorem1_soundness(record_criterion):
    rng = random.Random(4)
    alpha, beta = F(7, 2), F(32, 7)
    start = time.perf_counter()
    failures = []
    for i in range(500):
        n = rng.randint(4, 12)
        q = [random_rational(rng, alpha, beta, 1000) for _ in range(n - 1)]
        p = from_quotients(q)
        Q = alternate(p)
        try:
            cert = build_witness(Q, q, alpha)
            ok = interval_check(q, alpha) and verify_certificate(Q, cert).ok and is_hyperbolic(p)
        except Exception:  # any failure counts against the criterion
            ok = False
        if not ok:
            failures.append(q)
    elapsed = time.perf_counter() - start
    passed = not failures and elapsed < 600
    record_criterion(4, "interval criterion soundness", passed, f"{len(failures)}/500 failed, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 600


def test_criterion_05_hutchinson_reproduction(record_criterion):
    bad = []
    sections = 0
    for n in range(4, 31):
        p = theta_section(4, n)
        if not all_negative_and_simple(p):
            bad.append((n, "whole"))
        for m in range(n):
            for top in range(m + 1, n + 1):
                s = section(p, m, top)
                sections += 1
                if not is_hyperbolic(s) or count_real_roots(s, 0, None) != 0:
                    bad.append((n, m, top))
    ok = not bad
    record_criterion(5, "Hutchinson reproduction", ok, f"{sections} sections, {len(bad)} failures")
    assert not bad


def test_criterion_06_sharpness(record_criterion):
    first = first_failing_degree(lambda d: theta_section(F(16, 5), d), range(2, 41))
    ok = first is not None and first <= 40 and first == SHARPNESS_FIRST_FAILING_DEGREE
    # degree-4 onwards also fails immediately, since 16/5 < 1 + sqrt(5)
    first_from_4 = first_failing_degree(lambda d: theta_section(F(16, 5), d), range(4, 41))
    record_criterion(6, "sharpness (q = 16/5)", ok, f"first failing degree {first}; from degree 4: {first_from_4}")
    assert first is not None and first <= 40
    assert first == SHARPNESS_FIRST_FAILING_DEGREE


@pytest.fixture(scope="module")
def ladder():
    start = time.perf_counter()
    values = {d: theta_threshold(d, F(1, 10000)) for d in LADDER_DEGREES}
    return values, time.perf_counter() - start


@pytest.mark.slow
def test_criterion_07a_threshold_ladder_nondecreasing(ladder, record_criterion):
    values, elapsed = ladder
    seq = [values[d] for d in LADDER_DEGREES]
    ok = all(a <= b for a, b in zip(seq, seq[1:]))
    detail = ", ".join(f"{d}: {float(v):.6f}" for d, v in values.items())
    record_criterion("7a", "threshold ladder nondecreasing", ok, detail)
    assert ok, f"ladder is not nondecreasing: {detail}"


@pytest.mark.slow
def test_criterion_07b_degree_sixty_threshold(ladder, record_criterion):
    values, elapsed = ladder
    t60 = values[60]
    ok = F(320, 100) < t60 < F(330, 100) and abs(t60 - F("3.23363666")) < F(5, 100) and elapsed < 1800
    record_criterion("7b", "degree-60 threshold near q_inf", ok, f"{float(t60):.6f}, ladder {elapsed:.0f}s")
    assert F(320, 100) < t60 < F(330, 100)
    assert abs(t60 - F("3.23363666")) < F(5, 100)
    assert elapsed < 1800


def _mutate_swap(cert, rng):
    pts = list(cert.points)
    j = rng.randrange(len(pts) - 1)
    pts[j], pts[j + 1] = pts[j + 1], pts[j]
    return SignAlternationCertificate(tuple(pts), cert.windows)


def _mutate_escape(cert, rng):
    # move x_j onto the lower edge of its window; order is kept, window membership is lost
    pts = list(cert.points)
    j = rng.randrange(len(pts))
    pts[j] = cert.windows[j][0]
    return SignAlternationCertificate(tuple(pts), cert.windows)


def _mutate_sign(cert, Q, rng):
    # x_j := x_{j-1} + eps with eps small enough that Q has the wrong sign there
    pts = list(cert.points)
    j = rng.randrange(len(pts))
    prev = pts[j - 1] if j > 0 else F(0)
    sign = 1 if j % 2 == 0 else -1  # required: sign * Q(x_j) < 0 for 0-based j
    eps = (pts[j] - prev) / 2
    while sign * Q(prev + eps) < 0:
        eps /= 2
    pts[j] = prev + eps
    return SignAlternationCertificate(tuple(pts), cert.windows)


def test_criterion_08_certificate_fuzzing(record_criterion):
    rng = random.Random(8)
    accepted_original, rejected, total_mutants, sign_only_rejects = 0, 0, 0, 0
    for _ in range(200):
        n = rng.randint(4, 12)
        alpha = random_rational(rng, F(3237, 1000), F(399, 100), 1000)
        q = [random_rational(rng, alpha, beta_bound(alpha), 1000) for _ in range(n - 1)]
        Q = alternate(from_quotients(q))
        cert = build_witness(Q, q, alpha)
        accepted_original += verify_certificate(Q, cert, "strict").ok
        sign_mutant = _mutate_sign(cert, Q, rng)
        for mutant in (_mutate_swap(cert, rng), _mutate_escape(cert, rng), sign_mutant):
            total_mutants += 1
            rejected += not verify_certificate(Q, mutant, "strict").ok
        sign_only_rejects += not verify_certificate(Q, sign_mutant, "signs-only").ok
    ok = accepted_original == 200 and rejected == total_mutants and sign_only_rejects == 200
    record_criterion(8, "certificate fuzzing", ok,
                     f"{accepted_original}/200 originals accepted, {rejected}/{total_mutants} mutants rejected")
    assert accepted_original == 200
    assert rejected == total_mutants
    assert sign_only_rejects == 200


def test_criterion_09_explorer_containment(record_criterion):
    config = SweepConfig(
        alpha_grid=["16/5", "13/4", "33/10", "7/2", "19/5", "4"],
        beta_grid=["33/10", "7/2", "4", "32/7", "5", "6"],
        degrees=[6, 10],
        samples_per_cell=50,
        sampler="uniform_random",
        seed=2024,
    )
    first = sweep(config)
    second = sweep(config)
    inside = [r for r in first.rows if r.inside_theorem1_region]
    leaks = [r for r in inside if r.n_hyperbolic != r.n_samples]
    identical = first.to_csv().encode() == second.to_csv().encode()
    ok = bool(inside) and not leaks and identical
    record_criterion(9, "explorer containment", ok,
                     f"{len(first.rows)} rows, {len(inside)} inside, {len(leaks)} leaks, identical={identical}")
    assert inside
    assert not leaks
    assert identical


def test_criterion_10_cli_contract(tmp_path, capsys, record_criterion):
    def poly_file(name, p):
        path = tmp_path / name
        path.write_text(json.dumps(p.to_json()))
        return str(path)

    matrix = {
        "certified (q = 4)": (["certify", poly_file("h.json", theta_section(4, 6))], 0),
        "malformed JSON": (["certify", str(tmp_path / "junk.json")], 2),
        "degree 3 witness": (["witness", poly_file("c.json", theta_section(4, 3))], 2),
        "budget exhausted": (["witness", poly_file("x.json", from_quotients(
            alternating_quotients(F(7, 2), F(32, 7), 4))), "--budget", "40"], 3),
        "inconclusive": (["certify", poly_file("s.json", theta_section(F(16, 5), 6))], 10),
        "oracle non-hyperbolic": (["certify", str(tmp_path / "s.json"), "--oracle"], 11),
    }
    (tmp_path / "junk.json").write_text("{coeffs: oops")
    outcomes = {}
    for name, (argv, expected) in matrix.items():
        outcomes[name] = (main(argv), expected)

    # pipeline on q = 7/2, degree 6
    pipe = []
    gen_out = tmp_path / "p.json"
    pipe.append(main(["gen", "--q", ",".join(["7/2"] * 5), "--out", str(gen_out)]))
    pipe.append(main(["certify", str(gen_out)]))
    cert_out = tmp_path / "cert.json"
    pipe.append(main(["witness", str(gen_out), "--out", str(cert_out)]))
    pipe.append(main(["witness", str(gen_out), "--verify", str(cert_out)]))
    capsys.readouterr()
    degree_ok = Polynomial.from_json(gen_out.read_text()).degree == 6

    bad = {k: v for k, v in outcomes.items() if v[0] != v[1]}
    ok = not bad and pipe == [0, 0, 0, 0] and degree_ok
    record_criterion(10, "CLI contract", ok, f"matrix mismatches {bad or 'none'}, pipeline {pipe}")
    assert not bad
    assert pipe == [0, 0, 0, 0]
    assert degree_ok
