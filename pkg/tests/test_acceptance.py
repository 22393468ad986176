"""Acceptance criteria, one test each; every test records a PASS/FAIL line.

Tolerances are exact: all comparisons are integer or rational equalities
and inequalities. The only float is wall time, with limits pinned below.

Run ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""
import random
import subprocess
import sys
import time
from fractions import Fraction

from quadsub.bounds import (asymptotic_report, bound_B, bound_C, bound_C0, envelope,
                            format_report)
from quadsub.field import GF32003
from quadsub.groebner import Ideal, dimension, height, height_after_killing
from quadsub.instances import random_instance
from quadsub.io import format_problem, parse_document, parse_problem, ProblemFile
from quadsub.pipeline import run_pipeline
from quadsub.poly import Polynomial
from quadsub.standard_form import achieve_standard_form, key_lemma_check
from quadsub.subalgebra import pd_bound_check, small_subalgebra, verify_certificate
from conftest import polys
from oracles import capped_member, random_form

SECONDS_PER_INSTANCE = 10.0     # criterion 1
BOUNDS_SECONDS = 1.0            # criterion 4
STYLES = ("split", "layered", "pooled", "sparse", "dense")


def _instance(rng, k, N_max, n_max, m_max, n_min=1):
    N = rng.randint(3, N_max)
    return random_instance(rng, N, rng.randint(n_min, n_max), rng.randint(0, m_max),
                           GF32003, style=STYLES[k % len(STYLES)])


def test_criterion_1_certificates(acceptance_report):
    rng = random.Random(20261016)
    failures, worst, cases = [], 0.0, set()
    for k in range(200):
        F = _instance(rng, k, 7, 3, 2)
        t = time.perf_counter()
        cert = small_subalgebra(F, seed=k)
        ver = verify_certificate(F, cert)
        worst = max(worst, time.perf_counter() - t)
        cases.update(cert.cases)
        m, n, h = cert.m, cert.n, cert.h
        B = bound_B(m, n, h)
        ok = ver.ok and cert.b <= B and cert.b + cert.c <= B + h and cert.c <= h
        if h <= n - 1:
            ok = ok and B + h <= bound_C(m + n)
        else:
            # h = n: the forms themselves are the regular sequence
            ok = ok and cert.b + cert.c == m + n
        if not ok:
            failures.append((k, ver.reasons))
    ok = not failures and worst < SECONDS_PER_INSTANCE
    acceptance_report(1, ok, f"200 instances, {len(failures)} failures, worst {worst:.2f}s "
                             f"(limit {SECONDS_PER_INSTANCE}s), cases {sorted(cases)}")
    assert ok, failures[:3]


def test_criterion_2_projective_dimension(acceptance_report):
    rng = random.Random(7)
    bad = []
    for k in range(50):
        F = _instance(rng, k, 6, 3, 2)
        cert = small_subalgebra(F, seed=k)
        chk = pd_bound_check(F, cert, budget=None)
        m, n, h = cert.m, cert.n, cert.h
        ok = chk.pd is not None and chk.pd <= bound_B(0, n, h) + m + h
        ok = ok and (chk.c0 is None or chk.pd <= bound_C0(m + n))
        if h == n:
            ok = ok and chk.pd == m + n
        if not (ok and chk.ok):
            bad.append((k, chk))
    three = []
    for k in range(25):
        N = rng.randint(3, 6)
        F = random_instance(rng, N, 3, 0, GF32003, style=STYLES[k % len(STYLES)])
        chk = pd_bound_check(F, small_subalgebra(F, seed=k), budget=None)
        three.append(chk.pd)
        if chk.pd is None or chk.pd > 4:
            bad.append(("three", k, chk))
    ok = not bad
    acceptance_report(2, ok, f"50 bound checks + 25 three-quadric instances, max pd of the "
                             f"latter {max(p for p in three if p is not None)} (limit 4), "
                             f"{len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_3_key_lemma(acceptance_report):
    rng = random.Random(3)
    bad, hs = [], set()
    for k in range(50):
        F = _instance(rng, k, 6, 3, 2)
        st = achieve_standard_form(F, seed=k)
        rep = key_lemma_check(st)
        hs.add((st.h, st.n))
        if not (rep.ok and rep.P_height == st.n - st.h):
            bad.append((k, rep))
    ok = not bad
    acceptance_report(3, ok, f"50 standard forms, {len(bad)} failures, "
                             f"(h, n) seen {sorted(hs)}")
    assert ok, bad[:3]


def test_criterion_4_bounds(acceptance_report):
    t = time.perf_counter()
    hand = (bound_B(0, 2, 1), bound_C(2), bound_C0(2)) == (30, 31, 31)
    sandwich = all(envelope(m, n, h)[0] <= bound_B(m, n, h) <= envelope(m, n, h)[1]
                   for m in range(7) for n in range(7) for h in range(n + 1))
    exact0 = all(envelope(m, n, 0) == (bound_B(m, n, 0),) * 2 for m in range(7) for n in range(7))
    rows = asymptotic_report(6)
    table = format_report(rows)
    ratios = all(isinstance(r.ratio_C, Fraction) and r.ratio_C == Fraction(r.C, 2 * r.s ** (2 * r.s))
                 for r in rows)
    elapsed = time.perf_counter() - t
    ok = hand and sandwich and exact0 and ratios and len(table.splitlines()) == 7 \
        and elapsed < BOUNDS_SECONDS
    acceptance_report(4, ok, f"hand values {hand}, sandwich {sandwich}, h=0 exact {exact0}, "
                             f"exact ratios {ratios}, {elapsed:.3f}s (limit {BOUNDS_SECONDS}s)")
    assert ok


def test_criterion_5_groebner_oracles(acceptance_report):
    rng = random.Random(55)
    disagree, members, queries = 0, 0, 0
    for k in range(100):
        N = rng.randint(1, 3)
        homogeneous = k % 2 == 0
        gens = []
        for _ in range(rng.randint(1, 3)):
            g = random_form(rng, N, rng.randint(1, 2), GF32003, terms=rng.randint(1, 3))
            if not homogeneous:
                g = g + random_form(rng, N, rng.randint(0, 1), GF32003, terms=1)
            gens.append(g)
        gens = [g for g in gens if g]
        if not gens:
            gens = [Polynomial.variable(0, N, GF32003)]
        I = Ideal(gens)
        if I.is_unit():
            unit_ok = I.contains(Polynomial.constant(1, N, GF32003))
            disagree += not unit_ok
            continue
        for _ in range(3):
            f = random_form(rng, N, rng.randint(0, 4), GF32003, terms=3)
            if rng.random() < 0.5:
                f = sum((random_form(rng, N, max(0, 4 - g.degree()), GF32003, terms=2) * g
                         for g in gens), Polynomial.zero(N, GF32003))
            mine = I.contains(f)
            queries += 1
            members += mine
            disagree += mine != capped_member(f, gens)
    corpus = [
        (Ideal(polys(["x^2", "y"], "x y")), 0),
        (Ideal(polys(["x*y"], "x y")), 1),
        (Ideal([Polynomial.zero(3)]), 3),
        (Ideal([Polynomial.constant(1, 2)]), -1),
    ]
    corpus_ok = all(dimension(I) == d for I, d in corpus)
    ok = disagree == 0 and corpus_ok
    acceptance_report(5, ok, f"100 ideals / {queries} membership queries ({members} members), "
                             f"{disagree} disagreements; dimension corpus {corpus_ok}")
    assert ok


def test_criterion_6_height_under_killing(acceptance_report):
    rng = random.Random(66)
    bad, done = [], 0
    while done < 100:
        N = rng.randint(2, 6)
        gens = [g for g in (random_form(rng, N, rng.randint(1, 2), GF32003,
                                        terms=rng.randint(1, 4))
                            for _ in range(rng.randint(1, 4))) if g]
        kill = rng.sample(range(N), rng.randint(1, N - 1))
        if not gens:
            continue
        I = Ideal(gens)
        # homogeneous generators of positive degree: the image is always proper
        if height_after_killing(I, kill) > height(I):
            bad.append((gens, kill))
        done += 1
    ok = not bad
    acceptance_report(6, ok, f"100 ideals, {len(bad)} height increases")
    assert ok


PROBLEMS = [
    "field 32003\nvars x1 x2 x3 y\nseed 42\nform x1^2 + 2*x2*y\nform x1*x3 - y^2\n",
    "field Q\nvars x v a b c\nform a^2 + b^2 + c^2 + x*v\nform x*v\nform x + 1\n",
    "vars x y z\nform 1/2*x^2 - y*z + x\nform x*y\nverify-level 3\n",
]


def test_criterion_7_determinism_and_round_trip(acceptance_report):
    rng = random.Random(77)
    texts = list(PROBLEMS)
    names = ["p", "q", "r", "s", "t1", "u"]
    for k in range(7):
        F = _instance(rng, k, 6, 3, 2)
        prob = ProblemFile(GF32003, tuple(names[:F[0].nvars]), tuple(F), seed=k)
        texts.append(format_problem(prob))
    same, round_trip, problem_rt = True, True, True
    for text in texts:
        p = parse_problem(text)
        problem_rt &= parse_problem(format_problem(p)) == p
        a, b = run_pipeline(p), run_pipeline(p)
        same &= a.to_text() == b.to_text() and a.to_json() == b.to_json()
        again = parse_document(a.to_text())
        round_trip &= again == a and again.to_text() == a.to_text()
    # a fresh interpreter produces the same bytes
    proc = subprocess.run([sys.executable, "-m", "quadsub", "--input", "-"], input=texts[0],
                          capture_output=True, text=True)
    fresh = proc.returncode == 0 and proc.stdout == run_pipeline(parse_problem(texts[0])).to_text()
    ok = same and round_trip and problem_rt and fresh
    acceptance_report(7, ok, f"{len(texts)} problems: byte-identical reruns {same}, "
                             f"document round trip {round_trip}, problem round trip {problem_rt}, "
                             f"fresh process {fresh}")
    assert ok
