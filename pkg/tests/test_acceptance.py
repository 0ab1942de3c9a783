"""Acceptance criteria, one test and one PASS/FAIL line each, all exact."""

import time

import pytest

from affcrystal import (
    Multicharge,
    epsilon_star_vector,
    f_v,
    head_word,
    minimal_multicharge,
    parse_multipartition,
    parse_multisegment,
    reconstruct,
)
from affcrystal.checks import (
    check_commutor,
    check_fock,
    check_involutions,
    check_pipelines,
    check_round_trips,
    check_star_hat,
    commutation_checks,
)
from affcrystal.infinity import word_string

from conftest import WORKED

ES = (2, 3, 4)


@pytest.fixture
def report(capsys):
    def emit(n, title, problems, elapsed, budget=None):
        if budget is not None and elapsed >= budget:
            problems = problems + [f"took {elapsed:.1f}s, budget {budget}s"]
        status = "PASS" if not problems else "FAIL"
        with capsys.disabled():
            print(f"\n[{status}] criterion {n}: {title} ({elapsed:.2f}s)")
            for p in problems:
                print(f"         - {p}")
        assert not problems, "; ".join(problems)
    return emit


def _suite(fn, rank, **kw):
    problems = []
    for e in ES:
        r = fn(e, rank, **kw)
        if not r.passed:
            problems.append(f"e={e} {r.name}: {r.nfail}/{r.checked} failed, e.g. {r.failures[0]}")
    return problems


def test_criterion_01_worked_example(report):
    start = time.perf_counter()
    problems = []
    psi = parse_multisegment(WORKED, 4)
    expected_words = ["RARR", "AAR", "RRAAA", "RRARRA"]
    for i, want in enumerate(expected_words):
        got = word_string(head_word(psi, i))
        if got != want:
            problems.append(f"head word {i}: expected {want}, computed {got}")
    if epsilon_star_vector(psi) != (2, 1, 0, 0):
        problems.append(f"eps* = {epsilon_star_vector(psi)}")
    v = Multicharge(4, (0, 0, 1))
    if minimal_multicharge(psi) != v:
        problems.append(f"minimal charge {minimal_multicharge(psi)}")
    stages = []
    lam = reconstruct(psi, v, stages=stages)
    want_stages = ["6|-|-", "6.5|5|-", "6.5|5|4", "6.5|5.3|4.3.3", "6.5.2|5.3|4.3.3", "6.5.2|5.3.1|4.3.3"]
    if [str(s) for s in stages] != want_stages:
        problems.append(f"stages {[str(s) for s in stages]}")
    if lam != parse_multipartition("6.5.2|5.3.1|4.3.3"):
        problems.append(f"reconstruct gave {lam}")
    if f_v(lam, v) != psi:
        problems.append("f_(0,0,1) round trip")
    report(1, "worked e=4 example: head words, eps*, minimal charge, stages", problems,
           time.perf_counter() - start, budget=1)


def test_criterion_02_fv_examples(report):
    start = time.perf_counter()
    problems = []
    got = f_v(parse_multipartition("2.1|1"), Multicharge(4, (0, 1)))
    if got != parse_multisegment("[0,1]+[3]+[1]", 4):
        problems.append(f"f_(0,1)(2.1|1) = {got}")
    got = f_v(parse_multipartition("2|1|1"), Multicharge(4, (0, 1, 3)))
    if got != parse_multisegment("[0,1]+[1]+[3]", 4):
        problems.append(f"f_(0,1,3)(2|1|1) = {got}")
    report(2, "f_v on the two small examples", problems, time.perf_counter() - start)


def test_criterion_03_level_five(report):
    start = time.perf_counter()
    psi = parse_multisegment(WORKED, 4)
    lam = reconstruct(psi, Multicharge(4, (0, 0, 1, 2, 3)))
    problems = [] if lam == parse_multipartition("6.3|5.3|4.3|2|5.1") else [f"got {lam}"]
    report(3, "reconstruct at charge (0,0,1,2,3)", problems, time.perf_counter() - start)


def test_criterion_04_star_and_hat(report):
    start = time.perf_counter()
    problems = _suite(check_star_hat, 8)
    report(4, "star(f^_i psi) = f~_i(star psi) and eps*_i = r^_i, rank <= 8", problems,
           time.perf_counter() - start, budget=60)


def test_criterion_05_involution_identities(report):
    start = time.perf_counter()
    problems = _suite(check_involutions, 8)
    report(5, "star, sharp, rho involutions and star = sharp rho = rho sharp", problems,
           time.perf_counter() - start)


def test_criterion_06_pipelines(report):
    start = time.perf_counter()
    problems = _suite(check_pipelines, 7)
    report(6, "sharp and star through the Mullineux pipeline, rank <= 7", problems,
           time.perf_counter() - start, budget=120)


def test_criterion_07_fock_embedding(report):
    start = time.perf_counter()
    problems = _suite(check_fock, 7)
    report(7, "Fock closure = FLOTW, embedding, image, shortest-part deletion, rank <= 7", problems,
           time.perf_counter() - start)


def test_criterion_08_round_trips(report):
    start = time.perf_counter()
    problems = _suite(check_round_trips, 7)
    report(8, "reconstruct and f_v inverse, any head-class order, rank <= 7", problems,
           time.perf_counter() - start)


def test_criterion_09_commutor(report):
    start = time.perf_counter()
    problems = _suite(check_commutor, 6)
    report(9, "commutor bijection, involution, weight balance, e=2 formula, rank <= 6", problems,
           time.perf_counter() - start)


def test_criterion_10_commutation(report):
    start = time.perf_counter()
    problems = []
    for e in ES:
        for r in commutation_checks(e, 7):
            if not r.passed:
                problems.append(f"e={e} {r.name}: {r.nfail}/{r.checked} failed, e.g. {r.failures[0]}")
    report(10, "commutation: '= 1' dichotomy and '> 1' form, rank <= 7", problems, time.perf_counter() - start)
