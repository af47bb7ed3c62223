"""The thirteen contract criteria, at full contractual parameters.

Each test drives the same code paths a user reaches through `qdops verify`,
records its verdict with the acceptance fixture (summarized at the end of
the pytest run), and asserts it.  Everything here is exact Q(q) arithmetic;
there are no tolerances anywhere.
"""

import time

from qdops.exactscalar import ExactScalar
from qdops.rings import POLY_X
from qdops.opsym import generator, twisted_bracket, equals
from qdops.suites import verify_suite


def run_suite(name, **kw):
    report = verify_suite(name, **kw)
    return report.passed, report


def test_criterion_01_generator_identities(acceptance):
    t0 = time.monotonic()
    ok, _ = run_suite("note-identities", max_degree=5)
    elapsed = time.monotonic() - t0
    acceptance(1, "generator identities for a in 1..5", ok and elapsed < 1.0)


def test_criterion_02_bracket_with_x_is_sigma(acceptance):
    x = generator("x", POLY_X)
    ok = all(
        equals(twisted_bracket(generator("dbeta", POLY_X, a), x, 0),
               generator("sigma", POLY_X, a))
        for a in range(-3, 4))
    acceptance(2, "[d^(a), x] = s[a] for a in -3..3", ok)


def test_criterion_03_intrinsic_relations(acceptance):
    ok, _ = run_suite("intrinsic-relations", cases=500)
    acceptance(3, "intrinsic relation families + 500-word completeness probe", ok)


def test_criterion_04_degree_zero_commutative(acceptance):
    ok, _ = run_suite("d0-commutative", cases=200)
    acceptance(4, "degree-0 words commute and decompose (200 cases)", ok)


def test_criterion_05_no_zero_divisors(acceptance):
    ok, _ = run_suite("domain-sample", cases=200)
    acceptance(5, "nonzero word pairs multiply to nonzero (200 cases)", ok)


def test_criterion_06_integration_exhaustive(acceptance):
    t0 = time.monotonic()
    ok, _ = run_suite("integrate-exhaustive", max_degree=3, cases=100)
    elapsed = time.monotonic() - t0
    acceptance(6, "bracket antiderivative, exhaustive length<=3 + 100 length-4",
               ok and elapsed < 60.0)


def test_criterion_07_simplicity_witness(acceptance):
    ok, _ = run_suite("simplicity-random", cases=200)
    acceptance(7, "simplicity witnesses replay to identity (200 cases)", ok)


def test_criterion_08_several_variables(acceptance):
    ok, _ = run_suite("nvariables", cases=6)
    acceptance(8, "n-variable commutations and potentials (n = 2, 3)", ok)


def test_criterion_09_glued_pairs(acceptance):
    ok, _ = run_suite("gamma-generators")
    acceptance(9, "six glued generator pairs + sigma/tau formulas", ok)


def test_criterion_10_quantum_group_relations(acceptance):
    ok1, _ = run_suite("uq-relations", max_degree=6)
    ok2, _ = run_suite("uq-plane-consistency", max_degree=4)
    acceptance(10, "defining relations under alpha/gamma/plane, x-line match",
               ok1 and ok2)


def test_criterion_11_nonsurjectivity(acceptance):
    ok, _ = run_suite("nonsurjectivity", cases=100)
    acceptance(11, "alpha-words are m-free, the derivative is not (100 cases)",
               ok)


def test_criterion_12_truncation(acceptance):
    ok, _ = run_suite("truncation", cases=100)
    acceptance(12, "truncation multiplicative, nilpotence bounded, collapse",
               ok)


def test_criterion_13_eta1_generators(acceptance):
    ok, _ = run_suite("eta1-surjectivity", max_degree=5)
    acceptance(13, "level-1 images of E and F, divided powers integral", ok)
