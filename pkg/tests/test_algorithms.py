"""Bracket antiderivatives and the simplicity reduction."""

import random

import pytest

from qdops.exactscalar import ExactScalar, scalar
from qdops.rings import POLY_X, poly_n
from qdops.opsym import GradedOperator, generator, twisted_bracket, equals
from qdops.opexpr import parse, evaluate, expr_str
from qdops.shapes import ShapeForm, shape_normalize
from qdops.algorithms import (integrate, verify_integration, problem_expr,
                              word_expansion, simplicity_witness, replay,
                              integrate_nd, nd_term, nd_bracket_terms,
                              nd_terms_to_op)
from qdops.errors import ZeroOperator, CompatibilityViolation

qp = ExactScalar.q_power
ONE = GradedOperator.identity(POLY_X)


# -- one-variable integration ------------------------------------------------

def test_integrate_base_case():
    Q, ok = verify_integration((), 2)
    assert ok
    assert expr_str(Q) == "D[2]"


def test_integrate_classical_special_case():
    Q, ok = verify_integration((0,), 0)
    assert ok
    assert expr_str(Q) == "D[0]^2/2"
    Q2, ok2 = verify_integration((0, 0), 0)
    assert ok2
    assert expr_str(Q2) == "D[0]^3/3"


def test_integrate_one_step_word():
    Q, ok = verify_integration((1,), 0)
    assert ok
    # (1/(1-q)) (d d^beta - q d^beta d)
    want = (evaluate(parse("D[0]*D[1] - q*D[1]*D[0]")) *
            (scalar(1) - qp(1)).inverse())
    assert equals(evaluate(Q), want)

    Q, ok = verify_integration((1,), 1)
    assert ok
    want = evaluate(parse("D[1]*D[1]")) * (qp(1) / (scalar(1) + qp(1)))
    assert equals(evaluate(Q), want)


def test_integrate_degenerate_twist():
    # b = -sum(word) with a nonzero entry forces the sigma-transposition path
    for word, b in [((1,), -1), ((2, -1), -1), ((1, 1), -2), ((0, 2), -2)]:
        _, ok = verify_integration(word, b)
        assert ok


def test_integrate_sweep():
    rng = random.Random(1)
    for _ in range(40):
        word = tuple(rng.randint(-2, 2) for _ in range(rng.randint(0, 3)))
        b = rng.randint(-3, 3)
        _, ok = verify_integration(word, b)
        assert ok, (word, b)


def test_word_expansion():
    e = parse("D[0]*D[1] - q*D[1]*D[0] + 2")
    got = word_expansion(e)
    assert got == {(0, 1): scalar(1), (1, 0): -qp(1), (): scalar(2)}


def test_problem_expr_round_trip():
    e = problem_expr((2, -1), 3)
    assert equals(evaluate(e), evaluate(parse("D[-1]*D[2]*s[3]")))
    assert equals(evaluate(problem_expr((), 0)), ONE)


# -- simplicity witness -------------------------------------------------------

def witness_for(text):
    return simplicity_witness(shape_normalize(parse(text)))


def test_witness_x():
    w = witness_for("x")
    assert w.describe() == ["bracket with D[0]", "scale by 1"]
    assert equals(replay(w, evaluate(parse("x"))), ONE)


def test_witness_sigma_monomial():
    w = witness_for("s[2]*x^3")
    assert w.describe() == ["left-multiply s[-2]"] + ["bracket with D[0]"] * 3 \
        + ["scale by 1/6"]
    assert equals(replay(w, evaluate(parse("s[2]*x^3"))), ONE)


def test_witness_with_word_phase():
    f = parse("x*D[1]")
    w = witness_for("x*D[1]")
    assert equals(replay(w, evaluate(f)), ONE)
    # first two moves discharge the D-word as in the reduction
    assert w.describe()[:2] == ["left-multiply s[-1]", "bracket with x"]


def test_witness_disguised_zero():
    with pytest.raises(ZeroOperator):
        witness_for("s[1] - 1 - (q-1)*x*D[1]")


def test_witness_random_replay():
    rng = random.Random(211)
    pool = ["x", "s[1]", "s[-1]", "D[0]", "D[1]", "D[-1]"]
    for _ in range(40):
        text = "*".join(rng.choice(pool) for _ in range(rng.randint(1, 4)))
        f = shape_normalize(parse(text))
        w = simplicity_witness(f)
        assert equals(replay(w, evaluate(parse(text))), ONE)
        # the recorded measures strictly decrease until the final scale
        for before, after in zip(w.measures, w.measures[1:]):
            assert after < before


# -- several variables --------------------------------------------------------

def test_integrate_nd_classical():
    F1 = [nd_term(1, (0, 0), (), (0, 0))]
    Q = integrate_nd([F1, []], nvars=2)
    tag = poly_n(2)
    qop = evaluate(Q, tag)
    x1 = generator("x_i", tag, 0)
    x2 = generator("x_i", tag, 1)
    assert equals(twisted_bracket(qop, x1), nd_terms_to_op(F1, tag))
    assert twisted_bracket(qop, x2).is_zero()


def test_integrate_nd_crossed_family():
    F1 = [nd_term(1, (0, 1), (), (0, 0))]   # x2
    F2 = [nd_term(1, (1, 0), (), (0, 0))]   # x1
    tag = poly_n(2)
    Q = evaluate(integrate_nd([F1, F2], nvars=2), tag)
    for i, F in ((0, F1), (1, F2)):
        xi = generator("x_i", tag, i)
        assert equals(twisted_bracket(Q, xi), nd_terms_to_op(F, tag))


def test_integrate_nd_partial_family():
    # F = (x1, 0) is compatible: Q = x1 d1 works
    F1 = [nd_term(1, (1, 0), (), (0, 0))]
    tag = poly_n(2)
    Q = evaluate(integrate_nd([F1, []], nvars=2), tag)
    assert equals(twisted_bracket(Q, generator("x_i", tag, 0)),
                  nd_terms_to_op(F1, tag))
    assert twisted_bracket(Q, generator("x_i", tag, 1)).is_zero()


def test_integrate_nd_incompatible():
    # F1 = d2 brackets against x2 to 1, but F2 = 0 brackets to 0
    F1 = [nd_term(1, (0, 0), ((1, 0),), (0, 0))]
    with pytest.raises(CompatibilityViolation):
        integrate_nd([F1, []], nvars=2)


def test_nd_bracket_terms_match_engine():
    tag = poly_n(2)
    terms = [nd_term(2, (1, 1), ((0, 1),), (1, 0)),
             nd_term(1, (0, 2), (), (0, -1))]
    op = nd_terms_to_op(terms, tag)
    for i in (0, 1):
        xi = generator("x_i", tag, i)
        got = nd_terms_to_op(nd_bracket_terms(terms, i, 2), tag)
        assert equals(got, twisted_bracket(op, xi))
