"""Expression grammar, evaluation, and degree-zero decomposition."""

import random

import pytest

from qdops.exactscalar import ExactScalar, scalar
from qdops.opexpr import parse, evaluate, expr_str, decompose_degree0, ENum
from qdops.opsym import GradedOperator, Symbol, generator, compose, equals
from qdops.rings import POLY_X, POLY_Y, LAURENT_X, poly_n, RingElement
from qdops.errors import ParseError, NotDegreeZero, UnsupportedGenerator

qp = ExactScalar.q_power


@pytest.mark.parametrize("text", [
    "D[1]*x",
    "bracket(D[1], x)",
    "bracket(D[1], x, 2)",
    "s[1]^2*s[-1]^2",
    "(q-1)^-1 * s[1]",
    "x^3 + 2*x - 1/2",
    "-tau^2 + q^2*x",
    "x1*D2[1] + s[1,0]",
])
def test_parse_print_round_trip(text):
    e = parse(text)
    assert expr_str(parse(expr_str(e))) == expr_str(e)


def test_eval_examples():
    sigma = generator("sigma", POLY_X, 1)
    assert equals(evaluate(parse("bracket(D[1], x)")), sigma)
    assert equals(evaluate(parse("D[0]*x - x*D[0]")), GradedOperator.identity(POLY_X))
    assert equals(evaluate(parse("s[1]^2*s[-1]^2")), GradedOperator.identity(POLY_X))


def test_eval_respects_domain():
    # the same text means the mirrored generators on k[y]
    ey = evaluate(parse("D[1]"), POLY_Y)
    assert ey.apply(RingElement.monomial(POLY_Y, 2)) \
        == RingElement.monomial(POLY_Y, 1, scalar(1) + qp(-1))
    with pytest.raises(UnsupportedGenerator):
        evaluate(parse("x"), poly_n(2))
    nd = evaluate(parse("bracket(D1[1], x1)"), poly_n(2))
    assert equals(nd, evaluate(parse("s[1,0]"), poly_n(2)))


def test_scalar_expressions_promote():
    op = evaluate(parse("(q - 1)^-1"))
    assert op.parts == {(0,): Symbol.constant((qp(1) - 1).inverse())}


def test_division_and_negative_powers():
    assert equals(evaluate(parse("x*D[1] / (q - 1)")),
                  evaluate(parse("(q-1)^-1 * x*D[1]")))
    assert equals(evaluate(parse("s[1]^-2")), evaluate(parse("s[-2]")))
    assert equals(evaluate(parse("(2*s[1])^-1")), evaluate(parse("1/2 * s[-1]")))


def test_decompose_degree0_examples():
    tau = parse("tau")
    assert expr_str(decompose_degree0(evaluate(tau))) == "tau"
    # u^2 m - 3 u^-1 reads off as s[2] tau - 3 s[-1]
    op = GradedOperator(POLY_X, {(0,): Symbol.term(1, 2, 1) + Symbol.term(-3, -1, 0)})
    back = decompose_degree0(op)
    assert equals(evaluate(back), op)
    assert expr_str(back) == "s[2]*tau-3*s[-1]"
    # x D[1] = (sigma - 1)/(q - 1)
    xd = compose(generator("x", POLY_X), generator("dbeta", POLY_X, 1))
    got = decompose_degree0(xd)
    assert equals(evaluate(got), xd)
    assert equals(evaluate(got), evaluate(parse("(q-1)^-1*s[1] - (q-1)^-1")))


def test_decompose_rejects_other_degrees():
    with pytest.raises(NotDegreeZero):
        decompose_degree0(evaluate(parse("x")))
    with pytest.raises(NotDegreeZero):
        decompose_degree0(evaluate(parse("x*D[1] + D[0]")))


def test_decompose_inverts_evaluation():
    rng = random.Random(13)
    texts = ["s[2]*tau", "tau^3 - s[-1]", "s[1]*tau + s[-2]*tau^2 - 5"]
    for t in texts:
        e = parse(t)
        assert equals(evaluate(decompose_degree0(evaluate(e))), evaluate(e))
    for _ in range(20):
        # random degree-zero words: equal numbers of x and D letters
        k = rng.randint(1, 3)
        letters = ["x"] * k + [f"D[{rng.randint(-1, 1)}]" for _ in range(k)]
        rng.shuffle(letters)
        e = parse("*".join(letters))
        assert equals(evaluate(decompose_degree0(evaluate(e))), evaluate(e))


@pytest.mark.parametrize("text,pos", [
    ("x +", 3),
    ("s[", 2),
    ("D[1", 3),
    ("x ** 2", 3),
    ("foo", 0),
    ("bracket(x)", 9),
])
def test_parse_error_positions(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.pos == pos


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse("x x")
