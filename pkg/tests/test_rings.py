"""Coefficient rings: polynomials, Laurent polynomials, and the quantum plane."""

import pytest

from qdops.exactscalar import ExactScalar, scalar
from qdops.rings import (RingElement, PlaneElement, POLY_X, POLY_Y, LAURENT_X,
                         poly_n, x_of_plane, plane_to_x_poly)
from qdops.errors import OutOfSupport, DomainMismatch


def qp(e):
    return ExactScalar.q_power(e)


def test_polynomial_arithmetic():
    x = RingElement.monomial(POLY_X, 1)
    one = RingElement.one(POLY_X)
    p = (x + one) * (x + one)
    assert p == RingElement(POLY_X, {2: 1, 1: 2, 0: 1})
    assert (p - p).is_zero()
    assert p * RingElement.zero(POLY_X) == RingElement.zero(POLY_X)
    assert x * 3 == 3 * x


def test_exponent_support():
    with pytest.raises(OutOfSupport):
        RingElement.monomial(POLY_X, -1)
    # the Laurent ring does allow negative powers
    xm = RingElement.monomial(LAURENT_X, -2)
    assert xm * RingElement.monomial(LAURENT_X, 2) == RingElement.one(LAURENT_X)


def test_tags_do_not_mix():
    x = RingElement.monomial(POLY_X, 1)
    y = RingElement.monomial(POLY_Y, 1)
    with pytest.raises(DomainMismatch):
        x + y


def test_multivariable_ring():
    tag = poly_n(2)
    a = RingElement.monomial(tag, (1, 0))
    b = RingElement.monomial(tag, (0, 1))
    assert a * b == b * a == RingElement.monomial(tag, (1, 1))
    q1 = ExactScalar.q_power(1, 2, var=0)
    assert a * q1 == RingElement.monomial(tag, (1, 0), q1)


def test_plane_normal_form():
    u = PlaneElement.monomial(1, 0)
    v = PlaneElement.monomial(0, 1)
    vinv = PlaneElement.monomial(0, -1)
    # uv = q vu, and v is invertible
    assert u * v == (v * u) * qp(1)
    assert vinv * u == u * vinv * qp(1)
    assert v * vinv == PlaneElement.one()
    assert (u - u).is_zero()


def test_plane_u_not_inverted():
    with pytest.raises(OutOfSupport):
        PlaneElement.monomial(-1, 0)


def test_x_line_round_trip():
    # x = u v^-1 picks up q-powers on raising: x^m = q^(m(m-1)/2) u^m v^-m
    assert x_of_plane(2) == PlaneElement.monomial(2, -2, qp(1))
    assert x_of_plane(3) == PlaneElement.monomial(3, -3, qp(3))
    x = x_of_plane(1)
    acc = PlaneElement.one()
    for m in range(5):
        assert acc == x_of_plane(m)
        back = plane_to_x_poly(acc)
        assert back == RingElement.monomial(POLY_X, m)
        acc = acc * x
    # an element off the x-line has no polynomial reading
    assert plane_to_x_poly(PlaneElement.monomial(1, 0)) is None


def test_plane_sums_convert_linearly():
    s = x_of_plane(2) * scalar("1/2") + x_of_plane(0) * qp(-1)
    p = plane_to_x_poly(s)
    assert p == RingElement(POLY_X, {2: scalar("1/2"), 0: qp(-1)})
