"""U_q(sl2): words in E, F, K, K^-1 (plus divided powers), their action on
the quantum plane k<u, v> with v inverted, the operator realizations on
k[x] and k[x^-1], the glued pairs, and levelwise truncations.
"""

from __future__ import annotations

from .errors import EngineError, GlueFailure, UnsupportedGenerator
from .exactscalar import ExactScalar, q_factorial, scalar
from .opexpr import (
    EAdd,
    EBracket,
    EDiv,
    EGen,
    EMul,
    ENeg,
    ENum,
    EPow,
    ESub,
    OperatorExpr,
    parse,
)
from .opsym import (
    GradedOperator,
    equals,
    extend_to_laurent,
    generator,
    truncate_operator,
    twisted_bracket,
)
from .rings import POLY_X, POLY_Y, PlaneElement, plane_to_x_poly, x_of_plane

# ---------------------------------------------------------------------------
# quantum plane action
# ---------------------------------------------------------------------------
#
# K(u) = qu, K(v) = v/q, E(u) = 0, E(v) = u, F(u) = v, F(v) = 0, spread
# over products by E(st) = E(s)t + K(s)E(t), F(st) = sF(t) + F(s)K^-1(t);
# on the inverse, E(1/v) = -q (1/v) u (1/v), F(1/v) = 0, K(1/v) = q/v.


def _act_K(elem, sign):
    out = {}
    for (a, b), c in elem.terms.items():
        out[(a, b)] = c * ExactScalar.q_power(sign * (a - b))
    return PlaneElement(out)


_E_v_cache = {}


def _E_vpow(b):
    """E(v^b) for any integer b."""
    hit = _E_v_cache.get(b)
    if hit is not None:
        return hit
    if b == 0:
        out = PlaneElement.zero()
    elif b > 0:
        # E(v * v^(b-1)) = u v^(b-1) + (1/q) v E(v^(b-1))
        out = PlaneElement.monomial(1, b - 1) \
            + PlaneElement.monomial(0, 1, ExactScalar.q_power(-1)) * _E_vpow(b - 1)
    else:
        # E(v^-1 * v^(b+1)) = -q^2 u v^(b-1) + q v^-1 E(v^(b+1))
        out = PlaneElement.monomial(1, b - 1, -ExactScalar.q_power(2)) \
            + PlaneElement.monomial(0, -1, ExactScalar.q_power(1)) * _E_vpow(b + 1)
    _E_v_cache[b] = out
    return out


_F_u_cache = {}


def _F_upow(a):
    """F(u^a), a >= 0."""
    hit = _F_u_cache.get(a)
    if hit is not None:
        return hit
    if a == 0:
        out = PlaneElement.zero()
    else:
        # F(u * u^(a-1)) = u F(u^(a-1)) + v K^-1(u^(a-1))
        out = PlaneElement.monomial(1, 0) * _F_upow(a - 1) \
            + PlaneElement.monomial(0, 1, ExactScalar.q_power(-(a - 1))) \
            * PlaneElement.monomial(a - 1, 0)
    _F_u_cache[a] = out
    return out


def _act_E(elem):
    out = PlaneElement.zero()
    for (a, b), c in elem.terms.items():
        # E(u^a v^b) = q^a u^a E(v^b)
        piece = PlaneElement.monomial(a, 0, c * ExactScalar.q_power(a)) * _E_vpow(b)
        out = out + piece
    return out


def _act_F(elem):
    out = PlaneElement.zero()
    for (a, b), c in elem.terms.items():
        # F(u^a v^b) = F(u^a) K^-1(v^b) = q^b F(u^a) v^b
        piece = _F_upow(a) * PlaneElement.monomial(0, b, c * ExactScalar.q_power(b))
        out = out + piece
    return out


_PLANE_LETTERS = {
    "K": lambda s: _act_K(s, 1),
    "Kinv": lambda s: _act_K(s, -1),
    "E": _act_E,
    "F": _act_F,
}


def act_on_plane(w, s):
    """Act by the word/expression w on a plane element."""
    if isinstance(w, str):
        w = parse(w, mode="uq")
    if isinstance(w, ENum):
        return s * w.value
    if isinstance(w, EGen):
        if w.name in _PLANE_LETTERS:
            return _PLANE_LETTERS[w.name](s)
        if w.name in ("Ediv", "Fdiv"):
            m = int(w.arg)
            out = s
            for _ in range(m):
                out = _PLANE_LETTERS[w.name[0]](out)
            return out * q_factorial(m).inverse()
        raise UnsupportedGenerator(f"no plane action for {w.name!r}")
    if isinstance(w, EAdd):
        return act_on_plane(w.a, s) + act_on_plane(w.b, s)
    if isinstance(w, ESub):
        return act_on_plane(w.a, s) - act_on_plane(w.b, s)
    if isinstance(w, ENeg):
        return -act_on_plane(w.a, s)
    if isinstance(w, EMul):
        return act_on_plane(w.a, act_on_plane(w.b, s))
    if isinstance(w, EDiv):
        c = _expr_scalar(w.b)
        return act_on_plane(w.a, s) * c.inverse()
    if isinstance(w, EPow):
        if w.k < 0:
            raise EngineError("negative word power in the plane action")
        out = s
        for _ in range(w.k):
            out = act_on_plane(w.base, out)
        return out
    if isinstance(w, EBracket):
        if w.twist:
            raise EngineError("twisted brackets have no plane action")
        return act_on_plane(w.a, act_on_plane(w.b, s)) \
            - act_on_plane(w.b, act_on_plane(w.a, s))
    raise EngineError(f"cannot act by node {type(w).__name__}")


def _expr_scalar(e):
    """Evaluate a scalar-only subtree."""
    if isinstance(e, ENum):
        return e.value
    if isinstance(e, EAdd):
        return _expr_scalar(e.a) + _expr_scalar(e.b)
    if isinstance(e, ESub):
        return _expr_scalar(e.a) - _expr_scalar(e.b)
    if isinstance(e, ENeg):
        return -_expr_scalar(e.a)
    if isinstance(e, EMul):
        return _expr_scalar(e.a) * _expr_scalar(e.b)
    if isinstance(e, EDiv):
        return _expr_scalar(e.a) / _expr_scalar(e.b)
    if isinstance(e, EPow):
        return _expr_scalar(e.base) ** e.k
    raise EngineError("expected a scalar expression")


# ---------------------------------------------------------------------------
# the morphisms alpha (on k[x]) and gamma (on k[x^-1])
# ---------------------------------------------------------------------------

def _alpha_letters():
    sig = lambda a: generator("sigma", POLY_X, a)
    dbe = lambda a: generator("dbeta", POLY_X, a)
    x = generator("x", POLY_X)
    q = ExactScalar.q_power
    return {
        "F": sig(-2) * dbe(2) * q(-1),
        "E": x * x * dbe(2) * (-q(2)),
        "K": sig(2),
        "Kinv": sig(-2),
    }


def _gamma_letters():
    # the inverse-degree ring twists by 1/q, so its beta-square derivative
    # is 1/q times ours; the prefactors below absorb that
    sig = lambda a: generator("sigma_y", POLY_Y, a)
    dbe = lambda a: generator("dbeta_y", POLY_Y, a)
    y = generator("y", POLY_Y)
    q = ExactScalar.q_power
    return {
        "F": sig(-2) * y * y * dbe(2) * (-q(-3)),
        "E": dbe(2),
        "K": sig(2),
        "Kinv": sig(-2),
    }


_ALPHA = None
_GAMMA = None


def _letters(which):
    global _ALPHA, _GAMMA
    if which == "alpha":
        if _ALPHA is None:
            _ALPHA = _alpha_letters()
        return _ALPHA, POLY_X
    if _GAMMA is None:
        _GAMMA = _gamma_letters()
    return _GAMMA, POLY_Y


def _hom_eval(e, letters, domain):
    if isinstance(e, ENum):
        return GradedOperator.identity(domain) * e.value
    if isinstance(e, EGen):
        if e.name in letters:
            return letters[e.name]
        if e.name in ("Ediv", "Fdiv"):
            m = int(e.arg)
            out = GradedOperator.identity(domain)
            base = letters[e.name[0]]
            for _ in range(m):
                out = out * base
            return out * q_factorial(m).inverse()
        raise UnsupportedGenerator(f"not a U_q leaf: {e.name!r}")
    if isinstance(e, EAdd):
        return _hom_eval(e.a, letters, domain) + _hom_eval(e.b, letters, domain)
    if isinstance(e, ESub):
        return _hom_eval(e.a, letters, domain) - _hom_eval(e.b, letters, domain)
    if isinstance(e, ENeg):
        return -_hom_eval(e.a, letters, domain)
    if isinstance(e, EMul):
        return _hom_eval(e.a, letters, domain) * _hom_eval(e.b, letters, domain)
    if isinstance(e, EDiv):
        return _hom_eval(e.a, letters, domain) * _expr_scalar(e.b).inverse()
    if isinstance(e, EPow):
        if e.k < 0:
            raise EngineError("negative power of a U_q word")
        out = GradedOperator.identity(domain)
        base = _hom_eval(e.base, letters, domain)
        for _ in range(e.k):
            out = out * base
        return out
    if isinstance(e, EBracket):
        if e.twist:
            raise EngineError("U_q brackets are untwisted")
        a = _hom_eval(e.a, letters, domain)
        b = _hom_eval(e.b, letters, domain)
        return a * b - b * a
    raise EngineError(f"cannot map node {type(e).__name__}")


def _as_uq(w):
    return parse(w, mode="uq") if isinstance(w, str) else w


def alpha(w):
    letters, domain = _letters("alpha")
    return _hom_eval(_as_uq(w), letters, domain)


def gamma(w):
    letters, domain = _letters("gamma")
    return _hom_eval(_as_uq(w), letters, domain)


def gamma_q_member(pair):
    dx, dy = pair
    return equals(extend_to_laurent(dx), extend_to_laurent(dy))


def eta(w):
    """(alpha(w), gamma(w)); the two extensions must glue."""
    pair = (alpha(w), gamma(w))
    if not gamma_q_member(pair):
        raise GlueFailure("alpha and gamma images do not glue on Laurent "
                          "polynomials")
    return pair


def eta_truncated(w, n):
    a, g = eta(w)
    return truncate_operator(a, n), truncate_operator(g, n)


# ---------------------------------------------------------------------------
# generators of the glued ring
# ---------------------------------------------------------------------------

def gamma_q_pairs():
    """The six generating pairs (operator on k[x], operator on k[x^-1])."""
    X = POLY_X
    Y = POLY_Y
    x = generator("x", X)
    y = generator("y", Y)
    d = lambda a: generator("dbeta", X, a)
    dy = lambda a: generator("dbeta_y", Y, a)
    pd_y = generator("partial_y", Y)
    q = ExactScalar.q_power
    return [
        (d(0), -(y * y * pd_y)),
        (-(x * x * d(0)), pd_y),
        (d(1), y * y * dy(1) * (-q(-1))),
        (x * x * d(1) * (-q(1)), dy(1)),
        (d(-1), y * y * dy(-1) * (-q(1))),
        (x * x * d(-1) * (-q(-1)), dy(-1)),
    ]


def gamma_generators_check():
    """Membership of the six pairs plus the twisted-bracket expressions
    recovering sigma, sigma^-1 and tau; returns a list of (name, ok)."""
    out = []
    for i, pair in enumerate(gamma_q_pairs(), 1):
        out.append((f"pair-{i}", gamma_q_member(pair)))

    X = POLY_X
    x = generator("x", X)
    d = lambda a: generator("dbeta", X, a)
    one = GradedOperator.identity(X)
    q = ExactScalar.q_power(1)
    qi = ExactScalar.q_power(-1)

    lhs = twisted_bracket(d(1), x * x * d(1), 2)
    c = (q - 1) / (q + 1)
    out.append(("sigma-formula",
                equals(lhs * c + one, generator("sigma", X, 1))))

    lhs = twisted_bracket(d(-1), x * x * d(-1), -2)
    c = (qi - 1) / (qi + 1)
    out.append(("sigma-inverse-formula",
                equals(lhs * c + one, generator("sigma", X, -1))))

    lhs = twisted_bracket(d(0), x * x * d(0))
    out.append(("tau-formula",
                equals(lhs * scalar("1/2"), generator("tau", X))))
    return out


# ---------------------------------------------------------------------------
# plane model of the x-line
# ---------------------------------------------------------------------------

def plane_alpha_consistent(w, m):
    """Does the plane action of w on the image of x^m match alpha(w)(x^m)?"""
    from .rings import RingElement

    w = _as_uq(w)
    got = act_on_plane(w, x_of_plane(m))
    back = plane_to_x_poly(got)
    if back is None:
        return False
    op = alpha(w)
    xm = RingElement.monomial(POLY_X, m)
    return op.apply(xm) == back
