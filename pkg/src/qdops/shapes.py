"""Shape normal form: sums of  sigma^a * p(x) * D^(i1) ... D^(ik)  with
each i_l in {0, 1} (D^(0) the plain q-derivative, D^(1) its twisted
partner).  The inverse twist D^(-1) is eliminated up front through
D^(-1) = sigma^-1 D^(1).

Rewriting uses only the ring's defining relations:

    D^(c) x   = q^c x D^(c) + 1
    x sigma^a = q^-a sigma^a x
    D^(c) sigma^a = q^a sigma^a D^(c)

so pushing a power of x through a word costs one deletion sum:

    D^I x = q^w x D^I + sum_j q^(w_j) D^(I minus j),   w = sum(I),
    w_j = sum of the entries right of position j.
"""

from __future__ import annotations

from .errors import EngineError, UnsupportedGenerator
from .exactscalar import ExactScalar, scalar
from . import opexpr
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
)


def _pclean(p):
    return {d: c for d, c in p.items() if not c.is_zero()}


def _padd(p, r):
    out = dict(p)
    for d, c in r.items():
        out[d] = out[d] + c if d in out else c
    return _pclean(out)


def _pmulp(p, r):
    out = {}
    for d1, c1 in p.items():
        for d2, c2 in r.items():
            d = d1 + d2
            v = c1 * c2
            out[d] = out[d] + v if d in out else v
    return _pclean(out)


def _pscale(p, c):
    return _pclean({d: v * c for d, v in p.items()})


def twist_poly(p, s):
    """x^i |-> q^(s i) x^i on the coefficients."""
    if s == 0:
        return dict(p)
    return {d: c * ExactScalar.q_power(s * d) for d, c in p.items()}


_push_cache = {}


def _push(I, k):
    """D^I x^k as a list of (subword J, polynomial): sum poly(x) * D^J."""
    key = (I, k)
    hit = _push_cache.get(key)
    if hit is not None:
        return hit
    one = ExactScalar.from_int(1)
    if k == 0:
        out = [(I, {0: one})]
    else:
        w = sum(I)
        heads = [(I, {1: ExactScalar.q_power(w)})]
        for j in range(len(I)):
            wj = sum(I[j + 1:])
            heads.append((I[:j] + I[j + 1:], {0: ExactScalar.q_power(wj)}))
        acc = {}
        for J, hp in heads:
            for J2, poly in _push(J, k - 1):
                merged = _pmulp(hp, poly)
                if J2 in acc:
                    acc[J2] = _padd(acc[J2], merged)
                else:
                    acc[J2] = merged
        out = [(J, p) for J, p in acc.items() if p]
    _push_cache[key] = out
    return out


class ShapeForm:
    """classes: {(sigma-exponent a, word I): x-polynomial}, zero classes
    dropped.  Not canonical -- the same operator has many shapes."""

    __slots__ = ("classes",)

    def __init__(self, classes):
        clean = {}
        for (a, I), p in classes.items():
            p = _pclean(p)
            if p:
                key = (a, tuple(I))
                clean[key] = _padd(clean[key], p) if key in clean else p
        self.classes = {k: p for k, p in clean.items() if p}

    @staticmethod
    def zero():
        return ShapeForm({})

    @staticmethod
    def of_term(a, p, I):
        return ShapeForm({(a, tuple(I)): {d: scalar(c) for d, c in p.items()}})

    def is_zero_shape(self):
        return not self.classes

    def __add__(self, other):
        out = {k: dict(p) for k, p in self.classes.items()}
        for k, p in other.classes.items():
            out[k] = _padd(out[k], p) if k in out else p
        return ShapeForm(out)

    def __neg__(self):
        return ShapeForm(
            {k: {d: -c for d, c in p.items()} for k, p in self.classes.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = scalar(c)
        return ShapeForm({k: _pscale(p, c) for k, p in self.classes.items()})

    def __mul__(self, other):
        out = ShapeForm({})
        acc = {}
        for (a1, I1), p1 in self.classes.items():
            for (a2, I2), p2 in other.classes.items():
                pref = ExactScalar.q_power(a2 * len(I1)) if a2 * len(I1) else None
                p1t = twist_poly(p1, -a2)
                for d2, c2 in p2.items():
                    for J, poly in _push(I1, d2):
                        newp = _pmulp(p1t, _pscale(poly, c2))
                        if pref is not None:
                            newp = _pscale(newp, pref)
                        key = (a1 + a2, J + I2)
                        acc[key] = _padd(acc[key], newp) if key in acc else newp
        out = ShapeForm(acc)
        return out

    # -- the moves the simplicity walk uses --------------------------------

    def left_sigma(self, s):
        """sigma^s * self; the twists sit leftmost, so they just merge."""
        return ShapeForm({(s + a, I): p for (a, I), p in self.classes.items()})

    def bracket_x(self):
        """[self, x]: per class, (q^w - q^-a) sigma^a x p D^I plus the
        deletion terms."""
        acc = {}
        for (a, I), p in self.classes.items():
            w = sum(I)
            coef = ExactScalar.q_power(w) - ExactScalar.q_power(-a)
            if not coef.is_zero():
                key = (a, I)
                xp = {d + 1: c * coef for d, c in p.items()}
                acc[key] = _padd(acc[key], xp) if key in acc else _pclean(xp)
            for j in range(len(I)):
                wj = sum(I[j + 1:])
                key = (a, I[:j] + I[j + 1:])
                dp = _pscale(p, ExactScalar.q_power(wj))
                acc[key] = _padd(acc[key], dp) if key in acc else dp
        return ShapeForm(acc)

    # -- inspection ---------------------------------------------------------

    def max_word_len(self):
        return max((len(I) for (_, I) in self.classes), default=0)

    def top_classes(self):
        d = self.max_word_len()
        return [(a, I) for (a, I) in self.classes if len(I) == d]

    def sigma_exponents(self):
        return sorted({a for (a, _) in self.classes})

    def total_x_degree(self):
        return sum(max(p) for p in self.classes.values())

    def to_expr(self):
        out = None
        for (a, I) in sorted(self.classes):
            p = self.classes[(a, I)]
            term = None
            if a:
                term = EGen("s", a)
            poly = None
            for d in sorted(p, reverse=True):
                mono = None
                c = p[d]
                if d:
                    mono = EGen("x") if d == 1 else EPow(EGen("x"), d)
                    if not c.is_one():
                        mono = EMul(ENum(c), mono)
                else:
                    mono = ENum(c)
                poly = mono if poly is None else EAdd(poly, mono)
            term = poly if term is None else EMul(term, poly)
            for i in I:
                term = EMul(term, EGen("D", i))
            out = term if out is None else EAdd(out, term)
        return out if out is not None else ENum(ExactScalar.from_int(0))

    def __str__(self):
        return opexpr.expr_str(self.to_expr())

    def __repr__(self):
        return f"ShapeForm({self})"


_X = ShapeForm.of_term(0, {1: 1}, ())
_ONE_SHAPE = ShapeForm.of_term(0, {0: 1}, ())


def _shape_of_gen(name, arg):
    if name == "x":
        return _X
    if name == "tau":
        return ShapeForm.of_term(0, {1: 1}, (0,))
    if name == "s":
        return ShapeForm.of_term(arg, {0: 1}, ())
    if name == "D":
        a = arg
        if a == 0:
            return ShapeForm.of_term(0, {0: 1}, (0,))
        if a == 1:
            return ShapeForm.of_term(0, {0: 1}, (1,))
        if a == -1:
            return ShapeForm.of_term(-1, {0: 1}, (1,))
        raise UnsupportedGenerator(
            "shapes only carry D[0], D[1] and D[-1] words")
    raise UnsupportedGenerator(f"no shape for leaf {name!r}")


def _is_scalar_shape(sf):
    if not sf.classes:
        return ExactScalar.from_int(0)
    if len(sf.classes) == 1:
        ((a, I), p), = sf.classes.items()
        if a == 0 and not I and set(p) == {0}:
            return p[0]
    return None


def shape_normalize(e):
    """OperatorExpr (one variable, direct degree) -> ShapeForm."""
    if isinstance(e, ShapeForm):
        return e
    if isinstance(e, ENum):
        return ShapeForm.of_term(0, {0: e.value}, ())
    if isinstance(e, EGen):
        return _shape_of_gen(e.name, e.arg)
    if isinstance(e, EAdd):
        return shape_normalize(e.a) + shape_normalize(e.b)
    if isinstance(e, ESub):
        return shape_normalize(e.a) - shape_normalize(e.b)
    if isinstance(e, ENeg):
        return -shape_normalize(e.a)
    if isinstance(e, EMul):
        return shape_normalize(e.a) * shape_normalize(e.b)
    if isinstance(e, EDiv):
        c = _is_scalar_shape(shape_normalize(e.b))
        if c is None or c.is_zero():
            raise EngineError("shape division needs a nonzero scalar divisor")
        return shape_normalize(e.a).scale(c.inverse())
    if isinstance(e, EPow):
        base = shape_normalize(e.base)
        if e.k >= 0:
            out = _ONE_SHAPE
            for _ in range(e.k):
                out = out * base
            return out
        if len(base.classes) == 1:
            ((a, I), p), = base.classes.items()
            if not I and set(p) == {0}:
                inv = ShapeForm.of_term(-a, {0: p[0].inverse()}, ())
                out = _ONE_SHAPE
                for _ in range(-e.k):
                    out = out * inv
                return out
        raise EngineError("negative shape power of a non-invertible factor")
    if isinstance(e, EBracket):
        A = shape_normalize(e.a)
        B = shape_normalize(e.b)
        out = A * B
        t = e.twist
        for (a, I), p in B.classes.items():
            for d, c in p.items():
                deg = d - len(I)
                w = ExactScalar.q_power(t * deg) if t * deg else ExactScalar.from_int(1)
                piece = ShapeForm.of_term(a, {d: c}, I) * A
                out = out - piece.scale(w)
        return out
    raise EngineError(f"cannot shape node {type(e).__name__}")
