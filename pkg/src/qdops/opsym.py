"""Graded operators through their symbols.

A graded operator on one of the supported rings is a finite sum of parts
(e, s): e is the exponent shift and s the symbol, a Laurent polynomial in
u = q^m whose coefficients may also depend polynomially on m,

    s = sum_{i,j} c_ij(q) * u^i * m^j ,

acting on the basis monomial of exponent m by x^m |-> s(q^m, m) x^{m+e}.
Symbols with distinct (i, j) are linearly independent as functions of m,
so this representation is faithful and operator equality is structural.

Composition never leaves the picture:

    (e1, s1) after (e2, s2)  =  (e1+e2, s2(u, m) * s1(q^{e2} u, m + e2)),

coordinatewise in several variables.  The inverse-degree ring k[y] uses
the same machinery with (u, m) read as (w, n) = (q^n, n) in the y-exponent.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    DomainMismatch,
    NotIntegralAtOne,
    OutOfSupport,
    UnsupportedGenerator,
)
from .exactscalar import ExactScalar, TruncatedScalar, scalar
from .rings import POLY_X, POLY_Y, LAURENT_X, RingElement, RingTag


def _tup(domain, e):
    if isinstance(e, tuple):
        assert len(e) == domain.nvars
        return e
    # plain integers broadcast across the coordinates
    return (int(e),) * domain.nvars


def _zero_key(n):
    return (0,) * n


# ---------------------------------------------------------------------------
# symbols
# ---------------------------------------------------------------------------

class Symbol:
    """coeffs: {(u-exponents, m-exponents): ExactScalar}, tuples of length
    nvars; u-exponents range over Z, m-exponents over N."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars, coeffs):
        self.nvars = nvars
        clean = {}
        for (iv, jv), c in coeffs.items():
            if not c.is_zero():
                assert len(iv) == nvars and len(jv) == nvars
                key = (tuple(iv), tuple(jv))
                clean[key] = clean[key] + c if key in clean else c
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    @staticmethod
    def zero(nvars=1):
        return Symbol(nvars, {})

    @staticmethod
    def constant(c, nvars=1):
        z = _zero_key(nvars)
        return Symbol(nvars, {(z, z): scalar(c, nvars)})

    @staticmethod
    def term(c, i, j, nvars=1):
        """c * u^i * m^j (i, j ints in one variable, tuples otherwise)."""
        if nvars == 1 and not isinstance(i, tuple):
            i, j = (i,), (j,)
        return Symbol(nvars, {(tuple(i), tuple(j)): scalar(c, nvars)})

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return Symbol(self.nvars, out)

    def __neg__(self):
        return Symbol(self.nvars, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            s = scalar(other, self.nvars)
            return Symbol(self.nvars, {k: c * s for k, c in self.coeffs.items()})
        out = {}
        for (i1, j1), c1 in self.coeffs.items():
            for (i2, j2), c2 in other.coeffs.items():
                k = (tuple(a + b for a, b in zip(i1, i2)),
                     tuple(a + b for a, b in zip(j1, j2)))
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return Symbol(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return (self - other).is_zero()

    def subst_shift(self, e):
        """u |-> q^e u, m |-> m + e (the inner-shift substitution)."""
        n = self.nvars
        out = {}
        for (iv, jv), c in self.coeffs.items():
            for v in range(n):
                if e[v] and iv[v]:
                    c = c * ExactScalar.q_power(e[v] * iv[v], n, v)
            # expand prod_v (m_v + e_v)^{j_v}
            partial = {(): c}
            for v in range(n):
                nxt = {}
                for stem, cc in partial.items():
                    if e[v] == 0 or jv[v] == 0:
                        key = stem + (jv[v],)
                        nxt[key] = nxt[key] + cc if key in nxt else cc
                        continue
                    for r in range(jv[v] + 1):
                        w = math.comb(jv[v], r) * e[v] ** (jv[v] - r)
                        key = stem + (r,)
                        add = cc * w
                        nxt[key] = nxt[key] + add if key in nxt else add
                partial = nxt
            for jnew, cc in partial.items():
                k = (iv, jnew)
                out[k] = out[k] + cc if k in out else cc
        return Symbol(n, out)

    def substitute_coord(self, v, mval):
        """Set m_v = mval (so u_v = q_v^mval); coordinate v goes inert."""
        n = self.nvars
        out = {}
        for (iv, jv), c in self.coeffs.items():
            w = c
            if iv[v]:
                w = w * ExactScalar.q_power(iv[v] * mval, n, v)
            if jv[v]:
                w = w * (mval ** jv[v])
            k = (iv[:v] + (0,) + iv[v + 1:], jv[:v] + (0,) + jv[v + 1:])
            if k in out:
                out[k] = out[k] + w
            else:
                out[k] = w
        return Symbol(n, out)

    def eval_at(self, mvec):
        """The scalar s(q^m, m) at an integer exponent (vector)."""
        n = self.nvars
        out = ExactScalar.from_int(0, n)
        for (iv, jv), c in self.coeffs.items():
            w = c
            for v in range(n):
                if iv[v] and mvec[v]:
                    w = w * ExactScalar.q_power(iv[v] * mvec[v], n, v)
                if jv[v]:
                    w = w * (mvec[v] ** jv[v])
            out = out + w
        return out

    def is_m_free(self):
        return all(all(j == 0 for j in jv) for (_, jv) in self.coeffs)

    def max_m_degree(self):
        return max((sum(jv) for (_, jv) in self.coeffs), default=0)

    def __repr__(self):
        return f"Symbol({self})"

    def __str__(self):
        from .render import symbol_str
        return symbol_str(self)


# ---------------------------------------------------------------------------
# graded operators
# ---------------------------------------------------------------------------

class GradedOperator:
    """parts: {exponent-shift tuple: Symbol} over a tagged ring."""

    __slots__ = ("domain", "parts")

    def __init__(self, domain, parts):
        self.domain = domain
        clean = {}
        for e, s in parts.items():
            e = _tup(domain, e)
            if not s.is_zero():
                assert s.nvars == domain.nvars
                clean[e] = clean[e] + s if e in clean else s
        self.parts = {e: s for e, s in clean.items() if not s.is_zero()}

    @staticmethod
    def zero(domain):
        return GradedOperator(domain, {})

    @staticmethod
    def identity(domain):
        return GradedOperator(
            domain, {_zero_key(domain.nvars): Symbol.constant(1, domain.nvars)})

    def is_zero(self):
        return not self.parts

    def is_identity(self):
        return self == GradedOperator.identity(self.domain)

    def part(self, e):
        return self.parts.get(_tup(self.domain, e), Symbol.zero(self.domain.nvars))

    def degrees(self):
        if self.domain.nvars == 1:
            return sorted(e[0] for e in self.parts)
        return sorted(self.parts)

    def _chk(self, other):
        if not isinstance(other, GradedOperator) or other.domain != self.domain:
            raise DomainMismatch("operators live on different rings")
        return other

    def __add__(self, other):
        o = self._chk(other)
        out = dict(self.parts)
        for e, s in o.parts.items():
            out[e] = out[e] + s if e in out else s
        return GradedOperator(self.domain, out)

    def __neg__(self):
        return GradedOperator(self.domain, {e: -s for e, s in self.parts.items()})

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            c = scalar(other, self.domain.nvars)
            return GradedOperator(self.domain,
                                  {e: s * c for e, s in self.parts.items()})
        o = self._chk(other)
        out = {}
        for e1, s1 in self.parts.items():      # outer (applied second)
            for e2, s2 in o.parts.items():     # inner (applied first)
                e = tuple(a + b for a, b in zip(e1, e2))
                sym = s2 * s1.subst_shift(e2)
                out[e] = out[e] + sym if e in out else sym
        return GradedOperator(self.domain, out)

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        assert k >= 0
        out = GradedOperator.identity(self.domain)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        if self.domain != other.domain:
            return False
        keys = set(self.parts) | set(other.parts)
        z = Symbol.zero(self.domain.nvars)
        return all((self.parts.get(e, z) - other.parts.get(e, z)).is_zero()
                   for e in keys)

    def apply(self, p):
        if not isinstance(p, RingElement) or p.tag != self.domain:
            raise DomainMismatch("operand is not an element of the operator's ring")
        nv = self.domain.nvars
        out = {}
        zero = ExactScalar.from_int(0, nv)
        for m, c in p.terms.items():
            mv = m if isinstance(m, tuple) else (m,)
            for e, s in self.parts.items():
                val = s.eval_at(mv)
                if val.is_zero():
                    continue
                tgt = tuple(a + b for a, b in zip(mv, e))
                key = tgt if nv > 1 else tgt[0]
                out[key] = out.get(key, zero) + c * val
        return RingElement(self.domain, out)  # ctor raises OutOfSupport

    def check_preserves(self):
        """The defining support condition: parts with a negative shift kill
        the low monomials they would push out of the ring."""
        if self.domain.allows_negative:
            return True
        for e, s in self.parts.items():
            for v, ev in enumerate(e):
                if ev < 0:
                    for mval in range(-ev):
                        if not s.substitute_coord(v, mval).is_zero():
                            return False
        return True

    def grading_degrees(self):
        """Degree vectors of the homogeneous components (deg y = -1)."""
        sgn = self.domain.degree_sign
        return {tuple(sgn * x for x in e) for e in self.parts}

    def __repr__(self):
        return f"GradedOperator({self})"

    def __str__(self):
        from .render import operator_str
        return operator_str(self)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def generator(name, domain, arg=None):
    """The named generator as a GradedOperator on `domain`.

    one variable, direct degree:  x, tau, sigma(a), dbeta(a)
    one variable, inverse degree: y, partial_y, sigma_y(a), dbeta_y(a)
    n variables:                  x_i(i), sigma_vec(a), dbeta_i((i, k))
    """
    nv = domain.nvars
    q1 = ExactScalar.from_int(1, nv)

    if domain.kind in ("polyx", "laurent"):
        if name == "x":
            return GradedOperator(domain, {(1,): Symbol.constant(1)})
        if name == "tau":
            return GradedOperator(domain, {(0,): Symbol.term(1, 0, 1)})
        if name == "sigma":
            a = int(arg)
            return GradedOperator(domain, {(0,): Symbol.term(1, a, 0)})
        if name == "dbeta":
            a = int(arg) if arg is not None else 0
            if a == 0:
                return GradedOperator(domain, {(-1,): Symbol.term(1, 0, 1)})
            d = ExactScalar.q_power(a) - 1
            sym = Symbol.term(d.inverse(), a, 0) + Symbol.term(-d.inverse(), 0, 0)
            return GradedOperator(domain, {(-1,): sym})
        raise UnsupportedGenerator(f"no generator {name!r} on {domain!r}")

    if domain.kind == "polyy":
        if name == "y":
            return GradedOperator(domain, {(1,): Symbol.constant(1)})
        if name == "partial_y":
            return GradedOperator(domain, {(-1,): Symbol.term(1, 0, 1)})
        if name == "sigma_y":
            a = int(arg)
            return GradedOperator(domain, {(0,): Symbol.term(1, -a, 0)})
        if name == "dbeta_y":
            a = int(arg) if arg is not None else 0
            if a == 0:
                return GradedOperator(domain, {(-1,): Symbol.term(1, 0, 1)})
            d = ExactScalar.q_power(-a) - 1
            sym = Symbol.term(d.inverse(), -a, 0) + Symbol.term(-d.inverse(), 0, 0)
            return GradedOperator(domain, {(-1,): sym})
        raise UnsupportedGenerator(f"no generator {name!r} on {domain!r}")

    if domain.kind == "polyn":
        z = _zero_key(nv)
        if name == "x_i":
            i = int(arg)
            assert 0 <= i < nv
            e = tuple(1 if v == i else 0 for v in range(nv))
            return GradedOperator(domain, {e: Symbol.constant(1, nv)})
        if name == "sigma_vec":
            a = tuple(int(x) for x in arg)
            assert len(a) == nv
            return GradedOperator(domain, {z: Symbol(nv, {(a, z): q1})})
        if name == "dbeta_i":
            i, k = arg
            assert 0 <= i < nv
            e = tuple(-1 if v == i else 0 for v in range(nv))
            if k == 0:
                jv = tuple(1 if v == i else 0 for v in range(nv))
                return GradedOperator(domain, {e: Symbol(nv, {(z, jv): q1})})
            # (u_i^k - 1)/(q_i - 1): same denominator for every k != 0
            d = (ExactScalar.q_power(1, nv, i) - q1).inverse()
            iv = tuple(k if v == i else 0 for v in range(nv))
            sym = Symbol(nv, {(iv, z): d, (z, z): -d})
            return GradedOperator(domain, {e: sym})
        raise UnsupportedGenerator(f"no generator {name!r} on {domain!r}")

    raise UnsupportedGenerator(f"unknown domain {domain!r}")


# ---------------------------------------------------------------------------
# module-level operations in the contract's names
# ---------------------------------------------------------------------------

def compose(phi, psi):
    """phi after psi."""
    return phi * psi


def linear_combine(terms):
    """terms: iterable of (scalar, operator)."""
    terms = list(terms)
    assert terms
    out = None
    for c, op in terms:
        piece = op * scalar(c, op.domain.nvars)
        out = piece if out is None else out + piece
    return out


def apply(phi, p):
    return phi.apply(p)


def twisted_bracket(phi, psi, a=0):
    """[phi, psi]_a = phi psi - sum_b q^(a.b) psi_b phi over the homogeneous
    components psi_b of psi (grading degree, deg y = -1)."""
    d = phi._chk(psi).domain
    nv = d.nvars
    av = _tup(d, a)
    out = phi * psi
    sgn = d.degree_sign
    for e, s in psi.parts.items():
        w = ExactScalar.from_int(1, nv)
        for v in range(nv):
            t = av[v] * sgn * e[v]
            if t:
                w = w * ExactScalar.q_power(t, nv, v)
        out = out - GradedOperator(d, {e: s}) * phi * w
    return out


def equals(phi, psi):
    return phi == psi


def extend_to_laurent(phi):
    """Glue map into operators on k[x, x^-1].

    Direct-degree parts keep their symbols; an inverse-degree part with
    y-shift d and symbol t(w, n) becomes the x-shift -d with symbol
    t(u^-1, -m).
    """
    if phi.domain == LAURENT_X:
        return phi
    if phi.domain == POLY_X:
        return GradedOperator(LAURENT_X, dict(phi.parts))
    if phi.domain == POLY_Y:
        out = {}
        for (d,), s in phi.parts.items():
            coeffs = {}
            for ((i,), (j,)), c in s.coeffs.items():
                k = ((-i,), (j,))
                w = c if j % 2 == 0 else -c
                coeffs[k] = coeffs[k] + w if k in coeffs else w
            e = (-d,)
            sym = Symbol(1, coeffs)
            out[e] = out[e] + sym if e in out else sym
        return GradedOperator(LAURENT_X, out)
    raise DomainMismatch("only the one-variable rings extend to the Laurent ring")


def is_m_free(phi):
    return all(s.is_m_free() for s in phi.parts.values())


# ---------------------------------------------------------------------------
# truncation: D_q  ->  operators over Q[t]/(t^n), q = 1 + t
# ---------------------------------------------------------------------------

def _binom_mpoly(i, k):
    """Coefficients (in m) of binomial(i*m, k) over Q; degree k list."""
    poly = [Fraction(1)]
    for r in range(k):
        # multiply by (i*m - r)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d + 1] += c * i
            nxt[d] -= c * r
        poly = nxt
    fk = math.factorial(k)
    return [c / fk for c in poly]


def _one_plus_t_pow_im(i, level):
    """(1+t)^{i m} mod t^level as {m-degree: TruncatedScalar}."""
    out = {}
    for k in range(level):
        for d, c in enumerate(_binom_mpoly(i, k)):
            if c:
                ts = out.get(d)
                coeffs = list(ts.coeffs) if ts else [Fraction(0)] * level
                coeffs[k] += c
                out[d] = TruncatedScalar(level, coeffs)
    return out


class TruncatedOperator:
    """parts: {shift: {m-degree: TruncatedScalar}} at one truncation level."""

    __slots__ = ("domain", "level", "parts")

    def __init__(self, domain, level, parts):
        assert domain.nvars == 1
        self.domain = domain
        self.level = level
        clean = {}
        for e, f in parts.items():
            e = int(e[0]) if isinstance(e, tuple) else int(e)
            g = {j: c for j, c in f.items() if not c.is_zero()}
            if g:
                clean[e] = g
        self.parts = clean

    @staticmethod
    def zero(domain, level):
        return TruncatedOperator(domain, level, {})

    @staticmethod
    def identity(domain, level):
        return TruncatedOperator(domain, level,
                                 {0: {0: TruncatedScalar.one(level)}})

    def is_zero(self):
        return not self.parts

    def _chk(self, other):
        if self.domain != other.domain or self.level != other.level:
            raise DomainMismatch("truncated operators are not comparable")
        return other

    def __add__(self, other):
        o = self._chk(other)
        out = {e: dict(f) for e, f in self.parts.items()}
        for e, f in o.parts.items():
            g = out.setdefault(e, {})
            for j, c in f.items():
                g[j] = g[j] + c if j in g else c
        return TruncatedOperator(self.domain, self.level, out)

    def __neg__(self):
        return TruncatedOperator(
            self.domain, self.level,
            {e: {j: -c for j, c in f.items()} for e, f in self.parts.items()})

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __mul__(self, other):
        o = self._chk(other)
        out = {}
        for e1, f1 in self.parts.items():      # outer
            for e2, f2 in o.parts.items():     # inner
                prod = _mp_mul(f2, _mp_shift(f1, e2, self.level), self.level)
                e = e1 + e2
                g = out.setdefault(e, {})
                for j, c in prod.items():
                    g[j] = g[j] + c if j in g else c
        return TruncatedOperator(self.domain, self.level, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedOperator):
            return NotImplemented
        if self.domain != other.domain or self.level != other.level:
            return False
        return (self - other).is_zero()

    def bracket_with_x(self):
        """[phi, x]: per part, (e, f(m)) |-> (e+1, f(m+1) - f(m))."""
        out = {}
        for e, f in self.parts.items():
            diff = {}
            shifted = _mp_shift(f, 1, self.level)
            for j in set(f) | set(shifted):
                z = TruncatedScalar.zero(self.level)
                diff[j] = shifted.get(j, z) - f.get(j, z)
            out[e + 1] = diff
        return TruncatedOperator(self.domain, self.level, out)

    def max_m_degree(self):
        return max((max(f) for f in self.parts.values()), default=0)

    def __repr__(self):
        return f"TruncatedOperator({self})"

    def __str__(self):
        from .render import truncated_operator_str
        return truncated_operator_str(self)


def _mp_shift(f, e, level):
    """f(m + e) for an m-polynomial with truncated coefficients."""
    if e == 0:
        return dict(f)
    out = {}
    for j, c in f.items():
        for r in range(j + 1):
            w = math.comb(j, r) * e ** (j - r)
            add = c * Fraction(w)
            out[r] = out[r] + add if r in out else add
    return out


def _mp_mul(f, g, level):
    out = {}
    for j1, c1 in f.items():
        for j2, c2 in g.items():
            j = j1 + j2
            p = c1 * c2
            out[j] = out[j] + p if j in out else p
    return out


def truncate_operator(phi, n):
    """Image of phi over Q[t]/(t^n), q = 1 + t.

    Integrality is a property of whole symbols, not of their separate
    coefficients: the Laurent expansion of  sum_i c_ij(1+t) (1+t)^{im}
    must have no pole in t for each m-degree j.  We clear the worst
    coefficient pole V, expand to order n + V, demand that the V leading
    orders vanish identically in m, and shift down.
    """
    if phi.domain.nvars != 1:
        raise DomainMismatch("truncation is defined for the one-variable rings")
    qm1 = ExactScalar.q_power(1) - 1
    out = {}
    for e, s in phi.parts.items():
        worst = 0
        for c in s.coeffs.values():
            v = c.valuation_at_1()
            if v < 0:
                worst = max(worst, -int(v))
        level = n + worst
        clear = qm1 ** worst
        acc = {}
        for ((i,), (j,)), c in s.coeffs.items():
            tau = (c * clear).truncate(level)
            for d, ts in _one_plus_t_pow_im(i, level).items():
                k = d + j
                add = tau * ts
                acc[k] = acc[k] + add if k in acc else add
        for j, ts in acc.items():
            if any(ts.coeffs[r] != 0 for r in range(worst)):
                raise NotIntegralAtOne(
                    f"symbol at shift {e[0]} has a pole at q = 1")
        part = {j: TruncatedScalar(n, ts.coeffs[worst:worst + n])
                for j, ts in acc.items()}
        out[e] = part
    return TruncatedOperator(phi.domain, n, out)


def is_integral_at_1(phi):
    try:
        truncate_operator(phi, 1)
        return True
    except NotIntegralAtOne:
        return False


def bracket_nilpotence_order(phi_trunc):
    """Least N with the N-fold bracket-with-x of phi_trunc equal to zero
    (0 for the zero operator).  Finite: each bracket strictly lowers the
    m-degree, and the truncated coefficients live in a nilpotent ring."""
    n = 0
    cur = phi_trunc
    bound = cur.max_m_degree() + 2
    while not cur.is_zero():
        cur = cur.bracket_with_x()
        n += 1
        assert n <= bound, "nilpotence bound exceeded"
    return n
