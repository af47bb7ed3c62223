"""Exact scalars: the field Q(q) (or Q(q_1..q_n)) and its truncations.

A scalar is kept as  c * N/D  with c a rational number and N, D primitive
integer-coefficient polynomials, gcd(N, D) = 1, D with positive leading
coefficient.  That triple is canonical in one variable, so equality and
hashing are structural.  In several variables the reduction is best-effort
(content, common monomials, and a univariate gcd when both parts live in
the same single variable) and equality falls back to cross-multiplication.

`truncate` maps a scalar with no pole at q = 1 into Q[t]/(t^n) via
q = 1 + t; `valuation_at_1` is the (q-1)-adic valuation that guards it.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import kernel
from .errors import DivisionByZero, DomainMismatch, NotIntegralAtOne

_ONE = (1,)


def _mono(e):
    """The 1-variable integer polynomial q^e (e >= 0)."""
    return (0,) * e + (1,)


# ---------------------------------------------------------------------------
# multivariate helpers: dict {exponent-tuple: int}
# ---------------------------------------------------------------------------

def _mnorm(d):
    return {e: c for e, c in d.items() if c}


def _madd(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return _mnorm(out)


def _mmul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return _mnorm(out)


def _mscale(a, c):
    return {e: c * x for e, x in a.items()} if c else {}


def _mcontent(a):
    g = 0
    for c in a.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return g or 1


def _mlead(a):
    """Coefficient of the lexicographically largest exponent."""
    return a[max(a)] if a else 0


def _single_variable(a, nv):
    """-1 if a is constant, the lone live coordinate if univariate, else None."""
    var = -1
    for e in a:
        live = [i for i in range(nv) if e[i]]
        if len(live) > 1:
            return None
        if live:
            if var == -1:
                var = live[0]
            elif var != live[0]:
                return None
    return var


def _to_univ(a, v):
    out = [0] * (1 + max((e[v] for e in a), default=0))
    for e, c in a.items():
        out[e[v]] = c
    return out


def _from_univ(p, v, nv):
    out = {}
    for i, c in enumerate(p):
        if c:
            e = [0] * nv
            e[v] = i
            out[tuple(e)] = c
    return out


class ExactScalar:
    """An element of Q(q) -- or Q(q_1..q_n) when nvars > 1.  Immutable."""

    __slots__ = ("nvars", "c", "num", "den", "_hash")

    def __init__(self, nvars, c, num, den):
        # callers go through the factory helpers; this normalizes.
        if nvars == 1:
            num, den = kernel.pnorm(list(num)), kernel.pnorm(list(den))
            if not den:
                raise DivisionByZero("zero denominator")
            if not num or c == 0:
                self.nvars, self.c, self.num, self.den = 1, Fraction(0), _ONE, _ONE
                self._hash = None
                return
            cn, cd = kernel.pcontent(num), kernel.pcontent(den)
            c = Fraction(c) * Fraction(cn, cd)
            num = [x // cn for x in num]
            den = [x // cd for x in den]
            g = kernel.pgcd(num, den)
            if len(g) > 1 or g[0] != 1:
                num = kernel.pdiv_exact(num, g)
                den = kernel.pdiv_exact(den, g)
            if den[-1] < 0:
                den = [-x for x in den]
                num = [-x for x in num]
            if num[-1] < 0:
                num = [-x for x in num]
                c = -c
            self.nvars, self.c, self.num, self.den = 1, c, tuple(num), tuple(den)
        else:
            num, den = _mnorm(num), _mnorm(den)
            if not den:
                raise DivisionByZero("zero denominator")
            if not num or c == 0:
                one = {(0,) * nvars: 1}
                self.nvars, self.c = nvars, Fraction(0)
                self.num, self.den = one, dict(one)
                self._hash = None
                return
            cn, cd = _mcontent(num), _mcontent(den)
            c = Fraction(c) * Fraction(cn, cd)
            num = {e: x // cn for e, x in num.items()}
            den = {e: x // cd for e, x in den.items()}
            # cancel common monomial factors
            lows = [min(e[i] for e in num) for i in range(nvars)]
            lowd = [min(e[i] for e in den) for i in range(nvars)]
            shift = tuple(min(a, b) for a, b in zip(lows, lowd))
            if any(shift):
                num = {tuple(x - s for x, s in zip(e, shift)): v for e, v in num.items()}
                den = {tuple(x - s for x, s in zip(e, shift)): v for e, v in den.items()}
            vn = _single_variable(num, nvars)
            vd = _single_variable(den, nvars)
            if vn is not None and vd is not None and (vn == vd or vn == -1 or vd == -1):
                v = vn if vn != -1 else vd
                if v != -1:
                    un, ud = _to_univ(num, v), _to_univ(den, v)
                    g = kernel.pgcd(un, ud)
                    if len(g) > 1 or g[0] != 1:
                        un = kernel.pdiv_exact(un, g)
                        ud = kernel.pdiv_exact(ud, g)
                    num = _from_univ(un, v, nvars)
                    den = _from_univ(ud, v, nvars)
            if _mlead(den) < 0:
                den = _mscale(den, -1)
                num = _mscale(num, -1)
            self.nvars, self.c, self.num, self.den = nvars, c, num, den
        self._hash = None

    # -- factories ---------------------------------------------------------

    @staticmethod
    def from_int(k, nvars=1):
        if nvars == 1:
            return ExactScalar(1, Fraction(k), _ONE, _ONE)
        one = {(0,) * nvars: 1}
        return ExactScalar(nvars, Fraction(k), one, one)

    @staticmethod
    def from_fraction(f, nvars=1):
        if nvars == 1:
            return ExactScalar(1, Fraction(f), _ONE, _ONE)
        one = {(0,) * nvars: 1}
        return ExactScalar(nvars, Fraction(f), one, one)

    @staticmethod
    def q_power(e, nvars=1, var=0):
        """q^e (Laurent: e may be negative); in n variables, q_var^e."""
        if nvars == 1:
            if e >= 0:
                return ExactScalar(1, 1, _mono(e), _ONE)
            return ExactScalar(1, 1, _ONE, _mono(-e))
        exp = [0] * nvars
        exp[var] = abs(e)
        t = {tuple(exp): 1}
        one = {(0,) * nvars: 1}
        if e >= 0:
            return ExactScalar(nvars, 1, t, one)
        return ExactScalar(nvars, 1, one, t)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return self.c == 0

    def is_one(self):
        if self.nvars == 1:
            return self.c == 1 and self.num == _ONE and self.den == _ONE
        one = {(0,) * self.nvars: 1}
        return self.c == 1 and self.num == one and self.den == one

    def is_rational(self):
        if self.nvars == 1:
            return self.num == _ONE and self.den == _ONE
        one = {(0,) * self.nvars: 1}
        return self.num == one and self.den == one

    def as_fraction(self):
        assert self.is_rational()
        return self.c

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ExactScalar):
            if other.nvars != self.nvars:
                raise DomainMismatch(
                    f"scalar arity mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar.from_fraction(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.c == 0:
            return o
        if o.c == 0:
            return self
        if self.nvars == 1:
            a, b = self.c, o.c
            num = kernel.padd(
                kernel.pmul_int(kernel.pmul(list(self.num), list(o.den)), a.numerator * b.denominator),
                kernel.pmul_int(kernel.pmul(list(o.num), list(self.den)), b.numerator * a.denominator),
            )
            den = kernel.pmul(list(self.den), list(o.den))
            return ExactScalar(1, Fraction(1, a.denominator * b.denominator), num, den)
        a, b = self.c, o.c
        num = _madd(
            _mscale(_mmul(self.num, o.den), a.numerator * b.denominator),
            _mscale(_mmul(o.num, self.den), b.numerator * a.denominator),
        )
        den = _mmul(self.den, o.den)
        return ExactScalar(self.nvars, Fraction(1, a.denominator * b.denominator), num, den)

    __radd__ = __add__

    def __neg__(self):
        if self.c == 0:
            return self
        return ExactScalar(self.nvars, -self.c, self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.c == 0 or o.c == 0:
            return ExactScalar.from_int(0, self.nvars)
        if self.nvars == 1:
            # cross-cancel before multiplying to keep degrees down
            n1, d2 = list(self.num), list(o.den)
            g = kernel.pgcd(n1, d2)
            if len(g) > 1:
                n1, d2 = kernel.pdiv_exact(n1, g), kernel.pdiv_exact(d2, g)
            n2, d1 = list(o.num), list(self.den)
            g = kernel.pgcd(n2, d1)
            if len(g) > 1:
                n2, d1 = kernel.pdiv_exact(n2, g), kernel.pdiv_exact(d1, g)
            return ExactScalar(1, self.c * o.c, kernel.pmul(n1, n2), kernel.pmul(d1, d2))
        return ExactScalar(self.nvars, self.c * o.c,
                           _mmul(self.num, o.num), _mmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if self.c == 0:
            raise DivisionByZero("inverting zero scalar")
        return ExactScalar(self.nvars, 1 / self.c, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e == 0:
            return ExactScalar.from_int(1, self.nvars)
        base = self if e > 0 else self.inverse()
        out = base
        for _ in range(abs(e) - 1):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExactScalar.from_fraction(other, self.nvars)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if self.nvars == 1:
            return (self.c, self.num, self.den) == (other.c, other.num, other.den)
        # cross-multiplication: c1*N1*D2 == c2*N2*D1
        a, b = self.c, other.c
        left = _mscale(_mmul(self.num, other.den), a.numerator * b.denominator)
        right = _mscale(_mmul(other.num, self.den), b.numerator * a.denominator)
        return left == right

    def __hash__(self):
        if self._hash is None:
            if self.nvars == 1:
                self._hash = hash((self.c, self.num, self.den))
            else:
                # reps of equal multivariate scalars may differ; hash weakly
                self._hash = hash(("mscalar", self.nvars))
        return self._hash

    # -- q = 1 + t -----------------------------------------------------------

    def valuation_at_1(self):
        """(q-1)-adic valuation; +inf for 0.  One variable only."""
        if self.nvars != 1:
            raise DomainMismatch("valuation_at_1 is defined for one variable")
        if self.c == 0:
            return math.inf
        return _val1(self.num) - _val1(self.den)

    def truncate(self, n):
        """Image in Q[t]/(t^n) under q = 1+t.  Raises NotIntegralAtOne."""
        if self.nvars != 1:
            raise DomainMismatch("truncate is defined for one variable")
        assert n >= 1
        if self.c == 0:
            return TruncatedScalar.zero(n)
        if self.valuation_at_1() < 0:
            raise NotIntegralAtOne(f"pole of order {-self.valuation_at_1()} at q=1")
        nt = _sub1t(self.num)
        dt = _sub1t(self.den)
        v = next(i for i, c in enumerate(dt) if c)
        nt, dt = nt[v:], dt[v:]
        inv = _series_invert(dt, n)
        coeffs = [Fraction(0)] * n
        for i, cn in enumerate(nt[:n]):
            if cn:
                for j in range(n - i):
                    coeffs[i + j] += cn * inv[j]
        return TruncatedScalar(n, tuple(self.c * x for x in coeffs))

    # -- display -------------------------------------------------------------

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        from .render import scalar_str
        return scalar_str(self)


def _val1(p):
    """Multiplicity of the root q = 1 of an integer polynomial."""
    p = list(p)
    v = 0
    while True:
        if sum(p) != 0:
            return v
        # synthetic division by (q - 1)
        out = [0] * (len(p) - 1)
        acc = 0
        for i in range(len(p) - 1, 0, -1):
            acc += p[i]
            out[i - 1] = acc
        p = out
        v += 1
        if not p:
            return v


def _sub1t(p):
    """p(1+t) as a Fraction-coefficient list (Horner with shift-add)."""
    out = []
    for c in reversed(p):
        # out := out * (1+t) + c
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, x in enumerate(out):
            nxt[i] += x
            nxt[i + 1] += x
        nxt[0] += c
        out = nxt
    while out and out[-1] == 0:
        out.pop()
    return out


def _series_invert(d, n):
    """Inverse of d (d[0] != 0) modulo t^n, over Q."""
    inv = [Fraction(0)] * n
    inv[0] = Fraction(1) / d[0]
    for k in range(1, n):
        s = Fraction(0)
        for j in range(1, min(k, len(d) - 1) + 1):
            s += d[j] * inv[k - j]
        inv[k] = -s / d[0]
    return inv


# ---------------------------------------------------------------------------
# convenience values and q-combinatorics
# ---------------------------------------------------------------------------

ZERO = ExactScalar.from_int(0)
ONE = ExactScalar.from_int(1)
Q = ExactScalar.q_power(1)


def scalar(x, nvars=1):
    if isinstance(x, ExactScalar):
        return x
    return ExactScalar.from_fraction(Fraction(x), nvars)


def q_number(m, kind="gauss"):
    """Gauss [m] = (q^m-1)/(q-1) or balanced [m] = (q^m-q^-m)/(q-q^-1)."""
    if kind == "gauss":
        return (ExactScalar.q_power(m) - 1) / (Q - 1)
    if kind == "balanced":
        return (ExactScalar.q_power(m) - ExactScalar.q_power(-m)) / (Q - ExactScalar.q_power(-1))
    raise ValueError(f"unknown q-number kind {kind!r}")


def q_factorial(m, kind="balanced"):
    out = ONE
    for i in range(1, m + 1):
        out = out * q_number(i, kind)
    return out


def normalize(s):
    """Canonical form (constructors already normalize; kept as the spec op)."""
    return scalar(s)


def valuation_at_1(s):
    return scalar(s).valuation_at_1()


def truncate(s, n):
    return scalar(s).truncate(n)


# ---------------------------------------------------------------------------
# Q[t]/(t^n)
# ---------------------------------------------------------------------------

class TruncatedScalar:
    """An element of Q[t]/(t^n): `level` = n, `coeffs` = (c_0 .. c_{n-1})."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs):
        assert len(coeffs) == level
        self.level = level
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @staticmethod
    def zero(level):
        return TruncatedScalar(level, (Fraction(0),) * level)

    @staticmethod
    def one(level):
        return TruncatedScalar(level, (Fraction(1),) + (Fraction(0),) * (level - 1))

    @staticmethod
    def from_fraction(f, level):
        return TruncatedScalar(level, (Fraction(f),) + (Fraction(0),) * (level - 1))

    def _chk(self, other):
        if not isinstance(other, TruncatedScalar):
            other = TruncatedScalar.from_fraction(other, self.level)
        if other.level != self.level:
            raise DomainMismatch("truncation level mismatch")
        return other

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        o = self._chk(other)
        return TruncatedScalar(self.level,
                               tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedScalar(self.level, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __mul__(self, other):
        o = self._chk(other)
        n = self.level
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n - i):
                    out[i + j] += a * o.coeffs[j]
        return TruncatedScalar(n, tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedScalar.from_fraction(other, self.level)
        if not isinstance(other, TruncatedScalar):
            return NotImplemented
        return self.level == other.level and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.level, self.coeffs))

    def __repr__(self):
        return f"TruncatedScalar({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                if c == 1:
                    terms.append(t)
                elif c == -1:
                    terms.append(f"-{t}")
                else:
                    terms.append(f"{c}*{t}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out
