"""The underlying rings: k[x], k[y], k[x, x^-1], k[x_1..x_n], and the
quantum plane k<u, v>/(uv - q vu).

Ring elements are finite maps exponent -> scalar.  All four commutative
rings share one element type tagged by the ring; the plane gets its own
type because its product twists.
"""

from __future__ import annotations

from .errors import DomainMismatch, OutOfSupport
from .exactscalar import ExactScalar, scalar


class RingTag:
    """Which ring we are over.  kind in {polyx, polyy, laurent, polyn}."""

    __slots__ = ("kind", "nvars")

    def __init__(self, kind, nvars=1):
        assert kind in ("polyx", "polyy", "laurent", "polyn")
        self.kind = kind
        self.nvars = nvars

    @property
    def varname(self):
        return "y" if self.kind == "polyy" else "x"

    @property
    def allows_negative(self):
        return self.kind == "laurent"

    @property
    def degree_sign(self):
        """Grading degree per unit of exponent (deg y = -1)."""
        return -1 if self.kind == "polyy" else 1

    def __eq__(self, other):
        return isinstance(other, RingTag) and (self.kind, self.nvars) == (other.kind, other.nvars)

    def __hash__(self):
        return hash((self.kind, self.nvars))

    def __repr__(self):
        if self.kind == "polyn":
            return f"RingTag(polyn, n={self.nvars})"
        return f"RingTag({self.kind})"


POLY_X = RingTag("polyx")
POLY_Y = RingTag("polyy")
LAURENT_X = RingTag("laurent")


def poly_n(n):
    assert n >= 1
    return RingTag("polyn", n)


def _as_key(tag, e):
    if tag.kind == "polyn":
        e = tuple(e)
        assert len(e) == tag.nvars
        return e
    return int(e)


def _check_exponent(tag, e):
    if tag.kind == "polyn":
        if any(x < 0 for x in e):
            raise OutOfSupport(f"exponent {e} not in the polynomial ring")
    elif e < 0 and not tag.allows_negative:
        raise OutOfSupport(f"exponent {e} not in the polynomial ring")


class RingElement:
    """Element of the (commutative) ring named by `tag`."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag, terms):
        self.tag = tag
        clean = {}
        for e, c in terms.items():
            c = scalar(c, tag.nvars)
            if not c.is_zero():
                k = _as_key(tag, e)
                _check_exponent(tag, k)
                clean[k] = clean[k] + c if k in clean else c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @staticmethod
    def zero(tag):
        return RingElement(tag, {})

    @staticmethod
    def one(tag):
        e = (0,) * tag.nvars if tag.kind == "polyn" else 0
        return RingElement(tag, {e: ExactScalar.from_int(1, tag.nvars)})

    @staticmethod
    def monomial(tag, e, c=1):
        return RingElement(tag, {e: scalar(c, tag.nvars)})

    def is_zero(self):
        return not self.terms

    def _chk(self, other):
        if not isinstance(other, RingElement) or other.tag != self.tag:
            raise DomainMismatch("ring elements from different rings")
        return other

    def __add__(self, other):
        o = self._chk(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ExactScalar.from_int(0, self.tag.nvars)) + c
        return RingElement(self.tag, out)

    def __neg__(self):
        return RingElement(self.tag, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._chk(other))

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            s = scalar(other, self.tag.nvars)
            return RingElement(self.tag, {e: c * s for e, c in self.terms.items()})
        o = self._chk(other)
        out = {}
        nv = self.tag.nvars
        zero = ExactScalar.from_int(0, nv)
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2)) if self.tag.kind == "polyn" else e1 + e2
                out[e] = out.get(e, zero) + c1 * c2
        return RingElement(self.tag, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if self.tag != other.tag:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    def __hash__(self):
        return hash((self.tag, frozenset(self.terms)))

    def __repr__(self):
        return f"RingElement({self})"

    def __str__(self):
        from .render import ring_element_str
        return ring_element_str(self)


def ring_multiply(p, r):
    return p * r


# ---------------------------------------------------------------------------
# the quantum plane
# ---------------------------------------------------------------------------

class PlaneElement:
    """Element of k<u,v>/(uv = q vu) in normal form: sum of c * u^a v^b,
    a >= 0, b any integer (v is inverted)."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for (a, b), c in terms.items():
            c = scalar(c)
            if a < 0:
                raise OutOfSupport("negative u-power in the plane")
            if not c.is_zero():
                key = (a, b)
                clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: v for k, v in clean.items() if not v.is_zero()}

    @staticmethod
    def zero():
        return PlaneElement({})

    @staticmethod
    def one():
        return PlaneElement({(0, 0): 1})

    @staticmethod
    def monomial(a, b, c=1):
        return PlaneElement({(a, b): c})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ExactScalar.from_int(0)) + c
        return PlaneElement(out)

    def __neg__(self):
        return PlaneElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            s = scalar(other)
            return PlaneElement({k: c * s for k, c in self.terms.items()})
        out = {}
        zero = ExactScalar.from_int(0)
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                # v^b1 u^a2 = q^(-a2 b1) u^a2 v^b1
                w = ExactScalar.q_power(-a2 * b1)
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, zero) + c1 * c2 * w
        return PlaneElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, ExactScalar)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PlaneElement):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[k] == other.terms[k] for k in self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms))

    def __repr__(self):
        return f"PlaneElement({self})"

    def __str__(self):
        from .render import plane_element_str
        return plane_element_str(self)


def plane_multiply(s, t):
    return s * t


def x_of_plane(m=1):
    """The element x^m, x = u v^-1: x^m = q^(m(m-1)/2) u^m v^-m (m >= 0)."""
    if m < 0:
        raise OutOfSupport("x^m in the plane needs m >= 0")
    return PlaneElement({(m, -m): ExactScalar.q_power(m * (m - 1) // 2)})


def plane_to_x_poly(s):
    """Read an element supported on the x-line back as a polynomial in x.

    Returns the RingElement over k[x] with x^j-coefficient
    c_j / q^(j(j-1)/2), or None if some term is off the line u^j v^-j.
    """
    out = {}
    for (a, b), c in s.terms.items():
        if b != -a:
            return None
        out[a] = c * ExactScalar.q_power(-a * (a - 1) // 2)
    return RingElement(POLY_X, out)
