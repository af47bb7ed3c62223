"""Expression trees over the generators, with a parser, a printer, an
evaluator into graded operators, a shape normal form, and the degree-zero
decomposition into the commutative sigma/tau subalgebra.

Grammar (operator mode):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-'? atom ('^' int)?
    atom   := 'x' | 'tau' | 's[' ints ']' | 'D[' int ']' | scalar
            | '(' expr ')' | 'bracket(' expr ',' expr (',' int)? ')'

with `q` and integer/rational literals as scalars.  On the inverse-degree
ring the same leaves read y-side (`x` ~ y, `s[a]` ~ sigma_y(a), `D[a]` ~
dbeta_y(a)); with n variables the leaves are `x1..xn`, `s[a1,..,an]` and
`Di[k]`.  Division is parsed at term level and must divide by a scalar.
"""

from __future__ import annotations

from .errors import (
    EngineError,
    NotDegreeZero,
    ParseError,
    UnsupportedGenerator,
)
from .exactscalar import ExactScalar, scalar
from .opsym import GradedOperator, Symbol, generator, twisted_bracket
from .rings import POLY_X, RingTag


# ---------------------------------------------------------------------------
# nodes
# ---------------------------------------------------------------------------

class OperatorExpr:
    def __eq__(self, other):
        return type(self) is type(other) and self.key() == other.key()

    def __hash__(self):
        return hash((type(self).__name__, self.key()))

    def __str__(self):
        return expr_str(self)

    def __repr__(self):
        return f"<expr {self}>"

    def __add__(self, other):
        return EAdd(self, _as_expr(other))

    def __sub__(self, other):
        return ESub(self, _as_expr(other))

    def __mul__(self, other):
        return EMul(self, _as_expr(other))

    def __rmul__(self, other):
        return EMul(_as_expr(other), self)

    def __pow__(self, k):
        return EPow(self, k)


def _as_expr(v):
    if isinstance(v, OperatorExpr):
        return v
    return ENum(scalar(v))


class ENum(OperatorExpr):
    def __init__(self, value):
        self.value = scalar(value)

    def key(self):
        return self.value


class EGen(OperatorExpr):
    """A generator leaf: name in {x, tau, s, D, x_i, sigma_vec, dbeta_i,
    E, F, K, Kinv, Ediv, Fdiv}; arg as the generator wants it."""

    def __init__(self, name, arg=None):
        self.name = name
        self.arg = arg

    def key(self):
        return (self.name, self.arg)


class EAdd(OperatorExpr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def key(self):
        return (self.a, self.b)


class ESub(OperatorExpr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def key(self):
        return (self.a, self.b)


class EMul(OperatorExpr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def key(self):
        return (self.a, self.b)


class EDiv(OperatorExpr):
    def __init__(self, a, b):
        self.a, self.b = a, b

    def key(self):
        return (self.a, self.b)


class ENeg(OperatorExpr):
    def __init__(self, a):
        self.a = a

    def key(self):
        return self.a


class EPow(OperatorExpr):
    def __init__(self, base, k):
        self.base, self.k = base, int(k)

    def key(self):
        return (self.base, self.k)


class EBracket(OperatorExpr):
    def __init__(self, a, b, twist=0):
        self.a, self.b, self.twist = a, b, twist

    def key(self):
        return (self.a, self.b, self.twist)


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------

_PREC_SUM, _PREC_MUL, _PREC_POW, _PREC_ATOM = 0, 1, 2, 3


def _scalar_atom(v):
    s = str(v)
    plain = s[1:] if s.startswith("-") else s
    if any(ch in plain for ch in "+-*/ "):
        return f"({s})", _PREC_ATOM
    return s, (_PREC_MUL if s.startswith("-") else _PREC_ATOM)


def _render(e):
    """-> (text, precedence of its top node)."""
    if isinstance(e, ENum):
        return _scalar_atom(e.value)
    if isinstance(e, EGen):
        n, a = e.name, e.arg
        if n in ("x", "tau", "E", "F", "K", "Kinv"):
            return n, _PREC_ATOM
        if n == "s":
            return f"s[{a}]", _PREC_ATOM
        if n == "D":
            return f"D[{a}]", _PREC_ATOM
        if n in ("Ediv", "Fdiv"):
            return f"{n}[{a}]", _PREC_ATOM
        if n == "x_i":
            return f"x{a + 1}", _PREC_ATOM
        if n == "sigma_vec":
            return "s[" + ",".join(str(v) for v in a) + "]", _PREC_ATOM
        if n == "dbeta_i":
            i, k = a
            return f"D{i + 1}[{k}]", _PREC_ATOM
        raise UnsupportedGenerator(f"cannot print generator {n!r}")
    if isinstance(e, EAdd):
        la, _ = _render_at(e.a, _PREC_SUM)
        rb, _ = _render_at(e.b, _PREC_MUL)
        if rb.startswith("-"):
            return f"{la}-{rb[1:]}", _PREC_SUM
        return f"{la}+{rb}", _PREC_SUM
    if isinstance(e, ESub):
        la, _ = _render_at(e.a, _PREC_SUM)
        rb, _ = _render_at(e.b, _PREC_MUL)
        return f"{la}-{rb}", _PREC_SUM
    if isinstance(e, EMul):
        la, _ = _render_at(e.a, _PREC_MUL)
        rb, _ = _render_at(e.b, _PREC_POW)
        return f"{la}*{rb}", _PREC_MUL
    if isinstance(e, EDiv):
        la, _ = _render_at(e.a, _PREC_MUL)
        rb, _ = _render_at(e.b, _PREC_ATOM)
        return f"{la}/{rb}", _PREC_MUL
    if isinstance(e, ENeg):
        ra, _ = _render_at(e.a, _PREC_POW)
        return f"-{ra}", _PREC_MUL
    if isinstance(e, EPow):
        rb, _ = _render_at(e.base, _PREC_ATOM)
        return f"{rb}^{e.k}", _PREC_POW
    if isinstance(e, EBracket):
        parts = [expr_str(e.a), expr_str(e.b)]
        if e.twist:
            parts.append(str(e.twist))
        return "bracket(" + ",".join(parts) + ")", _PREC_ATOM
    raise EngineError(f"unknown expression node {type(e).__name__}")


def _render_at(e, need):
    s, p = _render(e)
    if p < need:
        return f"({s})", _PREC_ATOM
    return s, p


def expr_str(e):
    return _render(e)[0]


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

class _Tokens:
    def __init__(self, text):
        self.text = text
        self.toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("int", text[i:j], i))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                self.toks.append(("name", text[i:j], i))
                i = j
                continue
            if ch in "+-*/^()[],":
                self.toks.append((ch, ch, i))
                i += 1
                continue
            raise ParseError(i, f"unexpected character {ch!r}")
        self.toks.append(("end", "", n))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ParseError(t[2], f"expected {kind!r}, found {t[1]!r}")
        return t


def _parse_int(tk):
    neg = False
    t = tk.peek()
    if t[0] == "-":
        tk.next()
        neg = True
    t = tk.expect("int")
    v = int(t[1])
    return -v if neg else v


def _parse_bracket_args(tk, mode):
    tk.expect("(")
    a = _parse_expr(tk, mode)
    tk.expect(",")
    b = _parse_expr(tk, mode)
    twist = 0
    if tk.peek()[0] == ",":
        tk.next()
        twist = _parse_int(tk)
    tk.expect(")")
    return EBracket(a, b, twist)


_UQ_LEAVES = {"E", "F", "K", "Kinv"}


def _parse_atom(tk, mode):
    t = tk.peek()
    if t[0] == "(":
        tk.next()
        e = _parse_expr(tk, mode)
        tk.expect(")")
        return e
    if t[0] == "int":
        tk.next()
        return ENum(ExactScalar.from_int(int(t[1])))
    if t[0] != "name":
        raise ParseError(t[2], f"unexpected {t[1]!r}")
    name = t[1]
    tk.next()
    if name == "q":
        return ENum(ExactScalar.q_power(1))
    if name == "bracket":
        return _parse_bracket_args(tk, mode)
    if mode == "uq":
        if name in _UQ_LEAVES:
            return EGen(name)
        if name in ("Ediv", "Fdiv"):
            tk.expect("[")
            m = _parse_int(tk)
            tk.expect("]")
            if m < 0:
                raise ParseError(t[2], "divided powers need a nonnegative index")
            return EGen(name, m)
        raise ParseError(t[2], f"unknown quantum-group leaf {name!r}")
    if name in ("x", "y"):
        return EGen("x")
    if name == "tau":
        return EGen("tau")
    if name == "s":
        tk.expect("[")
        vals = [_parse_int(tk)]
        while tk.peek()[0] == ",":
            tk.next()
            vals.append(_parse_int(tk))
        tk.expect("]")
        if len(vals) == 1:
            return EGen("s", vals[0])
        return EGen("sigma_vec", tuple(vals))
    if name == "D":
        tk.expect("[")
        a = _parse_int(tk)
        tk.expect("]")
        return EGen("D", a)
    if len(name) > 1 and name[0] == "x" and name[1:].isdigit():
        return EGen("x_i", int(name[1:]) - 1)
    if len(name) > 1 and name[0] == "D" and name[1:].isdigit():
        i = int(name[1:]) - 1
        tk.expect("[")
        k = _parse_int(tk)
        tk.expect("]")
        return EGen("dbeta_i", (i, k))
    raise ParseError(t[2], f"unknown name {name!r}")


def _parse_factor(tk, mode):
    if tk.peek()[0] == "-":
        tk.next()
        return ENeg(_parse_factor(tk, mode))
    a = _parse_atom(tk, mode)
    if tk.peek()[0] == "^":
        tk.next()
        k = _parse_int(tk)
        return EPow(a, k)
    return a


def _parse_term(tk, mode):
    e = _parse_factor(tk, mode)
    while tk.peek()[0] in ("*", "/"):
        op = tk.next()[0]
        rhs = _parse_factor(tk, mode)
        e = EMul(e, rhs) if op == "*" else EDiv(e, rhs)
    return e


def _parse_expr(tk, mode):
    e = _parse_term(tk, mode)
    while tk.peek()[0] in ("+", "-"):
        op = tk.next()[0]
        rhs = _parse_term(tk, mode)
        e = EAdd(e, rhs) if op == "+" else ESub(e, rhs)
    return e


def parse(text, mode="operator"):
    tk = _Tokens(text)
    e = _parse_expr(tk, mode)
    t = tk.peek()
    if t[0] != "end":
        raise ParseError(t[2], f"trailing input {t[1]!r}")
    return e


# ---------------------------------------------------------------------------
# evaluation into graded operators
# ---------------------------------------------------------------------------

def _gen_on(domain, name, arg):
    if domain.kind == "polyn":
        if name in ("x_i", "sigma_vec", "dbeta_i"):
            return generator(name, domain, arg)
        raise UnsupportedGenerator(
            f"leaf {name!r} is not available with n variables")
    if domain.kind == "polyy":
        table = {"x": ("y", None), "s": ("sigma_y", arg), "D": ("dbeta_y", arg)}
        if name == "tau":
            return GradedOperator(domain, {(0,): Symbol.term(1, 0, 1)})
        if name in table:
            gname, garg = table[name]
            return generator(gname, domain, garg)
        raise UnsupportedGenerator(f"leaf {name!r} is not available on k[y]")
    if name == "x":
        return generator("x", domain)
    if name == "tau":
        return generator("tau", domain)
    if name == "s":
        return generator("sigma", domain, arg)
    if name == "D":
        return generator("dbeta", domain, arg)
    raise UnsupportedGenerator(f"leaf {name!r} is not available on {domain!r}")


def _promote(v, domain):
    if isinstance(v, GradedOperator):
        return v
    return GradedOperator.identity(domain) * v


def _invert_monomial(op):
    """Inverse of c*u^i at shift e (shift must be legal on the domain)."""
    if len(op.parts) != 1:
        raise EngineError("operator is not invertible")
    (e, s), = op.parts.items()
    if len(s.coeffs) != 1:
        raise EngineError("operator is not invertible")
    ((iv, jv), c), = s.coeffs.items()
    if any(jv):
        raise EngineError("operator is not invertible")
    if any(e) and not op.domain.allows_negative:
        raise EngineError("operator is not invertible on this ring")
    nv = op.domain.nvars
    w = c.inverse()
    for v in range(nv):
        if e[v] * iv[v]:
            w = w * ExactScalar.q_power(e[v] * iv[v], nv, v)
    inv_key = (tuple(-x for x in iv), tuple(jv))
    return GradedOperator(op.domain,
                          {tuple(-x for x in e): Symbol(nv, {inv_key: w})})


def evaluate(e, domain=POLY_X):
    """Expression -> GradedOperator (scalars become scalar multiples of 1)."""
    v = _eval(e, domain, {})
    return _promote(v, domain)


def _eval(e, domain, memo):
    # expression trees built by the integration recursion share subtrees;
    # caching on node identity keeps their evaluation linear in the dag size
    got = memo.get(id(e))
    if got is not None:
        return got
    v = _eval_node(e, domain, memo)
    memo[id(e)] = v
    return v


def _eval_node(e, domain, memo):
    if isinstance(e, ENum):
        if e.value.nvars != domain.nvars:
            if e.value.is_rational():
                return ExactScalar.from_fraction(e.value.as_fraction(), domain.nvars)
            raise UnsupportedGenerator("scalar arity does not fit the ring")
        return e.value
    if isinstance(e, EGen):
        return _gen_on(domain, e.name, e.arg)
    if isinstance(e, EAdd):
        a, b = _eval(e.a, domain, memo), _eval(e.b, domain, memo)
        if isinstance(a, ExactScalar) and isinstance(b, ExactScalar):
            return a + b
        return _promote(a, domain) + _promote(b, domain)
    if isinstance(e, ESub):
        a, b = _eval(e.a, domain, memo), _eval(e.b, domain, memo)
        if isinstance(a, ExactScalar) and isinstance(b, ExactScalar):
            return a - b
        return _promote(a, domain) - _promote(b, domain)
    if isinstance(e, EMul):
        a, b = _eval(e.a, domain, memo), _eval(e.b, domain, memo)
        if isinstance(a, ExactScalar) or isinstance(b, ExactScalar):
            return a * b
        return a * b
    if isinstance(e, EDiv):
        a, b = _eval(e.a, domain, memo), _eval(e.b, domain, memo)
        if not isinstance(b, ExactScalar):
            raise EngineError("division by an operator")
        return a * b.inverse()
    if isinstance(e, ENeg):
        return -_eval(e.a, domain, memo)
    if isinstance(e, EPow):
        a = _eval(e.base, domain, memo)
        if isinstance(a, ExactScalar):
            return a ** e.k
        if e.k >= 0:
            return a ** e.k
        return _invert_monomial(a) ** (-e.k)
    if isinstance(e, EBracket):
        a = _promote(_eval(e.a, domain, memo), domain)
        b = _promote(_eval(e.b, domain, memo), domain)
        return twisted_bracket(a, b, e.twist)
    raise EngineError(f"cannot evaluate node {type(e).__name__}")


# ---------------------------------------------------------------------------
# degree-zero decomposition
# ---------------------------------------------------------------------------

def decompose_degree0(op):
    """Write a degree-zero operator as a polynomial in sigma^{+-1} and tau.

    Symbol sum c_ij u^i m^j  |->  expression sum c_ij * s[i] * tau^j.
    """
    if isinstance(op, OperatorExpr):
        op = evaluate(op)
    if op.domain.nvars != 1:
        raise NotDegreeZero("decomposition is defined for one variable")
    bad = [e for e in op.parts if any(e)]
    if bad:
        raise NotDegreeZero(f"operator has parts of degree {sorted(bad)}")
    if op.is_zero():
        return ENum(ExactScalar.from_int(0))
    sym = op.parts[(0,)]
    out = None
    for (iv, jv) in sorted(sym.coeffs, reverse=True):
        c = sym.coeffs[(iv, jv)]
        i, j = iv[0], jv[0]
        factor = None
        if i:
            factor = EGen("s", i)
        if j:
            tau = EGen("tau") if j == 1 else EPow(EGen("tau"), j)
            factor = tau if factor is None else EMul(factor, tau)
        if factor is None:
            term = ENum(c)
        elif c.is_one():
            term = factor
        else:
            term = EMul(ENum(c), factor)
        out = term if out is None else EAdd(out, term)
    return out
