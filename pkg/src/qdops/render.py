"""Deterministic plain-text rendering for scalars, ring elements, symbols
and operators.  Exponents print in descending order; composite
coefficients are parenthesized so output re-parses unambiguously."""

import math
from fractions import Fraction


def _fmt_coeff_exp(c, var, e):
    """One monomial c*var^e with a Fraction coefficient."""
    if e == 0:
        return str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    v = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return v
    if c == -1:
        return f"-{v}"
    cs = str(c) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"
    return f"{cs}*{v}"


def _join(terms):
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out


def poly_terms_str(pairs, var):
    """pairs: iterable of (exponent, Fraction), rendered descending."""
    pairs = [(e, Fraction(c)) for e, c in pairs if c]
    pairs.sort(key=lambda t: -t[0])
    return _join([_fmt_coeff_exp(c, var, e) for e, c in pairs])


def _is_simple(s):
    """No internal + or - and no /: safe to splice without parens."""
    body = s[1:] if s.startswith("-") else s
    return not any(ch in body for ch in "+-/ ")


def _paren(s):
    return s if _is_simple(s) else f"({s})"


def scalar_str(s):
    from .exactscalar import ExactScalar  # noqa: F401 (documentation import)

    if s.c == 0:
        return "0"
    if s.nvars == 1:
        den = s.den
        if len([c for c in den if c]) == 1:
            # monomial denominator: print as a Laurent polynomial in q
            k = len(den) - 1
            lead = den[-1]
            pairs = [(i - k, s.c * Fraction(ci, lead))
                     for i, ci in enumerate(s.num) if ci]
            return poly_terms_str(pairs, "q")
        numpairs = [(i, s.c * ci) for i, ci in enumerate(s.num) if ci]
        ns = poly_terms_str(numpairs, "q")
        ds = poly_terms_str([(i, Fraction(ci)) for i, ci in enumerate(den) if ci], "q")
        return f"{_paren(ns)}/{_paren(ds)}"
    # several variables
    ns = _mpoly_str({e: s.c * c for e, c in s.num.items()})
    one = {(0,) * s.nvars: 1}
    if s.den == one:
        return ns
    ds = _mpoly_str({e: Fraction(c) for e, c in s.den.items()})
    return f"{_paren(ns)}/{_paren(ds)}"


def _mpoly_str(d):
    terms = []
    for e in sorted(d, reverse=True):
        c = Fraction(d[e])
        if not c:
            continue
        mono = "*".join(
            (f"q{v + 1}" if x == 1 else f"q{v + 1}^{x}")
            for v, x in enumerate(e) if x)
        if not mono:
            terms.append(str(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append(f"-{mono}")
        else:
            cs = str(c) if c.denominator == 1 else f"({c.numerator}/{c.denominator})"
            terms.append(f"{cs}*{mono}")
    return _join(terms)


def _coeff_prefix(cstr):
    if cstr == "1":
        return ""
    if cstr == "-1":
        return "-"
    return _paren(cstr) + "*"


def ring_element_str(p):
    if not p.terms:
        return "0"
    tag = p.tag
    terms = []
    for e in sorted(p.terms, reverse=True):
        c = scalar_str(p.terms[e])
        if tag.kind == "polyn":
            mono = "*".join(
                (f"x{v + 1}" if x == 1 else f"x{v + 1}^{x}")
                for v, x in enumerate(e) if x)
        else:
            v = tag.varname
            mono = "" if e == 0 else (v if e == 1 else f"{v}^{e}")
        if not mono:
            terms.append(c if _is_simple(c) else f"({c})")
        else:
            terms.append(_coeff_prefix(c) + mono)
    return _join(terms)


def plane_element_str(s):
    if not s.terms:
        return "0"
    terms = []
    for (a, b) in sorted(s.terms, reverse=True):
        c = scalar_str(s.terms[(a, b)])
        parts = []
        if a:
            parts.append("u" if a == 1 else f"u^{a}")
        if b:
            parts.append("v" if b == 1 else f"v^{b}")
        mono = "*".join(parts)
        if not mono:
            terms.append(c if _is_simple(c) else f"({c})")
        else:
            terms.append(_coeff_prefix(c) + mono)
    return _join(terms)


def symbol_str(sym, uvar="u", mvar="m"):
    """One-variable symbols get a common denominator; several variables
    print term by term."""
    if sym.is_zero():
        return "0"
    if sym.nvars == 1:
        return _symbol1_str(sym, uvar, mvar)
    terms = []
    for (iv, jv) in sorted(sym.coeffs, reverse=True):
        c = scalar_str(sym.coeffs[(iv, jv)])
        parts = []
        for v, x in enumerate(iv):
            if x:
                parts.append(f"{uvar}{v + 1}" if x == 1 else f"{uvar}{v + 1}^{x}")
        for v, x in enumerate(jv):
            if x:
                parts.append(f"{mvar}{v + 1}" if x == 1 else f"{mvar}{v + 1}^{x}")
        mono = "*".join(parts)
        if not mono:
            terms.append(c if _is_simple(c) else f"({c})")
        else:
            terms.append(_coeff_prefix(c) + mono)
    return _join(terms)


def _symbol1_str(sym, uvar, mvar):
    from . import kernel

    # common denominator over the coefficients
    den = [1]
    dlcm = 1
    for c in sym.coeffs.values():
        g = kernel.pgcd(den, list(c.den))
        den = kernel.pdiv_exact(kernel.pmul(den, list(c.den)), g)
        dlcm = dlcm * c.c.denominator // math.gcd(dlcm, c.c.denominator)
    terms = []
    for (iv, jv) in sorted(sym.coeffs, reverse=True):
        c = sym.coeffs[(iv, jv)]
        i, j = iv[0], jv[0]
        mult = kernel.pdiv_exact(den, list(c.den))
        npoly = kernel.pmul_int(kernel.pmul(list(c.num), mult),
                                c.c.numerator * (dlcm // c.c.denominator))
        cs = poly_terms_str([(k, Fraction(x)) for k, x in enumerate(npoly) if x], "q")
        parts = []
        if i:
            parts.append(uvar if i == 1 else f"{uvar}^{i}")
        if j:
            parts.append(mvar if j == 1 else f"{mvar}^{j}")
        mono = "*".join(parts)
        if not mono:
            terms.append(cs if _is_simple(cs) else f"({cs})")
        else:
            terms.append(_coeff_prefix(cs) + mono)
    num_str = _join(terms)
    if den == [1] and dlcm == 1:
        return num_str
    den_str = poly_terms_str([(k, Fraction(x * dlcm)) for k, x in enumerate(den) if x], "q")
    return f"{_paren(num_str)}/{_paren(den_str)}"


def _symbol_vars(domain):
    return ("w", "n") if domain.kind == "polyy" else ("u", "m")


def operator_str(op):
    if not op.parts:
        return "0"
    uvar, mvar = _symbol_vars(op.domain)
    lines = []
    for e in sorted(op.parts):
        key = e[0] if op.domain.nvars == 1 else e
        lines.append(f"[e={key}] {symbol_str(op.parts[e], uvar, mvar)}")
    return "; ".join(lines)


def truncated_operator_str(op):
    if not op.parts:
        return "0"
    lines = []
    for e in sorted(op.parts):
        f = op.parts[e]
        terms = []
        for j in sorted(f, reverse=True):
            cs = str(f[j])
            mono = "" if j == 0 else ("m" if j == 1 else f"m^{j}")
            if not mono:
                terms.append(cs if _is_simple(cs) else f"({cs})")
            else:
                terms.append(_coeff_prefix(cs) + mono)
        lines.append(f"[e={e}] {_join(terms)}")
    return "; ".join(lines)
