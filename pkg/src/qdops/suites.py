"""Named verification suites.

Every suite is a battery of identity checks computed exactly in Q(q)
(or its n-variable analogue); nothing is floating point and nothing is
tolerance-based.  Randomized batteries draw all randomness through
``random.Random(seed)``, so a (suite, max_degree, cases, seed) tuple
reproduces the same report byte for byte.

Reports are plain data (`SuiteReport` holding `CheckResult` rows) so the
command line tool can render them as text or JSON without re-running
anything.
"""

import itertools
import random
from fractions import Fraction

from .errors import CompatibilityViolation, UnknownSuite
from .exactscalar import ExactScalar, scalar, q_factorial
from .rings import POLY_X, POLY_Y, poly_n, RingElement
from .opsym import (GradedOperator, generator, twisted_bracket, equals,
                    is_m_free, truncate_operator, bracket_nilpotence_order,
                    TruncatedOperator)
from .opexpr import (EGen, EMul, ENum, evaluate, decompose_degree0)
from .shapes import ShapeForm, shape_normalize
from . import algorithms as alg
from . import qgroup


class CheckResult:
    """One named identity (or identity family) inside a suite."""

    __slots__ = ("label", "passed", "cases", "detail")

    def __init__(self, label, passed, cases=1, detail=""):
        self.label = label
        self.passed = bool(passed)
        self.cases = int(cases)
        self.detail = detail

    def as_dict(self):
        d = {"label": self.label, "passed": self.passed, "cases": self.cases}
        if self.detail:
            d["detail"] = self.detail
        return d


class SuiteReport:
    __slots__ = ("name", "params", "checks")

    def __init__(self, name, params, checks):
        self.name = name
        self.params = dict(params)
        self.checks = list(checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def total_cases(self):
        return sum(c.cases for c in self.checks)

    def lines(self):
        out = [f"suite {self.name}  "
               + " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"  [{mark}] {c.label} ({c.cases} case"
            line += "s)" if c.cases != 1 else ")"
            if c.detail:
                line += f" -- {c.detail}"
            out.append(line)
        out.append(f"verdict: {'PASS' if self.passed else 'FAIL'} "
                   f"({self.total_cases} cases)")
        return out

    def as_dict(self):
        return {"suite": self.name,
                "params": self.params,
                "checks": [c.as_dict() for c in self.checks],
                "verdict": "PASS" if self.passed else "FAIL"}


# ---------------------------------------------------------------------------
# small constructors shared by the batteries
# ---------------------------------------------------------------------------

def _g(name, arg=None, domain=POLY_X):
    return generator(name, domain, arg)


def _one(domain=POLY_X):
    return GradedOperator.identity(domain)


def _qp(e):
    return ExactScalar.q_power(e)


_WORD_ATOMS = (("x", None), ("sigma", 1), ("sigma", -1), ("tau", None),
               ("dbeta", -2), ("dbeta", -1), ("dbeta", 0),
               ("dbeta", 1), ("dbeta", 2))


def _rand_scalar(rng, nvars=1):
    num = rng.choice((-3, -2, -1, 1, 2, 3))
    den = rng.randint(1, 3)
    c = ExactScalar.from_fraction(Fraction(num, den), nvars)
    e = rng.randint(-2, 2)
    if e:
        c = c * ExactScalar.q_power(e, nvars, var=rng.randrange(nvars))
    return c


def _rand_word(rng, length, domain=POLY_X):
    gop = _one(domain)
    for _ in range(length):
        name, arg = rng.choice(_WORD_ATOMS)
        gop = gop * _g(name, arg, domain)
    return gop


def _rand_degree0(rng, natoms):
    """A random word of degree-zero factors: sigma powers, tau, x*dbeta."""
    x = _g("x")
    gop = _one()
    for _ in range(natoms):
        kind = rng.randrange(3)
        if kind == 0:
            gop = gop * _g("sigma", rng.choice((-2, -1, 1, 2)))
        elif kind == 1:
            gop = gop * _g("tau")
        else:
            gop = gop * (x * _g("dbeta", rng.randint(-2, 2)))
    return gop


def _mul_chain(factors):
    e = factors[0]
    for f in factors[1:]:
        e = EMul(e, f)
    return e


def _rand_degree0_expr(rng, max_leaves=8):
    """Random degree-zero expression over the shape-admissible leaves."""
    k = rng.randint(0, (max_leaves - 0) // 2 - 1)  # number of x / D pairs
    leaves = [EGen("x")] * k
    leaves += [EGen("D", rng.choice((-1, 0, 1))) for _ in range(k)]
    for _ in range(rng.randint(0, max_leaves - 2 * k)):
        leaves.append(EGen("s", rng.choice((-1, 1))))
    if not leaves:
        return ENum(1)
    rng.shuffle(leaves)
    return _mul_chain(leaves)


# ---------------------------------------------------------------------------
# the batteries
# ---------------------------------------------------------------------------

def _suite_note_identities(md, cases, seed):
    amax = max(2, md)
    d = lambda a: _g("dbeta", a)
    s = lambda a: _g("sigma", a)
    one = _one()
    checks = []

    n = ok = 0
    for a in range(1, amax + 1):
        ladder = _one() * 0
        for i in range(a):
            ladder = ladder + s(i)
        f = (ExactScalar.from_int(1) - _qp(1)) / (ExactScalar.from_int(1) - _qp(a))
        ok += equals(d(a), (d(1) * ladder) * f)
        n += 1
    checks.append(CheckResult("one-step ladder, positive twist", ok == n, n))

    n = ok = 0
    for m in range(0, 9):
        xm = RingElement.monomial(POLY_X, m)
        img = d(0).apply(xm)
        want = (RingElement.monomial(POLY_X, m - 1, m) if m
                else RingElement.zero(POLY_X))
        ok += img == want
        n += 1
    checks.append(CheckResult("zero twist is the classical derivative",
                              ok == n, n))

    n = ok = 0
    for a in range(1, amax + 1):
        ladder = _one() * 0
        for i in range(a):
            ladder = ladder + s(-i)
        f = (ExactScalar.from_int(1) - _qp(-1)) / (ExactScalar.from_int(1) - _qp(-a))
        ok += equals(d(-a), (d(-1) * ladder) * f)
        n += 1
    checks.append(CheckResult("one-step ladder, negative twist", ok == n, n))

    n = ok = 0
    for a in range(-3, 4):
        ok += equals(d(a), s(a) * d(-a))
        n += 1
    checks.append(CheckResult("twist mirror d^(a) = s[a] d^(-a)", ok == n, n))
    return checks


def _suite_intrinsic_relations(md, cases, seed):
    rng = random.Random(seed)
    amax = max(1, md)
    d = lambda a: _g("dbeta", a)
    x = _g("x")
    one = _one()
    checks = []

    n = ok = 0
    for a in range(-amax, amax + 1):
        ok += equals(d(a) * x - (x * d(a)) * _qp(a), one)
        n += 1
    checks.append(CheckResult("q-Leibniz family", ok == n, n))

    n = ok = 0
    for a in range(-amax, amax + 1):
        for b in range(-amax, amax + 1):
            ok += equals(d(a) * x * d(b), d(b) * x * d(a))
            n += 1
    checks.append(CheckResult("exchange family", ok == n, n))

    lhs = d(-1) - d(1) * _qp(1)
    rhs = (d(-1) * x * d(1)) * (ExactScalar.from_int(1) - _qp(1))
    ok = equals(lhs, rhs)
    lhs = d(1) - d(-1) * _qp(-1)
    rhs = (d(1) * x * d(-1)) * (ExactScalar.from_int(1) - _qp(-1))
    ok = ok and equals(lhs, rhs)
    checks.append(CheckResult("special relation (both mirrors)", ok, 2))

    n = ok = 0
    for _ in range(cases):
        e = _rand_degree0_expr(rng)
        op = evaluate(e)
        shaped = evaluate(shape_normalize(e).to_expr())
        good = equals(shaped, op)
        dec = decompose_degree0(op)
        good = good and equals(evaluate(dec), op)
        ok += good
        n += 1
    checks.append(CheckResult("relation completeness probe", ok == n, n))
    return checks


def _suite_d0_commutative(md, cases, seed):
    rng = random.Random(seed)
    checks = []
    n = ok = 0
    for _ in range(cases):
        a = _rand_degree0(rng, rng.randint(1, max(2, md)))
        b = _rand_degree0(rng, rng.randint(1, max(2, md)))
        ok += equals(a * b, b * a)
        n += 1
    checks.append(CheckResult("degree-zero words commute", ok == n, n))

    n = ok = 0
    for _ in range(cases // 2 or 1):
        gop = _rand_degree0(rng, rng.randint(1, max(2, md)))
        gop = gop * _rand_scalar(rng)
        ok += equals(evaluate(decompose_degree0(gop)), gop)
        n += 1
    checks.append(CheckResult("decomposition round trip", ok == n, n))
    return checks


def _suite_domain_sample(md, cases, seed):
    rng = random.Random(seed)
    n = ok = 0
    for _ in range(cases):
        a = _rand_word(rng, rng.randint(1, max(2, md))) * _rand_scalar(rng)
        b = _rand_word(rng, rng.randint(1, max(2, md))) * _rand_scalar(rng)
        ok += not (a * b).is_zero()
        n += 1
    return [CheckResult("products of nonzero words are nonzero", ok == n, n)]


def _suite_qcenter(md, cases, seed):
    rng = random.Random(seed)
    x = _g("x")
    d0 = _g("dbeta", 0)
    one = _one()
    checks = []

    n = ok = 0
    for _ in range(cases):
        c = one * _rand_scalar(rng)
        w = _rand_word(rng, rng.randint(1, max(2, md)))
        ok += equals(c * w, w * c)
        n += 1
    checks.append(CheckResult("scalars are central", ok == n, n))

    checks.append(CheckResult("the coordinate is not central",
                              not equals(d0 * x, x * d0)))

    n = ok = 0
    for _ in range(cases):
        w = _rand_word(rng, rng.randint(1, max(2, md)))
        central = equals(w * x, x * w) and equals(w * d0, d0 * w)
        ok += central == (alg._as_scalar_op(w) is not None)
        n += 1
    checks.append(CheckResult("sampled words central iff scalar", ok == n, n))
    return checks


def _suite_immediate_formulae(md, cases, seed):
    k = max(2, md)
    d = lambda a: _g("dbeta", a)
    x = _g("x")
    tau = _g("tau")
    s1 = _g("sigma", 1)
    one = _one()
    checks = []

    # the twist that makes these hold is -1: the bracket is dd^b - q d^b d
    br = twisted_bracket(d(0), d(1), -1)
    ok = equals(x * br, d(0) - d(1))
    ok = ok and equals(br * x, d(0) - d(1) * _qp(1))
    checks.append(CheckResult("bracket of the two derivatives against x",
                              ok, 2))

    n = ok = 0
    for kk in range(-k, k + 1):
        for a in range(-k, k + 1):
            lhs = (tau + one * kk) * d(a)
            rhs = d(a) * (tau + one * (kk - 1))
            ok += equals(lhs, rhs)
            n += 1
    checks.append(CheckResult("tau shifts by one across a derivative",
                              ok == n, n))

    qm1 = _qp(1) - ExactScalar.from_int(1)
    lhs = (tau + one) * d(1)
    rhs = ((s1 * _qp(1) - one) * qm1.inverse()) * d(0)
    checks.append(CheckResult("tau+1 against the one-step derivative",
                              equals(lhs, rhs)))

    n = ok = 0
    for L in (1, 2, 3):
        for I in itertools.product((0, 1), repeat=L):
            lhs = _one()
            rhs = _one()
            for j, ij in enumerate(I, start=1):
                if ij:
                    lhs = lhs * (tau + one * j)
                    rhs = rhs * ((s1 * _qp(j) - one) * qm1.inverse())
            for a in I:
                lhs = lhs * d(a)
            for _ in range(len(I)):
                rhs = rhs * d(0)
            ok += equals(lhs, rhs)
            n += 1
    checks.append(CheckResult("multi-index generalization", ok == n, n))
    return checks


def _rand_nd_terms(rng, nvars, md):
    terms = []
    for _ in range(rng.randint(1, 3)):
        coeff = _rand_scalar(rng, nvars)
        xexp = tuple(rng.randint(0, max(1, md)) for _ in range(nvars))
        word = tuple((rng.randrange(nvars), rng.randint(-2, 2))
                     for _ in range(rng.randint(0, 2)))
        twist = tuple(rng.randint(-1, 1) for _ in range(nvars))
        terms.append(alg.nd_term(coeff, xexp, word, twist, nvars))
    return alg.nd_consolidate(terms)


def _suite_nvariables(md, cases, seed):
    rng = random.Random(seed)
    krange = [k for k in range(-max(2, md), max(2, md) + 1)]
    checks = []

    for nv in (2, 3):
        dom = poly_n(nv)
        one = _one(dom)
        xs = [_g("x_i", i, dom) for i in range(nv)]
        D = lambda i, k: _g("dbeta_i", (i, k), dom)
        n = ok = 0
        for i in range(nv):
            for j in range(nv):
                if i == j:
                    continue
                for k in krange:
                    ok += twisted_bracket(D(i, k), xs[j]).is_zero()
                    n += 1
                for k in krange:
                    for l in krange:
                        ok += twisted_bracket(D(i, k), D(j, l)).is_zero()
                        n += 1
        for i in range(nv):
            for k in krange:
                a = tuple(rng.randint(-2, 2) if j != i else 0
                          for j in range(nv))
                ok += twisted_bracket(D(i, k), _g("sigma_vec", a, dom)).is_zero()
                n += 1
        checks.append(CheckResult(
            f"distinct coordinates commute (n={nv})", ok == n, n))

        n = ok = 0
        for i in range(nv):
            for k in krange:
                qnum = ((ExactScalar.q_power(k, nv, var=i) - 1)
                        / (ExactScalar.q_power(1, nv, var=i) - 1)) \
                    if k else ExactScalar.from_int(1, nv)
                sig = _g("sigma_vec",
                         tuple(k if j == i else 0 for j in range(nv)), dom) \
                    if k else one
                ok += equals(twisted_bracket(D(i, k), xs[i]), sig * qnum)
                n += 1
                lhs = D(i, k) * xs[i]
                rhs = (xs[i] * D(i, k)) * ExactScalar.q_power(k, nv, var=i) \
                    + one * qnum
                ok += equals(lhs, rhs)
                n += 1
                if k:
                    sig_id = one + (xs[i] * D(i, k)) \
                        * (ExactScalar.q_power(1, nv, var=i) - 1)
                    ok += equals(sig, sig_id)
                    n += 1
        checks.append(CheckResult(
            f"same-coordinate push relations (n={nv})", ok == n, n))

        n = ok = attempts = 0
        want = max(1, cases)
        while n < want and attempts < 20 * want:
            attempts += 1
            G = _rand_nd_terms(rng, nv, md)
            family = [alg.nd_bracket_terms(G, i, nv) for i in range(nv)]
            try:
                Qe = alg.integrate_nd(family, nv)
            except CompatibilityViolation:
                continue            # junk residual: redraw deterministically
            Q = evaluate(Qe, dom)
            good = all(
                equals(twisted_bracket(Q, xs[i]),
                       alg.nd_terms_to_op(family[i], dom))
                for i in range(nv))
            ok += good
            n += 1
        checks.append(CheckResult(
            f"multi-integration on bracket families (n={nv})",
            ok == n and n == want, n,
            "" if n == want else "too many redraws"))
    return checks


def _suite_integrate_exhaustive(md, cases, seed):
    rng = random.Random(seed)
    checks = []
    n = ok = 0
    for L in range(0, max(1, md) + 1):
        for w in itertools.product((-2, -1, 0, 1, 2), repeat=L):
            for b in range(-3, 4):
                _, good = alg.verify_integration(w, b)
                ok += good
                n += 1
    checks.append(CheckResult(
        f"exhaustive words of length <= {max(1, md)}", ok == n, n))

    n = ok = 0
    for _ in range(cases):
        w = tuple(rng.randint(-2, 2) for _ in range(4))
        b = rng.randint(-3, 3)
        _, good = alg.verify_integration(w, b)
        ok += good
        n += 1
    checks.append(CheckResult("random words of length 4", ok == n, n))
    return checks


def _rand_shape(rng, md):
    sf = ShapeForm.zero()
    for _ in range(rng.randint(1, 3)):
        a = rng.randint(-2, 2)
        I = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, 3)))
        p = {}
        for _ in range(rng.randint(1, 2)):
            p[rng.randint(0, max(1, md))] = _rand_scalar(rng)
        sf = sf + ShapeForm.of_term(a, p, I)
    return sf


def _suite_simplicity_random(md, cases, seed):
    rng = random.Random(seed)
    n = ok = 0
    strict = True
    for _ in range(cases):
        sf = _rand_shape(rng, md)
        if sf.is_zero_shape() or evaluate(sf.to_expr()).is_zero():
            sf = ShapeForm.of_term(0, {rng.randint(1, 3): _rand_scalar(rng)},
                                   (1,))
        w = alg.simplicity_witness(sf)
        res = alg.replay(w, sf)
        ok += res.is_identity()
        n += 1
        for before, after in zip(w.measures, w.measures[1:]):
            if not after < before:
                strict = False
    return [CheckResult("witness replays to the identity", ok == n, n),
            CheckResult("termination measure strictly decreases", strict,
                        n)]


def _suite_gamma_generators(md, cases, seed):
    return [CheckResult(name, good)
            for name, good in qgroup.gamma_generators_check()]


def _uq_relation_exprs():
    """(label, lhs-word, rhs-word, rhs-scale) with scale applied to rhs."""
    one = ExactScalar.from_int(1)
    return [
        ("K Kinv = 1", "K*Kinv", "", one),
        ("Kinv K = 1", "Kinv*K", "", one),
        ("K E Kinv = q^2 E", "K*E*Kinv", "E", _qp(2)),
        ("K F Kinv = q^-2 F", "K*F*Kinv", "F", _qp(-2)),
        ("EF - FE = (K - Kinv)/(q - q^-1)", "E*F - F*E", "K - Kinv",
         (_qp(1) - _qp(-1)).inverse()),
    ]


def _suite_uq_relations(md, cases, seed):
    rel = _uq_relation_exprs()
    checks = []

    for which, hom, dom in (("alpha", qgroup.alpha, POLY_X),
                            ("gamma", qgroup.gamma, POLY_Y)):
        n = ok = 0
        for label, lhs, rhs, c in rel:
            L = hom(lhs)
            R = _one(dom) if not rhs else hom(rhs)
            ok += equals(L, R * scalar(c))
            n += 1
        checks.append(CheckResult(f"defining relations under {which}",
                                  ok == n, n))

    from .rings import PlaneElement
    bound = max(1, md)
    n = ok = 0
    # u is not inverted in the localized plane, so its powers start at 0
    for a in range(0, bound + 1):
        for b in range(-bound, bound + 1):
            mono = PlaneElement.monomial(a, b)
            for label, lhs, rhs, c in rel:
                L = qgroup.act_on_plane(lhs, mono)
                R = mono if not rhs else qgroup.act_on_plane(rhs, mono)
                ok += L == R * c
                n += 1
    checks.append(CheckResult(
        f"defining relations on plane monomials |a|,|b| <= {bound}",
        ok == n, n))
    return checks


def _suite_uq_plane_consistency(md, cases, seed):
    letters = ("E", "F", "K", "Kinv")
    n = ok = 0
    for L in range(1, 5):
        for w in itertools.product(letters, repeat=L):
            e = _mul_chain([EGen(c) for c in w])
            for m in range(0, max(1, md) + 1):
                ok += qgroup.plane_alpha_consistent(e, m)
                n += 1
    return [CheckResult("plane action matches the coordinate-line image",
                        ok == n, n)]


def _suite_nonsurjectivity(md, cases, seed):
    rng = random.Random(seed)
    letters = [qgroup.alpha(w) for w in ("E", "F", "K", "Kinv")]
    n = ok = 0
    for _ in range(cases):
        gop = _one()
        for _ in range(rng.randint(1, max(2, md))):
            gop = gop * rng.choice(letters)
        gop = gop * _rand_scalar(rng)
        ok += is_m_free(gop)
        n += 1
    checks = [CheckResult("images of quantum-group words are m-free",
                          ok == n, n)]
    checks.append(CheckResult("the classical derivative is not m-free",
                              not is_m_free(_g("dbeta", 0))))
    checks.append(CheckResult(
        "the excluded pair glues but cannot be reached",
        qgroup.gamma_q_member(qgroup.gamma_q_pairs()[0])))
    return checks


def _suite_truncation(md, cases, seed):
    rng = random.Random(seed)
    checks = []
    per = max(1, cases // 4)
    for level in (1, 2, 3, 4):
        n = ok = 0
        for _ in range(per):
            a = _rand_word(rng, rng.randint(1, 3))
            b = _rand_word(rng, rng.randint(1, 3))
            ta = truncate_operator(a, level)
            tb = truncate_operator(b, level)
            ok += truncate_operator(a * b, level) == ta * tb
            ok += truncate_operator(a + b, level) == ta + tb
            n += 2
        checks.append(CheckResult(
            f"truncation is a ring map at level {level}", ok == n, n))

    d = lambda a: _g("dbeta", a)
    t1 = truncate_operator(d(0), 1)
    ok = truncate_operator(d(1), 1) == t1
    ok = ok and truncate_operator(d(-1), 1) == t1
    checks.append(CheckResult(
        "one-step derivatives collapse to the classical one at level 1",
        ok, 2))

    ok = bracket_nilpotence_order(t1) == 2
    # sigma truncated mod (q-1)^n needs exactly n brackets: each one
    # trades an m-degree for a power of t
    for lvl in (1, 2, 3, 4):
        ok = ok and bracket_nilpotence_order(
            truncate_operator(_g("sigma", 1), lvl)) == lvl
    ok = ok and bracket_nilpotence_order(
        TruncatedOperator.zero(POLY_X, 2)) == 0
    checks.append(CheckResult("nilpotence orders of the landmarks", ok, 6))

    n = ok = 0
    for _ in range(per):
        gop = _rand_word(rng, rng.randint(1, 3))
        level = rng.randint(1, 3)
        tr = truncate_operator(gop, level)
        order = bracket_nilpotence_order(tr)
        ok += order <= tr.max_m_degree() + 1
        n += 1
    checks.append(CheckResult(
        "nilpotence bounded by m-degree plus one", ok == n, n))
    return checks


def _suite_eta1_surjectivity(md, cases, seed):
    checks = []
    pairs = qgroup.gamma_q_pairs()

    ax, ay = qgroup.eta_truncated("F", 1)
    dx, dy = pairs[0]
    ok = ax == truncate_operator(dx, 1) and ay == truncate_operator(dy, 1)
    checks.append(CheckResult(
        "level-1 image of F is the first generator pair", ok, 2))

    ax, ay = qgroup.eta_truncated("E", 1)
    dx, dy = pairs[1]
    ok = ax == truncate_operator(dx, 1) and ay == truncate_operator(dy, 1)
    checks.append(CheckResult(
        "level-1 image of E is the second generator pair", ok, 2))

    n = ok = 0
    for m in range(1, max(2, md) + 1):
        for w in (f"Ediv[{m}]", f"Fdiv[{m}]"):
            a, g = qgroup.eta(w)
            from .opsym import is_integral_at_1
            ok += is_integral_at_1(a) and is_integral_at_1(g)
            n += 1
    checks.append(CheckResult("divided powers are integral", ok == n, n))
    return checks


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

# name -> (battery, default max_degree, default cases, default seed)
_SUITES = {
    "note-identities": (_suite_note_identities, 5, 0, 0),
    "intrinsic-relations": (_suite_intrinsic_relations, 3, 500, 0),
    "d0-commutative": (_suite_d0_commutative, 4, 200, 0),
    "domain-sample": (_suite_domain_sample, 4, 200, 0),
    "qcenter": (_suite_qcenter, 4, 100, 0),
    "immediate-formulae": (_suite_immediate_formulae, 2, 0, 0),
    "nvariables": (_suite_nvariables, 2, 6, 0),
    "integrate-exhaustive": (_suite_integrate_exhaustive, 3, 100, 0),
    "simplicity-random": (_suite_simplicity_random, 3, 200, 0),
    "gamma-generators": (_suite_gamma_generators, 0, 0, 0),
    "uq-relations": (_suite_uq_relations, 6, 0, 0),
    "uq-plane-consistency": (_suite_uq_plane_consistency, 4, 0, 0),
    "nonsurjectivity": (_suite_nonsurjectivity, 6, 100, 0),
    "truncation": (_suite_truncation, 0, 100, 0),
    "eta1-surjectivity": (_suite_eta1_surjectivity, 5, 0, 0),
}


def suite_names():
    return sorted(_SUITES)


def verify_suite(name, max_degree=None, cases=None, seed=None):
    """Run the named battery; all checks are exact."""
    try:
        fn, d_md, d_cases, d_seed = _SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: "
                           + ", ".join(suite_names())) from None
    md = d_md if max_degree is None else int(max_degree)
    cs = d_cases if cases is None else int(cases)
    sd = d_seed if seed is None else int(seed)
    checks = fn(md, cs, sd)
    return SuiteReport(name, {"max_degree": md, "cases": cs, "seed": sd},
                       checks)
