"""The hexagon quotient: relations, zero certificates and nonzero certificates.

Zero is certified by writing a polynomial as an explicit rational
combination of relation generators inside a finite window.  Nonzero is
certified by a linear functional that vanishes on every relation generator.
Everything else is reported as inconclusive.

For m=1 write s_c(a) = t1^a t3^(a-c) + t1^(c-a) t3^(-a).  Both monomials have
exponent difference c, and the generator for (alpha, beta) is
s_alpha(beta) - s_beta(alpha).  Two families of functionals vanish on all of
these:

* slice functionals, coeff(t1^a t3^(a-c)) - coeff(t1^(c-a) t3^(-a)), which
  see only the antisymmetric part of one s_c pair;
* orbit sums, which add up every coefficient whose pair (c, a) lies in one
  orbit of the moves (c, a) -> (a, c) and (c, a) -> (c, c - a).

The m=2 relation has the same shape with the partner map
P(x | y) = (y^-1 | x^-1), so coeff(x) - coeff(P x) also vanishes on it.
"""

import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import exactla
from .freeword import EMPTY, ReducedWord
from .groupalg import M1, M2, Poly, monomial_key, substitute


class WindowOverflow(RuntimeError):
    pass


class DegenerateSlice(ValueError):
    pass


# relation generators

def hexagon_m1_terms(alpha, beta):
    a, b = alpha, beta
    return [(1, (a - b, -b)), (1, (b, b - a)), (-1, (a, a - b)), (-1, (b - a, -a))]


def hexagon_m1(alpha, beta):
    """t1^(a-b) t3^(-b) + t1^b t3^(b-a) - t1^a t3^(a-b) - t1^(b-a) t3^(-a).

    >>> print(hexagon_m1(1, 0))
    -t1^-1 t3^-1 + t1^0 t3^-1 + t1^1 t3^0 - t1^1 t3^1
    """
    return Poly.from_pairs(hexagon_m1_terms(alpha, beta), M1)


def hexagon_m2_terms(nu, mu):
    nb, mb = nu.inverse(), mu.inverse()
    return [(1, (nu, mu)), (1, (mb, nb)), (-1, (nb, mu * nb)), (-1, (nu * mb, nu))]


def hexagon_m2(nu, mu):
    """(nu | mu) + (mu^-1 | nu^-1) - (nu^-1 | mu nu^-1) - (nu mu^-1 | nu)."""
    return Poly.from_pairs(hexagon_m2_terms(nu, mu), M2)


def generator_terms(gen):
    if isinstance(gen[0], ReducedWord):
        return hexagon_m2_terms(*gen)
    return hexagon_m1_terms(*gen)


def generator_poly(gen):
    if isinstance(gen[0], ReducedWord):
        return hexagon_m2(*gen)
    return hexagon_m1(*gen)


def generators_through(mono):
    """Every relation generator with ``mono`` among its four monomials."""
    if isinstance(mono[0], ReducedWord):
        x, y = mono
        xb, yb = x.inverse(), y.inverse()
        return {(x, y), (yb, xb), (xb, y * x), (y, xb * y)}
    p, q = mono
    return {(p - q, -q), (p - q, p), (p, p - q), (-q, p - q)}


# verdicts

@dataclass
class Zero:
    witness: dict
    window: dict = field(default_factory=dict)

    verdict = "zero"

    def expand(self, kind):
        acc = Poly.zero(kind)
        for gen, c in self.witness.items():
            acc = acc + c * generator_poly(gen)
        return acc

    def to_json(self):
        return {"verdict": "zero",
                "witness": [{"generator": _gen_json(g), "coefficient": _frac(c)}
                            for g, c in sorted(self.witness.items(), key=lambda kv: _gen_json(kv[0]))],
                "window": self.window}


@dataclass
class Nonzero:
    functional: object
    value: Fraction
    audit: object = None
    window: dict = field(default_factory=dict)

    verdict = "nonzero"

    def to_json(self):
        return {"verdict": "nonzero",
                "witness": {"functional": self.functional.to_json(), "value": _frac(self.value),
                            "audit_bound": None if self.audit is None else self.audit.bound},
                "window": self.window}


@dataclass
class Inconclusive:
    window: dict = field(default_factory=dict)
    note: str = ""

    verdict = "inconclusive"

    def to_json(self):
        return {"verdict": "inconclusive", "witness": None, "window": dict(self.window, note=self.note)}


def _frac(c):
    c = Fraction(c)
    return "%d/%d" % (c.numerator, c.denominator)


def _gen_json(g):
    if isinstance(g[0], ReducedWord):
        return [str(g[0]), str(g[1])]
    return [g[0], g[1]]


# windows and zero certificates

def _max_exp(p):
    if p.kind == M1:
        return max((max(abs(a), abs(b)) for a, b in p.terms), default=0)
    return max((max(len(x), len(y)) for x, y in p.terms), default=0)


def _in_window_m1(box):
    pmin, pmax, qmin, qmax = box

    def ok(gen):
        return all(pmin <= a <= pmax and qmin <= b <= qmax for _, (a, b) in generator_terms(gen))
    return ok


def _in_window_m2(bound):
    def ok(gen):
        if len(gen[0]) > bound or len(gen[1]) > bound:
            return False
        return all(len(x) <= bound and len(y) <= bound for _, (x, y) in generator_terms(gen))
    return ok


def _window_system(p, ok, max_generators):
    """Relation generators connected to the support of p inside the window."""
    seen_mono = set(p.terms)
    queue = deque(p.terms)
    gens = {}
    while queue:
        mono = queue.popleft()
        for g in generators_through(mono):
            if g in gens or not ok(g):
                continue
            vec = generator_poly(g).terms
            if not vec:
                continue
            gens[g] = vec
            if len(gens) > max_generators:
                raise WindowOverflow("more than %d generators in the window" % max_generators)
            for m in vec:
                if m not in seen_mono:
                    seen_mono.add(m)
                    queue.append(m)
    # a monomial outside the target touched by a single generator forces that
    # generator's coefficient to zero; strip such generators repeatedly
    touch = {}
    for g, vec in gens.items():
        for m in vec:
            touch.setdefault(m, set()).add(g)
    stack = [m for m, s in touch.items() if len(s) == 1 and m not in p.terms]
    while stack:
        m = stack.pop()
        s = touch.get(m)
        if not s or len(s) != 1:
            continue
        (g,) = tuple(s)
        for m2 in gens.pop(g):
            touch[m2].discard(g)
            if len(touch[m2]) == 1 and m2 not in p.terms:
                stack.append(m2)
    return gens


def _solve_window(p, ok, max_generators):
    gens = _window_system(p, ok, max_generators)
    keys = list(gens)
    coeffs = exactla.solve_membership(dict(p.terms), [gens[g] for g in keys])
    if coeffs is None:
        return None, len(keys)
    return {g: c for g, c in zip(keys, coeffs) if c}, len(keys)


DEFAULT_CAP = 64
DEFAULT_MAX_GENERATORS = 200000


def check_zero(p, margin=None, length_bound=None, cap=DEFAULT_CAP,
               max_generators=DEFAULT_MAX_GENERATORS, escalate=True):
    """Try to write ``p`` as a rational combination of relation generators.

    For m=1 the window is the bounding box of the support widened by
    ``margin`` on every side.  With ``margin=None`` the search starts at a
    margin of 0 and doubles up to twice the largest exponent of the support,
    then keeps doubling while the box half-width stays within ``cap``.
    For m=2 the window is all generators whose words and monomials have
    length at most ``length_bound`` (default: longest support word + 2).

    Returns :class:`Zero` with a witness or :class:`Inconclusive`; absence of
    a witness in a window proves nothing.
    """
    if not p.terms:
        return Zero({}, {"margin": 0} if p.kind == M1 else {"length_bound": 0})
    if p.kind == M2:
        lb = length_bound if length_bound is not None else _max_exp(p) + 2
        ok = _in_window_m2(lb)
        wit, n = _solve_window(p, ok, max_generators)
        window = {"length_bound": lb, "generators": n}
        if wit is not None:
            return Zero(wit, window)
        return Inconclusive(window, "no witness with words of length <= %d" % lb)

    mx = _max_exp(p)
    if margin is not None:
        margins = [margin]
    else:
        margins = [0]
        while margins[-1] < 2 * mx:
            margins.append(min(2 * mx, max(1, 2 * margins[-1])))
    if escalate and margin is None:
        while mx + margins[-1] < cap:
            margins.append(min(cap - mx, 2 * margins[-1]) if margins[-1] else 1)
    pmin = min(a for a, _ in p.terms)
    pmax = max(a for a, _ in p.terms)
    qmin = min(b for _, b in p.terms)
    qmax = max(b for _, b in p.terms)
    # a sound nonzero functional rules out every window, so stop early
    hopeless = _sound_nonzero_m1(p) is not None
    window = {}
    for mg in margins:
        box = (pmin - mg, pmax + mg, qmin - mg, qmax + mg)
        wit, n = _solve_window(p, _in_window_m1(box), max_generators)
        window = {"margin": mg, "box": list(box), "generators": n}
        if wit is not None:
            return Zero(wit, window)
        if hopeless:
            return Inconclusive(window, "no witness; a sound functional is nonzero")
    return Inconclusive(window, "no witness up to margin %d" % margins[-1])


def reevaluate(verdict, kind):
    """Expand a Zero witness back into a polynomial."""
    return verdict.expand(kind)


# functionals

def slice_class(mono):
    """The pair (c, a) of an m=1 monomial t1^p t3^q: c = p - q and a = p."""
    p, q = mono
    return (p - q, p)


def _canon_slice(c, a):
    """Representative with a <= c - a, and the sign relating the two."""
    if 2 * a <= c:
        return (c, a), 1
    return (c, c - a), -1


def slice_functional_m1(c, a, p):
    """coeff(t1^a t3^(a-c)) - coeff(t1^(c-a) t3^(-a)).

    >>> slice_functional_m1(1, 0, Poly.monomial((1, 0)))
    Fraction(-1, 1)
    """
    if 2 * a == c:
        raise DegenerateSlice("slice (%d, %d) pairs a monomial with itself" % (c, a))
    return p.coeff((a, a - c)) - p.coeff((c - a, -a))


def slice_orbit(c, a):
    """Orbit of (c, a) under (c, a) -> (a, c) and (c, a) -> (c, c - a)."""
    seen = {(c, a)}
    todo = [(c, a)]
    while todo:
        x, y = todo.pop()
        for nxt in ((y, x), (x, x - y)):
            if nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return frozenset(seen)


class Functional:
    kind = M1
    sound = True

    def __call__(self, p):
        return self.evaluate(p)

    def __eq__(self, other):
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(str(self.to_json()))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self.to_json())


class SliceFunctional(Functional):
    def __init__(self, c, a):
        if 2 * a == c:
            raise DegenerateSlice("slice (%d, %d) pairs a monomial with itself" % (c, a))
        self.c, self.a = c, a

    def evaluate(self, p):
        return slice_functional_m1(self.c, self.a, p)

    def to_json(self):
        return {"kind": "slice", "c": self.c, "a": self.a}


class OrbitSumFunctional(Functional):
    def __init__(self, c, a):
        self.orbit = slice_orbit(c, a)
        self.c, self.a = min(self.orbit)

    def evaluate(self, p):
        return sum((v for m, v in p.terms.items() if slice_class(m) in self.orbit), Fraction(0))

    def to_json(self):
        return {"kind": "orbit_sum", "c": self.c, "a": self.a}


class PartnerFunctional(Functional):
    """coeff(x) - coeff(P x) on m=2 polynomials, P(nu | mu) = (mu^-1 | nu^-1)."""

    kind = M2

    def __init__(self, mono):
        partner = (mono[1].inverse(), mono[0].inverse())
        if partner == mono:
            raise DegenerateSlice("monomial is its own partner")
        self.mono, self.partner = mono, partner

    def evaluate(self, p):
        return p.coeff(self.mono) - p.coeff(self.partner)

    def to_json(self):
        return {"kind": "partner", "monomial": monomial_key(self.mono)}


class Pipeline(Functional):
    """An m=1 functional applied after kill_u or kill_t."""

    kind = M2

    def __init__(self, hom, inner):
        if hom not in ("kill_u", "kill_t"):
            raise ValueError("pipelines use kill_u or kill_t")
        self.hom, self.inner = hom, inner

    def evaluate(self, p):
        q = substitute(p, self.hom)
        q.var = "t"
        return self.inner.evaluate(q)

    def to_json(self):
        return {"kind": "pipeline", "via": self.hom, "then": self.inner.to_json()}


class AbelianCoefficient(Functional):
    """Coefficient of one exponent-sum class after abelianizing.

    Diagnostic only: it does not vanish on the relations.
    """

    kind = M2
    sound = False

    def __init__(self, key):
        self.key = tuple(key)

    def evaluate(self, p):
        return Fraction(substitute(p, "abelianize").get(self.key, 0))

    def to_json(self):
        return {"kind": "abelian_coefficient", "key": list(self.key)}


def words_up_to(n, gens=("t", "u")):
    """Reduced words in ``gens`` of letter length <= n, shortest first."""
    out = [EMPTY]
    layer = [()]
    letters = [(g, s) for g in gens for s in (1, -1)]
    for _ in range(n):
        nxt = []
        for w in layer:
            for g, s in letters:
                if w and w[-1] == (g, -s):
                    continue
                nxt.append(w + ((g, s),))
        layer = nxt
        out.extend(ReducedWord(w) for w in layer)
    return out


@dataclass
class AuditReport:
    functional: object
    bound: int
    checked: int
    failures: list

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"functional": self.functional.to_json(), "bound": self.bound,
                "checked": self.checked, "passed": self.passed,
                "failures": [_gen_json(g) for g in self.failures[:10]]}


def relation_generators(kind, bound):
    if kind == M1:
        return itertools.product(range(-bound, bound + 1), repeat=2)
    ws = words_up_to(bound)
    return itertools.product(ws, repeat=2)


def annihilation_audit(functional, bound=None, stop_after=None):
    """Evaluate a functional on every relation generator within ``bound``.

    For m=1 functionals this means all |alpha|, |beta| <= bound (default 20);
    for m=2 functionals all word pairs of length <= bound (default 3).
    """
    if bound is None:
        bound = 20 if functional.kind == M1 else 3
    failures = []
    checked = 0
    for gen in relation_generators(functional.kind, bound):
        checked += 1
        if functional.evaluate(generator_poly(gen)) != 0:
            failures.append(gen)
            if stop_after and len(failures) >= stop_after:
                break
    return AuditReport(functional, bound, checked, failures)


def candidate_functionals_m1(p):
    """Slice functionals over the support, largest |c| first, then orbit sums."""
    slices = set()
    orbits = set()
    for m in p.terms:
        c, a = slice_class(m)
        if 2 * a != c:
            slices.add(_canon_slice(c, a)[0])
        orbits.add(min(slice_orbit(c, a)))
    out = [SliceFunctional(c, a) for c, a in sorted(slices, key=lambda s: (-abs(s[0]), -s[0], s[1]))]
    out += [OrbitSumFunctional(c, a) for c, a in sorted(orbits)]
    return out


def _sound_nonzero_m1(p):
    for f in candidate_functionals_m1(p):
        v = f.evaluate(p)
        if v:
            return f, v
    return None


def candidate_functionals_m2(p):
    out = []
    for hom in ("kill_t", "kill_u"):
        q = substitute(p, hom)
        q.var = "t"
        out += [Pipeline(hom, f) for f in candidate_functionals_m1(q)]
    seen = set()
    for m in sorted(p.terms, key=monomial_key):
        partner = (m[1].inverse(), m[0].inverse())
        if partner != m and m not in seen:
            seen.add(m)
            seen.add(partner)
            out.append(PartnerFunctional(m))
    return out


def certify_nonzero(p, audit_bound=None, audit=True):
    """Look for an audited functional that is nonzero on ``p``."""
    cands = candidate_functionals_m1(p) if p.kind == M1 else candidate_functionals_m2(p)
    for f in cands:
        v = f.evaluate(p)
        if v:
            rep = annihilation_audit(f, audit_bound) if audit else None
            if rep is not None and not rep.passed:
                continue
            return Nonzero(f, v, rep)
    return Inconclusive({}, "no audited functional separates this polynomial from zero")


def decide(p, margin=None, length_bound=None, audit_bound=None):
    """Zero if a window witness exists, else Nonzero if certified, else Inconclusive."""
    z = check_zero(p, margin=margin, length_bound=length_bound)
    if isinstance(z, Zero):
        return z
    nz = certify_nonzero(p, audit_bound)
    if isinstance(nz, Nonzero):
        nz.window = z.window
        return nz
    return z


def image_generator(gen, hom):
    """The m=1 generator that kill_u or kill_t sends the m=2 generator ``gen`` to.

    With x, y the exponent sums of the surviving letter in nu and mu, the
    image of the (nu, mu) generator is the m=1 generator (x - y, -y).
    """
    letter = {"kill_u": "t", "kill_t": "u"}[hom]
    x, y = gen[0].exponent_sum(letter), gen[1].exponent_sum(letter)
    return (x - y, -y)


def audit_all_slices(bound=20):
    """Check every slice functional at once on all m=1 generators within ``bound``.

    A slice functional only sees one pair of monomials, so it suffices that,
    for each generator, the signed coefficients collected per slice cancel.
    Returns the list of failing generators.
    """
    failures = []
    for gen in relation_generators(M1, bound):
        acc = {}
        for c, mono in hexagon_m1_terms(*gen):
            cls, a = slice_class(mono)
            if 2 * a == cls:
                continue
            key, s = _canon_slice(cls, a)
            acc[key] = acc.get(key, 0) + s * c
        if any(acc.values()):
            failures.append(gen)
    return failures
