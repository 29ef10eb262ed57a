"""Exact rational polynomials over the two monomial bases.

For m=1 a monomial is an exponent pair ``(p, q)`` standing for t1^p t3^q.
For m=2 a monomial is a pair of reduced words ``(nu, mu)`` in t and u,
standing for nu(t1, u1) * mu(t3, u3).
"""

import re
from fractions import Fraction

from .freeword import EMPTY, ReducedWord, parse_syllables

M1 = "m1"
M2 = "m2"


class KindMismatch(TypeError):
    pass


def kind_of(mono):
    if isinstance(mono[0], ReducedWord):
        return M2
    return M1


def mul_monomial(a, b):
    """Slotwise product of two monomials of the same kind.

    >>> mul_monomial((2, -1), (-2, 1))
    (0, 0)
    """
    if kind_of(a) != kind_of(b):
        raise KindMismatch("cannot multiply monomials of different kinds")
    if kind_of(a) == M1:
        return (a[0] + b[0], a[1] + b[1])
    return (a[0] * b[0], a[1] * b[1])


def identity(kind):
    return (0, 0) if kind == M1 else (EMPTY, EMPTY)


class Poly:
    """Sparse linear combination of monomials with Fraction coefficients.

    ``var`` names the circle generator used when printing m=1 keys; it is
    ``"t"`` normally and ``"u"`` for the image of :func:`substitute` with
    ``kill_t``.
    """

    __slots__ = ("terms", "kind", "var")

    def __init__(self, terms=None, kind=M1, var="t"):
        self.kind = kind
        self.var = var
        self.terms = {}
        if terms:
            for mono, c in dict(terms).items():
                if kind_of(mono) != kind:
                    raise KindMismatch("monomial %r is not of kind %s" % (mono, kind))
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def monomial(cls, mono, c=1, var="t"):
        return cls({mono: c}, kind_of(mono), var)

    @classmethod
    def zero(cls, kind=M1, var="t"):
        return cls({}, kind, var)

    @classmethod
    def from_pairs(cls, pairs, kind=M1, var="t"):
        """Build from ``(coefficient, monomial)`` pairs, summing repeats."""
        acc = {}
        for c, mono in pairs:
            acc[mono] = acc.get(mono, 0) + Fraction(c)
        return cls(acc, kind, var)

    def _check(self, other):
        if self.kind != other.kind or self.var != other.var:
            raise KindMismatch("polynomials of different kinds")

    def copy(self):
        return Poly(self.terms, self.kind, self.var)

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = Poly(kind=self.kind, var=self.var)
        p.terms = out
        return p

    def __neg__(self):
        p = Poly(kind=self.kind, var=self.var)
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check(other)
            acc = {}
            for a, ca in self.terms.items():
                for b, cb in other.terms.items():
                    m = mul_monomial(a, b)
                    acc[m] = acc.get(m, 0) + ca * cb
            return Poly(acc, self.kind, self.var)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.kind == other.kind and self.var == other.var and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    def coeff(self, mono):
        return self.terms.get(mono, Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0], self.var))

    def support(self):
        return set(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            key = monomial_key(m, self.var)
            if self.kind == M2:
                key = "(" + key + ")"
            if c == 1:
                parts.append("+ " + key)
            elif c == -1:
                parts.append("- " + key)
            else:
                sign = "-" if c < 0 else "+"
                parts.append("%s %s*%s" % (sign, abs(c), key))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return "Poly(%s)" % self

    def to_json(self):
        return {monomial_key(m, self.var): "%d/%d" % (c.numerator, c.denominator)
                for m, c in self.items()}

    @classmethod
    def from_json(cls, data, m=1):
        kind = M1 if m == 1 else M2
        var = "t"
        terms = {}
        for key, val in data.items():
            mono, var = parse_monomial_key(key, kind)
            terms[mono] = Fraction(val)
        return cls(terms, kind, var)


def monomial_key(mono, var="t"):
    """Canonical text key: ``"t1^p t3^q"`` or ``"nu | mu"``."""
    if isinstance(mono[0], ReducedWord):
        return "%s | %s" % (mono[0], mono[1])
    return "%s1^%d %s3^%d" % (var, mono[0], var, mono[1])


_M1_KEY = re.compile(r"^\s*([tu])1\^(-?\d+)\s+([tu])3\^(-?\d+)\s*$")


def parse_monomial_key(key, kind=M1):
    if kind == M1:
        m = _M1_KEY.match(key)
        if m is None or m.group(1) != m.group(3):
            raise ValueError("bad monomial key %r" % key)
        return (int(m.group(2)), int(m.group(4))), m.group(1)
    left, sep, right = key.partition("|")
    if not sep:
        raise ValueError("bad monomial key %r" % key)
    return (ReducedWord(parse_syllables(left)), ReducedWord(parse_syllables(right))), "t"


def add(a, b):
    return a + b


def scale(c, a):
    c = Fraction(c)
    p = Poly(kind=a.kind, var=a.var)
    if c:
        p.terms = {m: c * v for m, v in a.terms.items()}
    return p


def total(polys, kind=M1, var="t"):
    acc = {}
    for p in polys:
        for m, c in p.terms.items():
            acc[m] = acc.get(m, 0) + c
    return Poly(acc, kind, var)


HOMOMORPHISMS = ("kill_u", "kill_t", "invert_both", "abelianize")


def substitute(p, h):
    """Apply one of the fixed homomorphisms to a polynomial.

    kill_u and kill_t send an m=2 polynomial to an m=1 shaped polynomial in
    the surviving generator.  invert_both inverts both slots.  abelianize
    records the exponent sums of both slots and is a diagnostic only; its
    keys are 4-tuples and the result is returned as a plain dict.
    """
    if h == "invert_both":
        if p.kind == M1:
            return Poly({(-a, -b): c for (a, b), c in p.terms.items()}, M1, p.var)
        return Poly.from_pairs(((c, (x.inverse(), y.inverse())) for (x, y), c in p.terms.items()), M2)
    if p.kind != M2:
        raise KindMismatch("%s applies to m=2 polynomials only" % h)
    if h == "kill_u":
        return Poly.from_pairs(((c, (x.exponent_sum("t"), y.exponent_sum("t")))
                                for (x, y), c in p.terms.items()), M1, "t")
    if h == "kill_t":
        return Poly.from_pairs(((c, (x.exponent_sum("u"), y.exponent_sum("u")))
                                for (x, y), c in p.terms.items()), M1, "u")
    if h == "abelianize":
        acc = {}
        for (x, y), c in p.terms.items():
            key = (x.exponent_sum("t"), x.exponent_sum("u"), y.exponent_sum("t"), y.exponent_sum("u"))
            acc[key] = acc.get(key, 0) + c
        return {k: v for k, v in acc.items() if v}
    raise ValueError("unknown homomorphism %r" % h)


def m2(nu, mu):
    """Monomial key from two word texts, e.g. ``m2("t u^-1", "t")``."""
    if isinstance(nu, str):
        nu = ReducedWord(parse_syllables(nu))
    if isinstance(mu, str):
        mu = ReducedWord(parse_syllables(mu))
    return (nu, mu)
