"""Certified linear independence of finite families of W3 values.

A family is Independent when audited functionals give an evaluation matrix
of full rank.  Since the functionals vanish on every relation, a full-rank
matrix rules out any rational dependency in the quotient.  A family is
Dependent when some nontrivial rational combination has an explicit zero
witness.  Anything else is Inconclusive.
"""

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import exactla
from .groupalg import M1, M2, Poly
from .hexagon import (DEFAULT_MAX_GENERATORS, Zero, _in_window_m1, _in_window_m2, _max_exp,
                      _window_system, annihilation_audit, candidate_functionals_m1,
                      candidate_functionals_m2)
from .freeword import parse_word
from .w3 import w3, w3_theta


class RangeViolation(ValueError):
    pass


@dataclass
class IndependenceConfig:
    audit_bound: int = None
    margin: int = None
    length_bound: int = None
    max_generators: int = DEFAULT_MAX_GENERATORS

    @classmethod
    def from_env(cls, environ=None):
        """Read BARBELL_AUDIT_BOUND, BARBELL_MARGIN and BARBELL_LENGTH_BOUND."""
        env = os.environ if environ is None else environ
        kw = {}
        for name, key in (("audit_bound", "BARBELL_AUDIT_BOUND"), ("margin", "BARBELL_MARGIN"),
                          ("length_bound", "BARBELL_LENGTH_BOUND")):
            if env.get(key):
                kw[name] = int(env[key])
        return cls(**kw)


def _frac(c):
    c = Fraction(c)
    return "%d/%d" % (c.numerator, c.denominator)


@dataclass
class IndependenceCertificate:
    functionals: list
    matrix: list
    rank: int
    audit_bound: int
    audits: list = field(default_factory=list)

    def to_json(self):
        return {"functionals": [f.to_json() for f in self.functionals],
                "matrix": [[_frac(v) for v in row] for row in self.matrix],
                "rank": self.rank, "audit_bound": self.audit_bound}

    def reevaluate(self, family):
        """Recompute the matrix from scratch."""
        return [[f.evaluate(p) for f in self.functionals] for p in family]


@dataclass
class Independent:
    certificate: IndependenceCertificate
    verdict = "independent"

    def to_json(self):
        return {"verdict": "independent", "certificate": self.certificate.to_json()}


@dataclass
class Dependent:
    combination: list
    witness: Zero

    verdict = "dependent"

    def to_json(self):
        return {"verdict": "dependent", "combination": [_frac(c) for c in self.combination],
                "witness": self.witness.to_json()}


@dataclass
class Inconclusive:
    note: str = ""
    rank: int = None

    verdict = "inconclusive"

    def to_json(self):
        return {"verdict": "inconclusive", "note": self.note, "rank": self.rank}


def _primitive(vec):
    """Scale to coprime integers with the first nonzero entry positive."""
    vec = [Fraction(v) for v in vec]
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    lead = next(v for v in ints if v)
    s = 1 if lead > 0 else -1
    return [Fraction(s * v, g) for v in ints]


def _support_poly(family, kind):
    """A polynomial whose support is the union of the family's supports."""
    return Poly({m: 1 for p in family for m in p.terms}, kind)


def _candidates(family, kind):
    union = _support_poly(family, kind)
    if kind == M1:
        return candidate_functionals_m1(union)
    return candidate_functionals_m2(union)


def _select(family, cands, audit_bound):
    """Greedily pick audited functionals that raise the rank, sparsest columns first."""
    cols = []
    for f in cands:
        col = [f.evaluate(p) for p in family]
        if any(col):
            cols.append((sum(1 for v in col if v), len(cols), f, col))
    cols.sort(key=lambda t: (t[0], t[1]))
    chosen, chosen_cols, audits = [], [], []
    n = len(family)
    for _, _, f, col in cols:
        if len(chosen) == n:
            break
        trial = chosen_cols + [col]
        if exactla.rank(trial) <= len(chosen_cols):
            continue
        rep = annihilation_audit(f, audit_bound)
        if not rep.passed:
            continue
        chosen.append(f)
        chosen_cols.append(col)
        audits.append(rep)
    return chosen, chosen_cols, audits


def _window_generators(family, kind, config):
    union = _support_poly(family, kind)
    if kind == M2:
        lb = config.length_bound if config.length_bound is not None else _max_exp(union) + 2
        ok = _in_window_m2(lb)
    else:
        mg = config.margin if config.margin is not None else 2 * _max_exp(union)
        ps = [a for a, _ in union.terms]
        qs = [b for _, b in union.terms]
        ok = _in_window_m1((min(ps) - mg, max(ps) + mg, min(qs) - mg, max(qs) + mg))
    return _window_system(union, ok, config.max_generators)


def _find_dependency(family, kind, cols, config):
    """A nontrivial combination of the family with a zero witness, or None.

    Any dependency lies in the left nullspace of the functional matrix, so
    only that subspace is searched, together with window relations.
    """
    n = len(family)
    rows = [[cols[j][i] for i in range(n)] for j in range(len(cols))]
    basis = exactla.nullspace(rows, n)
    if not basis:
        return None
    qs = [sum((c * p for c, p in zip(vec, family) if c), Poly.zero(kind)) for vec in basis]
    # the trivial case: some combination is already the zero polynomial
    for vec, q in zip(basis, qs):
        if not q.terms:
            return _primitive(vec), Zero({}, {})
    gens = _window_generators(family, kind, config)
    keys = list(gens)
    gvecs = [gens[g] for g in keys]
    d = len(basis)
    for k in range(d):
        others = [qs[j].terms for j in range(k + 1, d)]
        sol = exactla.solve_membership(dict(qs[k].terms), others + gvecs)
        if sol is None:
            continue
        lam = [Fraction(0)] * d
        lam[k] = Fraction(1)
        for j, c in zip(range(k + 1, d), sol):
            lam[j] = -c
        combo = [sum(lam[t] * basis[t][i] for t in range(d)) for i in range(n)]
        prim = _primitive(combo)
        i0 = next(i for i, c in enumerate(combo) if c)
        factor = prim[i0] / combo[i0]
        wit = {g: factor * c for g, c in zip(keys, sol[len(others):]) if c}
        return prim, Zero(wit, {"generators": len(keys)})
    return None


def independent(family, m=None, config=None):
    """Decide linear independence of ``family`` in the quotient.

    Returns :class:`Independent`, :class:`Dependent` or :class:`Inconclusive`.

    >>> p = w3_theta(6, 5, 3)
    >>> independent([p, 2 * p]).combination
    [Fraction(2, 1), Fraction(-1, 1)]
    """
    config = config or IndependenceConfig()
    family = list(family)
    if not family:
        raise ValueError("family must be nonempty")
    kind = family[0].kind
    if any(p.kind != kind for p in family):
        raise ValueError("family members must share one kind")
    if m is not None and (M1 if m == 1 else M2) != kind:
        raise ValueError("m does not match the family")
    cands = _candidates(family, kind)
    chosen, cols, audits = _select(family, cands, config.audit_bound)
    if len(chosen) == len(family):
        matrix = [[cols[j][i] for j in range(len(chosen))] for i in range(len(family))]
        bound = audits[0].bound if audits else config.audit_bound
        return Independent(IndependenceCertificate(chosen, matrix, len(chosen), bound, audits))
    all_cols = [[f.evaluate(p) for p in family] for f in cands]
    dep = _find_dependency(family, kind, all_cols, config)
    if dep is not None:
        return Dependent(*dep)
    return Inconclusive("audited functionals reach rank %d of %d and no dependency was found"
                        % (len(chosen), len(family)), len(chosen))


# families

_THETA = re.compile(r"^theta\(\s*k\s*([+-]\s*\d+)?\s*,\s*k\s*([+-]\s*\d+)?\s*\)$")
_M2_U = re.compile(r"^tBtRu\^k$")


def _offset(s):
    return int(s.replace(" ", "")) if s else 0


def family_member(pattern, k):
    """One W3 value of a named family at index ``k``.

    Patterns: ``delta`` (theta_k(e_(k-1), e_(k-2))), ``delta_prime``
    (theta_k(e_(k-2), e_(k-2))), ``theta(k-a,k-b)`` and, for m=2,
    ``tBtRu^k``.
    """
    pattern = pattern.replace(" ", "")
    if pattern == "delta":
        return _theta_checked(k, k - 1, k - 2)
    if pattern == "delta_prime":
        return _theta_checked(k, k - 2, k - 2)
    if _M2_U.match(pattern):
        if k < 1:
            raise RangeViolation("tBtRu^k needs k >= 1")
        return w3(parse_word("t B t R u^%d" % k, m=2))
    mt = _THETA.match(pattern)
    if mt:
        return _theta_checked(k, k + _offset(mt.group(1)), k + _offset(mt.group(2)))
    raise ValueError("unknown family pattern %r" % pattern)


def _theta_checked(k, i, j):
    if not (1 <= i <= k - 1 and 1 <= j <= k - 1):
        raise RangeViolation("theta_%d(e_%d, e_%d) needs 1 <= i, j <= k - 1" % (k, i, j))
    return w3_theta(k, i, j)


class Family(list):
    """A list of W3 values with the indices whose slice certificate degenerates."""

    def __init__(self, items, ks, flagged):
        super().__init__(items)
        self.ks = ks
        self.flagged = flagged


def family_theta(pattern, ks):
    """W3 values of a named family over the indices ``ks``.

    ``flagged`` lists the k for which theta_k(e_(k-2), e_(k-m)) has
    2m = k + 2.  There the element equals its own hexagon partner and the
    slice argument gives nothing.
    """
    ks = list(ks)
    out = [family_member(pattern, k) for k in ks]
    flagged = [k for k in ks if _degenerate(pattern, k)]
    return Family(out, ks, flagged)


def _degenerate(pattern, k):
    mt = _THETA.match(pattern.replace(" ", ""))
    if not mt or _offset(mt.group(1)) != -2:
        return False
    m = -_offset(mt.group(2))
    return 2 * m == k + 2


def pairing_sum(k, m):
    """W3(theta_k(e_(k-2), e_(k-m))) + W3(theta_k(e_(k-2), e_(m-2)))."""
    if not (3 <= m <= k - 1):
        raise RangeViolation("need 3 <= m <= k - 1")
    return w3_theta(k, k - 2, k - m) + w3_theta(k, k - 2, m - 2)


def joint_experiment(k1, alpha, m, k2, beta, n, config=None):
    """Test independence of theta_k1(e_(k1-alpha), e_(k1-m)) and theta_k2(e_(k2-beta), e_(k2-n)).

    Returns the verdict together with the values of the two conditions
    ``m - alpha == k2 - n`` and ``m - k1 == beta - n`` for comparison; the
    conditions are reported, not used.
    """
    p = _theta_checked(k1, k1 - alpha, k1 - m)
    q = _theta_checked(k2, k2 - beta, k2 - n)
    verdict = independent([p, q], config=config)
    conds = {"m - alpha == k2 - n": m - alpha == k2 - n, "m - k1 == beta - n": m - k1 == beta - n}
    return verdict, conds
