"""The W3 pipeline: intersection types, contribution polynomials, assembly.

A barbell word with several cuff syllables is first split into sub-barbells
with one B and one R each.  Every sub-barbell is a word ``a R b B c`` or
``a B b R c`` with a, b, c in the circle generators.  Crossings of the bar
with the scanning disk are sorted into types, and each type contributes a
fixed polynomial evaluated at exponent sums (m=1) or subwords (m=2).

Two output conventions are supported.

``mainformula``
    For ``a R b B c`` the counts are (|a|, |b|, |c|) Type 1, 2, 3 points and
    each contributes T_n(i, j) with i = -(b + c), j = -(a + b) as exponent
    sums.  For theta_k(e_i, e_j) this gives back i and j.  For ``a B b R c``
    the middle word is dragged away, leaving ``a B R c`` with i = -c and
    j = -a.  By default this is evaluated as |a| T1(i, j) + |c| T3(i, j),
    the R-before-B formula at k = i + j + 1; the Type 4 / Type 6 form
    |c| T4(i, j) + |a| T6(i, j) is available with ``b_before_r="display"``
    but is not antisymmetric in (i, j).
``wordform``
    The literal word formulas: for ``a R b B c`` the counts are
    (|c|, |b|, |a|) and the arguments are (a + b, b + c); for ``a B b R c``
    it is |a| T4(a, c) + |c| T6(a, c).  For m=2 these are the subword
    formulas with bars meaning inverses.
"""

from dataclasses import dataclass

from .freeword import EMPTY, BarbellWord, ReducedWord, crossing_count
from .groupalg import M1, M2, Poly, substitute

CONVENTIONS = ("mainformula", "wordform")


class ShapeUnsupported(ValueError):
    pass


@dataclass(frozen=True)
class TypeCounts:
    n1: int = 0
    n2: int = 0
    n3: int = 0
    n4: int = 0
    n5: int = 0
    n6: int = 0

    def as_tuple(self):
        return (self.n1, self.n2, self.n3, self.n4, self.n5, self.n6)

    def total(self):
        return sum(self.as_tuple())


@dataclass(frozen=True)
class SubBarbell:
    """One (B, R) pair of a word.

    ``word`` keeps every circle syllable and the chosen cuffs at exponent +1.
    ``coefficient`` is the product of the absolute cuff exponents and
    ``sign`` the product of their signs, so the contribution to W3 is
    ``sign * coefficient * W3(word)``.
    """

    coefficient: int
    sign: int
    word: BarbellWord

    @property
    def weight(self):
        return self.sign * self.coefficient


# integer contribution polynomials, entries are (coefficient, p, q) for t1^p t3^q

def _t1(i, j):
    return [(-1, j, i), (-1, i, j), (1, -i, j - i), (1, j - i, -i)]


def _t2(i, j):
    return [(-1, -j, i - j), (1, -i, j - i), (1, j - i, -i), (-1, i - j, -j)]


def _t3(i, j):
    return [(-1, -j, -i), (-1, -i, -j), (-1, -j, i - j), (1, -i, j - i),
            (1, i, i - j), (1, i - j, i), (1, j - i, -i), (-1, i - j, -j)]


def _t4(i, j):
    return [(1, i, j + i), (1, -i, j - i), (-1, j + i, i), (-1, j - i, -i),
            (1, i, j), (1, -i, j), (-1, j, i), (-1, j, -i)]


def _t6(i, j):
    # the sixth term is printed with t_i^{-j}; reading it as t1^{-j} is the
    # only choice that keeps all sixteen terms of the form t1^p t3^q
    return [(-1, -i, -j - i), (-1, -i, j - i), (1, i, i - j), (1, i, j + i),
            (1, j, j + i), (1, -j, i - j), (-1, j + i, i), (-1, i - j, i),
            (1, j - i, -i), (1, -j - i, -i), (-1, j + i, j), (-1, i - j, -j),
            (-1, j, i), (-1, -j, i), (1, i, j), (1, i, -j)]


_T_INT = {1: _t1, 2: _t2, 3: _t3, 4: _t4, 6: _t6}


def T_int(kind, i, j):
    """Contribution of one intersection point of the given type.

    >>> print(T_int(1, 8, 8))
    t1^-8 t3^0 + t1^0 t3^-8 - 2*t1^8 t3^8
    """
    if kind not in _T_INT:
        raise ValueError("type must be one of 1, 2, 3, 4, 6")
    return Poly.from_pairs(((c, (p, q)) for c, p, q in _T_INT[kind](i, j)), M1)


# word contribution polynomials; a term is (sign, slot-1 factors, slot-3 factors)

def _word_terms(kind, a, b, c):
    A, Bw, C = a, b, c
    a_, b_, c_ = a.inverse(), b.inverse(), c.inverse()
    if kind == 1:
        return [(1, [A, Bw], [c_, b_, A, Bw]), (1, [c_, b_, A, Bw], [A, Bw]),
                (-1, [c_, b_], [b_, a_]), (-1, [b_, a_], [c_, b_])]
    if kind == 2:
        return [(-1, [Bw, C], [b_, a_, Bw, C]), (1, [A, Bw], [c_, b_, A, Bw]),
                (1, [c_, b_, A, Bw], [A, Bw]), (-1, [b_, a_, Bw, C], [Bw, C])]
    if kind == 3:
        return [(-1, [Bw, C], [b_, a_, Bw, C]), (1, [A, Bw], [c_, b_, A, Bw]),
                (1, [b_, a_], [Bw, C, b_, a_]), (-1, [Bw, C], [A, Bw]),
                (-1, [A, Bw], [Bw, C]), (1, [Bw, C, b_, a_], [b_, a_]),
                (1, [c_, b_, A, Bw], [A, Bw]), (-1, [A, Bw, c_, b_], [c_, b_])]
    if kind == 4:
        return [(1, [a_], [c_, a_]), (1, [A], [c_, A]), (-1, [c_], [a_]), (-1, [c_], [A]),
                (1, [a_], [c_]), (1, [A], [c_]), (-1, [c_, a_], [a_]), (-1, [c_, A], [A])]
    if kind == 6:
        return [(1, [c_], [a_, c_]), (1, [C], [a_, C]), (-1, [A], [C, A]), (-1, [A], [c_, A]),
                (1, [a_], [C, a_]), (1, [a_], [c_, a_]), (1, [a_], [c_]), (1, [a_], [C]),
                (-1, [c_], [a_]), (-1, [C], [a_]), (-1, [c_, a_], [a_]), (-1, [C, a_], [a_]),
                (1, [c_, A], [A]), (1, [C, A], [A]), (-1, [a_, c_], [c_]), (-1, [a_, C], [C])]
    raise ValueError("type must be one of 1, 2, 3, 4, 6")


def _prod(ws):
    out = EMPTY
    for w in ws:
        out = out * w
    return out


def T_word(kind, a, b, c):
    """Word form of the type contribution for ``a R b B c`` or ``a B R c``.

    Types 4 and 6 ignore ``b``.  With a = t and c = t u t^-1, Type 4 gives the
    eight monomials of the two-handle example.
    """
    for w in (a, b, c):
        if w.generators() - {"t", "u"}:
            raise ShapeUnsupported("subwords may only use t and u")
    return Poly.from_pairs(((s, (_prod(x), _prod(y))) for s, x, y in _word_terms(kind, a, b, c)), M2)


# shapes and counts

def split_shape(w):
    """Return (order, a, b, c) for a word with exactly one B and one R.

    ``order`` is ``"RB"`` or ``"BR"``.  Exponents other than +1 on a cuff
    raise ShapeUnsupported; use :func:`factorize` first.
    """
    if isinstance(w, BarbellWord):
        w = w.word
    syl = w.syllables
    pos = {g: [i for i, (h, _) in enumerate(syl) if h == g] for g in ("B", "R")}
    if len(pos["B"]) != 1 or len(pos["R"]) != 1:
        raise ShapeUnsupported("need exactly one B and one R syllable")
    ib, ir = pos["B"][0], pos["R"][0]
    if syl[ib][1] != 1 or syl[ir][1] != 1:
        raise ShapeUnsupported("cuff syllables must have exponent +1")
    first, second = min(ib, ir), max(ib, ir)
    a = ReducedWord(syl[:first])
    b = ReducedWord(syl[first + 1:second])
    c = ReducedWord(syl[second + 1:])
    return ("RB" if ir < ib else "BR"), a, b, c


def _cross(w, m):
    return crossing_count(w, m)


def _drag(a, b, c, m):
    """Drag the B cuff along the bar so that B and R become adjacent."""
    return a, b * c * b.inverse()


def classify_counts(w, convention=None):
    """Type multiplicities of a single-pair word.

    The default convention is mainformula for m=1 and wordform for m=2.
    """
    m = w.m
    convention = convention or ("mainformula" if m == 1 else "wordform")
    order, a, b, c = split_shape(w)
    if order == "RB":
        la, lb, lc = _cross(a, m), _cross(b, m), _cross(c, m)
        if convention == "mainformula":
            return TypeCounts(n1=la, n2=lb, n3=lc)
        return TypeCounts(n1=lc, n2=lb, n3=la)
    a, c2 = _drag(a, b, c, m)
    la, lc = _cross(a, m), _cross(c2, m)
    if m == 1:
        return TypeCounts(n4=la, n6=lc)
    return TypeCounts(n4=lc, n6=la)


# assembly

def _esum(w):
    return w.exponent_sum("t")


def _m1_single(w, convention, special, b_before_r):
    order, a, b, c = split_shape(w)
    A, Bs, C = _esum(a), _esum(b), _esum(c)
    la, lb, lc = abs(A), abs(Bs), abs(C)
    acc = Poly.zero(M1)
    if order == "RB":
        if special == "type3" and not b and not c:
            # a R B with nothing after the first cuff: every crossing is of
            # Type 3 and both arguments equal the total winding
            n = -A if convention == "mainformula" else A
            return la * T_int(3, n, n)
        if convention == "mainformula":
            i, j = -(Bs + C), -(A + Bs)
            parts = ((la, 1), (lb, 2), (lc, 3))
        else:
            i, j = A + Bs, Bs + C
            parts = ((lc, 1), (lb, 2), (la, 3))
        for n, t in parts:
            if n:
                acc = acc + n * T_int(t, i, j)
        return acc
    if b_before_r == "extended":
        # the R-before-B formula at k = i + j + 1: |a| Type 1 and |c| Type 3
        if convention == "mainformula":
            i, j = -C, -A
            return la * T_int(1, i, j) + lc * T_int(3, i, j)
        i, j = A, C
        return lc * T_int(1, i, j) + la * T_int(3, i, j)
    if convention == "mainformula":
        i, j = -C, -A
        return lc * T_int(4, i, j) + la * T_int(6, i, j)
    return la * T_int(4, A, C) + lc * T_int(6, A, C)


def _m2_single(w):
    order, a, b, c = split_shape(w)
    counts = classify_counts(w, "wordform")
    acc = Poly.zero(M2)
    if order == "RB":
        for n, t in ((counts.n1, 1), (counts.n2, 2), (counts.n3, 3)):
            if n:
                acc = acc + n * T_word(t, a, b, c)
        return acc
    a, c2 = _drag(a, b, c, 2)
    if counts.n4:
        acc = acc + counts.n4 * T_word(4, a, EMPTY, c2)
    if counts.n6:
        acc = acc + counts.n6 * T_word(6, a, EMPTY, c2)
    return acc


def factorize(w):
    """Split a word into sub-barbells, one per (B syllable, R syllable) pair.

    >>> from .freeword import parse_word
    >>> sorted(s.coefficient for s in factorize(parse_word("t^-1 R B^3 R^-3 t^-6 R B^2")))
    [2, 2, 3, 3, 6, 9]
    """
    syl = w.word.syllables
    bs = [i for i, (g, _) in enumerate(syl) if g == "B"]
    rs = [i for i, (g, _) in enumerate(syl) if g == "R"]
    out = []
    for ib in bs:
        for ir in rs:
            keep = []
            for i, (g, e) in enumerate(syl):
                if i in (ib, ir):
                    keep.append((g, 1))
                elif g not in ("B", "R"):
                    keep.append((g, e))
            eb, er = syl[ib][1], syl[ir][1]
            sign = (1 if eb > 0 else -1) * (1 if er > 0 else -1)
            out.append(SubBarbell(abs(eb * er), sign, BarbellWord(ReducedWord(keep), w.m, normalize=False)))
    return out


def w3(w, convention=None, special="type3", b_before_r="extended"):
    """W3 of a barbell word as a raw polynomial.

    ``convention`` is ``"mainformula"`` or ``"wordform"`` (defaults:
    mainformula for m=1, wordform for m=2).  ``special`` selects how a
    sub-barbell ``a R B`` is handled: ``"type3"`` uses |a| T3(n, n) with n
    the total winding, ``"generic"`` uses the ordinary R-before-B formula.
    ``b_before_r`` selects the formula for B-before-R sub-barbells when
    m=1: ``"extended"`` (the R-before-B formula with no Type 2 points, the
    default) or ``"display"`` (Types 4 and 6).
    """
    m = w.m
    convention = convention or ("mainformula" if m == 1 else "wordform")
    if convention not in CONVENTIONS:
        raise ValueError("unknown convention %r" % convention)
    if special not in ("type3", "generic"):
        raise ValueError("special must be 'type3' or 'generic'")
    if b_before_r not in ("display", "extended"):
        raise ValueError("b_before_r must be 'display' or 'extended'")
    kind = M1 if m == 1 else M2
    acc = Poly.zero(kind)
    if w.degenerate:
        return acc
    for sb in factorize(w):
        if sb.word.degenerate:
            continue
        if m == 1:
            part = _m1_single(sb.word, convention, special, b_before_r)
        else:
            part = _m2_single(sb.word)
            if convention == "mainformula":
                part = substitute(part, "invert_both")
        acc = acc + sb.weight * part
    return acc


def w3_theta(k, i, j, si=1, sj=1, **kw):
    from .freeword import theta, theta_to_word
    return w3(theta_to_word(theta(k, i, j, si, sj)), **kw)
