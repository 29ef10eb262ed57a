"""Property based checks of the algebraic laws."""

import warnings

from hypothesis import given, settings, strategies as st

from barbell import exactla
from barbell.freeword import (DegenerateWord, ReducedWord, ThetaSpec, crossing_count,
                              invert, parse_word, theta_syllables, theta_to_word)
from barbell.groupalg import M1, M2, Poly, identity, substitute
from barbell.hexagon import (SliceFunctional, Zero, check_zero, generator_poly, hexagon_m1,
                             hexagon_m2)
from barbell.oracle import is_zero_in_quotient
from barbell.w3 import w3, w3_theta

small = st.integers(-6, 6)
nonzero = st.integers(-3, 3).filter(bool)
syllable = st.tuples(st.sampled_from("BRtu"), nonzero)
tu_syllable = st.tuples(st.sampled_from("tu"), nonzero)
words = st.lists(syllable, max_size=7).map(ReducedWord)
tu_words = st.lists(tu_syllable, max_size=4).map(ReducedWord)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)

m1_polys = st.dictionaries(st.tuples(small, small), fractions, max_size=5).map(lambda d: Poly(d, M1))
m2_polys = st.dictionaries(st.tuples(tu_words, tu_words), fractions, max_size=4).map(
    lambda d: Poly(d, M2))


@given(words)
def test_reduce_idempotent(w):
    assert ReducedWord.parse(str(w)) == w
    for a, b in zip(w.syllables, w.syllables[1:]):
        assert a[0] != b[0]


@given(words)
def test_parse_print_round_trip_barbell(w):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateWord)
        bw = parse_word(str(w), m=2)
        assert parse_word(str(bw), m=2) == bw


@given(words, words)
def test_invert_involution_and_antihomomorphism(a, b):
    assert invert(invert(a)) == a
    assert invert(a * b) == invert(b) * invert(a)
    assert (a * invert(a)) == ReducedWord()


@given(st.lists(tu_syllable, max_size=4), st.lists(tu_syllable, max_size=4))
def test_crossing_count_additive(x, y):
    a, b = ReducedWord(x), ReducedWord(y)
    if a.syllables and b.syllables and a.syllables[-1][0] == b.syllables[0][0]:
        return
    for m in (1, 2):
        if m == 1 and ("u" in a.generators() or "u" in b.generators()):
            continue
        assert crossing_count(a * b, m) == crossing_count(a, m) + crossing_count(b, m)


@given(m1_polys, m1_polys, m1_polys)
def test_ring_laws_m1(a, b, c):
    one = Poly.monomial(identity(M1))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * one == a and a + Poly.zero() == a


@settings(max_examples=40)
@given(m2_polys, m2_polys, m2_polys)
def test_ring_laws_m2(a, b, c):
    one = Poly.monomial(identity(M2))
    assert (a * b) * c == a * (b * c)
    assert (a + b) * c == a * c + b * c
    assert a * one == a
    for x, y in (a * b).terms:
        assert ReducedWord(x.syllables) == x and ReducedWord(y.syllables) == y


@given(m1_polys)
def test_json_round_trip(p):
    assert Poly.from_json(p.to_json()) == p


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_invert_both_preserves_relations(a, b):
    assert substitute(hexagon_m1(a, b), "invert_both") == hexagon_m1(-a, -b)


@given(st.integers(-15, 15), st.integers(-15, 15), st.integers(-20, 20), st.integers(-20, 20))
def test_slice_annihilates(c, a, al, be):
    if 2 * a == c:
        return
    assert SliceFunctional(c, a).evaluate(hexagon_m1(al, be)) == 0


@given(tu_words, tu_words)
def test_relation_to_relation(nu, mu):
    g = hexagon_m2(nu, mu)
    x, y = nu.exponent_sum("t"), mu.exponent_sum("t")
    assert substitute(g, "kill_u") == hexagon_m1(x - y, -y)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), fractions), max_size=4))
def test_random_relation_combination_is_zero(gens):
    p = Poly.zero()
    for g, c in gens:
        p = p + c * generator_poly(g)
    z = check_zero(p)
    assert isinstance(z, Zero) and z.expand(M1) == p
    assert is_zero_in_quotient(p)


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(1, 6), st.lists(st.lists(st.integers(-3, 3), min_size=6, max_size=6),
                                                    min_size=1, max_size=6))
def test_rank_nullity(nrows, ncols, data):
    m = [row[:ncols] for row in data[:nrows]]
    basis = exactla.nullspace(m, ncols)
    assert exactla.rank(m) + len(basis) == ncols
    for v in basis:
        assert all(x == 0 for x in exactla.matvec(m, v))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.integers(-2, 2), min_size=k - 1, max_size=k - 1),
    st.lists(st.integers(-2, 2), min_size=k - 1, max_size=k - 1))))
def test_linearity(args):
    k, v, w = args
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateWord)
        lhs = w3(theta_to_word(ThetaSpec(k, v, w)))
    rhs = Poly.zero()
    for i in range(1, k):
        for j in range(1, k):
            if v[i - 1] and w[j - 1]:
                rhs = rhs + v[i - 1] * w[j - 1] * w3_theta(k, i, j)
    assert lhs == rhs


@given(st.integers(1, 12).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.integers(-3, 3), min_size=k - 1, max_size=k - 1),
    st.lists(st.integers(-3, 3), min_size=k - 1, max_size=k - 1))))
def test_theta_t_letters(args):
    k, v, w = args
    assert sum(abs(e) for g, e in theta_syllables(ThetaSpec(k, v, w)) if g == "t") == k - 1
