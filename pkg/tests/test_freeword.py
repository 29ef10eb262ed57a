import warnings

import pytest

from barbell.freeword import (EMPTY, BarbellWord, DegenerateWord, GeneratorUInM1,
                              MalformedExponent, ReducedWord, ThetaSpec, UnknownGenerator,
                              crossing_count, exponent_sum, invert, parse_syllables, parse_word,
                              theta, theta_syllables, theta_to_word)


def test_free_reduction():
    assert ReducedWord.parse("t t^-1") == EMPTY
    assert str(ReducedWord.parse("t t t^-3 B")) == "t^-1 B"


def test_double_coset_normalization():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateWord)
        assert str(parse_word("B^2 t R^3 B t R")) == "t R^3 B t"
    w = "t^-1 R B^3 R^-3 t^-6 R B^2"
    assert str(parse_word(w)) == w


def test_normalization_repeats_until_stable():
    with pytest.warns(DegenerateWord):
        w = parse_word("B R")
    assert w.word == EMPTY
    with pytest.warns(DegenerateWord):
        assert str(parse_word("B t B R")) == "t B"


def test_parse_errors():
    with pytest.raises(UnknownGenerator):
        parse_syllables("x")
    with pytest.raises(MalformedExponent):
        parse_syllables("t^")
    with pytest.raises(MalformedExponent):
        parse_syllables("t^0")
    with pytest.raises(GeneratorUInM1):
        parse_word("t B u R t", m=1)


def test_degenerate_warning():
    with pytest.warns(DegenerateWord):
        w = parse_word("t^3")
    assert w.degenerate


def test_invert():
    assert invert(EMPTY) == EMPTY
    assert str(invert(ReducedWord.parse("t u^-2"))) == "u^2 t^-1"


def test_exponent_sum():
    assert exponent_sum(ReducedWord.parse("t^-1 R t^-7 B t^-1"), "t") == -9
    assert exponent_sum(EMPTY, "t") == 0
    assert exponent_sum(ReducedWord.parse("u^3 t u^-1"), "u") == 2


def test_theta_words():
    assert str(theta_to_word(theta(4, 2, 1))) == "t^-1 B R t^-2"
    assert str(theta_to_word(theta(10, 8, 8))) == "t^-1 R t^-7 B t^-1"
    with pytest.warns(DegenerateWord):
        w = theta_to_word(ThetaSpec(5, (0,) * 4, (0,) * 4))
    assert str(w) == "t^-4" and w.degenerate


def test_theta_t_exponent_before_cancellation():
    spec = ThetaSpec(6, (1, -2, 0, 1, 1), (0, 3, 1, -1, 2))
    assert sum(abs(e) for g, e in theta_syllables(spec) if g == "t") == 5


def test_theta_spec_lengths():
    with pytest.raises(ValueError):
        ThetaSpec(4, (1, 0), (0, 0, 1))


def test_crossing_count():
    assert crossing_count(parse_word("t^-1 R t^-7 B t^-1")) == 9
    assert crossing_count(parse_word("t B B R t u t^-1", m=2)) == 2
    assert crossing_count(BarbellWord(EMPTY, 1)) == 0
    assert crossing_count(parse_word("t B u^3 t R u^-1 t", m=2)) == 4


def test_word_is_immutable():
    w = ReducedWord.parse("t B")
    with pytest.raises(AttributeError):
        w.syllables = ()
