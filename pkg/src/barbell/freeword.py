"""Free group words for barbells.

Words live in the free group on B, R, t and u.  B and R are the meridians of
the two cuffs, t and u are the circle factors.  A word is stored as a tuple of
syllables ``(generator, exponent)`` and is always freely reduced.

Text syntax is a whitespace separated list of syllables, for example
``"t^-1 R B^3 R^-3 t^-6 R B^2"``.  An exponent of 1 is omitted.
"""

import re
import warnings
from dataclasses import dataclass

GENERATORS = ("B", "R", "t", "u")
CUFFS = ("B", "R")


class WordError(ValueError):
    pass


class UnknownGenerator(WordError):
    pass


class MalformedExponent(WordError):
    pass


class GeneratorUInM1(WordError):
    pass


class DegenerateWord(UserWarning):
    """Emitted when a barbell word lacks a B or an R syllable."""


def _reduce(syllables):
    out = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e = out[-1][1] + e
            out.pop()
            if e != 0:
                out.append((g, e))
        else:
            out.append((g, e))
    return tuple(out)


class ReducedWord:
    """Freely reduced word, immutable and hashable.

    >>> ReducedWord.parse("t u u^-1 t^2")
    ReducedWord('t^3')
    """

    __slots__ = ("syllables", "_hash")

    def __init__(self, syllables=()):
        for g, e in syllables:
            if g not in GENERATORS:
                raise UnknownGenerator(g)
        object.__setattr__(self, "syllables", _reduce(syllables))
        object.__setattr__(self, "_hash", hash(self.syllables))

    def __setattr__(self, name, value):
        raise AttributeError("ReducedWord is immutable")

    @classmethod
    def parse(cls, text):
        return cls(parse_syllables(text))

    @classmethod
    def power(cls, g, n):
        return cls(((g, n),))

    def __eq__(self, other):
        return isinstance(other, ReducedWord) and self.syllables == other.syllables

    def __lt__(self, other):
        return _order_key(self) < _order_key(other)

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        return ReducedWord(self.syllables + other.syllables)

    def __len__(self):
        # letter length, so t^3 has length 3
        return sum(abs(e) for _, e in self.syllables)

    def __bool__(self):
        return bool(self.syllables)

    def __iter__(self):
        return iter(self.syllables)

    def __str__(self):
        return format_syllables(self.syllables)

    def __repr__(self):
        return "ReducedWord(%r)" % str(self)

    def inverse(self):
        return ReducedWord(tuple((g, -e) for g, e in reversed(self.syllables)))

    def exponent_sum(self, g):
        return sum(e for h, e in self.syllables if h == g)

    def generators(self):
        return {g for g, _ in self.syllables}

    def letters(self):
        """Expand into unit letters ``(g, +1 or -1)``."""
        out = []
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def delete(self, gens):
        """Drop every syllable whose generator is in ``gens``, then reduce."""
        return ReducedWord(tuple(s for s in self.syllables if s[0] not in gens))


EMPTY = ReducedWord()


def _order_key(w):
    return (len(w), [(GENERATORS.index(g), e) for g, e in w.syllables])


_SYLLABLE = re.compile(r"^([A-Za-z]+)(?:\^(.*))?$")


def parse_syllables(text):
    out = []
    for tok in text.split():
        m = _SYLLABLE.match(tok)
        if m is None:
            raise MalformedExponent("cannot read syllable %r" % tok)
        g, exp = m.group(1), m.group(2)
        if g not in GENERATORS:
            raise UnknownGenerator("unknown generator %r in %r" % (g, tok))
        if exp is None:
            e = 1
        else:
            if not re.fullmatch(r"-?[0-9]+", exp):
                raise MalformedExponent("bad exponent in %r" % tok)
            e = int(exp)
            if e == 0:
                raise MalformedExponent("zero exponent in %r" % tok)
        out.append((g, e))
    return out


def format_syllables(syllables):
    parts = []
    for g, e in syllables:
        parts.append(g if e == 1 else "%s^%d" % (g, e))
    return " ".join(parts)


def invert(w):
    return w.inverse()


def exponent_sum(w, g):
    if isinstance(w, BarbellWord):
        w = w.word
    return w.exponent_sum(g)


def normalize_double_coset(w):
    """Strip leading B powers and trailing R powers.

    Stripping can expose new leading or trailing syllables that merge, so
    we loop until stable.
    """
    syl = list(w.syllables)
    while True:
        changed = False
        if syl and syl[0][0] == "B":
            syl = list(_reduce(syl[1:]))
            changed = True
        if syl and syl[-1][0] == "R":
            syl = list(_reduce(syl[:-1]))
            changed = True
        if not changed:
            return ReducedWord(syl)


@dataclass(frozen=True)
class BarbellWord:
    """A barbell word with its ambient ``m`` (1 or 2).

    The word is double coset normalized unless ``normalize`` is False, which
    is used for sub-barbells that keep their position inside a larger word.
    """

    word: ReducedWord
    m: int = 1
    normalize: bool = True

    def __post_init__(self):
        if self.m not in (1, 2):
            raise WordError("m must be 1 or 2")
        if self.m == 1 and "u" in self.word.generators():
            raise GeneratorUInM1("u is not available when m=1")
        if not self.normalize:
            return
        w = normalize_double_coset(self.word)
        if w != self.word:
            object.__setattr__(self, "word", w)

    @property
    def degenerate(self):
        gens = self.word.generators()
        return "B" not in gens or "R" not in gens

    @property
    def syllables(self):
        return self.word.syllables

    def __str__(self):
        return str(self.word)


def parse_word(text, m=1):
    """Parse, reduce and normalize a barbell word.

    >>> str(parse_word("B^2 t R^3 B t R"))
    't R^3 B t'
    """
    syl = parse_syllables(text)
    if m == 1 and any(g == "u" for g, _ in syl):
        raise GeneratorUInM1("u is not available when m=1")
    bw = BarbellWord(ReducedWord(syl), m)
    if bw.degenerate:
        warnings.warn("word %r has no B or no R syllable; W3 is zero" % text,
                      DegenerateWord, stacklevel=2)
    return bw


@dataclass(frozen=True)
class ThetaSpec:
    k: int
    v: tuple
    w: tuple

    def __post_init__(self):
        if self.k < 1:
            raise WordError("k must be at least 1")
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        if len(self.v) != self.k - 1 or len(self.w) != self.k - 1:
            raise WordError("v and w need length k-1")


def unit(k, i, scale=1):
    """The vector ``scale * e_i`` of length k-1 (1-based index)."""
    if not 1 <= i <= k - 1:
        raise WordError("index %d out of range for k=%d" % (i, k))
    v = [0] * (k - 1)
    v[i - 1] = scale
    return tuple(v)


def theta(k, i, j, si=1, sj=1):
    return ThetaSpec(k, unit(k, i, si), unit(k, j, sj))


def theta_syllables(spec):
    """Unreduced syllables of the theta word.

    Slot 0 holds R^{v_{k-1}}, slot s holds B^{w_s} R^{v_{k-1-s}} and the
    last slot holds B^{w_{k-1}}; consecutive slots are joined by t^-1.
    """
    k, v, w = spec.k, spec.v, spec.w
    out = []
    for s in range(k):
        if s > 0:
            out.append(("t", -1))
            if s <= k - 1:
                out.append(("B", w[s - 1]))
        if s < k - 1:
            out.append(("R", v[k - 2 - s]))
    return [x for x in out if x[1] != 0]


def theta_to_word(spec, m=1):
    """Word of the barbell theta_k(v, w).

    >>> str(theta_to_word(theta(4, 2, 1)))
    't^-1 B R t^-2'
    """
    bw = BarbellWord(ReducedWord(theta_syllables(spec)), m)
    if bw.degenerate:
        warnings.warn("theta_%d(%s, %s) has an unlinked cuff" % (spec.k, spec.v, spec.w),
                      DegenerateWord, stacklevel=2)
    return bw


def u_blocks(w):
    """Number of maximal u blocks.  In a reduced word these are the u syllables."""
    return sum(1 for g, _ in w.syllables if g == "u")


def crossing_count(w, m=None):
    """Crossings of the bar with the scanning disk.

    For m=1 every unit of t exponent is one crossing.  For m=2 the disk sits
    in the neck of the connected sum and every maximal u block crosses it
    twice, on the way in and on the way out.
    """
    if isinstance(w, BarbellWord):
        m = w.m if m is None else m
        w = w.word
    m = 1 if m is None else m
    if m == 1:
        return sum(abs(e) for g, e in w.syllables if g == "t")
    return 2 * u_blocks(w)
