"""A second route to W3 through the fundamental classes G(p, q), plus stored
reference polynomials.

W3(G(p, q)) = t1^(p-q) t3^(-q) and D(i, j) is a signed sum of four G
classes.  The theta classes are combinations of D classes, so this route
never touches the intersection-type formulas of :mod:`barbell.w3`.

This module also holds a complete invariant of the m=1 quotient, used as an
independent check on window computations.
"""

import hashlib
import json
import os
from functools import lru_cache

from .groupalg import M1, Poly
from .hexagon import slice_class, slice_orbit

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")


def w3_G(p, q):
    """W3 of the fundamental class G(p, q).

    >>> print(w3_G(3, 1))
    t1^2 t3^-1
    """
    return Poly.monomial((p - q, -q))


def w3_D(i, j):
    return Poly.from_pairs([(-1, (j + i, i)), (1, (-j - i, -i)),
                            (-1, (i + j, j)), (1, (-i - j, -j))], M1)


def _D(i, j):
    return -w3_G(j, -i) + w3_G(-j, i) - w3_G(i, -j) + w3_G(-i, j)


REGIME2_READINGS = ("printed", "grouped", "extended")


def w3_theta_via_DG(k, i, j, reading="extended"):
    """W3(theta_k(e_i, e_j)) from the D classes.

    For i + j >= k there is one formula.  For i + j <= k - 1 the printed
    formula can be parsed in two ways; ``"printed"`` applies the factor i to
    the first bracket only, ``"grouped"`` applies it to all four D terms up
    to the j bracket, and ``"extended"`` evaluates the i + j >= k formula at
    k = i + j + 1.
    """
    if not (1 <= i <= k - 1 and 1 <= j <= k - 1):
        raise ValueError("need 1 <= i, j <= k - 1")
    if i + j >= k or reading == "extended":
        kk = k if i + j >= k else i + j + 1
        return ((kk - i - 1) * (_D(-j, i) - _D(i - j, -i))
                + (kk - j - 1) * (_D(i, -j) - _D(i - j, j))
                + (i + j + 1 - kk) * _D(i, -j))
    if reading == "printed":
        return (i * (_D(i, -j) - _D(i + j, -j)) - _D(i - j, j) + _D(i, j)
                + j * (_D(-j, i) - _D(-i - j, i) - _D(i - j, -i) + _D(i, j)))
    if reading == "grouped":
        return (i * (_D(i, -j) - _D(i + j, -j) - _D(i - j, j) + _D(i, j))
                + j * (_D(-j, i) - _D(-i - j, i) - _D(i - j, -i) + _D(i, j)))
    raise ValueError("unknown reading %r" % reading)


# reference fixtures

class FixtureError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _load():
    path = os.path.join(DATA, "reference.json")
    with open(path, "rb") as f:
        raw = f.read()
    with open(os.path.join(DATA, "reference.sha256")) as f:
        want = f.read().strip()
    if hashlib.sha256(raw).hexdigest() != want:
        raise FixtureError("reference.json does not match its checksum")
    return {e["name"]: e for e in json.loads(raw)}


def reference(name):
    e = _load()[name]
    return Poly.from_json(e["poly"], e["m"])


def reference_names():
    return sorted(_load())


def delta_k_reference(k):
    """The stored (type3_poly, type2_poly) pair for delta_k, k >= 4."""
    if k < 4:
        raise ValueError("k must be at least 4")
    return reference("delta_type3_%d" % k), reference("delta_type2_%d" % k)


def delta_prime_reference(k):
    return reference("delta_prime_%d" % k)


def two_handle_reference(k):
    return reference("two_handle_u%d" % k)


# complete invariant of the m=1 quotient

def quotient_invariant(p):
    """Coordinates of the class of ``p`` in the m=1 quotient.

    The result is a pair of dicts: antisymmetric parts keyed by the slice
    representative (c, a) with 2a < c, and orbit sums keyed by the smallest
    member of the orbit.  ``p`` lies in the relation span exactly when both
    are empty.
    """
    anti = {}
    orbit = {}
    for m, v in p.terms.items():
        c, a = slice_class(m)
        if 2 * a != c:
            if 2 * a < c:
                key, s = (c, a), 1
            else:
                key, s = (c, c - a), -1
            anti[key] = anti.get(key, 0) + s * v
        o = min(slice_orbit(c, a))
        orbit[o] = orbit.get(o, 0) + v
    return ({k: v for k, v in anti.items() if v}, {k: v for k, v in orbit.items() if v})


def is_zero_in_quotient(p):
    anti, orbit = quotient_invariant(p)
    return not anti and not orbit
