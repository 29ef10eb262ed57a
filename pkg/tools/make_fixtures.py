"""Write the reference polynomial fixture and its checksum.

The term lists below are typed in from the displayed reference formulas;
nothing here calls the library's own formulas.
"""

import hashlib
import json
import os
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "src", "barbell", "data")


def m1(terms):
    acc = {}
    for c, p, q in terms:
        acc[(p, q)] = acc.get((p, q), 0) + c
    return {"t1^%d t3^%d" % k: str(Fraction(v)) + ("" if Fraction(v).denominator != 1 else "/1")
            for k, v in sorted(acc.items()) if v}


def word(*parts):
    syl = []
    for g, e in parts:
        if syl and syl[-1][0] == g:
            e += syl.pop()[1]
        if e:
            syl.append((g, e))
    return " ".join(g if e == 1 else "%s^%d" % (g, e) for g, e in syl)


def m2(terms):
    acc = {}
    for c, x, y in terms:
        key = "%s | %s" % (word(*x), word(*y))
        acc[key] = acc.get(key, 0) + c
    return {k: "%d/1" % v for k, v in sorted(acc.items()) if v}


def delta_prime(k):
    return [(-1, k - 2, k - 2), (-1, k - 2, k - 2), (1, 2 - k, 0), (1, 0, 2 - k),
            (1, 0, k - 2), (1, k - 2, 0), (-1, 2 - k, 2 - k), (-1, 2 - k, 2 - k)]


def delta_type3(k):
    return [(-1, 2 - k, 1 - k), (-1, 2 - k, 1 - k), (-1, 2 - k, 1), (1, 1 - k, -1),
            (1, k - 1, 1), (1, 1, k - 1), (1, -1, 1 - k), (-1, 1, 2 - k)]


def delta_type2(k):
    return [(1, -1, 1 - k), (1, 1 - k, -1), (-1, 2 - k, 1), (-1, 1, 2 - k)]


def two_handle(k):
    t, u = "t", "u"
    return [(2, [(t, -1)], [(t, 1), (u, -k), (t, -2)]),
            (2, [(t, 1)], [(t, 1), (u, -k)]),
            (-2, [(t, 1), (u, -k), (t, -1)], [(t, -1)]),
            (-2, [(t, 1), (u, -k), (t, -1)], [(t, 1)]),
            (2, [(t, -1)], [(t, 1), (u, -k), (t, -1)]),
            (2, [(t, 1)], [(t, 1), (u, -k), (t, -1)]),
            (-2, [(t, 1), (u, -k), (t, -2)], [(t, -1)]),
            (-2, [(t, 1), (u, -k)], [(t, 1)])]


def first_point(k):
    # the first Type 1 point of theta_k(e_{k-2}, e_{k-2})
    return [(-1, k - 2, k - 2), (-1, k - 2, k - 2), (1, 2 - k, 0), (1, 0, 2 - k)]


def build():
    out = []
    for k in range(3, 16):
        out.append({"name": "delta_prime_%d" % k, "m": 1, "poly": m1(delta_prime(k))})
    for k in range(4, 16):
        out.append({"name": "delta_type3_%d" % k, "m": 1, "poly": m1(delta_type3(k))})
        out.append({"name": "delta_type2_%d" % k, "m": 1, "poly": m1(delta_type2(k))})
    for k in range(1, 6):
        out.append({"name": "two_handle_u%d" % k, "m": 2, "poly": m2(two_handle(k))})
    out.append({"name": "first_point_10", "m": 1, "poly": m1(first_point(10))})
    return out


def main():
    text = json.dumps(build(), indent=1, sort_keys=True) + "\n"
    with open(os.path.join(OUT, "reference.json"), "w") as f:
        f.write(text)
    with open(os.path.join(OUT, "reference.sha256"), "w") as f:
        f.write(hashlib.sha256(text.encode()).hexdigest() + "\n")


if __name__ == "__main__":
    main()
