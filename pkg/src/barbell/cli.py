"""Command line front end.

    barbell w3 --m 1 --word "t^-1 R t^-7 B t^-1"
    barbell w3 --theta 10,8,8 --json
    barbell verify-paper --all
    barbell independence --family "delta,theta(k-1,k-3)" --k 6..12

Exit codes: 0 success, 1 verification failure or inconclusive result,
2 usage or input error.  BARBELL_AUDIT_BOUND, BARBELL_MARGIN and
BARBELL_LENGTH_BOUND override the default bounds.
"""

import argparse
import json
import os
import sys
import time
import warnings

from . import verify
from .freeword import DegenerateWord, ThetaSpec, WordError, parse_word, theta_to_word
from .groupalg import Poly
from .hexagon import Zero, decide
from .independence import (Dependent, Independent, IndependenceConfig, RangeViolation,
                           family_theta, independent)
from .w3 import CONVENTIONS, ShapeUnsupported, classify_counts, w3

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _env_int(name):
    v = os.environ.get(name)
    if not v:
        return None
    try:
        return int(v)
    except ValueError:
        raise UsageError("%s must be an integer" % name)


def parse_theta(text):
    """``k,i,j`` for theta_k(e_i, e_j), or ``k;v;w`` with comma separated vectors."""
    try:
        if ";" in text:
            k, v, w = text.split(";")
            v = [int(x) for x in v.split(",")]
            w = [int(x) for x in w.split(",")]
            return ThetaSpec(int(k), v, w)
        k, i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError("--theta wants k,i,j or k;v1,...;w1,...")
    v = [0] * (k - 1)
    w = [0] * (k - 1)
    if not (1 <= i <= k - 1 and 1 <= j <= k - 1):
        raise UsageError("--theta needs 1 <= i, j <= k - 1")
    v[i - 1] = 1
    w[j - 1] = 1
    return ThetaSpec(k, v, w)


def parse_range(text):
    """``6..12`` or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError("--k wants a..b")


def split_family(text):
    """Split on commas that are not inside parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def _emit(report, as_json, text_lines):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_w3(args):
    m = args.m
    notes = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateWord)
        if args.theta:
            word = theta_to_word(parse_theta(args.theta), m=m)
        elif args.word is not None:
            word = parse_word(args.word, m=m)
        else:
            raise UsageError("give --word or --theta")
    notes += [str(w.message) for w in caught if issubclass(w.category, DegenerateWord)]
    p = w3(word, convention=args.convention)
    margin = args.margin if args.margin is not None else _env_int("BARBELL_MARGIN")
    lb = args.length_bound if args.length_bound is not None else _env_int("BARBELL_LENGTH_BOUND")
    verdict = decide(p, margin=margin, length_bound=lb, audit_bound=_env_int("BARBELL_AUDIT_BOUND"))
    counts = None
    try:
        counts = classify_counts(word, args.convention).as_tuple()
    except ShapeUnsupported:
        pass
    report = {"command": "w3",
              "inputs": {"m": m, "word": str(word), "convention": args.convention or
                         ("mainformula" if m == 1 else "wordform")},
              "polynomial": p.to_json(), "terms": len(p),
              "verdict": verdict.verdict, "certificate": verdict.to_json(),
              "type_counts": list(counts) if counts else None, "notes": notes}
    lines = ["word:      %s" % word, "W3:        %s" % p, "terms:     %d" % len(p)]
    if counts:
        lines.append("types:     %s" % (counts,))
    lines.append("verdict:   %s" % verdict.verdict)
    if isinstance(verdict, Zero):
        lines.append("witness:   %d hexagon generators" % len(verdict.witness))
    elif verdict.verdict == "nonzero":
        lines.append("witness:   %s = %s" % (verdict.functional.to_json(), verdict.value))
    lines += ["note:      %s" % n for n in notes]
    _emit(report, args.json, lines)
    return OK


def cmd_verify(args):
    if args.all:
        names = list(verify.SUITES)
    elif args.suite:
        names = args.suite
    else:
        raise UsageError("give --suite NAME or --all")
    for n in names:
        if n not in verify.SUITES and n not in verify.EXTRA_SUITES:
            raise UsageError("unknown suite %r; choose from %s"
                             % (n, ", ".join(list(verify.SUITES) + list(verify.EXTRA_SUITES))))
    results = [verify.run(n) for n in names]
    failed = [r for r in results if not r.passed]
    report = {"command": "verify-paper", "inputs": {"suites": names},
              "verdicts": [r.to_json() for r in results], "passed": not failed}
    if args.timing:
        report["timing"] = {r.name: round(r.seconds, 3) for r in results}
    lines = []
    for r in results:
        line = "%-22s %s  (%d checks, %.2fs)" % (r.name, "pass" if r.passed else "FAIL",
                                                 r.checked, r.seconds)
        if not r.passed:
            line += "  first failure: %s" % r.failure
        lines.append(line)
    _emit(report, args.json, lines)
    return FAIL if failed else OK


def _load_poly_file(path, m):
    with open(path) as f:
        data = json.load(f)
    if isinstance(data, dict):
        m = data.get("m", m)
        data = data.get("polys", data.get("family"))
    if not isinstance(data, list):
        raise UsageError("poly file must hold a list of polynomials")
    return [Poly.from_json(d, m) for d in data], m


def cmd_independence(args):
    cfg = IndependenceConfig.from_env()
    if args.margin is not None:
        cfg.margin = args.margin
    if args.length_bound is not None:
        cfg.length_bound = args.length_bound
    m = args.m
    if args.poly_file:
        family, m = _load_poly_file(args.poly_file, m)
        labels = ["poly %d" % i for i in range(len(family))]
    elif args.family:
        ks = parse_range(args.k or "")
        family, labels = [], []
        for k in ks:
            for pat in split_family(args.family):
                family.append(family_theta(pat, [k])[0])
                labels.append("%s @ k=%d" % (pat, k))
    else:
        raise UsageError("give --family with --k, or --poly-file")
    if not family:
        raise UsageError("empty family")
    v = independent(family, config=cfg)
    report = {"command": "independence",
              "inputs": {"m": m, "family": args.family, "k": args.k, "poly_file": args.poly_file,
                         "members": labels},
              "verdict": v.verdict, "certificate": v.to_json()}
    lines = ["members:   %d" % len(family), "verdict:   %s" % v.verdict]
    if isinstance(v, Independent):
        lines.append("rank:      %d" % v.certificate.rank)
        lines.append("audit:     bound %s" % v.certificate.audit_bound)
        for f in v.certificate.functionals:
            lines.append("  %s" % json.dumps(f.to_json(), sort_keys=True))
    elif isinstance(v, Dependent):
        lines.append("combination: (%s)" % ", ".join(str(c) for c in v.combination))
    else:
        lines.append("note:      %s" % v.note)
    _emit(report, args.json, lines)
    return OK if isinstance(v, (Independent, Dependent)) else FAIL


def build_parser():
    p = argparse.ArgumentParser(prog="barbell", description="W3 of unknotted barbell diffeomorphisms")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("w3", help="compute W3 of a word and decide it in the quotient")
    w.add_argument("--m", type=int, choices=(1, 2), default=1)
    w.add_argument("--word")
    w.add_argument("--theta", help="k,i,j or k;v;w with comma separated vectors")
    w.add_argument("--convention", choices=CONVENTIONS)
    w.add_argument("--margin", type=int)
    w.add_argument("--length-bound", type=int)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_w3)

    v = sub.add_parser("verify-paper", help="run the identity suites")
    v.add_argument("--suite", action="append")
    v.add_argument("--all", action="store_true")
    v.add_argument("--timing", action="store_true")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("independence", help="certify independence of a family")
    i.add_argument("--m", type=int, choices=(1, 2), default=1)
    i.add_argument("--family", help='comma separated patterns, e.g. "delta,theta(k-1,k-3)"')
    i.add_argument("--k", help="index range a..b")
    i.add_argument("--poly-file")
    i.add_argument("--margin", type=int)
    i.add_argument("--length-bound", type=int)
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_independence)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t = time.perf_counter()
    try:
        code = args.func(args)
    except (UsageError, WordError, RangeViolation, ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return USAGE
    if os.environ.get("BARBELL_TIMING"):
        print("elapsed %.2fs" % (time.perf_counter() - t), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
