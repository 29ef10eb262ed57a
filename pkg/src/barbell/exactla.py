"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping a hashable column key to a Fraction.  Nothing here
uses floating point, so every answer can be re-checked by substitution.
"""

from fractions import Fraction


def _axpy(y, a, x):
    """y += a * x in place, dropping zeros."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


def solve_sparse(equations, rhs):
    """Solve ``sum_v row[v] * x_v = rhs`` for every row.

    ``equations`` is a list of sparse rows (variable -> coefficient).  Free
    variables are set to zero.  Returns a dict of the nonzero unknowns, or
    None when the system is inconsistent.

    Rows are processed shortest first and the pivot in each reduced row is
    the variable that occurs in the fewest rows, which keeps fill-in low on
    the very sparse relation systems used here.
    """
    order = sorted(range(len(equations)), key=lambda r: len(equations[r]))
    occurs = {}
    for row in equations:
        for v in row:
            occurs[v] = occurs.get(v, 0) + 1
    pivots = {}      # variable -> (row, rhs), row normalised to 1 at the pivot
    sequence = []
    for r in order:
        row = {v: Fraction(c) for v, c in equations[r].items() if c}
        b = Fraction(rhs[r])
        while True:
            hit = next((v for v in row if v in pivots), None)
            if hit is None:
                break
            prow, pb = pivots[hit]
            a = row[hit]
            _axpy(row, -a, prow)
            b -= a * pb
        if not row:
            if b != 0:
                return None
            continue
        p = min(row, key=lambda v: (occurs.get(v, 0), len(str(v))))
        c = row[p]
        row = {v: x / c for v, x in row.items()}
        pivots[p] = (row, b / c)
        sequence.append(p)
    x = {}
    for p in reversed(sequence):
        row, b = pivots[p]
        val = b
        for v, c in row.items():
            if v != p:
                val -= c * x.get(v, 0)
        if val:
            x[p] = val
    return x


def solve_membership(target, generators):
    """Coefficients c with ``sum c_i g_i == target``, or None.

    ``generators`` is a list of sparse vectors.  The result is a list of
    Fractions aligned with ``generators``.

    >>> solve_membership({0: 1, 1: 2}, [{0: 1}, {1: 1}])
    [Fraction(1, 1), Fraction(2, 1)]
    """
    rows = {}
    for i, g in enumerate(generators):
        for k, v in g.items():
            if v:
                rows.setdefault(k, {})[i] = Fraction(v)
    for k in target:
        rows.setdefault(k, {})
    keys = list(rows)
    sol = solve_sparse([rows[k] for k in keys], [target.get(k, 0) for k in keys])
    if sol is None:
        return None
    return [sol.get(i, Fraction(0)) for i in range(len(generators))]


def combine(coeffs, vectors):
    out = {}
    for c, v in zip(coeffs, vectors):
        if c:
            _axpy(out, Fraction(c), v)
    return out


def _as_rows(m):
    rows = []
    for r in m:
        if isinstance(r, dict):
            rows.append({k: Fraction(v) for k, v in r.items() if v})
        else:
            rows.append({k: Fraction(v) for k, v in enumerate(r) if v})
    return rows


def row_echelon(m):
    """Reduced row echelon form of a list of rows.

    Returns ``(rows, pivot_columns)`` where each returned row is a sparse
    dict with 1 at its pivot and 0 at every other pivot column.
    Pivot choice takes the row with the fewest nonzeros, a cheap guard
    against coefficient growth.
    """
    rows = [r for r in _as_rows(m) if r]
    cols = sorted({k for r in rows for k in r}, key=_col_key)
    done = []
    pcols = []
    for col in cols:
        cand = [r for r in rows if col in r]
        if not cand:
            continue
        piv = min(cand, key=len)
        rows.remove(piv)
        c = piv[col]
        piv = {k: v / c for k, v in piv.items()}
        for r in rows:
            if col in r:
                _axpy(r, -r[col], piv)
        for r in done:
            if col in r:
                _axpy(r, -r[col], piv)
        rows = [r for r in rows if r]
        done.append(piv)
        pcols.append(col)
    return done, pcols


def _col_key(k):
    return (0, k) if isinstance(k, int) else (1, str(k))


def rank(m):
    """Exact rank over Q.

    >>> rank([[1, 0], [0, 1], [1, 1]])
    2
    """
    return len(row_echelon(m)[1])


def nullspace(m, ncols=None):
    """Basis of ``{x : M x = 0}`` as dense Fraction lists.

    ``m`` is a list of rows (dense lists or sparse dicts keyed by column
    index); ``ncols`` defaults to one past the largest column seen.
    """
    rows = _as_rows(m)
    if ncols is None:
        ncols = 1 + max((k for r in rows for k in r), default=-1)
    red, pcols = row_echelon(rows)
    free = [c for c in range(ncols) if c not in set(pcols)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pcols):
            x[pc] = -row.get(f, 0)
        basis.append(x)
    return basis


def matvec(m, x):
    out = []
    for r in _as_rows(m):
        out.append(sum((v * x[k] for k, v in r.items()), Fraction(0)))
    return out
