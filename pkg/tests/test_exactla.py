from fractions import Fraction

from barbell import exactla


def test_solve_membership():
    g1, g2 = {0: 1, 1: 1}, {1: 1, 2: 3}
    target = exactla.combine([1, 2], [g1, g2])
    assert exactla.solve_membership(target, [g1, g2]) == [1, 2]
    assert exactla.solve_membership({0: 1, 1: -1, 2: 5}, [g1, g2]) is None


def test_solution_re_evaluates():
    gens = [{0: 2, 3: 1}, {1: Fraction(1, 3), 3: -1}, {0: 1, 1: 1, 2: 1}]
    target = {0: 5, 1: Fraction(4, 3), 2: 1, 3: 1}
    c = exactla.solve_membership(target, gens)
    assert exactla.combine(c, gens) == target


def test_rank():
    eye = [[int(i == j) for j in range(5)] for i in range(5)]
    assert exactla.rank(eye) == 5
    assert exactla.rank([[1, 2], [2, 4]]) == 1
    assert exactla.rank([]) == 0


def test_nullspace_duplicated_row():
    # columns 0 and 1 equal, so (1, -1, 0) is in the kernel
    m = [[1, 1, 0], [2, 2, 1]]
    basis = exactla.nullspace(m, 3)
    assert len(basis) == 1
    assert basis[0] == [-1, 1, 0] or basis[0] == [1, -1, 0]
    assert exactla.matvec(m, basis[0]) == [0, 0]


def test_row_echelon_is_reduced():
    rows, piv = exactla.row_echelon([[2, 4, 1], [1, 2, 3]])
    for r, p in zip(rows, piv):
        assert r[p] == 1
        for q in piv:
            if q != p:
                assert r.get(q, 0) == 0
