import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abelcat.fpmod import (Matrix, hnf_basis, kernel_basis, lattice_contains, snf,
                           solve, solve_congruences)

from oracles import det, determinantal_divisors


def small_matrices(max_dim=4, bound=20):
    return st.integers(1, max_dim).flatmap(lambda r: st.integers(1, max_dim).flatmap(
        lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_zero_matrix():
    res = snf(Matrix.zeros(2, 3))
    assert res.D == Matrix.zeros(2, 3)
    assert res.U == Matrix.identity(2) and res.V == Matrix.identity(3)


@pytest.mark.parametrize("rows, diag", [
    ([[2, 0], [0, 3]], [1, 6]),
    ([[2, 4], [6, 8]], [2, 4]),
    ([[0, 0], [0, 5]], [5, 0]),
    ([[6]], [6]),
    ([[-4]], [4]),
])
def test_known_diagonals(rows, diag):
    M = Matrix(rows)
    res = snf(M)
    assert res.diagonal[:len(diag)] == diag[:len(res.diagonal)]
    assert res.U @ M @ res.V == res.D


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_snf_matches_determinantal_divisors(rows):
    M = Matrix(rows)
    res = snf(M)
    assert res.U @ M @ res.V == res.D
    assert abs(det(res.U.tolist())) == 1 and abs(det(res.V.tolist())) == 1
    assert res.U @ res.U_inv == Matrix.identity(M.rows)
    assert res.V @ res.V_inv == Matrix.identity(M.cols)
    d = res.diagonal
    for i in range(M.rows):
        for j in range(M.cols):
            if i != j:
                assert res.D[i, j] == 0
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    prod = 1
    for k, D_k in enumerate(determinantal_divisors(rows)):
        prod *= d[k]
        assert prod == D_k


def test_lattice_contains_examples():
    assert lattice_contains(Matrix([[2]]), [4]) == (2,)
    assert lattice_contains(Matrix([[2]]), [3]) is None
    assert lattice_contains(Matrix([[2]]), [3], modulus=5) == (4,)


@settings(max_examples=100, deadline=None)
@given(small_matrices(3, 9), st.lists(st.integers(-5, 5), min_size=3, max_size=3))
def test_solve_finds_constructed_solutions(rows, coeffs):
    M = Matrix(rows)
    x = coeffs[:M.cols] + [0] * (M.cols - len(coeffs))
    b = M.apply(x)
    sol = lattice_contains(M, b)
    assert sol is not None and M.apply(sol) == b


def test_solve_reports_absent_solution():
    assert solve(Matrix([[2, 4]]), Matrix([[1]])) is None


@settings(max_examples=80, deadline=None)
@given(small_matrices(3, 9))
def test_kernel_basis_is_saturated(rows):
    M = Matrix(rows)
    K = kernel_basis(M)
    assert (M @ K).is_zero()
    # every integer kernel vector in a box lies in the span of K
    rng = random.Random(0)
    for _ in range(20):
        v = [rng.randint(-3, 3) for _ in range(M.cols)]
        if not any(M.apply(v)):
            assert lattice_contains(K, v) is not None


def test_hnf_basis_is_canonical():
    a = hnf_basis([(2, 0), (0, 3)], 2)
    b = hnf_basis([(2, 3), (4, 3), (2, 6)], 2)
    assert hnf_basis([(2, 0), (0, 3), (2, 3)], 2) == hnf_basis([(2, 3), (0, 3)], 2)
    assert len(a) == 2 and len(b) == 2


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
                          st.integers(0, 8)), max_size=4))
def test_solve_congruences_against_box_search(congruences):
    basis = solve_congruences(3, congruences)

    def ok(x):
        return all((sum(a * b for a, b in zip(c, x)) % d == 0) if d else
                   sum(a * b for a, b in zip(c, x)) == 0 for c, d in congruences)

    for b in basis:
        assert ok(b)
    B = Matrix.from_columns(basis, 3) if basis else Matrix.zeros(3, 0)
    for x in [(i, j, k) for i in range(-2, 3) for j in range(-2, 3) for k in range(-2, 3)]:
        if ok(x):
            assert basis and lattice_contains(B, x) is not None
