"""Smith and Hermite normal forms over Z, and the lattice routines built on them.

Everything is exact: Python integers never overflow, so there are no
tolerances anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .matrix import Matrix


@dataclass(frozen=True)
class SNFResult:
    """``D == U @ M @ V`` with ``U``, ``V`` unimodular and ``D`` in Smith form.

    ``U_inv`` and ``V_inv`` are carried along because element enumeration and
    basis changes need them and inverting afterwards would be wasteful.
    """

    U: Matrix
    D: Matrix
    V: Matrix
    U_inv: Matrix
    V_inv: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def snf(M: Matrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    Pivots are chosen by minimal absolute value, which keeps intermediate
    entries small on the desk-scale inputs this package works with.
    """
    m, n = M.shape
    A = M.tolist()
    U, Ui = _identity(m), _identity(m)
    V, Vi = _identity(n), _identity(n)

    def row_add(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        if q == 0:
            return
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for r in Ui:
            r[src] -= q * r[dst]

    def col_add(dst: int, src: int, q: int) -> None:
        # col_dst += q * col_src
        if q == 0:
            return
        for r in A:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    def row_swap(i: int, j: int) -> None:
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def col_swap(i: int, j: int) -> None:
        if i == j:
            return
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def row_negate(i: int) -> None:
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for r in Ui:
            r[i] = -r[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = A[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
        if best is None:
            break
        row_swap(t, best[1])
        col_swap(t, best[2])
        while True:
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    row_add(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    col_add(j, t, -(A[t][j] // p))
            best = None
            for i in range(t + 1, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), i, "r")
            for j in range(t + 1, n):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), j, "c")
            if best is not None:
                # a remainder smaller than the pivot survived; promote it
                if best[2] == "r":
                    row_swap(t, best[1])
                else:
                    col_swap(t, best[1])
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            row_add(t, bad, 1)
        if A[t][t] < 0:
            row_negate(t)

    return SNFResult(Matrix(U, m), Matrix(A, n), Matrix(V, n),
                     Matrix(Ui, m), Matrix(Vi, n))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def hnf_basis(generators: Sequence[Sequence[int]], dim: int) -> list[tuple[int, ...]]:
    """Echelon basis of the lattice spanned by ``generators`` in Z^dim.

    Returned vectors have strictly increasing pivot coordinates, positive
    pivots, and the entries of earlier vectors at a later pivot coordinate
    reduced into ``[0, pivot)``; this makes the basis canonical.
    """
    rest = [list(g) for g in generators if any(g)]
    basis: list[list[int]] = []
    pivots: list[int] = []
    for c in range(dim):
        live = [r for r in rest if r[c]]
        if not live:
            continue
        rest = [r for r in rest if not r[c]]
        acc = live[0]
        for r in live[1:]:
            g, s, t = _xgcd(acc[c], r[c])
            a, b = acc[c] // g, r[c] // g
            new_acc = [s * x + t * y for x, y in zip(acc, r)]
            leftover = [a * y - b * x for x, y in zip(acc, r)]
            acc = new_acc
            if any(leftover):
                rest.append(leftover)
        if acc[c] < 0:
            acc = [-x for x in acc]
        for k, b in enumerate(basis):
            q = b[c] // acc[c]
            if q:
                basis[k] = [x - q * y for x, y in zip(b, acc)]
        basis.append(acc)
        pivots.append(c)
    return [tuple(b) for b in basis]


def reduce_mod_basis(v: Sequence[int], basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Canonical representative of ``v`` modulo an ``hnf_basis`` lattice."""
    v = list(v)
    for b in basis:
        c = next(i for i, x in enumerate(b) if x)
        q = v[c] // b[c]
        if q:
            v = [x - q * y for x, y in zip(v, b)]
    return tuple(v)


def solve(M: Matrix, B: Matrix, snf_of_m: SNFResult | None = None) -> Matrix | None:
    """Integer X with ``M @ X == B``, or None if there is none."""
    if M.rows != B.rows:
        raise ValueError(f"solve: {M.shape} against right-hand side {B.shape}")
    s = snf_of_m or snf(M)
    diag = s.diagonal
    r = s.rank
    Y = s.U @ B
    Z = []
    for i in range(M.cols):
        if i < r:
            row = []
            for y in Y.row(i):
                q, rem = divmod(y, diag[i])
                if rem:
                    return None
                row.append(q)
            Z.append(row)
        else:
            Z.append([0] * B.cols)
    for i in range(r, M.rows):
        if any(Y.row(i)):
            return None
    return s.V @ Matrix(Z, B.cols)


def lattice_contains(M: Matrix, v: Sequence[int], modulus: int | None = None
                     ) -> tuple[int, ...] | None:
    """Coefficients x with ``M x = v`` over Z, or over Z/modulus when given.

    Over Z/n the columns ``n*e_i`` are adjoined and the returned coefficients
    are reduced into ``[0, n)``.
    """
    if len(v) != M.rows:
        raise ValueError(f"vector of length {len(v)} for {M.rows} rows")
    A = M if modulus is None else M.hstack(Matrix.identity(M.rows).scale(modulus))
    x = solve(A, Matrix([[a] for a in v], 1))
    if x is None:
        return None
    coeffs = x.column(0)[:M.cols]
    if modulus is not None:
        coeffs = tuple(c % modulus for c in coeffs)
    return coeffs


def kernel_basis(M: Matrix) -> Matrix:
    """Columns forming a Z-basis of ``{x : M x = 0}``."""
    s = snf(M)
    return s.V.select_columns(range(s.rank, M.cols))


def solve_congruences(nvars: int, congruences: Sequence[tuple[Sequence[int], int]]
                      ) -> list[tuple[int, ...]]:
    """Basis of ``{x in Z^nvars : a.x = 0 (mod d) for every (a, d)}``.

    ``d == 0`` means an exact linear equation.  Constraints are folded in one
    at a time and the basis is re-echeloned after each step so entries stay
    bounded by the lattice's index.
    """
    basis: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(nvars))
                                    for i in range(nvars)]
    for a, d in congruences:
        if not basis:
            break
        w = [sum(x * y for x, y in zip(a, b)) for b in basis]
        if d:
            w = [x % d for x in w]
        if not any(w):
            continue
        row = Matrix([w + ([d] if d else [])], len(w) + (1 if d else 0))
        K = kernel_basis(row)
        s = len(basis)
        new = []
        for j in range(K.cols):
            y = K.column(j)[:s]
            new.append(tuple(sum(c * b[k] for c, b in zip(y, basis))
                             for k in range(nvars)))
        basis = hnf_basis(new, nvars)
    return basis
