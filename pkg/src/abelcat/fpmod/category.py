"""The category of finitely presented modules over Z or Z/n."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from ..core import AbelianCategory, BiproductData, Mor
from ..errors import (DomainMismatch, InvalidInput, RingMismatch, ShapeError,
                      WellDefinednessError)
from .matrix import Matrix, block_diagonal
from .module import DEFAULT_CAP, FpModule, RingSpec
from .normal_form import snf, solve, solve_congruences


def _vec(T: Matrix) -> tuple[int, ...]:
    # column-major: entry (i, j) sits at j * rows + i
    return tuple(x for col in T.columns() for x in col)


def _unvec(v: Sequence[int], rows: int, cols: int) -> Matrix:
    return Matrix.from_columns([v[j * rows:(j + 1) * rows] for j in range(cols)], rows)


def present_subquotient(ring: RingSpec, basis: Sequence[Sequence[int]], ambient_dim: int,
                        relations: Matrix) -> tuple[FpModule, Matrix]:
    """Present ``span(basis) / span(relations)`` in Smith-diagonal form.

    ``basis`` must be linearly independent and its span must contain the
    columns of ``relations``.  Returns the module and the ``ambient_dim x k``
    matrix whose columns are its new generators in ambient coordinates.
    Generators that Smith reduction shows to be trivial are dropped.
    """
    if not basis:
        return FpModule.zero(ring), Matrix.zeros(ambient_dim, 0)
    S = Matrix.from_columns(list(basis), ambient_dim)
    rel = solve(S, relations)
    if rel is None:
        raise ValueError("relation lattice is not contained in the generator lattice")
    s = snf(rel)
    diag = s.diagonal
    keep, cols = [], []
    for i in range(S.cols):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        keep.append(i)
        if d:
            cols.append((len(keep) - 1, d))
    k = len(keep)
    rel_cols = [[d if r == pos else 0 for r in range(k)] for pos, d in cols]
    module = FpModule.build(ring, k, rel_cols)
    return module, (S @ s.U_inv).select_columns(keep)


def _lattice_congruences(B: FpModule, C: Matrix) -> list[tuple[tuple[int, ...], int]]:
    """Congruences on x expressing ``C x`` lies in the relation lattice of B."""
    UC = B.smith.U @ C
    return [(UC.row(i), d) for i, d in B._coordinate_moduli]


@dataclass(frozen=True)
class HomGroup:
    """``Hom(A, B)`` as a finitely presented group with basis morphisms.

    ``embedding`` holds the basis morphisms' payloads, vectorized column-major,
    as its columns; ``homotopies`` spans the matrices that represent zero.
    """

    dom: FpModule
    cod: FpModule
    module: FpModule
    embedding: Matrix
    homotopies: Matrix
    basis: tuple[Mor, ...] = field(repr=False)

    def __iter__(self):
        # allows ``module, basis = hom_group(A, B)``
        return iter((self.module, list(self.basis)))

    @cached_property
    def _solver(self):
        return snf(self.embedding.hstack(self.homotopies))

    def coords(self, f: Mor) -> tuple[int, ...]:
        """Coordinates of ``f`` with respect to :attr:`basis`."""
        if f.dom != self.dom or f.cod != self.cod:
            raise DomainMismatch("morphism does not belong to this hom group")
        M = self.embedding.hstack(self.homotopies)
        x = solve(M, Matrix([[a] for a in _vec(f.payload)], 1), self._solver)
        if x is None:
            raise InvalidInput("morphism is not well defined")
        return x.column(0)[:self.embedding.cols]

    def key(self, f: Mor) -> tuple[int, ...]:
        return self.module.key(self.coords(f))

    def from_coords(self, y: Sequence[int]) -> Mor:
        v = self.embedding.apply(y)
        T = _unvec(v, self.cod.gens, self.dom.gens)
        ring = self.dom.ring
        if ring.modulus is not None:
            T = T.mod(ring.modulus)
        return Mor(self.dom, self.cod, T)

    @property
    def order(self) -> int:
        return self.module.order

    def elements(self, cap: int = DEFAULT_CAP) -> Iterator[Mor]:
        for y in self.module.iter_elements(cap):
            yield self.from_coords(y)


class FpCategory(AbelianCategory):
    """Finitely presented modules over one fixed ring.

    Objects are :class:`FpModule` values (interned by value); morphism
    payloads are generator matrices with ``gens(cod)`` rows and
    ``gens(dom)`` columns.  Relations are columns, and ``Z/n`` is handled
    by adjoining ``n*e_i`` so one Smith engine serves both rings.
    """

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self._zero = FpModule.zero(ring)

    def __repr__(self) -> str:
        return f"FpCategory({self.ring})"

    def _check(self, A: FpModule) -> None:
        if not isinstance(A, FpModule):
            raise TypeError(f"expected FpModule, got {type(A).__name__}")
        if A.ring != self.ring:
            raise RingMismatch(f"module over {A.ring} in the category of {self.ring}-modules")

    def _reduce(self, T: Matrix) -> Matrix:
        return T if self.ring.modulus is None else T.mod(self.ring.modulus)

    # -- construction -------------------------------------------------------

    def module(self, gens: int, relation_columns: Sequence[Sequence[int]] = ()) -> FpModule:
        return FpModule.build(self.ring, gens, relation_columns)

    def cyclic(self, d: int) -> FpModule:
        return FpModule.from_invariants(self.ring, [d])

    def free(self, rank: int) -> FpModule:
        return FpModule.free(self.ring, rank)

    def make_morphism(self, A: FpModule, B: FpModule, T: Matrix | Sequence[Sequence[int]]) -> Mor:
        """Validate ``T`` as a map ``A -> B`` and wrap it."""
        self._check(A)
        self._check(B)
        if not isinstance(T, Matrix):
            T = Matrix(T, A.gens) if len(T) == 0 else Matrix(T)
        if T.shape != (B.gens, A.gens):
            raise ShapeError(f"matrix of shape {T.shape}, expected {(B.gens, A.gens)}")
        for j, c in enumerate(A.relations.columns()):
            if not B.is_zero_element(T.apply(c)):
                raise WellDefinednessError(
                    f"relation column {j} of the domain is not sent to a relation", column=j)
        return Mor(A, B, self._reduce(T))

    # -- primitives ---------------------------------------------------------

    def identity(self, A: FpModule) -> Mor:
        self._check(A)
        return Mor(A, A, Matrix.identity(A.gens))

    def compose(self, g: Mor, f: Mor) -> Mor:
        self._require_composable(f, g)
        return Mor(f.dom, g.cod, self._reduce(g.payload @ f.payload))

    def mor_key(self, f: Mor) -> tuple:
        """Hashable canonical form: equal keys iff the morphisms are equal."""
        return tuple(f.cod.key(c) for c in f.payload.columns())

    def mor_equal(self, f: Mor, g: Mor) -> bool:
        self._require_parallel(f, g)
        return all(f.cod.is_zero_element(c) for c in (f.payload - g.payload).columns())

    def zero_object(self) -> FpModule:
        return self._zero

    def zero_mor(self, A: FpModule, B: FpModule) -> Mor:
        return Mor(A, B, Matrix.zeros(B.gens, A.gens))

    def neg(self, f: Mor) -> Mor:
        # payload shortcut; the generic construction is checked against it in the tests
        return Mor(f.dom, f.cod, self._reduce(-f.payload))

    def biproduct(self, A: FpModule, B: FpModule) -> BiproductData:
        self._check(A)
        self._check(B)
        a, b = A.gens, B.gens
        X = FpModule(self.ring, a + b, block_diagonal(A.relations, B.relations))
        Ia, Ib = Matrix.identity(a), Matrix.identity(b)
        return BiproductData(
            obj=X,
            i1=Mor(A, X, Ia.vstack(Matrix.zeros(b, a))),
            i2=Mor(B, X, Matrix.zeros(a, b).vstack(Ib)),
            p1=Mor(X, A, Ia.hstack(Matrix.zeros(a, b))),
            p2=Mor(X, B, Matrix.zeros(b, a).hstack(Ib)),
        )

    def pair(self, bp: BiproductData, f1: Mor, f2: Mor) -> Mor:
        if f1.dom != f2.dom or f1.cod != bp.i1.dom or f2.cod != bp.i2.dom:
            raise DomainMismatch("pairing of maps that do not match the biproduct")
        return Mor(f1.dom, bp.obj, f1.payload.vstack(f2.payload))

    def copair(self, bp: BiproductData, g1: Mor, g2: Mor) -> Mor:
        if g1.cod != g2.cod or g1.dom != bp.i1.dom or g2.dom != bp.i2.dom:
            raise DomainMismatch("copairing of maps that do not match the biproduct")
        return Mor(bp.obj, g1.cod, g1.payload.hstack(g2.payload))

    def preimage_lattice(self, f: Mor) -> list[tuple[int, ...]]:
        """Basis of ``{x : T x in relations(cod)}``."""
        return solve_congruences(f.dom.gens, _lattice_congruences(f.cod, f.payload))

    def kernel(self, f: Mor) -> tuple[FpModule, Mor]:
        A = f.dom
        K, E = present_subquotient(self.ring, self.preimage_lattice(f), A.gens, A.full_relations)
        return K, Mor(K, A, self._reduce(E))

    def cokernel(self, f: Mor) -> tuple[FpModule, Mor]:
        B = f.cod
        C = FpModule(self.ring, B.gens, B.relations.hstack(f.payload))
        return C, Mor(B, C, Matrix.identity(B.gens))

    def factor_through_kernel(self, k: Mor, f: Mor, g: Mor) -> Mor:
        if g.cod != k.cod:
            raise DomainMismatch("g does not land in the codomain of the kernel")
        A = k.cod
        M = k.payload.hstack(A.full_relations)
        s = snf(M)
        cols = []
        for c in g.payload.columns():
            x = solve(M, Matrix([[v] for v in c], 1), s)
            if x is None:
                raise InvalidInput("map does not factor through the given kernel")
            cols.append(x.column(0)[:k.payload.cols])
        return self.make_morphism(g.dom, k.dom, Matrix.from_columns(cols, k.dom.gens))

    def factor_through_cokernel(self, c: Mor, f: Mor, g: Mor) -> Mor:
        if g.dom != c.dom:
            raise DomainMismatch("g does not start at the domain of the cokernel")
        # pick a preimage under c of each generator of cod(c), then apply g
        C = c.cod
        M = c.payload.hstack(C.full_relations)
        s = snf(M)
        sections = []
        for i in range(C.gens):
            e = [int(r == i) for r in range(C.gens)]
            x = solve(M, Matrix([[v] for v in e], 1), s)
            if x is None:
                raise InvalidInput("cokernel map is not epic")
            sections.append(x.column(0)[:c.dom.gens])
        S = Matrix.from_columns(sections, c.dom.gens)
        return self.make_morphism(C, g.cod, g.payload @ S)

    # -- hom groups ---------------------------------------------------------

    def hom_group(self, A: FpModule, B: FpModule,
                  equivariance: Sequence[tuple[Matrix, Matrix]] = ()) -> HomGroup:
        """``Hom(A, B)``: well-defined matrices modulo null-homotopic ones.

        ``equivariance`` restricts to maps ``X`` with ``X @ a == b @ X`` (as
        morphisms) for every pair ``(a, b)`` of endomorphism matrices of A
        and B; this is how module-linear maps are found.
        """
        self._check(A)
        self._check(B)
        ga, gb = A.gens, B.gens
        u = ga * gb
        cons = []
        for c in A.relations.columns():
            C = Matrix.zeros(gb, 0).hstack(*(Matrix.identity(gb).scale(cj) for cj in c)) \
                if ga else Matrix.zeros(gb, 0)
            cons.extend(_lattice_congruences(B, C))
        for a, b in equivariance:
            for j in range(ga):
                blocks = []
                for l in range(ga):
                    blk = Matrix.identity(gb).scale(a[l, j])
                    if l == j:
                        blk = blk - b
                    blocks.append(blk)
                C = Matrix.zeros(gb, 0).hstack(*blocks)
                cons.extend(_lattice_congruences(B, C))
        basis = solve_congruences(u, cons)
        homotopies = []
        for j in range(ga):
            for r in B.full_relations.columns():
                v = [0] * u
                v[j * gb:(j + 1) * gb] = r
                homotopies.append(v)
        N = Matrix.from_columns(homotopies, u)
        H, E = present_subquotient(self.ring, basis, u, N)
        mors = tuple(Mor(A, B, self._reduce(_unvec(E.column(k), gb, ga)))
                     for k in range(E.cols))
        return HomGroup(A, B, H, E, N, mors)
