"""Seeded random modules, morphisms, sequences and grids.

Every generator is a pure function of ``(kind, seed, bounds)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from ..core import Mor, SequenceSpec
from ..fpmod import FpCategory, FpModule, Matrix, RingSpec
from ..fpmod.category import _unvec
from .lemmas import GridSpec, grid_sum

RING_POOL = (None, 2, 3, 4, 6, 8, 9, 12)
KINDS = ("module", "morphism", "mono", "epic", "iso", "ses", "pair", "nonexact",
         "grid", "mixed-grid")


@dataclass(frozen=True)
class Bounds:
    """Size limits; ``ring=None`` draws the ring from ``moduli`` (None meaning Z)."""

    ring: RingSpec | None = None
    max_gens: int = 4
    max_entry: int = 9
    moduli: tuple = field(default=RING_POOL)


@lru_cache(maxsize=None)
def category_for(ring: RingSpec) -> FpCategory:
    return FpCategory(ring)


class Generator:
    """Random constructions driven by one ``random.Random`` stream."""

    def __init__(self, seed: int, bounds: Bounds = Bounds()):
        self.rng = random.Random(seed)
        self.bounds = bounds
        ring = bounds.ring
        if ring is None:
            m = self.rng.choice(bounds.moduli)
            ring = RingSpec(m)
        self.ring = ring
        self.cat = category_for(ring)

    def _entry(self) -> int:
        n = self.ring.modulus
        if n is None:
            e = self.bounds.max_entry
            return self.rng.randint(-e, e)
        return self.rng.randrange(n)

    def module(self, min_gens: int = 0) -> FpModule:
        rng = self.rng
        lo = max(min_gens, 1 if rng.random() > 0.08 else 0)
        g = rng.randint(lo, max(lo, self.bounds.max_gens))
        r = rng.randint(0, g)
        cols = [[self._entry() for _ in range(g)] for _ in range(r)]
        return self.cat.module(g, cols)

    def nonzero_module(self) -> FpModule:
        while True:
            A = self.module(min_gens=1)
            if not self.cat.is_zero_object(A):
                return A

    def morphism(self, A: FpModule | None = None, B: FpModule | None = None) -> Mor:
        """A random element of ``Hom(A, B)`` with a non-canonical payload."""
        A = self.module() if A is None else A
        B = self.module() if B is None else B
        H = self.cat.hom_group(A, B)
        e = self.bounds.max_entry
        y = [self.rng.randint(-e, e) for _ in range(H.embedding.cols)]
        v = list(H.embedding.apply(y))
        N = H.homotopies
        for _ in range(min(2, N.cols)):
            col = N.column(self.rng.randrange(N.cols))
            c = self.rng.randint(-2, 2)
            v = [a + c * b for a, b in zip(v, col)]
        return self.cat.make_morphism(A, B, _unvec(v, B.gens, A.gens))

    def iso(self, A: FpModule | None = None) -> Mor:
        """A random isomorphism out of A onto a re-presented copy of A."""
        A = self.module() if A is None else A
        g = A.gens
        U = [[int(i == j) for j in range(g)] for i in range(g)]
        for _ in range(3 * g):
            i, j = self.rng.randrange(g), self.rng.randrange(g)
            if i == j:
                continue
            q = self.rng.randint(-2, 2)
            U[i] = [a + q * b for a, b in zip(U[i], U[j])]
            if self.rng.random() < 0.3:
                U[i], U[j] = U[j], U[i]
        Um = Matrix(U, g)
        rel = Um @ A.relations
        if self.rng.random() < 0.5:
            # adjoin a redundant generator equal to w . (old generators)
            w = [self._entry() for _ in range(g)]
            extra = [[-x for x in w] + [1]]
            cols = [list(c) + [0] for c in rel.columns()] + extra
            B = self.cat.module(g + 1, cols)
            T = Um.vstack(Matrix.zeros(1, g))
        else:
            B = self.cat.module(g, rel.columns())
            T = Um
        return self.cat.make_morphism(A, B, T)

    def mono(self) -> Mor:
        c = self.cat
        choice = self.rng.randrange(3)
        if choice == 0:
            return c.kernel(self.morphism())[1]
        if choice == 1:
            return c.image(self.morphism()).rep
        A, C = self.module(), self.module()
        return c.compose(self.iso(c.biproduct(A, C).obj), c.biproduct(A, C).i1)

    def epic(self) -> Mor:
        c = self.cat
        choice = self.rng.randrange(3)
        if choice == 0:
            return c.cokernel(self.morphism())[1]
        if choice == 1:
            return c.coimage(self.morphism()).rep
        A, C = self.module(), self.module()
        bp = c.biproduct(A, C)
        iso = self.iso(bp.obj)
        return c.compose(bp.p1, c.invert(iso))

    def ses(self) -> SequenceSpec:
        c = self.cat
        choice = self.rng.randrange(3)
        if choice == 0:
            k = c.kernel(self.morphism())[1]
        elif choice == 1:
            k = c.image(self.morphism()).rep
        else:
            k = c.biproduct(self.module(), self.module()).i1
        q = c.cokernel(k)[1]
        if self.rng.random() < 0.5:
            iso = self.iso(k.cod)
            k, q = c.compose(iso, k), c.compose(q, c.invert(iso))
        return SequenceSpec((k, q), True, True)

    def pair(self) -> tuple[Mor, Mor]:
        """A composable pair; roughly a third are exact, a third merely compose to zero."""
        c = self.cat
        choice = self.rng.randrange(3)
        if choice == 0:
            g = self.morphism()
            return c.kernel(g)[1], g
        if choice == 1:
            g = self.morphism()
            k = c.kernel(g)[1]
            h = self.morphism(B=k.dom)
            return c.compose(k, h), g
        f = self.morphism()
        return f, self.morphism(A=f.cod)

    def nonexact(self) -> SequenceSpec:
        """A composable pair that is not exact in the middle."""
        c = self.cat
        if self.rng.random() < 0.5:
            # A -1-> A -x-> B with x nonzero
            while True:
                x = self.morphism(A=self.nonzero_module())
                if not c.is_zero_mor(x):
                    return SequenceSpec((c.identity(x.dom), x))
        while True:
            f, g = self.pair()
            if not c.is_exact_at(f, g):
                return SequenceSpec((f, g))

    def grid(self) -> GridSpec:
        """Third-isomorphism grid of random nested subobjects, see :func:`nested_grid`."""
        m2 = self.mono()
        j = self.cat.image(self.morphism(B=m2.dom)).rep
        return nested_grid(self.cat, j, m2)

    def _defect_top_right(self, X: FpModule) -> GridSpec:
        # top 0 -> 0 -> X, middle 0 -> X = X, bottom 0 -> X -> 0: both outer rows fail
        c = self.cat
        Z = c.zero_object()
        z = c.zero_mor
        one = c.identity(X)
        objects = ((Z, Z, X), (Z, X, X), (Z, X, Z))
        rows = ((z(Z, Z), z(Z, X)), (z(Z, X), one), (z(Z, X), z(X, Z)))
        cols = ((z(Z, Z), z(Z, X), one), (z(Z, Z), one, z(X, Z)))
        return GridSpec(objects, rows, cols)

    def _defect_left(self, Y: FpModule) -> GridSpec:
        # top 0 -> Y -> 0, middle Y = Y -> 0, bottom Y -> 0 -> 0
        c = self.cat
        Z = c.zero_object()
        z = c.zero_mor
        one = c.identity(Y)
        objects = ((Z, Y, Z), (Y, Y, Z), (Y, Z, Z))
        rows = ((z(Z, Y), z(Y, Z)), (one, z(Y, Z)), (z(Y, Z), z(Z, Z)))
        cols = ((z(Z, Y), one, z(Z, Z)), (one, z(Y, Z), z(Z, Z)))
        return GridSpec(objects, rows, cols)

    def mixed_grid(self) -> GridSpec:
        """An exact grid, possibly summed with grids whose outer rows both fail."""
        g = self.grid()
        r = self.rng.random()
        if r < 0.35:
            g = grid_sum(self.cat, g, self._defect_top_right(self.nonzero_module()))
        elif r < 0.7:
            g = grid_sum(self.cat, g, self._defect_left(self.nonzero_module()))
        return g


def nested_grid(c: FpCategory, j: Mor, m2: Mor) -> GridSpec:
    """Grid of ``A1 -j-> A2 -m2-> B`` for monics ``j`` and ``m2``.

    Rows: ``A1 -> A2 -> A2/A1``, ``A1 -> B -> B/A1``, ``0 -> B/A2 -> B/A2``.
    """
    m1 = c.compose(m2, j)
    q1 = c.cokernel(j)[1]
    q2 = c.cokernel(m1)[1]
    c2 = c.cokernel(m2)[1]
    u = c.factor_through_cokernel(q1, j, c.compose(q2, m2))
    w = c.factor_through_cokernel(q2, m1, c2)
    A1, A2, B = j.dom, m2.dom, m2.cod
    Q21, Q1, Q2 = q1.cod, q2.cod, c2.cod
    Z = c.zero_object()
    objects = ((A1, A2, Q21), (A1, B, Q1), (Z, Q2, Q2))
    rows = ((j, q1), (m1, q2), (c.zero_mor(Z, Q2), c.identity(Q2)))
    cols = ((c.identity(A1), m2, u), (c.zero_mor(A1, Z), c2, w))
    return GridSpec(objects, rows, cols)


def generate(kind: str, seed: int, bounds: Bounds = Bounds()):
    """Deterministic random value of the given kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    gen = Generator(seed, bounds)
    return getattr(gen, kind.replace("-", "_"))()
