"""Backend-generic abelian category machinery.

A backend supplies the primitives of :class:`AbelianCategory` (zero object,
biproducts, kernels and cokernels with their factorizations).  Everything
else in this module, from the Hom-group addition to the subobject lattice
and exactness, is derived from those primitives alone.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Hashable, Sequence

from .errors import DomainMismatch, NotInvertible, ShapeError


@dataclass(frozen=True)
class Mor:
    """A morphism ``dom -> cod``.  The payload is owned by the backend."""

    dom: Hashable
    cod: Hashable
    payload: Any = field(compare=True)


@dataclass(frozen=True)
class BiproductData:
    obj: Hashable
    i1: Mor
    i2: Mor
    p1: Mor
    p2: Mor


@dataclass(frozen=True)
class SubObject:
    """A subobject, represented by a monic into its ambient object.

    Two ``SubObject`` values denote the same subobject when
    :meth:`AbelianCategory.sub_equal` says so; dataclass equality only
    compares representatives.
    """

    rep: Mor

    @property
    def ambient(self) -> Hashable:
        return self.rep.cod

    @property
    def obj(self) -> Hashable:
        return self.rep.dom


@dataclass(frozen=True)
class QuotientObject:
    rep: Mor

    @property
    def ambient(self) -> Hashable:
        return self.rep.dom

    @property
    def obj(self) -> Hashable:
        return self.rep.cod


@dataclass(frozen=True)
class SequenceSpec:
    """A composable chain of arrows, optionally flanked by zero objects."""

    arrows: tuple[Mor, ...]
    left_zero: bool = False
    right_zero: bool = False

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        for k, (f, g) in enumerate(zip(self.arrows, self.arrows[1:])):
            if f.cod != g.dom:
                raise DomainMismatch(f"arrows {k} and {k + 1} are not composable")


class AbelianCategory(ABC):
    """Primitives a backend must provide, plus everything derivable from them."""

    # -- backend primitives -------------------------------------------------

    @abstractmethod
    def identity(self, A) -> Mor: ...

    @abstractmethod
    def compose(self, g: Mor, f: Mor) -> Mor:
        """``g`` after ``f``."""

    @abstractmethod
    def mor_equal(self, f: Mor, g: Mor) -> bool: ...

    @abstractmethod
    def zero_object(self): ...

    @abstractmethod
    def zero_mor(self, A, B) -> Mor: ...

    @abstractmethod
    def biproduct(self, A, B) -> BiproductData: ...

    @abstractmethod
    def pair(self, bp: BiproductData, f1: Mor, f2: Mor) -> Mor:
        """The map ``<f1, f2>`` into ``bp.obj`` given by the product property."""

    @abstractmethod
    def copair(self, bp: BiproductData, g1: Mor, g2: Mor) -> Mor:
        """The map ``[g1, g2]`` out of ``bp.obj`` given by the sum property."""

    @abstractmethod
    def kernel(self, f: Mor) -> tuple[Any, Mor]: ...

    @abstractmethod
    def cokernel(self, f: Mor) -> tuple[Any, Mor]: ...

    @abstractmethod
    def factor_through_kernel(self, k: Mor, f: Mor, g: Mor) -> Mor:
        """Unique ``h`` with ``k o h = g``, where ``k`` is a kernel of ``f`` and ``f o g = 0``."""

    @abstractmethod
    def factor_through_cokernel(self, c: Mor, f: Mor, g: Mor) -> Mor:
        """Unique ``h`` with ``h o c = g``, where ``c`` is a cokernel of ``f`` and ``g o f = 0``."""

    # -- Hom groups ---------------------------------------------------------

    @staticmethod
    def _require_parallel(f: Mor, g: Mor) -> None:
        if f.dom != g.dom or f.cod != g.cod:
            raise DomainMismatch("morphisms are not parallel")

    @staticmethod
    def _require_composable(f: Mor, g: Mor) -> None:
        if f.cod != g.dom:
            raise DomainMismatch("codomain of the first arrow is not the domain of the second")

    def add(self, f: Mor, g: Mor) -> Mor:
        """``f + g`` as the diagonal ``A -> A+A`` followed by ``[f, g]``."""
        self._require_parallel(f, g)
        bp = self.biproduct(f.dom, f.dom)
        one = self.identity(f.dom)
        return self.compose(self.copair(bp, f, g), self.pair(bp, one, one))

    def add_codiagonal(self, f: Mor, g: Mor) -> Mor:
        """``f + g`` as ``<f, g>`` followed by the codiagonal ``B+B -> B``."""
        self._require_parallel(f, g)
        bp = self.biproduct(f.cod, f.cod)
        one = self.identity(f.cod)
        return self.compose(self.copair(bp, one, one), self.pair(bp, f, g))

    def minus_one(self, A) -> Mor:
        # -1 is the off-diagonal entry of the inverse of [[1, 1], [0, 1]] on A+A
        bp = self.biproduct(A, A)
        one = self.identity(A)
        shear = self.pair(bp, self.copair(bp, one, one), bp.p2)
        return self.compose(bp.p1, self.compose(self.invert(shear), bp.i2))

    def neg(self, f: Mor) -> Mor:
        return self.compose(f, self.minus_one(f.dom))

    def sub(self, f: Mor, g: Mor) -> Mor:
        return self.add(f, self.neg(g))

    def is_zero_mor(self, f: Mor) -> bool:
        return self.mor_equal(f, self.zero_mor(f.dom, f.cod))

    def is_zero_object(self, A) -> bool:
        # A is zero iff its identity factors through the zero object
        return self.mor_equal(self.identity(A), self.zero_mor(A, A))

    def check_biproduct(self, bp: BiproductData) -> dict[str, bool]:
        eq = self.mor_equal
        A, B = bp.i1.dom, bp.i2.dom
        return {
            "p1 i1 = 1": eq(self.compose(bp.p1, bp.i1), self.identity(A)),
            "p2 i2 = 1": eq(self.compose(bp.p2, bp.i2), self.identity(B)),
            "p1 i2 = 0": self.is_zero_mor(self.compose(bp.p1, bp.i2)),
            "p2 i1 = 0": self.is_zero_mor(self.compose(bp.p2, bp.i1)),
            "i1 p1 + i2 p2 = 1": eq(self.add(self.compose(bp.i1, bp.p1),
                                             self.compose(bp.i2, bp.p2)),
                                    self.identity(bp.obj)),
        }

    def biproduct_n(self, objs: Sequence) -> tuple[Any, list[Mor], list[Mor]]:
        """Iterated biproduct ``objs[0] + (objs[1] + ...)`` with its injections and projections."""
        if not objs:
            return self.zero_object(), [], []
        if len(objs) == 1:
            one = self.identity(objs[0])
            return objs[0], [one], [one]
        rest, rest_inj, rest_proj = self.biproduct_n(objs[1:])
        bp = self.biproduct(objs[0], rest)
        inj = [bp.i1] + [self.compose(bp.i2, j) for j in rest_inj]
        proj = [bp.p1] + [self.compose(p, bp.p2) for p in rest_proj]
        return bp.obj, inj, proj

    def from_blocks(self, blocks: Sequence[Sequence[Mor]], doms: Sequence | None = None,
                    cods: Sequence | None = None) -> Mor:
        """Morphism between iterated biproducts with entry ``blocks[i][j]: doms[j] -> cods[i]``.

        Composition of such morphisms is the ordinary row-by-column product
        of their block matrices, ``g`` after ``f`` giving ``G @ F``.
        """
        nrows = len(blocks)
        ncols = len(blocks[0]) if nrows else (len(doms) if doms is not None else 0)
        if any(len(r) != ncols for r in blocks):
            raise ShapeError("ragged block matrix")
        if doms is None:
            if not nrows:
                raise ShapeError("domains required for a block matrix with no rows")
            doms = [blocks[0][j].dom for j in range(ncols)]
        if cods is None:
            if not ncols:
                raise ShapeError("codomains required for a block matrix with no columns")
            cods = [blocks[i][0].cod for i in range(nrows)]
        if len(doms) != ncols or len(cods) != nrows:
            raise ShapeError("block matrix does not match the given objects")
        for i, row in enumerate(blocks):
            for j, b in enumerate(row):
                if b.dom != doms[j] or b.cod != cods[i]:
                    raise ShapeError(f"block ({i}, {j}) has the wrong domain or codomain")
        D, _, proj = self.biproduct_n(doms)
        C, inj, _ = self.biproduct_n(cods)
        total = self.zero_mor(D, C)
        for i, row in enumerate(blocks):
            for j, b in enumerate(row):
                total = self.add(total, self.compose(inj[i], self.compose(b, proj[j])))
        return total

    # -- monic, epic, iso ---------------------------------------------------

    def is_monic(self, f: Mor) -> bool:
        return self.is_zero_object(self.kernel(f)[0])

    def is_epic(self, f: Mor) -> bool:
        return self.is_zero_object(self.cokernel(f)[0])

    def invert(self, f: Mor) -> Mor:
        """Inverse of a monic epic, obtained by viewing ``f`` as the kernel of ``cod -> 0``."""
        if not self.is_monic(f):
            raise NotInvertible("morphism is not monic")
        if not self.is_epic(f):
            raise NotInvertible("morphism is not epic")
        to_zero = self.zero_mor(f.cod, self.zero_object())
        return self.factor_through_kernel(f, to_zero, self.identity(f.cod))

    # -- images and the subobject lattice -----------------------------------

    def kernel_sub(self, f: Mor) -> SubObject:
        return SubObject(self.kernel(f)[1])

    def cokernel_quot(self, f: Mor) -> QuotientObject:
        return QuotientObject(self.cokernel(f)[1])

    def image(self, f: Mor) -> SubObject:
        """``KerCok(f)``."""
        return SubObject(self.kernel(self.cokernel(f)[1])[1])

    def coimage(self, f: Mor) -> QuotientObject:
        """``CokKer(f)``."""
        return QuotientObject(self.cokernel(self.kernel(f)[1])[1])

    def image_factorization(self, f: Mor) -> tuple[Mor, Mor]:
        """``(e, m)`` with ``f = m o e``, ``m`` the image monic and ``e`` epic."""
        c = self.cokernel(f)[1]
        m = self.kernel(c)[1]
        return self.factor_through_kernel(m, c, f), m

    def zero_subobject(self, B) -> SubObject:
        return SubObject(self.zero_mor(self.zero_object(), B))

    def full_subobject(self, B) -> SubObject:
        return SubObject(self.identity(B))

    def factor_through_mono(self, f: Mor, m: SubObject | Mor) -> Mor | None:
        """``h`` with ``m o h = f`` if ``f`` lands in ``m``, else None.

        ``m`` is the kernel of its own cokernel, so the kernel factorization
        applies as soon as the cokernel kills ``f``.
        """
        rep = m.rep if isinstance(m, SubObject) else m
        if f.cod != rep.cod:
            raise DomainMismatch("codomain of f differs from the ambient object of m")
        c = self.cokernel(rep)[1]
        if not self.is_zero_mor(self.compose(c, f)):
            return None
        return self.factor_through_kernel(rep, c, f)

    def factor_through_epi(self, f: Mor, q: QuotientObject | Mor) -> Mor | None:
        """``h`` with ``h o q = f`` if ``f`` kills the kernel of ``q``, else None."""
        rep = q.rep if isinstance(q, QuotientObject) else q
        if f.dom != rep.dom:
            raise DomainMismatch("domain of f differs from the ambient object of q")
        k = self.kernel(rep)[1]
        if not self.is_zero_mor(self.compose(f, k)):
            return None
        return self.factor_through_cokernel(rep, k, f)

    def sub_le(self, m1: SubObject, m2: SubObject) -> bool:
        return self.factor_through_mono(m1.rep, m2) is not None

    def sub_equal(self, m1: SubObject, m2: SubObject) -> bool:
        return self.sub_le(m1, m2) and self.sub_le(m2, m1)

    def quot_le(self, q1: QuotientObject, q2: QuotientObject) -> bool:
        """``q1`` is a quotient of ``q2`` (``q1`` factors through ``q2``)."""
        return self.factor_through_epi(q1.rep, q2) is not None

    def quot_equal(self, q1: QuotientObject, q2: QuotientObject) -> bool:
        return self.quot_le(q1, q2) and self.quot_le(q2, q1)

    def _require_same_ambient(self, m1: SubObject, m2: SubObject) -> None:
        if m1.ambient != m2.ambient:
            raise DomainMismatch("subobjects live in different ambient objects")

    def sub_intersect(self, m1: SubObject, m2: SubObject) -> SubObject:
        self._require_same_ambient(m1, m2)
        c1 = self.cokernel(m1.rep)[1]
        k = self.kernel(self.compose(c1, m2.rep))[1]
        return SubObject(self.compose(m2.rep, k))

    def sub_union(self, m1: SubObject, m2: SubObject) -> SubObject:
        """Join, as the image of ``[m1, m2]`` out of the biproduct."""
        self._require_same_ambient(m1, m2)
        bp = self.biproduct(m1.obj, m2.obj)
        return self.image(self.copair(bp, m1.rep, m2.rep))

    def sub_union_dual(self, m1: SubObject, m2: SubObject) -> SubObject:
        """Join, as the kernel of the meet of the two cokernel quotients."""
        self._require_same_ambient(m1, m2)
        e1 = self.cokernel(m1.rep)[1]
        e2 = self.cokernel(m2.rep)[1]
        k1 = self.kernel(e1)[1]
        c = self.cokernel(self.compose(e2, k1))[1]
        return SubObject(self.kernel(self.compose(c, e2))[1])

    # -- pullbacks and pushouts ---------------------------------------------

    def _pullback_parts(self, f: Mor, g: Mor):
        if f.cod != g.cod:
            raise DomainMismatch("pullback of maps with different codomains")
        bp = self.biproduct(f.dom, g.dom)
        diff = self.copair(bp, f, self.neg(g))
        P, k = self.kernel(diff)
        return bp, diff, P, k

    def pullback(self, f: Mor, g: Mor) -> tuple[Any, Mor, Mor]:
        bp, _, P, k = self._pullback_parts(f, g)
        return P, self.compose(bp.p1, k), self.compose(bp.p2, k)

    def pullback_factor(self, f: Mor, g: Mor, x1: Mor, x2: Mor) -> Mor:
        """The unique map from the cone ``(x1, x2)`` into the pullback of ``f, g``."""
        bp, diff, _, k = self._pullback_parts(f, g)
        return self.factor_through_kernel(k, diff, self.pair(bp, x1, x2))

    def _pushout_parts(self, f: Mor, g: Mor):
        if f.dom != g.dom:
            raise DomainMismatch("pushout of maps with different domains")
        bp = self.biproduct(f.cod, g.cod)
        diff = self.pair(bp, f, self.neg(g))
        Q, c = self.cokernel(diff)
        return bp, diff, Q, c

    def pushout(self, f: Mor, g: Mor) -> tuple[Any, Mor, Mor]:
        bp, _, Q, c = self._pushout_parts(f, g)
        return Q, self.compose(c, bp.i1), self.compose(c, bp.i2)

    def pushout_factor(self, f: Mor, g: Mor, y1: Mor, y2: Mor) -> Mor:
        bp, diff, _, c = self._pushout_parts(f, g)
        return self.factor_through_cokernel(c, diff, self.copair(bp, y1, y2))

    # -- exactness ----------------------------------------------------------

    def is_exact_at(self, f: Mor, g: Mor) -> bool:
        self._require_composable(f, g)
        return self.sub_equal(self.image(f), self.kernel_sub(g))

    def exactness_profile(self, s: SequenceSpec) -> list[tuple[str, bool]]:
        """Per-position exactness verdicts for a sequence."""
        out = []
        arrows = s.arrows
        if s.left_zero and arrows:
            out.append(("monic at start", self.is_monic(arrows[0])))
        for k, (f, g) in enumerate(zip(arrows, arrows[1:])):
            out.append((f"exact at object {k + 1}", self.is_exact_at(f, g)))
        if s.right_zero and arrows:
            out.append(("epic at end", self.is_epic(arrows[-1])))
        return out

    def is_exact_seq(self, s: SequenceSpec) -> bool:
        return all(ok for _, ok in self.exactness_profile(s))
