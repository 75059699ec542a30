"""Rings Z and Z/n, and finitely presented modules over them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm, prod
from typing import Iterator, Sequence

from ..errors import CapExceeded, EnumerationRefused, ShapeError
from .matrix import Matrix
from .normal_form import SNFResult, snf

DEFAULT_CAP = 4096


@dataclass(frozen=True)
class RingSpec:
    """``Z`` when ``modulus`` is None, otherwise ``Z/modulus``."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(None)

    @classmethod
    def zmod(cls, n: int) -> RingSpec:
        return cls(n)

    @property
    def kind(self) -> str:
        return "integers" if self.modulus is None else "integers-mod-n"

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


@dataclass(frozen=True)
class FpModule:
    """Quotient of ``ring^gens`` by the column span of ``relations``.

    Over ``Z/n`` the columns ``n*e_i`` are implicitly adjoined; all
    arithmetic happens over Z against :attr:`full_relations`.
    """

    ring: RingSpec
    gens: int
    relations: Matrix

    def __post_init__(self):
        if self.gens < 0:
            raise ShapeError("negative generator count")
        if self.relations.rows != self.gens:
            raise ShapeError(f"relations have {self.relations.rows} rows for {self.gens} generators")

    @classmethod
    def build(cls, ring: RingSpec, gens: int, relation_columns: Sequence[Sequence[int]] = ()
              ) -> FpModule:
        return cls(ring, gens, Matrix.from_columns(list(relation_columns), gens))

    @classmethod
    def free(cls, ring: RingSpec, rank: int) -> FpModule:
        return cls(ring, rank, Matrix.zeros(rank, 0))

    @classmethod
    def zero(cls, ring: RingSpec) -> FpModule:
        return cls(ring, 0, Matrix.zeros(0, 0))

    @classmethod
    def from_invariants(cls, ring: RingSpec, factors: Sequence[int]) -> FpModule:
        """``Z/d1 + Z/d2 + ...``; a factor 0 gives a free summand over Z."""
        cols = [[d if i == j else 0 for i in range(len(factors))]
                for j, d in enumerate(factors) if d]
        return cls.build(ring, len(factors), cols)

    def __repr__(self) -> str:
        return f"FpModule({self.ring}, gens={self.gens}, relations={self.relations.tolist()})"

    def __str__(self) -> str:
        free, tors = self.invariant_factors
        parts = [f"Z/{d}" for d in tors] + ["Z"] * free
        return " + ".join(parts) if parts else "0"

    @cached_property
    def full_relations(self) -> Matrix:
        if self.ring.modulus is None:
            return self.relations
        return self.relations.hstack(Matrix.identity(self.gens).scale(self.ring.modulus))

    @cached_property
    def smith(self) -> SNFResult:
        return snf(self.full_relations)

    @cached_property
    def _coordinate_moduli(self) -> tuple[tuple[int, int], ...]:
        # (row of U, modulus) for every row that carries information; modulus 0 = free
        diag = self.smith.diagonal
        out = []
        for i in range(self.gens):
            d = diag[i] if i < len(diag) else 0
            if d != 1:
                out.append((i, d))
        return tuple(out)

    @property
    def key_moduli(self) -> tuple[int, ...]:
        """Modulus of each coordinate returned by :meth:`key` (0 for a free coordinate)."""
        return tuple(d for _, d in self._coordinate_moduli)

    @cached_property
    def invariant_factors(self) -> tuple[int, tuple[int, ...]]:
        """``(free_rank, (d1, d2, ...))`` with ``1 < d1 | d2 | ...``."""
        mods = [d for _, d in self._coordinate_moduli]
        return sum(1 for d in mods if d == 0), tuple(d for d in mods if d)

    @property
    def is_finite(self) -> bool:
        return self.invariant_factors[0] == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise EnumerationRefused(f"module {self} is infinite")
        return prod(self.invariant_factors[1])

    def key(self, x: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of the element represented by ``x``."""
        if len(x) != self.gens:
            raise ShapeError(f"element of length {len(x)} in a module with {self.gens} generators")
        U = self.smith.U
        out = []
        for i, d in self._coordinate_moduli:
            y = sum(a * b for a, b in zip(U.row(i), x))
            out.append(y % d if d else y)
        return tuple(out)

    def is_zero_element(self, x: Sequence[int]) -> bool:
        return not any(self.key(x))

    def from_key(self, coords: Sequence[int]) -> tuple[int, ...]:
        """A representative vector for canonical coordinates ``coords``."""
        Ui = self.smith.U_inv
        idx = [i for i, _ in self._coordinate_moduli]
        return tuple(sum(Ui[r, i] * c for i, c in zip(idx, coords)) for r in range(self.gens))

    def canonical(self, x: Sequence[int]) -> tuple[int, ...]:
        """The representative of ``x`` used by :meth:`elements`."""
        return self.from_key(self.key(x))

    def elements(self, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
        return list(self.iter_elements(cap))

    def iter_elements(self, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
        """Canonical coset representatives, one per element."""
        if not self.is_finite:
            raise EnumerationRefused(f"module {self} is infinite")
        if self.order > cap:
            raise CapExceeded(f"module {self} has {self.order} elements, cap is {cap}")
        moduli = [d for _, d in self._coordinate_moduli]
        for coords in itertools.product(*(range(d) for d in moduli)):
            yield self.from_key(coords)

    def element_order(self, x: Sequence[int]) -> int:
        """Additive order of ``x``; 0 for elements of infinite order."""
        o = 1
        for (_, d), c in zip(self._coordinate_moduli, self.key(x)):
            if d == 0:
                if c:
                    return 0
            else:
                o = lcm(o, d // gcd(d, c))
        return o


def invariant_factors(A: FpModule) -> tuple[int, list[int]]:
    free, tors = A.invariant_factors
    return free, list(tors)


def elements(A: FpModule, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    return A.elements(cap)
