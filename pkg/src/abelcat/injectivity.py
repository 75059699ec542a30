"""Injective modules over Z/n: Baer's test, an extension oracle, essential
extensions and injective envelopes, all by finite enumeration.

Elements are handled through their canonical coordinates (``A.key``), where
the group law is componentwise addition modulo ``A.key_moduli``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, lcm, prod
from typing import Any, Iterator, Sequence

from .core import Mor
from .diagram.generate import category_for
from .errors import (CapExceeded, InvalidInput, RingMismatch, VerificationFailure)
from .fpmod import DEFAULT_CAP, FpCategory, FpModule, Matrix, RingSpec

Key = tuple[int, ...]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def prime_factors(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _modulus(A: FpModule) -> int:
    n = A.ring.modulus
    if n is None:
        raise RingMismatch("injectivity checks are only available over Z/n")
    return n


def _cat(A: FpModule) -> FpCategory:
    return category_for(A.ring)


# -- arithmetic in key coordinates ------------------------------------------

def _add(u: Key, v: Key, moduli: Sequence[int]) -> Key:
    return tuple((a + b) % d for a, b, d in zip(u, v, moduli))


def _scale(c: int, u: Key, moduli: Sequence[int]) -> Key:
    return tuple((c * a) % d for a, d in zip(u, moduli))


def _order(u: Key, moduli: Sequence[int]) -> int:
    return lcm(1, *(d // gcd(a, d) for a, d in zip(u, moduli)))


def _keys(A: FpModule, cap: int = DEFAULT_CAP) -> Iterator[Key]:
    for x in A.iter_elements(cap):
        yield A.key(x)


def _image_key(f: Mor, k: Key) -> Key:
    return f.cod.key(f.payload.apply(f.dom.from_key(k)))


def _cyclic(u: Key, moduli: Sequence[int]) -> set[Key]:
    return {_scale(c, u, moduli) for c in range(_order(u, moduli))}


def subgroups(A: FpModule, cap: int = DEFAULT_CAP) -> list[tuple[frozenset, tuple[Key, ...]]]:
    """Every subgroup of A (a Z/n-submodule) with a generating tuple, smallest first."""
    moduli = A.key_moduli
    elems = list(_keys(A, cap))
    zero = tuple(0 for _ in moduli)
    cyclic = {u: frozenset(_cyclic(u, moduli)) for u in elems}
    found = {frozenset([zero]): ()}
    frontier = [frozenset([zero])]
    while frontier:
        nxt = []
        for S in frontier:
            for u in elems:
                if u in S:
                    continue
                T = frozenset(_add(s, c, moduli) for s in S for c in cyclic[u])
                if T not in found:
                    found[T] = found[S] + (u,)
                    nxt.append(T)
        frontier = nxt
    return sorted(found.items(), key=lambda item: (len(item[0]), sorted(item[0])))


def submodule_inclusion(A: FpModule, gens: Sequence[Key]) -> Mor:
    """A monic onto the submodule of A generated by ``gens`` (given as keys)."""
    cat = _cat(A)
    if not gens:
        return cat.zero_mor(cat.zero_object(), A)
    cols = [A.from_key(g) for g in gens]
    f = cat.make_morphism(cat.free(len(gens)), A, Matrix.from_columns(cols, A.gens))
    return cat.image(f).rep


# -- ideals and Baer's test --------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """The ideal ``(d)`` of Z/n with its inclusion ``Z/(n/d) -> Z/n``, ``1 -> d``."""

    generator: int
    inclusion: Mor


def zn_ideals(n: int) -> list[Ideal]:
    if n < 2:
        raise InvalidInput("ideals of Z/n need n >= 2")
    cat = category_for(RingSpec.zmod(n))
    R = cat.cyclic(n)
    return [Ideal(d, cat.make_morphism(cat.cyclic(n // d), R, Matrix([[d]], 1)))
            for d in divisors(n)]


@dataclass
class InjectivityVerdict:
    object: FpModule
    baer: bool
    brute: bool | None = None
    witnesses: list[dict[str, Any]] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return self.brute is None or self.brute == self.baer

    def to_dict(self) -> dict[str, Any]:
        return {"object": str(self.object), "baer": self.baer, "brute": self.brute,
                "agree": self.agree, "witnesses": self.witnesses}


def baer_injective(A: FpModule, cap: int = DEFAULT_CAP) -> InjectivityVerdict:
    """Every hom from an ideal ``(d)`` extends to Z/n.

    A hom ``(d) -> A`` is the choice of an element killed by ``n/d``; it
    extends exactly when that element is a multiple ``d . b``.
    """
    n = _modulus(A)
    moduli = A.key_moduli
    elems = list(_keys(A, cap))
    witnesses = []
    for d in divisors(n):
        multiples = {_scale(d, b, moduli) for b in elems}
        for a in elems:
            if not any(_scale(n // d, a, moduli)) and a not in multiples:
                witnesses.append({"ideal": d, "element": list(A.from_key(a))})
                break
    return InjectivityVerdict(A, not witnesses, witnesses=witnesses)


# -- the extension oracle -----------------------------------------------------

def small_modules(n: int, max_factors: int = 2, max_card: int = 64) -> list[FpModule]:
    """``Z/d1 + ... + Z/dk`` over Z/n with ``1 < d1 | d2 | ... | n``, k bounded, order bounded."""
    ring = RingSpec.zmod(n)
    ds = [d for d in divisors(n) if d > 1]
    out = [FpModule.zero(ring)]

    def extend(factors: list[int]) -> None:
        for d in ds:
            if factors and d % factors[-1]:
                continue
            nxt = factors + [d]
            if prod(nxt) <= max_card:
                out.append(FpModule.from_invariants(ring, nxt))
                if len(nxt) < max_factors:
                    extend(nxt)

    extend([])
    return out


@lru_cache(maxsize=None)
def inclusion_universe(n: int, max_factors: int = 2, max_card: int = 64) -> tuple[Mor, ...]:
    """Inclusions of every submodule into every module of :func:`small_modules`.

    Every monic is isomorphic to one of these, so extension along this list
    is extension along every monic between such modules.
    """
    out = []
    for Y in small_modules(n, max_factors, max_card):
        for _, gens in subgroups(Y):
            out.append(submodule_inclusion(Y, gens))
    return tuple(out)


def extension_failure(A: FpModule, universe: Sequence[Mor], cap: int = DEFAULT_CAP
                      ) -> tuple[Mor, Mor] | None:
    """A monic ``m: X -> Y`` and ``h: X -> A`` admitting no ``g`` with ``g o m = h``.

    Restriction ``Hom(Y, A) -> Hom(X, A)`` is computed on every element of
    ``Hom(Y, A)``; the first monic whose restriction misses something wins.
    """
    cat = _cat(A)
    for m in universe:
        X, Y = m.dom, m.cod
        HX, HY = cat.hom_group(X, A), cat.hom_group(Y, A)
        for H in (HX, HY):
            if H.module.order > cap:
                raise CapExceeded(f"Hom group of order {H.module.order} exceeds cap {cap}")
        restricted = [HX.coords(cat.compose(b, m)) for b in HY.basis]
        image = set()
        for y in HY.module.iter_elements(cap):
            v = [sum(c * r[i] for c, r in zip(y, restricted)) for i in range(len(HX.basis))]
            image.add(HX.module.key(v))
        if len(image) < HX.module.order:
            for x in HX.module.iter_elements(cap):
                if HX.module.key(x) not in image:
                    return m, HX.from_coords(x)
    return None


def brute_injective(A: FpModule, universe: Sequence[Mor], cap: int = DEFAULT_CAP) -> bool:
    return extension_failure(A, universe, cap) is None


def injectivity_verdict(A: FpModule, universe: Sequence[Mor] | None = None,
                        cap: int = DEFAULT_CAP) -> InjectivityVerdict:
    """Baer's verdict, with the extension oracle alongside when ``universe`` is given."""
    v = baer_injective(A, cap)
    if universe is not None:
        fail = extension_failure(A, universe, cap)
        v.brute = fail is None
        if fail is not None:
            m, h = fail
            v.witnesses.append({"mono_dom": str(m.dom), "mono_cod": str(m.cod),
                                "mono": m.payload.tolist(), "map": h.payload.tolist()})
    return v


# -- essential and split extensions ------------------------------------------

def is_essential(m: Mor, cap: int = DEFAULT_CAP) -> bool:
    """Every nonzero cyclic submodule of ``cod(m)`` meets the image of ``m``."""
    cat = _cat(m.cod)
    if not cat.is_monic(m):
        raise InvalidInput("essentiality is defined for monics")
    moduli = m.cod.key_moduli
    image = {_image_key(m, k) for k in _keys(m.dom, cap)}
    for y in _keys(m.cod, cap):
        if any(y) and not any(any(c) and c in image for c in _cyclic(y, moduli)):
            return False
    return True


def split_check(m: Mor, cap: int = DEFAULT_CAP) -> Mor | None:
    """A retraction ``y`` with ``y o m = 1``, or None."""
    cat = _cat(m.cod)
    if not cat.is_monic(m):
        raise InvalidInput("splitting is checked for monics")
    H = cat.hom_group(m.cod, m.dom)
    one = cat.identity(m.dom)
    for y in H.elements(cap):
        if cat.mor_equal(cat.compose(y, m), one):
            return y
    return None


# -- envelopes ---------------------------------------------------------------

def envelope_factor(d: int, n: int) -> int:
    """Order of the envelope of ``Z/d`` over Z/n: the full p-part of n for each p | d."""
    pn = prime_factors(n)
    return prod(p ** pn[p] for p in prime_factors(d))


def injective_envelope(A: FpModule, cap: int = DEFAULT_CAP) -> tuple[FpModule, Mor]:
    """Candidate envelope, factor by factor, checked before it is returned."""
    n = _modulus(A)
    cat = _cat(A)
    moduli = A.key_moduli
    targets = [envelope_factor(d, n) for d in moduli]
    E = FpModule.from_invariants(A.ring, targets)
    U = A.smith.U
    rows = [[(t // d) * u for u in U.row(i)]
            for (i, d), t in zip(A._coordinate_moduli, targets)]
    m = cat.make_morphism(A, E, Matrix(rows, A.gens))
    if not cat.is_monic(m):
        raise VerificationFailure(f"envelope map for {A} is not monic")
    if not baer_injective(E, cap).baer:
        raise VerificationFailure(f"envelope candidate {E} for {A} is not injective")
    if not is_essential(m, cap):
        raise VerificationFailure(f"envelope candidate {E} for {A} is not essential")
    return E, m


def envelope_minimal(m: Mor, cap: int = DEFAULT_CAP) -> bool:
    """No proper submodule of ``cod(m)`` containing the image of ``m`` is injective."""
    E = m.cod
    image = {_image_key(m, k) for k in _keys(m.dom, cap)}
    for S, gens in subgroups(E, cap):
        if len(S) == E.order or not image <= S:
            continue
        if baer_injective(submodule_inclusion(E, gens).dom, cap).baer:
            return False
    return True
