"""The functor Hom(P, -) into modules over R = End(P), at desk scale.

Conventions.  ``R`` is ``End(P)`` with multiplication ``r * s = r o s``.
An element ``x`` of ``Hom(P, A)`` is acted on by precomposition,
``r . x = x o r``.  Consequently ``r . (s . x) = (s o r) . x``: the action
matrices satisfy ``act(r) @ act(s) == act(s o r)``, and every check below
spells that order out instead of hiding it behind a ring product.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .core import Mor, SequenceSpec
from .diagram.generate import Bounds, Generator
from .errors import (CapExceeded, EnumerationRefused, InvalidInput, LiftFailed,
                     UnsupportedGenerator, VerificationFailure, WellDefinednessError)
from .fpmod import DEFAULT_CAP, FpCategory, FpModule, HomGroup, Matrix, solve
from .report import Report


def augment_generator(cat: FpCategory, P0: FpModule, objs: Sequence[FpModule]
                      ) -> tuple[FpModule, dict[FpModule, Mor]]:
    """Enlarge the free module ``P0`` to ``P0^k`` so that every object is a quotient.

    ``k`` is the largest generator count among ``objs`` (at least 1).  The
    epic onto ``A`` sends the i-th generator of ``P`` to the i-th generator
    of ``A`` and the surplus generators to zero.
    """
    n = cat.ring.modulus
    if n is None:
        raise UnsupportedGenerator("the embedding is only supported over Z/n")
    if P0.gens == 0 or P0.invariant_factors != (0, (n,) * P0.gens):
        raise UnsupportedGenerator(f"{P0} is not presented as a nonzero free Z/{n}-module")
    k = max([1] + [A.gens for A in objs])
    P = cat.biproduct_n([P0] * k)[0]
    epics = {}
    for A in objs:
        T = Matrix.identity(A.gens).hstack(Matrix.zeros(A.gens, P.gens - A.gens))
        epics[A] = cat.make_morphism(P, A, T)
    return P, epics


@dataclass(frozen=True)
class EndRing:
    """``End(P)`` through an additive basis and structure constants.

    ``mult_table[i][j]`` holds the coordinates of ``basis[i] o basis[j]``.
    """

    cat: FpCategory
    P: FpModule
    hom: HomGroup
    basis: tuple[Mor, ...]
    mult_table: tuple[tuple[tuple[int, ...], ...], ...]
    unit: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.hom.module.order

    def key(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.hom.module.key(x)

    def element(self, x: Sequence[int]) -> Mor:
        return self.hom.from_coords(x)

    def multiply(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of ``element(x) o element(y)`` from the structure constants."""
        out = [0] * len(self.basis)
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    out = [o + a * b * t for o, t in zip(out, self.mult_table[i][j])]
        return self.key(out)

    def check_axioms(self) -> dict[str, bool]:
        m = len(self.basis)
        e = [tuple(int(i == j) for j in range(m)) for i in range(m)]
        assoc = all(self.multiply(self.multiply(e[i], e[j]), e[k])
                    == self.multiply(e[i], self.multiply(e[j], e[k]))
                    for i, j, k in itertools.product(range(m), repeat=3))
        unital = all(self.multiply(self.unit, e[i]) == self.key(e[i])
                     == self.multiply(e[i], self.unit) for i in range(m))
        return {"associative": assoc, "unital": unital}

    def matrix_ring_identification(self, cap: int = DEFAULT_CAP) -> dict[str, Any]:
        """Check ``End((Z/n)^m)`` against ``m x m`` matrices over Z/n.

        The map sends an endomorphism to its payload reduced mod n; it must
        hit ``n^(m^2)`` distinct matrices and turn composition into the
        matrix product.
        """
        n = self.P.ring.modulus
        m = self.P.gens
        if n is None or self.P.invariant_factors != (0, (n,) * m):
            return {"applicable": False}
        if self.order > cap:
            raise CapExceeded(f"End(P) has {self.order} elements, cap is {cap}")
        images = {self.element(x).payload.mod(n) for x in self.hom.module.iter_elements(cap)}
        mult_ok = all(
            self.element(self.mult_table[i][j]).payload.mod(n)
            == (self.basis[i].payload @ self.basis[j].payload).mod(n)
            for i in range(len(self.basis)) for j in range(len(self.basis)))
        return {"applicable": True, "n": n, "m": m, "order": self.order,
                "expected_order": n ** (m * m), "injective": len(images) == self.order,
                "bijective": len(images) == self.order == n ** (m * m),
                "multiplicative": mult_ok}


def end_ring(cat: FpCategory, P: FpModule) -> EndRing:
    if not P.is_finite:
        raise EnumerationRefused(f"End({P}) of an infinite module")
    H = cat.hom_group(P, P)
    table = tuple(tuple(H.module.key(H.coords(cat.compose(a, b))) for b in H.basis)
                  for a in H.basis)
    R = EndRing(cat, P, H, H.basis, table, H.coords(cat.identity(P)))
    bad = [k for k, ok in R.check_axioms().items() if not ok]
    if bad:
        raise VerificationFailure(f"End(P) structure constants fail: {bad}")
    return R


@dataclass(frozen=True)
class RModule:
    """An abelian group with one action matrix per basis element of ``ring``."""

    ring: EndRing
    underlying: FpModule
    action: tuple[Matrix, ...]
    source: FpModule | None = None
    hom: HomGroup | None = field(default=None, repr=False)
    distinguished: tuple[int, ...] | None = None

    def act(self, i: int) -> Mor:
        return Mor(self.underlying, self.underlying, self.action[i])

    def act_element(self, r: Sequence[int]) -> Mor:
        M = Matrix.zeros(self.underlying.gens, self.underlying.gens)
        for c, A in zip(r, self.action):
            M = M + A.scale(c)
        return Mor(self.underlying, self.underlying, self.ring.cat._reduce(M))

    def check(self) -> dict[str, bool]:
        cat = self.ring.cat
        R = self.ring
        m = len(R.basis)
        try:
            for A in self.action:
                cat.make_morphism(self.underlying, self.underlying, A)
            well_defined = True
        except WellDefinednessError:
            return {"well defined": False}
        respects = all(
            cat.mor_equal(cat.compose(self.act(i), self.act(j)),
                          self.act_element(R.mult_table[j][i]))
            for i in range(m) for j in range(m))
        unit = cat.mor_equal(self.act_element(R.unit), cat.identity(self.underlying))
        return {"well defined": well_defined, "respects products": respects,
                "unit acts as identity": unit}


@dataclass(frozen=True)
class RModuleMap:
    dom: RModule
    cod: RModule
    map: Mor

    def is_linear(self) -> bool:
        cat = self.dom.ring.cat
        return all(cat.mor_equal(cat.compose(self.map, self.dom.act(i)),
                                 cat.compose(self.cod.act(i), self.map))
                   for i in range(len(self.dom.action)))


def hom_module(R: EndRing, A: FpModule, e_A: Mor | None = None) -> RModule:
    """``Hom(P, A)`` with ``r . x = x o r``; ``e_A`` becomes the distinguished element."""
    cat = R.cat
    if not A.is_finite:
        raise EnumerationRefused(f"Hom(P, {A}) of an infinite module")
    H = cat.hom_group(R.P, A)
    action = []
    for r in R.basis:
        cols = [H.coords(cat.compose(x, r)) for x in H.basis]
        action.append(cat._reduce(Matrix.from_columns(cols, len(H.basis))))
    dist = H.coords(e_A) if e_A is not None else None
    return RModule(R, H.module, tuple(action), A, H, dist)


def lift_through_epic(cat: FpCategory, p: Mor, e: Mor) -> Mor:
    """``q`` with ``e o q = p``, solved generator by generator."""
    if p.cod != e.cod:
        raise InvalidInput("p and e must share a codomain")
    B = e.cod
    M = e.payload.hstack(B.full_relations)
    cols = []
    for c in p.payload.columns():
        x = solve(M, Matrix([[v] for v in c], 1))
        if x is None:
            raise LiftFailed("a generator image has no preimage under e")
        cols.append(x.column(0)[:e.dom.gens])
    try:
        return cat.make_morphism(p.dom, e.dom, Matrix.from_columns(cols, e.dom.gens))
    except WellDefinednessError as exc:
        raise LiftFailed("domain is not projective relative to e") from exc


class HomFunctor:
    """``F = Hom(P, -)`` from finite Z/n-modules into End(P)-modules.

    ``objs`` is the finite full subcategory being embedded; each of its
    objects receives an epic from ``P``.  ``F`` itself is defined on every
    finite module.
    """

    def __init__(self, cat: FpCategory, objs: Sequence[FpModule], P0: FpModule | None = None):
        self.cat = cat
        self.objs = list(dict.fromkeys(objs))
        P0 = cat.free(1) if P0 is None else P0
        self.P, self.epics = augment_generator(cat, P0, self.objs)
        self.R = end_ring(cat, self.P)
        self._modules: dict[FpModule, RModule] = {}

    def __call__(self, A: FpModule) -> RModule:
        if A not in self._modules:
            self._modules[A] = hom_module(self.R, A, self.epics.get(A))
        return self._modules[A]

    def on_map(self, f: Mor) -> RModuleMap:
        return map_module(self, f)

    def hom_R(self, A: FpModule, B: FpModule) -> HomGroup:
        """R-linear maps ``F(A) -> F(B)`` as a subgroup of the additive maps."""
        FA, FB = self(A), self(B)
        return self.cat.hom_group(FA.underlying, FB.underlying,
                                  equivariance=list(zip(FA.action, FB.action)))


def map_module(F: HomFunctor, f: Mor) -> RModuleMap:
    """``F(f) = f o -`` written in the hom-group bases."""
    cat = F.cat
    FA, FB = F(f.dom), F(f.cod)
    cols = [FB.hom.coords(cat.compose(f, x)) for x in FA.hom.basis]
    M = Matrix.from_columns(cols, FB.underlying.gens)
    return RModuleMap(FA, FB, cat.make_morphism(FA.underlying, FB.underlying, M))


def full_witness(F: HomFunctor, A: FpModule, B: FpModule, ytilde: RModuleMap) -> Mor:
    """A map ``y: A -> B`` with ``F(y) = ytilde``, built as in the fullness proof.

    Evaluate ``ytilde`` on the epic ``e_A``, lift the result through the
    epic ``e_B`` to an endomorphism ``r`` of P, and factor ``e_B o r``
    through ``e_A``, which is the cokernel of its own kernel.
    """
    cat = F.cat
    if not ytilde.is_linear():
        raise InvalidInput("map is not R-linear")
    if A not in F.epics or B not in F.epics:
        raise InvalidInput("both objects must belong to the embedded subcategory")
    FA, FB = F(A), F(B)
    e_A, e_B = F.epics[A], F.epics[B]
    phi = FB.hom.from_coords(ytilde.map.payload.apply(FA.distinguished))
    r = lift_through_epic(cat, phi, e_B)
    k = cat.kernel(e_A)[1]
    top = cat.compose(e_B, r)
    if not cat.is_zero_mor(cat.compose(top, k)):
        raise InvalidInput("lifted map does not vanish on the kernel of e_A")
    y = cat.factor_through_cokernel(e_A, k, top)
    if not cat.mor_equal(map_module(F, y).map, ytilde.map):
        raise VerificationFailure("reconstructed map does not reproduce the R-linear map")
    return y


@dataclass
class EmbeddingReport:
    ring: str
    generator: str
    end_ring_order: int
    objects: list[str]
    hom_counts: list[dict[str, Any]] = field(default_factory=list)
    checks: Report | None = None

    @property
    def passed(self) -> bool:
        return self.checks is not None and self.checks.passed

    @property
    def faithful(self) -> bool:
        return all(h["faithful"] for h in self.hom_counts)

    @property
    def full(self) -> bool:
        return all(h["full"] for h in self.hom_counts)

    def to_dict(self) -> dict[str, Any]:
        return {"passed": self.passed, "ring": self.ring, "generator": self.generator,
                "end_ring_order": self.end_ring_order, "objects": self.objects,
                "faithful": self.faithful, "full": self.full,
                "hom_counts": self.hom_counts,
                "checks": self.checks.to_dict() if self.checks else None}


def _enumerate(H: HomGroup, cap: int, label: str) -> list[Mor]:
    if H.module.order > cap:
        raise CapExceeded(f"{label} has {H.module.order} elements, cap is {cap}")
    return list(H.elements(cap))


def check_embedding(cat: FpCategory, objs: Mapping[str, FpModule] | Sequence[FpModule],
                    seed: int = 0, ses_count: int = 20, nonexact_count: int = 20,
                    sample_count: int = 20, cap: int = DEFAULT_CAP,
                    ses_samples: Sequence[SequenceSpec] | None = None,
                    morphism_samples: Sequence[Mor] | None = None) -> EmbeddingReport:
    """Verify that ``Hom(P, -)`` is an exact, faithful, full embedding of ``objs``."""
    if not isinstance(objs, Mapping):
        objs = {f"X{i}": A for i, A in enumerate(objs)}
    names = {}
    for name, A in objs.items():
        names.setdefault(A, name)
    modules = list(names)
    F = HomFunctor(cat, modules)
    R = F.R
    rng = random.Random(seed)
    gen = Generator(seed, Bounds(ring=cat.ring))
    children: list[Report] = []

    ring_checks: dict[str, Any] = dict(R.check_axioms())
    ident = R.matrix_ring_identification(cap)
    if ident.get("applicable"):
        ring_checks["matrix ring"] = ident["bijective"] and ident["multiplicative"]
    children.append(Report("End(P)", all(v for v in ring_checks.values()),
                           {**ring_checks, "order": R.order}))

    mod_children = []
    for A in modules:
        c = F(A).check()
        mod_children.append(Report(f"F({names[A]})", all(c.values()), c))
    children.append(Report.group("R-module structure", mod_children))

    # generator property relative to the declared universe
    gen_children = []
    for A in modules:
        nonzero = not cat.is_zero_object(A)
        ok = (F(A).underlying.order > 1) == nonzero
        gen_children.append(Report(f"Hom(P, {names[A]}) nonzero iff {names[A]} nonzero", ok))

    # samples of morphisms inside the subcategory
    homs = {(A, B): cat.hom_group(A, B) for A in modules for B in modules}

    def sample(A, B):
        H = homs[(A, B)]
        return H.from_coords([rng.randrange(16) for _ in H.basis])

    if morphism_samples is None:
        morphism_samples = []
        for _ in range(sample_count):
            A, B = rng.choice(modules), rng.choice(modules)
            morphism_samples.append(sample(A, B))
    for f in morphism_samples:
        if cat.is_zero_mor(f):
            continue
        detected = any(not cat.is_zero_mor(cat.compose(f, g))
                       for g in cat.hom_group(F.P, f.dom).basis)
        gen_children.append(Report("nonzero map detected by a map from P", detected))
    children.append(Report.group("generator (relative to universe)", gen_children))

    fun = []
    for _ in range(sample_count):
        A, B, C = (rng.choice(modules) for _ in range(3))
        f, g = sample(A, B), sample(B, C)
        lhs = map_module(F, cat.compose(g, f)).map
        rhs = cat.compose(map_module(F, g).map, map_module(F, f).map)
        fun.append(Report("F(g f) = F(g) F(f)", cat.mor_equal(lhs, rhs)))
        f2 = sample(A, B)
        lhs = map_module(F, cat.add(f, f2)).map
        rhs = cat.add(map_module(F, f).map, map_module(F, f2).map)
        fun.append(Report("F(f + f') = F(f) + F(f')", cat.mor_equal(lhs, rhs)))
    for A in modules:
        fun.append(Report(f"F(1_{names[A]}) = 1",
                          cat.mor_equal(map_module(F, cat.identity(A)).map,
                                        cat.identity(F(A).underlying))))
    children.append(Report.group("functorial and additive", fun))

    if ses_samples is None:
        ses_samples = [gen.ses() for _ in range(ses_count)]
    exact_children = []
    for s in ses_samples:
        image = SequenceSpec(tuple(map_module(F, a).map for a in s.arrows),
                             s.left_zero, s.right_zero)
        exact_children.append(Report("F(ses) exact", cat.is_exact_seq(image),
                                     {"source exact": cat.is_exact_seq(s)}))
    children.append(Report.group("exactness preserved", exact_children, count=len(ses_samples)))

    non_children = []
    for _ in range(nonexact_count):
        s = gen.nonexact()
        image = SequenceSpec(tuple(map_module(F, a).map for a in s.arrows))
        non_children.append(Report("F(nonexact) nonexact", not cat.is_exact_seq(image)))
    children.append(Report.group("nonexactness reflected", non_children, count=nonexact_count))

    report = EmbeddingReport(str(cat.ring), f"{F.P}", R.order, [names[A] for A in modules])
    pair_children = []
    for A in modules:
        for B in modules:
            label = f"Hom({names[A]}, {names[B]})"
            source = _enumerate(homs[(A, B)], cap, label)
            images = {}
            for f in source:
                images.setdefault(cat.mor_key(map_module(F, f).map), f)
            zero_key = cat.mor_key(cat.zero_mor(F(A).underlying, F(B).underlying))
            kernel_trivial = all(cat.is_zero_mor(f) for f in source
                                 if cat.mor_key(map_module(F, f).map) == zero_key)
            linear = _enumerate(F.hom_R(A, B), cap, "Hom_R(F" + label[3:] + ")")
            linear_keys = {cat.mor_key(m) for m in linear}
            rebuilt = 0
            for m in linear:
                y = full_witness(F, A, B, RModuleMap(F(A), F(B), m))
                rebuilt += cat.mor_equal(map_module(F, y).map, m)
            entry = {
                "dom": names[A], "cod": names[B], "hom_count": len(source),
                "hom_R_count": len(linear), "distinct_images": len(images),
                "faithful": len(images) == len(source) and kernel_trivial,
                "full": linear_keys == set(images) and rebuilt == len(linear),
                "witnesses": rebuilt,
            }
            report.hom_counts.append(entry)
            pair_children.append(Report(label, entry["faithful"] and entry["full"]
                                        and len(source) == len(linear),
                                        {k: v for k, v in entry.items()
                                         if k not in ("dom", "cod")}))
    children.append(Report.group("faithful and full", pair_children))
    report.checks = Report.group("embedding", children)
    return report
