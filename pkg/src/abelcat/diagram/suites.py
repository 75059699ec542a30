"""Randomized verification suites over generated inputs."""

from __future__ import annotations

from ..core import Mor, QuotientObject, SubObject
from ..report import Report
from .generate import Bounds, Generator
from .lemmas import (BOTTOM_FROM_TOP, TOP_FROM_BOTTOM, verify_exactness_criteria,
                     verify_left_exact_grid, verify_nine_lemma)

ORACLE_CAP = 4096


def _element_image(f: Mor) -> set | None:
    """Keys of ``f(A)`` by enumeration, or None when A is too large or infinite."""
    A = f.dom
    if not A.is_finite or A.order > ORACLE_CAP:
        return None
    return {f.cod.key(f.payload.apply(a)) for a in A.iter_elements(ORACLE_CAP)}


def check_universal_properties(gen: Generator, f: Mor) -> Report:
    """Kernel and cokernel of ``f`` against their universal properties.

    Existence and uniqueness are tested with maps that are known to factor
    (built as composites with a random map) and with random maps that may
    not; on small finite modules the kernel and cokernel sizes are also
    compared with element enumeration.
    """
    cat = gen.cat
    eq = cat.mor_equal
    d: dict[str, bool] = {}
    K, k = cat.kernel(f)
    d["f k = 0"] = cat.is_zero_mor(cat.compose(f, k))
    d["k monic"] = cat.is_monic(k)
    h = gen.morphism(B=K)
    g = cat.compose(k, h)
    h2 = cat.factor_through_kernel(k, f, g)
    d["kernel factor exists"] = eq(cat.compose(k, h2), g)
    d["kernel factor unique"] = eq(h2, h)
    probe = gen.morphism(B=f.dom)
    factors = cat.factor_through_mono(probe, k)
    d["kernel factors iff f kills"] = (factors is not None) == cat.is_zero_mor(cat.compose(f, probe))

    C, c = cat.cokernel(f)
    d["c f = 0"] = cat.is_zero_mor(cat.compose(c, f))
    d["c epic"] = cat.is_epic(c)
    h = gen.morphism(A=C)
    g = cat.compose(h, c)
    h2 = cat.factor_through_cokernel(c, f, g)
    d["cokernel factor exists"] = eq(cat.compose(h2, c), g)
    d["cokernel factor unique"] = eq(h2, h)
    probe = gen.morphism(A=f.cod)
    factors = cat.factor_through_epi(probe, c)
    d["cokernel factors iff kills f"] = (factors is not None) == cat.is_zero_mor(cat.compose(probe, f))

    A, B = f.dom, f.cod
    if A.is_finite and B.is_finite and A.order <= ORACLE_CAP and B.order <= ORACLE_CAP:
        zero_key = B.key([0] * B.gens)
        killed = {A.key(a) for a in A.iter_elements(ORACLE_CAP)
                  if B.key(f.payload.apply(a)) == zero_key}
        d["kernel size matches enumeration"] = K.order == len(killed)
        d["kernel image matches enumeration"] = _element_image(k) == killed
        d["cokernel size matches enumeration"] = C.order * len(_element_image(f)) == B.order
    return Report("universal properties", all(d.values()), d)


def suite_universal_properties(seed: int, count: int, bounds: Bounds = Bounds()) -> Report:
    children = []
    for s in range(count):
        gen = Generator(seed * 100003 + s, bounds)
        r = check_universal_properties(gen, gen.morphism())
        r.details["ring"] = str(gen.ring)
        children.append(r)
    return Report.group("kernel/cokernel universal properties", children, count=count)


def suite_kercok(seed: int, count: int, bounds: Bounds = Bounds()) -> Report:
    """Every monic is the kernel of its cokernel, every epic the cokernel of its kernel."""
    children = []
    for s in range(count):
        gen = Generator(seed * 100003 + s, bounds)
        cat = gen.cat
        m = gen.mono()
        e = gen.epic()
        mono_ok = cat.is_monic(m) and cat.sub_equal(cat.image(m), SubObject(m))
        epic_ok = cat.is_epic(e) and cat.quot_equal(cat.coimage(e), QuotientObject(e))
        children.append(Report("KerCok(m) = m and CokKer(e) = e", mono_ok and epic_ok,
                               {"mono": mono_ok, "epic": epic_ok, "ring": str(gen.ring)}))
    return Report.group("monics are kernels, epics are cokernels", children, count=count)


def suite_exactness_criteria(seed: int, count: int, bounds: Bounds = Bounds()) -> Report:
    children = []
    for s in range(count):
        gen = Generator(seed * 100003 + s, bounds)
        f, g = gen.pair()
        r = verify_exactness_criteria(gen.cat, f, g)
        r.details["ring"] = str(gen.ring)
        children.append(r)
    exact = sum(1 for c in children if c.details["exact"])
    return Report.group("exactness criteria agree", children, count=count, exact_pairs=exact)


def suite_grids(seed: int, count: int, bounds: Bounds = Bounds()) -> Report:
    """Nine lemma and its left exact variant, both directions, on generated grids."""
    children = []
    for s in range(count):
        gen = Generator(seed * 100003 + s, bounds)
        grid = gen.mixed_grid()
        reps = [verify_nine_lemma(gen.cat, grid, TOP_FROM_BOTTOM),
                verify_nine_lemma(gen.cat, grid, BOTTOM_FROM_TOP),
                verify_left_exact_grid(gen.cat, grid, TOP_FROM_BOTTOM),
                verify_left_exact_grid(gen.cat, grid, BOTTOM_FROM_TOP)]
        for r in reps:
            # a generated grid must satisfy the hypotheses, and then the rows must agree
            r.passed = r.details["status"] != "hypothesis-failure" and r.details["rows_agree"]
        children.append(Report.group(f"grid {s}", reps, ring=str(gen.ring),
                                     outer_rows_exact=reps[0].details["top_exact"]))
    return Report.group("grid lemmas", children, count=count)


def lemma_suites(seed: int, count: int, bounds: Bounds = Bounds()) -> Report:
    return Report.group("lemmas", [
        suite_kercok(seed, count, bounds),
        suite_exactness_criteria(seed, count, bounds),
        suite_grids(seed, count, bounds),
    ], seed=seed, count=count)
