"""Diagrams of named objects and arrows, and commutativity checking."""

from __future__ import annotations

from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Any, Hashable

from ..core import AbelianCategory, Mor, SequenceSpec
from ..errors import DomainMismatch, InvalidInput
from ..report import Report

ALL_PATHS = "all-paths"
ASSERTED_PAIRS = "asserted-pairs"


@dataclass(frozen=True)
class Arrow:
    src: str
    tgt: str
    mor: Mor


@dataclass
class ExactClaim:
    arrows: list[str]
    left_zero: bool = False
    right_zero: bool = False


@dataclass
class Diagram:
    """Named objects and arrows plus the claims to check about them.

    A path is a list of arrow names in traversal order, so ``["f", "g"]``
    denotes ``g o f``.
    """

    objects: dict[str, Hashable] = field(default_factory=dict)
    arrows: dict[str, Arrow] = field(default_factory=dict)
    commute_mode: str = ASSERTED_PAIRS
    commutes: list[tuple[list[str], list[str]]] = field(default_factory=list)
    exact: list[ExactClaim] = field(default_factory=list)

    def __post_init__(self):
        if self.commute_mode not in (ALL_PATHS, ASSERTED_PAIRS):
            raise InvalidInput(f"unknown commute mode {self.commute_mode!r}")
        for name, a in self.arrows.items():
            for end in (a.src, a.tgt):
                if end not in self.objects:
                    raise InvalidInput(f"arrow {name!r} refers to undeclared object {end!r}")
            if a.mor.dom != self.objects[a.src] or a.mor.cod != self.objects[a.tgt]:
                raise DomainMismatch(f"arrow {name!r} does not match its declared endpoints")

    def add_object(self, name: str, obj: Hashable) -> None:
        self.objects[name] = obj

    def add_arrow(self, name: str, src: str, tgt: str, mor: Mor) -> None:
        if mor.dom != self.objects[src] or mor.cod != self.objects[tgt]:
            raise DomainMismatch(f"arrow {name!r} does not match its declared endpoints")
        self.arrows[name] = Arrow(src, tgt, mor)

    def path_ends(self, path: list[str]) -> tuple[str, str]:
        if not path:
            raise InvalidInput("empty path")
        for a, b in zip(path, path[1:]):
            if self.arrows[a].tgt != self.arrows[b].src:
                raise DomainMismatch(f"arrows {a!r} and {b!r} are not composable")
        return self.arrows[path[0]].src, self.arrows[path[-1]].tgt

    def compose_path(self, cat: AbelianCategory, path: list[str], right_assoc: bool = False
                     ) -> Mor:
        self.path_ends(path)
        mors = [self.arrows[a].mor for a in path]
        if right_assoc:
            # h o (g o f) nesting from the far end
            out = mors[-1]
            for m in reversed(mors[:-1]):
                out = cat.compose(out, m)
            return out
        out = mors[0]
        for m in mors[1:]:
            out = cat.compose(m, out)
        return out

    def simple_paths(self) -> dict[tuple[str, str], list[list[str]]]:
        """All non-empty paths grouped by endpoints; requires an acyclic graph."""
        graph: dict[str, set[str]] = {o: set() for o in self.objects}
        for a in self.arrows.values():
            graph[a.tgt].add(a.src)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError as e:
            raise InvalidInput("all-paths mode needs an acyclic diagram") from e
        out_arrows: dict[str, list[str]] = {o: [] for o in self.objects}
        for name, a in sorted(self.arrows.items()):
            out_arrows[a.src].append(name)
        groups: dict[tuple[str, str], list[list[str]]] = {}

        def walk(start: str, node: str, path: list[str]) -> None:
            for name in out_arrows[node]:
                nxt = self.arrows[name].tgt
                p = path + [name]
                groups.setdefault((start, nxt), []).append(p)
                walk(start, nxt, p)

        for o in self.objects:
            walk(o, o, [])
        return groups


def _payload_repr(m: Mor) -> Any:
    p = m.payload
    return p.tolist() if hasattr(p, "tolist") else repr(p)


def check_commutes(cat: AbelianCategory, d: Diagram, right_assoc: bool = False) -> Report:
    """Compare composites of path pairs (every parallel pair, or the asserted ones)."""
    if d.commute_mode == ALL_PATHS:
        pairs = []
        for paths in d.simple_paths().values():
            for i in range(len(paths)):
                for j in range(i + 1, len(paths)):
                    pairs.append((paths[i], paths[j]))
    else:
        pairs = list(d.commutes)
    children = []
    for p, q in pairs:
        if d.path_ends(p) != d.path_ends(q):
            raise DomainMismatch(f"paths {p} and {q} are not parallel")
        f = d.compose_path(cat, p, right_assoc)
        g = d.compose_path(cat, q, right_assoc)
        ok = cat.mor_equal(f, g)
        details: dict[str, Any] = {"left": list(p), "right": list(q)}
        if not ok:
            details["left_composite"] = _payload_repr(f)
            details["right_composite"] = _payload_repr(g)
        children.append(Report(f"{'.'.join(p)} == {'.'.join(q)}", ok, details))
    return Report.group("commutativity", children, mode=d.commute_mode, pairs=len(pairs))


def check_exact_claims(cat: AbelianCategory, d: Diagram) -> Report:
    children = []
    for claim in d.exact:
        seq = SequenceSpec(tuple(d.arrows[a].mor for a in claim.arrows),
                           claim.left_zero, claim.right_zero)
        profile = cat.exactness_profile(seq)
        children.append(Report(
            "exact " + " -> ".join(claim.arrows), all(ok for _, ok in profile),
            {label: ok for label, ok in profile}))
    return Report.group("exactness", children)


def check_diagram(cat: AbelianCategory, d: Diagram) -> Report:
    return Report.group("diagram", [check_commutes(cat, d), check_exact_claims(cat, d)])
