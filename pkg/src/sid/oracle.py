"""Set-intersection redundancy under the deterministic order.

With the order ``Q <= X  iff  H(Q|X) = 0`` the variables below every source
are exactly the functions that are constant on the connected components of
the sources' co-occurrence graph. The finest such function, the common part
Q*, is found with union-find over source values.

Why the supremum is attained at Q*: any Q that is a deterministic function of
every source is constant on each component, so it is a function of Q*. By
data processing, I(f(Q*); Y) <= I(Q*; Y), hence
``sup_Q I(Q; Y) = I(Q*; Y)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from . import atoms as _atoms
from . import shannon
from .errors import NotThreeVariables, SymmetryViolation, TargetInSources, UnknownVariable
from .table import TOL, JointTable, with_derived

log = logging.getLogger(__name__)

COMMON = "__common__"


class UnionFind:
    """Disjoint sets over hashable items with path halving and union by size."""

    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        self.size: dict = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def groups(self) -> list[list]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


@dataclass(frozen=True)
class CommonPart:
    sources: tuple
    labeling: Mapping[str, Mapping[Hashable, int]]
    label_count: int

    def label(self, source: str, value: Hashable) -> int:
        return self.labeling[source][value]

    def to_json(self) -> dict:
        return {
            "sources": list(self.sources),
            "label_count": self.label_count,
            "labeling": {s: {str(v): lab for v, lab in m.items()} for s, m in self.labeling.items()},
        }


def common_part(table: JointTable, sources: Iterable[str]) -> CommonPart:
    """Finest variable that is a deterministic function of every source."""
    requested = {sources} if isinstance(sources, str) else set(sources)
    table.indices(requested)
    sources = tuple(n for n in table.names if n in requested)
    if len(sources) < 2:
        raise UnknownVariable("common part needs at least two sources")
    idx = table.indices(sources)
    uf = UnionFind()
    for outcome in table.pmf:
        nodes = [(s, outcome[i]) for s, i in zip(sources, idx)]
        for node in nodes:
            uf.add(node)
        for node in nodes[1:]:
            uf.union(nodes[0], node)
    # label components in a stable order so outputs do not depend on hashing
    groups = sorted((sorted(g, key=repr) for g in uf.groups()), key=lambda g: repr(g[0]))
    labeling: dict = {s: {} for s in sources}
    for label, members in enumerate(groups):
        for s, v in members:
            labeling[s][v] = label
    return CommonPart(sources, labeling, len(groups))


def _check_sources(table: JointTable, target: str, sources) -> tuple:
    if isinstance(sources, str):
        sources = (sources,)
    table.index(target)
    sources = tuple(dict.fromkeys(sources))
    table.indices(sources)
    if target in sources:
        raise TargetInSources(f"target {target!r} is also a source")
    if not sources:
        raise UnknownVariable("at least one source is required")
    return sources


def redundancy(table: JointTable, target: str, sources) -> float:
    """Red(target : sources) = I(Q*; target)."""
    sources = _check_sources(table, target, sources)
    if len(sources) == 1:
        return shannon.mutual_information(table, target, sources[0])
    cp = common_part(table, sources)
    first = cp.sources[0]
    aug = with_derived(table, COMMON, lambda v: cp.labeling[first][v], (first,))
    return shannon.mutual_information(aug, COMMON, target)


def mi_with_labels(table: JointTable, target: str, source: str, labels: Mapping[Hashable, Hashable]) -> float:
    """I(f(source); target) for an arbitrary relabeling ``f`` of one source."""
    aug = with_derived(table, COMMON, lambda v: labels[v], (source,))
    return shannon.mutual_information(aug, COMMON, target)


def per_target_redundancy(table: JointTable) -> dict:
    return {t: redundancy(table, t, tuple(n for n in table.names if n != t)) for t in table.names}


def solve_atoms_oracle(table: JointTable, tol: float = TOL) -> _atoms.AtomSet:
    if len(table) != 3:
        raise NotThreeVariables(f"expected 3 variables, got {len(table)}")
    reds = per_target_redundancy(table)
    spread = max(reds.values()) - min(reds.values())
    if spread > tol:
        log.warning("per-target redundancy differs by %.3g bits: %s", spread, reds)
        raise SymmetryViolation(f"per-target redundancies disagree by {spread:.3g} bits: {reds}", reds)
    red = sum(reds.values()) / 3
    return _atoms.atoms_from_redundancy(table, red, method="oracle", tol=tol)
