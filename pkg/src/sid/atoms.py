"""Atom algebra for three-variable systems.

One redundancy value fixes every other atom through the Shannon identities:

    Un(Xi, Xj)     = I(Xi; Xj) - Red
    Syn            = I(Xk; Xi | Xj) - Un(Xk, Xi)    for any ordering (i, j, k)
    Ext(Xi)        = H(Xi | rest)

The identity checks below recombine atoms into joint entropy, total
correlation and co-information and return the residual.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Mapping

from . import shannon
from .errors import NotThreeVariables, RedundancyOutOfRange, SynergyInconsistent
from .table import TOL, JointTable

METHODS = ("direct", "blocks", "oracle", "supplied")

RedundancySolver = Callable[[JointTable, str, tuple], float]


def pair(a: str, b: str) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class AtomSet:
    names: tuple
    red: float
    un: Mapping[frozenset, float]
    syn: float
    ext: Mapping[str, float]
    method: str = "supplied"
    violations: tuple = ()
    syn_evaluations: Mapping[tuple, float] = field(default_factory=dict, repr=False)

    def un_of(self, a: str, b: str) -> float:
        return self.un[pair(a, b)]

    def pairs(self) -> list[tuple[str, str]]:
        return list(combinations(self.names, 2))

    def values(self) -> dict:
        """Flat ``{atom label: bits}`` view, e.g. ``{"un[X1|X2]": 2.0, ...}``."""
        out = {"red": self.red, "syn": self.syn}
        for a, b in self.pairs():
            out[f"un[{a}|{b}]"] = self.un_of(a, b)
        for n in self.names:
            out[f"ext[{n}]"] = self.ext[n]
        return out


@dataclass(frozen=True)
class SymmetryAudit:
    redundancy: Mapping[str, float]
    synergy: Mapping[tuple, float]
    red_discrepancy: float
    syn_discrepancy: float

    @property
    def discrepancy(self) -> float:
        return max(self.red_discrepancy, self.syn_discrepancy)


def _require_three(table: JointTable):
    if len(table) != 3:
        raise NotThreeVariables(f"expected 3 variables, got {len(table)}: {list(table.names)}")


def _spread(values) -> float:
    values = list(values)
    return max(values) - min(values) if values else 0.0


def flag_negative(values: Mapping[str, float], tol: float = TOL) -> tuple:
    return tuple(f"{k}={v:.12g}" for k, v in values.items() if v < -tol)


def synergy_evaluations(table: JointTable, un: Mapping[frozenset, float]) -> dict:
    """Syn(Xk: Xi, Xj) = I(Xk; Xi | Xj) - Un(Xk, Xi) for all six orderings."""
    return {(k, i, j): shannon.conditional_mutual_information(table, k, i, j) - un[pair(k, i)]
            for k, i, j in permutations(table.names)}


def atoms_from_redundancy(table: JointTable, red: float, method: str = "supplied",
                          tol: float = TOL) -> AtomSet:
    _require_three(table)
    mi = {pair(a, b): shannon.mutual_information(table, a, b) for a, b in combinations(table.names, 2)}
    bound = min(mi.values())
    if red < -tol or red > bound + tol:
        raise RedundancyOutOfRange(f"redundancy {red!r} outside [0, {bound!r}]")
    un = {p: v - red for p, v in mi.items()}
    evals = synergy_evaluations(table, un)
    if _spread(evals.values()) > tol:
        raise SynergyInconsistent(f"synergy evaluations disagree: {evals}")
    syn = math.fsum(evals.values()) / len(evals)
    ext = {n: shannon.external_information(table, n) for n in table.names}
    atoms = AtomSet(table.names, red, un, syn, ext, method, (), evals)
    return AtomSet(table.names, red, un, syn, ext, method,
                   flag_negative(atoms.values(), tol), evals)


def check_joint_entropy_decomposition(table: JointTable, atoms: AtomSet) -> float:
    total = math.fsum([*atoms.ext.values(), *atoms.un.values(), 2 * atoms.syn, atoms.red])
    return shannon.entropy(table, table.names) - total


def check_total_correlation_decomposition(table: JointTable, atoms: AtomSet) -> float:
    total = math.fsum([*atoms.un.values(), atoms.syn, 2 * atoms.red])
    return shannon.total_correlation(table, table.names) - total


def check_co_information(table: JointTable, atoms: AtomSet) -> float:
    return shannon.co_information(table, *table.names) - (atoms.red - atoms.syn)


def residuals(table: JointTable, atoms: AtomSet) -> dict:
    return {
        "joint": check_joint_entropy_decomposition(table, atoms),
        "tc": check_total_correlation_decomposition(table, atoms),
        "coi": check_co_information(table, atoms),
    }


def audit_symmetry(table: JointTable, red_solver: RedundancySolver) -> SymmetryAudit:
    """Run ``red_solver`` once per target and compare what each target implies.

    The six synergy values use the redundancy of their own target, so they
    expose target dependence of the solver as well.
    """
    _require_three(table)
    reds = {}
    for target in table.names:
        sources = tuple(n for n in table.names if n != target)
        reds[target] = red_solver(table, target, sources)
    syn = {}
    for k, i, j in permutations(table.names):
        un_ki = shannon.mutual_information(table, k, i) - reds[k]
        syn[(k, i, j)] = shannon.conditional_mutual_information(table, k, i, j) - un_ki
    return SymmetryAudit(reds, syn, _spread(reds.values()), _spread(syn.values()))
