"""Closed-form atoms when the system has a vanishing pairwise term.

* ``I(Xi; Xj) = 0`` for some pair: redundancy is 0 (it is bounded by every
  pairwise mutual information) and the rest follows from the identities.
* ``H(Xi | Xj) = 0`` for some ordered pair: ``Syn = I(Xk; Xi | Xj) - Un(Xk, Xi)``
  with ``I(Xk; Xi | Xj) = 0``, so non-negativity forces ``Syn = Un(Xi, Xk) = 0``
  and therefore ``Red = I(Xi; Xk)``.

When both shortcuts fire, the mutual-information branch is returned after
checking that the two agree.
"""
from __future__ import annotations

from itertools import combinations, permutations

from . import shannon
from .atoms import AtomSet, atoms_from_redundancy
from .errors import InconsistentZeros, NotThreeVariables
from .table import TOL, JointTable


def _candidates(table: JointTable, tol: float) -> list[tuple[str, float]]:
    found = []
    for a, b in combinations(table.names, 2):
        if shannon.mutual_information(table, a, b) <= tol:
            found.append((f"I({a};{b})=0", 0.0))
    for i, j in permutations(table.names, 2):
        if shannon.conditional_entropy(table, i, j) <= tol:
            (k,) = [n for n in table.names if n not in (i, j)]
            found.append((f"H({i}|{j})=0", shannon.mutual_information(table, i, k)))
    return found


def try_direct(table: JointTable, tol: float = TOL) -> AtomSet | None:
    """Atoms from a zero shortcut, or ``None`` when no zero structure exists."""
    if len(table) != 3:
        raise NotThreeVariables(f"expected 3 variables, got {len(table)}")
    found = _candidates(table, tol)
    if not found:
        return None
    solutions = [(why, atoms_from_redundancy(table, red, method="direct", tol=tol)) for why, red in found]
    first_why, first = solutions[0]
    ref = first.values()
    for why, other in solutions[1:]:
        diff = max(abs(ref[k] - v) for k, v in other.values().items())
        if diff > tol:
            raise InconsistentZeros(f"{first_why} and {why} imply atoms differing by {diff:.3g} bits")
    return first
