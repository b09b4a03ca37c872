"""Classical Shannon measures over a :class:`~sid.table.JointTable`, in bits.

Variable sets are given as iterables of names; a bare string is treated as a
single variable. Results are returned raw, so tiny negative floating-point
dust is possible and is left for the caller (reports clamp it).
"""
from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from .errors import OverlappingSets, UnknownVariable
from .table import JointTable


def _names(table: JointTable, names) -> frozenset:
    if isinstance(names, str):
        names = (names,)
    names = frozenset(names)
    if not names:
        raise UnknownVariable("empty variable set")
    table.indices(names)
    return names


def _disjoint(*sets):
    for a, b in combinations(sets, 2):
        if a & b:
            raise OverlappingSets(f"variable sets overlap on {sorted(a & b)}")


def entropy_of(probs: Iterable[float]) -> float:
    """H = -sum p log2 p with 0 log 0 = 0."""
    return -math.fsum(p * math.log2(p) for p in probs if p > 0)


def entropy(table: JointTable, over) -> float:
    over = _names(table, over)
    return entropy_of(table.marginal_pmf(over).values())


def conditional_entropy(table: JointTable, of, given) -> float:
    of, given = _names(table, of), _names(table, given)
    _disjoint(of, given)
    return entropy(table, of | given) - entropy(table, given)


def mutual_information(table: JointTable, a, b) -> float:
    a, b = _names(table, a), _names(table, b)
    _disjoint(a, b)
    # written symmetrically so I(a;b) == I(b;a) bit for bit
    return entropy(table, a) + entropy(table, b) - entropy(table, a | b)


def conditional_mutual_information(table: JointTable, a, b, given) -> float:
    a, b, given = _names(table, a), _names(table, b), _names(table, given)
    _disjoint(a, b, given)
    return (entropy(table, a | given) + entropy(table, b | given)
            - entropy(table, a | b | given) - entropy(table, given))


def external_information(table: JointTable, target: str) -> float:
    """Uncertainty about ``target`` left once every other variable is known."""
    table.index(target)
    rest = [n for n in table.names if n != target]
    if not rest:
        raise UnknownVariable("external information needs at least two variables")
    return conditional_entropy(table, target, rest)


def total_correlation(table: JointTable, over=None) -> float:
    over = _names(table, table.names if over is None else over)
    if len(over) < 2:
        raise UnknownVariable("total correlation needs at least two variables")
    return math.fsum(entropy(table, n) for n in over) - entropy(table, over)


def co_information(table: JointTable, x1: str, x2: str, x3: str) -> float:
    names = [x1, x2, x3]
    if len(set(names)) != 3:
        raise OverlappingSets("co-information needs three distinct variables")
    for n in names:
        table.index(n)
    singles = math.fsum(entropy(table, n) for n in sorted(names))
    pairs = math.fsum(entropy(table, p) for p in combinations(sorted(names), 2))
    return entropy(table, names) + singles - pairs
