"""Support-structure analysis: synergistic and unique blocks, and the
block-based synergy formula.

Fix the anchor variable (call it X1) at a value ``x1`` and let ``S2``, ``S3``
be the values the other two variables take alongside it. For support points
with a different anchor value:

* synergistic block: ``x2 in S2`` and ``x3 in S3``
* unique block of X2: ``x2 in S2`` and ``x3 not in S3`` (symmetrically for X3)

A unique block of X3 witnesses shared information between X1 and X2: X2
moved off its support when X1 did, while X3 could stay put.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Hashable, Mapping

from . import shannon
from .atoms import pair
from .errors import NotThreeVariables, ZeroDenominator, ZeroProbabilityEvidence
from .table import JointTable

YELLOW, SYN, PLAIN = "yellow", "syn", "plain"


def _roles(table: JointTable, anchor_variable: str) -> tuple[int, int, int]:
    if len(table) != 3:
        raise NotThreeVariables(f"expected 3 variables, got {len(table)}")
    a = table.index(anchor_variable)
    i, j = (k for k in range(3) if k != a)
    return a, i, j


@dataclass(frozen=True)
class BlockReport:
    names: tuple
    anchor: tuple
    others: tuple
    supports: Mapping[str, frozenset]
    yellow: frozenset
    syn_blocks: frozenset
    unique_blocks: Mapping[str, frozenset]
    # syn-block points whose (x2, x3) pair never occurs with the anchor value
    syn_witnesses: frozenset

    def tag(self, outcome: tuple) -> str:
        if outcome in self.yellow:
            return YELLOW
        if outcome in self.syn_blocks:
            return SYN
        for v, pts in self.unique_blocks.items():
            if outcome in pts:
                return f"unique:{v}"
        return PLAIN

    def rows(self, table: JointTable) -> list[tuple[tuple, float, str]]:
        return [(o, p, self.tag(o)) for o, p in sorted(table.pmf.items())]

    def to_json(self, table: JointTable) -> dict:
        return {
            "anchor": {"variable": self.anchor[0], "value": self.anchor[1]},
            "variables": list(self.names),
            "supports": {v: sorted(s) for v, s in self.supports.items()},
            "rows": [{"outcome": list(o), "p": p, "tag": t} for o, p, t in self.rows(table)],
        }


def classify_blocks(table: JointTable, anchor: tuple[str, Hashable]) -> BlockReport:
    name, value = anchor
    a, i, j = _roles(table, name)
    vi, vj = table.names[i], table.names[j]
    yellow = frozenset(o for o in table.pmf if o[a] == value)
    if not yellow:
        raise ZeroProbabilityEvidence(f"{name}={value!r} has probability 0")
    si = frozenset(o[i] for o in yellow)
    sj = frozenset(o[j] for o in yellow)
    with_anchor = frozenset((o[i], o[j]) for o in yellow)
    syn, uni, unj = set(), set(), set()
    for o in table.pmf:
        if o[a] == value:
            continue
        ini, inj = o[i] in si, o[j] in sj
        if ini and inj:
            syn.add(o)
        elif ini:
            uni.add(o)
        elif inj:
            unj.add(o)
    witnesses = frozenset(o for o in syn if (o[i], o[j]) not in with_anchor)
    return BlockReport(
        names=table.names,
        anchor=(name, value),
        others=(vi, vj),
        supports={vi: si, vj: sj},
        yellow=yellow,
        syn_blocks=frozenset(syn),
        unique_blocks={vi: frozenset(uni), vj: frozenset(unj)},
        syn_witnesses=witnesses,
    )


@dataclass(frozen=True)
class PositivityVerdict:
    anchor_variable: str
    syn_positive: bool
    un_positive: Mapping[frozenset, bool]
    # the unrefined rule: any synergistic block at all
    syn_blocks_present: bool


def positivity(table: JointTable, anchor_variable: str) -> PositivityVerdict:
    """Which atoms involving ``anchor_variable`` are positive, read off the support.

    Synergy is declared positive when some synergistic-block point carries a
    pair ``(x2, x3)`` that never occurs with the anchor value. When the anchor
    is a function of the other two variables this is the same as "a
    synergistic block exists"; otherwise plain blocks also appear from
    external noise (three independent bits have them everywhere).
    """
    a, i, j = _roles(table, anchor_variable)
    vi, vj = table.names[i], table.names[j]
    syn = present = un_ai = un_aj = False
    for value in sorted({o[a] for o in table.pmf}, key=repr):
        rep = classify_blocks(table, (anchor_variable, value))
        present |= bool(rep.syn_blocks)
        syn |= bool(rep.syn_witnesses)
        # Xi deviates while Xj stays: unique block of Xj
        un_ai |= bool(rep.unique_blocks[vj])
        un_aj |= bool(rep.unique_blocks[vi])
    return PositivityVerdict(anchor_variable, syn,
                             {pair(anchor_variable, vi): un_ai, pair(anchor_variable, vj): un_aj},
                             present)


def positivity_all(table: JointTable) -> dict:
    """Verdicts from every anchor, plus a combined view.

    ``combined`` holds, per atom, whether *any* anchor declared it positive;
    ``disagreements`` lists atoms on which anchors differ.
    """
    verdicts = {n: positivity(table, n) for n in table.names}
    syn_votes = {n: v.syn_positive for n, v in verdicts.items()}
    un_votes: dict = defaultdict(dict)
    for n, v in verdicts.items():
        for p, flag in v.un_positive.items():
            un_votes[p][n] = flag
    disagreements = []
    if len(set(syn_votes.values())) > 1:
        disagreements.append("syn")
    for p, votes in un_votes.items():
        if len(set(votes.values())) > 1:
            disagreements.append("un[" + "|".join(sorted(p, key=table.names.index)) + "]")
    return {
        "per_anchor": verdicts,
        "syn": any(syn_votes.values()),
        "un": {p: any(v.values()) for p, v in un_votes.items()},
        "disagreements": disagreements,
    }


def _formula_terms(table: JointTable, anchor_variable: str) -> dict:
    """Per support point: (probability, log2 factor)."""
    a, i, j = _roles(table, anchor_variable)
    names = table.names
    p_a = table.marginal_pmf([names[a]])
    p_ai = table.marginal_pmf([names[a], names[i]])
    p_aj = table.marginal_pmf([names[a], names[j]])
    p_ij = table.marginal_pmf([names[i], names[j]])

    def key(*pairs):
        # marginal keys follow table order
        return tuple(v for _, v in sorted(pairs))

    supports: dict = {}
    for o in table.pmf:
        si, sj = supports.setdefault(o[a], (set(), set()))
        si.add(o[i])
        sj.add(o[j])

    terms = {}
    for o, p in table.pmf.items():
        si, sj = supports[o[a]]
        num_i = num_j = block = 0.0
        for (xi, xj), q in p_ij.items():  # i < j, so keys are (x_i, x_j)
            if xi == o[i] and xj in sj:
                num_i += q
            if xj == o[j] and xi in si:
                num_j += q
            if xi in si and xj in sj:
                block += q
        den_i = p_ai.get(key((a, o[a]), (i, o[i])), 0.0)
        den_j = p_aj.get(key((a, o[a]), (j, o[j])), 0.0)
        if min(num_i, num_j, den_i, den_j, block) <= 0:
            raise ZeroDenominator(f"vanishing term at support point {o!r}")
        ratio = (num_i / den_i) * (num_j / den_j) * (p_a[(o[a],)] / block)
        terms[o] = (p, math.log2(ratio))
    return terms


def synergy_formula(table: JointTable, anchor_variable: str | None = None) -> float:
    """Block-based synergy estimate with ``anchor_variable`` in the X1 role.

    Denominators are the joint probabilities P(X1=x1, X2=x2) and
    P(X1=x1, X3=x3); see the README for why.
    """
    anchor_variable = anchor_variable or table.names[0]
    terms = _formula_terms(table, anchor_variable)
    rest = [n for n in table.names if n != anchor_variable]
    log_part = math.fsum(p * f for p, f in terms.values())
    return log_part - shannon.conditional_entropy(table, anchor_variable, rest)


def formula_breakdown(table: JointTable, anchor_variable: str | None = None) -> dict:
    """Probability-weighted log term grouped by anchor value, plus per-point factors."""
    anchor_variable = anchor_variable or table.names[0]
    a = table.index(anchor_variable)
    terms = _formula_terms(table, anchor_variable)
    per_value: dict = defaultdict(float)
    for o, (p, f) in terms.items():
        per_value[o[a]] += p * f
    return {"per_value": dict(per_value), "factors": {o: f for o, (_, f) in terms.items()}}
