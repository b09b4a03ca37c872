"""Exact discrete joint distributions over named variables.

A :class:`JointTable` is immutable once built. Zero-probability outcomes are
never stored, so the support of the table is just the key set of ``pmf``.
Variables are referred to by name throughout the package.
"""
from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Callable, Hashable, Iterable, Mapping, NamedTuple, Sequence

from .errors import (
    ArityMismatch,
    EmptyKeepSet,
    EmptySample,
    NegativeProbability,
    NotAPartition,
    SumNotOne,
    UnknownVariable,
    ZeroProbabilityEvidence,
)

TOL = 1e-9

Outcome = tuple


class VariableId(NamedTuple):
    name: str
    index: int


@dataclass(frozen=True)
class SampleSet:
    names: tuple
    rows: tuple

    def __init__(self, names: Sequence[str], rows: Iterable[Sequence[Hashable]]):
        names = tuple(names)
        rows = tuple(tuple(r) for r in rows)
        for r in rows:
            if len(r) != len(names):
                raise ArityMismatch(f"row {r!r} has {len(r)} values, expected {len(names)}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "rows", rows)


def _ordered(symbols: Iterable[Hashable]) -> tuple:
    symbols = set(symbols)
    try:
        return tuple(sorted(symbols))
    except TypeError:
        return tuple(sorted(symbols, key=repr))


@dataclass(frozen=True, eq=False)
class JointTable:
    """Joint pmf over ``names``; ``pmf`` maps outcome tuples to probabilities."""

    names: tuple
    alphabets: tuple
    pmf: Mapping[Outcome, float]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def variables(self) -> tuple[VariableId, ...]:
        return tuple(VariableId(n, i) for i, n in enumerate(self.names))

    @property
    def support(self) -> frozenset:
        return frozenset(self.pmf)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}; table has {list(self.names)}") from None

    def indices(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(n) for n in names)

    def alphabet(self, name: str) -> tuple:
        return self.alphabets[self.index(name)]

    def prob(self, outcome: Sequence[Hashable]) -> float:
        return self.pmf.get(tuple(outcome), 0.0)

    def marginal_pmf(self, names: Iterable[str]) -> dict:
        """Marginal pmf keyed by tuples ordered as in the table, not as given."""
        idx = tuple(sorted(set(self.indices(names))))
        cached = self._cache.get(idx)
        if cached is not None:
            return cached
        out: dict = defaultdict(float)
        for outcome, p in self.pmf.items():
            out[tuple(outcome[i] for i in idx)] += p
        out = dict(out)
        self._cache[idx] = out
        return out

    def items(self):
        return self.pmf.items()

    def __eq__(self, other):
        if not isinstance(other, JointTable):
            return NotImplemented
        return (self.names == other.names and self.alphabets == other.alphabets
                and dict(self.pmf) == dict(other.pmf))

    __hash__ = None

    def isclose(self, other: "JointTable", tol: float = 1e-12) -> bool:
        if self.names != other.names or self.support != other.support:
            return False
        return all(abs(p - other.pmf[k]) <= tol for k, p in self.pmf.items())


def _build(names, alphabets, pmf) -> JointTable:
    return JointTable(tuple(names), tuple(tuple(a) for a in alphabets), MappingProxyType(dict(pmf)))


def from_pmf(
    entries: Mapping[Outcome, float] | Iterable[tuple[Outcome, float]],
    names: Sequence[str] | None = None,
    alphabets: Sequence[Sequence[Hashable]] | None = None,
    normalize: bool = False,
    tol: float = TOL,
) -> JointTable:
    """Build a table from ``(outcome, probability)`` entries.

    Names default to ``X1..Xn``. Alphabets are inferred from the observed
    symbols unless given explicitly, in which case they may contain symbols
    with zero mass. Duplicate outcomes are accumulated.
    """
    if isinstance(entries, Mapping):
        entries = entries.items()
    entries = [(tuple(o), float(p)) for o, p in entries]
    if not entries:
        raise EmptySample("no pmf entries")
    arity = len(entries[0][0])
    if names is None:
        names = [f"X{i + 1}" for i in range(arity)]
    names = tuple(names)
    if len(set(names)) != len(names):
        raise ArityMismatch(f"duplicate variable names {names}")
    pmf: dict = defaultdict(float)
    for outcome, p in entries:
        if len(outcome) != len(names):
            raise ArityMismatch(f"outcome {outcome!r} has arity {len(outcome)}, expected {len(names)}")
        if p < 0 or math.isnan(p):
            raise NegativeProbability(f"probability {p} for outcome {outcome!r}")
        if p > 0:
            pmf[outcome] += p
    total = math.fsum(pmf.values())
    if total <= 0:
        raise SumNotOne("total probability mass is zero")
    if normalize:
        pmf = {o: p / total for o, p in pmf.items()}
    elif abs(total - 1.0) > tol:
        raise SumNotOne(f"probabilities sum to {total!r}, not 1")
    if alphabets is None:
        alphabets = [_ordered(o[i] for o in pmf) for i in range(len(names))]
    else:
        alphabets = [tuple(a) for a in alphabets]
        if len(alphabets) != len(names):
            raise ArityMismatch("one alphabet per variable required")
        for i, a in enumerate(alphabets):
            if not a or len(set(a)) != len(a):
                raise ArityMismatch(f"alphabet for {names[i]} must be non-empty and duplicate-free")
        for o in pmf:
            for i, v in enumerate(o):
                if v not in alphabets[i]:
                    raise ArityMismatch(f"symbol {v!r} not in alphabet of {names[i]}")
    return _build(names, alphabets, pmf)


def uniform(outcomes: Iterable[Outcome], names: Sequence[str] | None = None) -> JointTable:
    """Equiprobable table over the distinct ``outcomes``."""
    outcomes = list(dict.fromkeys(tuple(o) for o in outcomes))
    return from_pmf([(o, 1.0 / len(outcomes)) for o in outcomes], names=names, normalize=True)


def from_samples(samples: SampleSet, alphabets=None) -> JointTable:
    if not samples.rows:
        raise EmptySample("sample set has no rows")
    counts = Counter(samples.rows)
    n = len(samples.rows)
    return from_pmf([(o, c / n) for o, c in counts.items()], names=samples.names,
                    alphabets=alphabets, normalize=True)


def marginalize(table: JointTable, keep: Iterable[str]) -> JointTable:
    """Sum out every variable not in ``keep``. Kept variables stay in table order."""
    keep = set(keep)
    if not keep:
        raise EmptyKeepSet("keep set is empty")
    idx = sorted(table.indices(keep))
    return _build([table.names[i] for i in idx], [table.alphabets[i] for i in idx],
                  table.marginal_pmf(keep))


def condition(table: JointTable, evidence: Mapping[str, Hashable]) -> JointTable:
    """Distribution of the remaining variables given ``evidence``."""
    fixed = {table.index(n): v for n, v in evidence.items()}
    rest = [i for i in range(len(table)) if i not in fixed]
    if not rest:
        raise EmptyKeepSet("evidence covers every variable")
    pmf: dict = defaultdict(float)
    for o, p in table.pmf.items():
        if all(o[i] == v for i, v in fixed.items()):
            pmf[tuple(o[i] for i in rest)] += p
    mass = math.fsum(pmf.values())
    if mass <= 0:
        raise ZeroProbabilityEvidence(f"evidence {dict(evidence)!r} has probability 0")
    return _build([table.names[i] for i in rest], [table.alphabets[i] for i in rest],
                  {o: p / mass for o, p in pmf.items()})


def conditional_support(table: JointTable, anchor: tuple[str, Hashable], of: str) -> frozenset:
    """Values of ``of`` that co-occur with the anchor value with positive probability."""
    name, value = anchor
    a, j = table.index(name), table.index(of)
    out = frozenset(o[j] for o in table.pmf if o[a] == value)
    if not out:
        raise ZeroProbabilityEvidence(f"{name}={value!r} has probability 0")
    return out


def splice(parts: Sequence[Hashable], single_char: bool) -> str:
    # plain concatenation is only injective when every component is one character
    return "".join(map(str, parts)) if single_char else "|".join(map(str, parts))


def group(
    table: JointTable,
    blocks: Mapping[str, Sequence[str]],
    allow_overlap: bool = False,
) -> JointTable:
    """Replace the variables by composites spliced from their components.

    ``blocks`` maps each composite name to its ordered component names. By
    default the blocks must partition the variables. With ``allow_overlap``
    they only need to cover them, so a component may feed several composites
    (this is how the macro variables of the XOR cases are assembled).
    """
    seen: list[str] = []
    for comp, members in blocks.items():
        if not members:
            raise NotAPartition(f"block {comp!r} is empty")
        table.indices(members)
        if len(set(members)) != len(members):
            raise NotAPartition(f"block {comp!r} repeats a variable")
        seen.extend(members)
    if set(seen) != set(table.names):
        missing = sorted(set(table.names) - set(seen))
        raise NotAPartition(f"blocks do not cover variables {missing}")
    if not allow_overlap and len(seen) != len(set(seen)):
        raise NotAPartition("blocks overlap; pass allow_overlap=True to splice shared components")

    layout = []
    for comp, members in blocks.items():
        idx = table.indices(members)
        single = all(len(str(s)) == 1 for i in idx for s in table.alphabets[i])
        layout.append((idx, single))
    pmf: dict = defaultdict(float)
    for o, p in table.pmf.items():
        pmf[tuple(splice([o[i] for i in idx], single) for idx, single in layout)] += p
    return _build(list(blocks), [_ordered(o[k] for o in pmf) for k in range(len(layout))], pmf)


def with_derived(table: JointTable, name: str, fn: Callable[..., Any], inputs: Sequence[str]) -> JointTable:
    """Append a variable computed deterministically from ``inputs``."""
    if name in table.names:
        raise ArityMismatch(f"variable {name!r} already exists")
    idx = table.indices(inputs)
    pmf = {o + (fn(*(o[i] for i in idx)),): p for o, p in table.pmf.items()}
    values = _ordered(o[-1] for o in pmf)
    return _build(table.names + (name,), table.alphabets + (values,), pmf)


def rename_values(table: JointTable, mapping: Mapping[str, Mapping[Hashable, Hashable]]) -> JointTable:
    """Apply per-variable bijective symbol renaming."""
    maps = [mapping.get(n, {}) for n in table.names]
    pmf = {tuple(m.get(v, v) for m, v in zip(maps, o)): p for o, p in table.pmf.items()}
    if len(pmf) != len(table.pmf):
        raise ArityMismatch("renaming is not injective")
    return _build(table.names, [_ordered(m.get(v, v) for v in a) for m, a in zip(maps, table.alphabets)], pmf)


def reorder(table: JointTable, names: Sequence[str]) -> JointTable:
    idx = table.indices(names)
    if sorted(idx) != list(range(len(table))):
        raise ArityMismatch("reorder needs a permutation of all variables")
    pmf = {tuple(o[i] for i in idx): p for o, p in table.pmf.items()}
    return _build([table.names[i] for i in idx], [table.alphabets[i] for i in idx], pmf)
