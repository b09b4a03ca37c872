"""The four XOR case systems and a few small reference fixtures.

Six independent fair bits ``a..f`` are combined into XOR bits

    g = c^e,  h = d^f,  i = c^f,  j = d^e

and spliced into 4-bit macro variables. Case ``n`` is the system
``(X1, X2, X_{n+2})``; every case has 64 equiprobable outcomes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .atoms import AtomSet, pair
from .errors import InvalidCaseNumber, UnknownFixture
from .table import JointTable, from_pmf, uniform

MICRO_BITS = ("a", "b", "c", "d", "e", "f")

DERIVED_BITS = (
    ("g", ("c", "e")),
    ("h", ("d", "f")),
    ("i", ("c", "f")),
    ("j", ("d", "e")),
)

MACROS = (
    ("X1", ("a", "b", "c", "d")),
    ("X2", ("a", "b", "e", "f")),
    ("X3", ("c", "d", "e", "f")),
    ("X4", ("a", "c", "e", "h")),
    ("X5", ("a", "b", "g", "h")),
    ("X6", ("a", "b", "i", "j")),
)


@dataclass(frozen=True)
class CaseSpec:
    micro_bits: tuple
    derived_bits: tuple
    macros: tuple

    def __post_init__(self):
        known = set(self.micro_bits)
        for name, (x, y) in self.derived_bits:
            if x not in known or y not in known:
                raise ValueError(f"derived bit {name} references undefined bits")
            known.add(name)
        for name, bits in self.macros:
            if not set(bits) <= known:
                raise ValueError(f"macro {name} references undefined bits")

    def assignments(self):
        """Yield one ``{bit: 0/1}`` dict per micro-bit assignment, 2**6 in total."""
        for values in product((0, 1), repeat=len(self.micro_bits)):
            bits = dict(zip(self.micro_bits, values))
            for name, (x, y) in self.derived_bits:
                bits[name] = bits[x] ^ bits[y]
            yield bits

    def macro_value(self, name: str, bits: dict) -> str:
        return "".join(str(bits[b]) for b in dict(self.macros)[name])


CASES = CaseSpec(MICRO_BITS, DERIVED_BITS, MACROS)

CASE_VARIABLES = {n: ("X1", "X2", f"X{n + 2}") for n in (1, 2, 3, 4)}


def _check_case(n) -> int:
    if n not in CASE_VARIABLES:
        raise InvalidCaseNumber(f"case must be one of 1..4, got {n!r}")
    return n


def macro_table(names=tuple(m for m, _ in MACROS), spec: CaseSpec = CASES) -> JointTable:
    rows = [tuple(spec.macro_value(n, bits) for n in names) for bits in spec.assignments()]
    return uniform(rows, names=names)


def generate_case(n: int) -> JointTable:
    return macro_table(CASE_VARIABLES[_check_case(n)])


def combined_table() -> JointTable:
    """All six macro variables X1..X6 over the 64 micro assignments."""
    return macro_table()


def micro_table(derived: bool = False) -> JointTable:
    names = MICRO_BITS + (tuple(n for n, _ in DERIVED_BITS) if derived else ())
    rows = [tuple(str(bits[k]) for k in names) for bits in CASES.assignments()]
    return uniform(rows, names=names)


_GOLDEN = {
    1: (0.0, 2.0, 0.0),
    2: (1.0, 1.0, 1.0),
    3: (2.0, 0.0, 2.0),
    4: (2.0, 0.0, 2.0),
}


def golden_atoms(n: int) -> AtomSet:
    """Published atoms (red, every un, syn); external information is 0 in all cases."""
    red, un, syn = _GOLDEN[_check_case(n)]
    names = CASE_VARIABLES[n]
    pairs = {pair(a, b): un for a, b in ((names[0], names[1]), (names[0], names[2]), (names[1], names[2]))}
    return AtomSet(names, red, pairs, syn, {v: 0.0 for v in names}, method="supplied")


def _bits(fn, n_free):
    return [tuple(str(v) for v in fn(*bits)) for bits in product((0, 1), repeat=n_free)]


FIXTURES = {
    "xor_triple": lambda: uniform(_bits(lambda x, y: (x, y, x ^ y), 2)),
    "copy_triple": lambda: uniform(_bits(lambda x: (x, x, x), 1)),
    "independent_bits": lambda: uniform(_bits(lambda x, y, z: (x, y, z), 3)),
    "partial_copy": lambda: uniform(_bits(lambda a, b, c: (f"{a}{b}", b, c), 3)),
}


def fixture(name: str) -> JointTable:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None


def point_mass(names=("X1", "X2", "X3"), outcome=("0", "0", "0")) -> JointTable:
    return from_pmf({tuple(outcome): 1.0}, names=names)
