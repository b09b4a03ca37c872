"""Independent oracles and random table generators for the test suite.

Nothing here goes through ``sid.table`` or ``sid.shannon``: the case systems
are rebuilt from integer bit arithmetic and entropies are counted directly
over explicit row lists.
"""
import math
import random
from collections import Counter

from sid.table import from_pmf

MACRO_BITS = {
    # index of each micro/derived bit inside the 10-bit word abcdefghij
    "X1": "abcd", "X2": "abef", "X3": "cdef", "X4": "aceh", "X5": "abgh", "X6": "abij",
}


def micro_rows():
    """All 64 assignments as dicts, computed from the integer 0..63."""
    rows = []
    for w in range(64):
        bit = {name: (w >> (5 - k)) & 1 for k, name in enumerate("abcdef")}
        bit["g"] = (bit["c"] + bit["e"]) % 2
        bit["h"] = (bit["d"] + bit["f"]) % 2
        bit["i"] = (bit["c"] + bit["f"]) % 2
        bit["j"] = (bit["d"] + bit["e"]) % 2
        rows.append(bit)
    return rows


def macro_rows(names):
    return [tuple("".join(str(b[c]) for c in MACRO_BITS[n]) for n in names) for b in micro_rows()]


def brute_entropy(rows, cols, weights=None):
    """Entropy in bits of the columns ``cols`` of equiprobable (or weighted) rows."""
    weights = weights or [1.0 / len(rows)] * len(rows)
    c = Counter()
    for r, w in zip(rows, weights):
        c[tuple(r[k] for k in cols)] += w
    return -sum(p * math.log2(p) for p in c.values() if p > 0)


def brute_cond_entropy(rows, of, given, weights=None):
    return brute_entropy(rows, of + given, weights) - brute_entropy(rows, given, weights)


def brute_mi(rows, a, b, weights=None):
    return brute_entropy(rows, a, weights) + brute_entropy(rows, b, weights) - brute_entropy(rows, a + b, weights)


def brute_cmi(rows, a, b, c, weights=None):
    return brute_cond_entropy(rows, a, c, weights) - brute_cond_entropy(rows, a, b + c, weights)


# --- random dyadic tables ---------------------------------------------------

def dyadic_weights(k, units, rng):
    """``units`` (a power of two) probability quanta thrown into ``k`` cells."""
    cells = [0] * k
    for _ in range(units):
        cells[rng.randrange(k)] += 1
    return [c / units for c in cells]


def random_table(rng, max_alphabet=4, units=32):
    sizes = [rng.randint(2, max_alphabet) for _ in range(3)]
    cells = [(str(x), str(y), str(z)) for x in range(sizes[0]) for y in range(sizes[1]) for z in range(sizes[2])]
    w = dyadic_weights(len(cells), units, rng)
    return from_pmf([(c, p) for c, p in zip(cells, w) if p > 0])


def random_tables(n, seed, **kw):
    rng = random.Random(seed)
    return [random_table(rng, **kw) for _ in range(n)]


def random_zero_mi_table(rng, max_alphabet=4):
    """X1, X2 independent; X3 drawn from a random conditional given (X1, X2)."""
    n1, n2, n3 = (rng.randint(2, max_alphabet) for _ in range(3))
    p1, p2 = dyadic_weights(n1, 8, rng), dyadic_weights(n2, 8, rng)
    ent = {}
    for x1 in range(n1):
        for x2 in range(n2):
            if p1[x1] * p2[x2] == 0:
                continue
            for x3, q in enumerate(dyadic_weights(n3, 4, rng)):
                if q:
                    ent[(str(x1), str(x2), str(x3))] = p1[x1] * p2[x2] * q
    return from_pmf(ent)


def random_zero_ce_table(rng, max_alphabet=4):
    """X1 = f(X2) for a random f; X3 drawn from a random conditional given X2."""
    n2, n3 = rng.randint(2, max_alphabet), rng.randint(2, max_alphabet)
    f = [rng.randrange(rng.randint(1, n2)) for _ in range(n2)]
    p2 = dyadic_weights(n2, 16, rng)
    ent = {}
    for x2, p in enumerate(p2):
        if not p:
            continue
        for x3, q in enumerate(dyadic_weights(n3, 8, rng)):
            if q:
                key = (str(f[x2]), str(x2), str(x3))
                ent[key] = ent.get(key, 0.0) + p * q
    return from_pmf(ent)


def random_common_part_table(rng, max_alphabet=4, units=32):
    """Sources X1, X2 whose values fall into 2..4 shared blocks; X3 free.

    Support only pairs values from the same block, so the common part of
    (X1, X2) has at least two labels.
    """
    k = rng.randint(2, 4)
    n1, n2 = (rng.randint(k, k + max_alphabet) for _ in range(2))
    b1 = [i % k for i in range(n1)]
    b2 = [i % k for i in range(n2)]
    n3 = rng.randint(2, max_alphabet)
    cells = [(str(x), str(y), str(z)) for x in range(n1) for y in range(n2) for z in range(n3) if b1[x] == b2[y]]
    w = dyadic_weights(len(cells), units, rng)
    return from_pmf([(c, p) for c, p in zip(cells, w) if p > 0])
