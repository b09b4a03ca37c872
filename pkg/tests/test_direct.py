import itertools
import random

import pytest

from helpers import random_zero_mi_table
from sid import cases, shannon
from sid.atoms import residuals
from sid.direct import try_direct
from sid.errors import NotThreeVariables
from sid.oracle import solve_atoms_oracle
from sid.table import uniform

TOL = 1e-9


def test_xor_triple():
    a = try_direct(cases.fixture("xor_triple"))
    assert a.method == "direct"
    assert a.red == 0.0
    assert all(abs(v) < TOL for v in a.un.values())
    assert a.syn == pytest.approx(1.0, abs=TOL)
    assert all(abs(v) < TOL for v in a.ext.values())


def test_first_bit_system():
    # X1 two bits, X2 its first bit, X3 an independent bit
    t = uniform([(f"{a}{b}", str(a), str(c)) for a, b, c in itertools.product((0, 1), repeat=3)])
    assert shannon.conditional_entropy(t, "X2", "X1") == 0.0
    a = try_direct(t)
    assert a.syn == pytest.approx(0.0, abs=TOL)
    assert a.red == pytest.approx(0.0, abs=TOL)
    assert a.un_of("X2", "X3") == pytest.approx(0.0, abs=TOL)
    assert a.un_of("X1", "X2") == pytest.approx(1.0, abs=TOL)
    assert a.un_of("X1", "X3") == pytest.approx(0.0, abs=TOL)
    assert a.ext["X1"] == pytest.approx(1.0, abs=TOL)
    assert a.ext["X3"] == pytest.approx(1.0, abs=TOL)
    assert a.ext["X2"] == pytest.approx(0.0, abs=TOL)


def test_case3_not_applicable():
    assert try_direct(cases.generate_case(3)) is None


def test_copy_triple_uses_conditional_branch():
    a = try_direct(cases.fixture("copy_triple"))
    assert a.red == pytest.approx(1.0, abs=TOL)
    assert a.syn == pytest.approx(0.0, abs=TOL)


def test_not_three_variables():
    with pytest.raises(NotThreeVariables):
        try_direct(cases.combined_table())


@pytest.mark.parametrize("name", sorted(cases.FIXTURES))
def test_direct_results_are_consistent(name):
    t = cases.fixture(name)
    a = try_direct(t)
    assert a is not None
    assert a.violations == ()
    assert all(abs(r) < TOL for r in residuals(t, a).values())
    assert a.values() == pytest.approx(solve_atoms_oracle(t).values(), abs=TOL)


@pytest.mark.parametrize("seed", range(20))
def test_zero_mi_tables_agree_with_oracle(seed):
    t = random_zero_mi_table(random.Random(seed))
    a = try_direct(t)
    assert a is not None and a.violations == ()
    assert all(abs(r) < TOL for r in residuals(t, a).values())
    assert a.values() == pytest.approx(solve_atoms_oracle(t).values(), abs=TOL)
