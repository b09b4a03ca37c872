import pytest

from helpers import macro_rows, random_tables
from sid import blocks, cases
from sid.atoms import pair
from sid.errors import NotThreeVariables, ZeroProbabilityEvidence
from sid.oracle import solve_atoms_oracle

TOL = 1e-9


def scan_syn_block(rows, anchor_value):
    """Exhaustive block scan over explicit rows, anchor in column 0."""
    s2 = {r[1] for r in rows if r[0] == anchor_value}
    s3 = {r[2] for r in rows if r[0] == anchor_value}
    return {r for r in rows if r[0] != anchor_value and r[1] in s2 and r[2] in s3}


def test_case2_blocks():
    rep = blocks.classify_blocks(cases.generate_case(2), ("X1", "0000"))
    assert len(rep.yellow) == 4
    assert rep.syn_blocks and rep.unique_blocks["X2"] and rep.unique_blocks["X4"]
    assert rep.syn_blocks == scan_syn_block(macro_rows(["X1", "X2", "X4"]), "0000")


def test_case1_has_no_syn_block():
    assert scan_syn_block(macro_rows(["X1", "X2", "X3"]), "0000") == set()
    rep = blocks.classify_blocks(cases.generate_case(1), ("X1", "0000"))
    assert rep.syn_blocks == frozenset()


def test_copy_triple_blocks():
    rep = blocks.classify_blocks(cases.fixture("copy_triple"), ("X1", "0"))
    assert rep.yellow == {("0", "0", "0")}
    assert not rep.syn_blocks
    assert not any(rep.unique_blocks.values())


def test_block_sets_disjoint_and_in_support():
    for t in [cases.generate_case(n) for n in (1, 2, 3, 4)] + random_tables(20, seed=8):
        for value in {o[0] for o in t.pmf}:
            rep = blocks.classify_blocks(t, ("X1", value))
            sets = [rep.yellow, rep.syn_blocks, *rep.unique_blocks.values()]
            for i, a in enumerate(sets):
                assert a <= t.support
                for b in sets[i + 1:]:
                    assert not a & b
            assert rep.syn_witnesses <= rep.syn_blocks


def test_classify_errors():
    with pytest.raises(ZeroProbabilityEvidence):
        blocks.classify_blocks(cases.generate_case(1), ("X1", "zzzz"))
    with pytest.raises(NotThreeVariables):
        blocks.classify_blocks(cases.combined_table(), ("X1", "0000"))


def test_positivity_case3_and_case1():
    v3 = blocks.positivity(cases.generate_case(3), "X1")
    assert v3.syn_positive and not any(v3.un_positive.values())
    v1 = blocks.positivity(cases.generate_case(1), "X1")
    assert not v1.syn_positive and all(v1.un_positive.values())


def test_positivity_disambiguation_fixture():
    v = blocks.positivity(cases.fixture("partial_copy"), "X1")
    assert v.un_positive[pair("X1", "X2")] is True
    assert v.un_positive[pair("X1", "X3")] is False
    a = solve_atoms_oracle(cases.fixture("partial_copy"))
    assert a.un_of("X1", "X2") == pytest.approx(1.0, abs=TOL)
    assert a.un_of("X1", "X3") == pytest.approx(0.0, abs=TOL)


def test_literal_syn_rule_fires_on_external_noise():
    # the unrefined rule sees blocks on independent bits although Syn = 0
    v = blocks.positivity(cases.fixture("independent_bits"), "X1")
    assert v.syn_blocks_present and not v.syn_positive


@pytest.mark.parametrize("n,expected", [(1, 0.0), (2, 1.0), (3, 2.0), (4, 2.0)])
def test_synergy_formula_cases(n, expected):
    t = cases.generate_case(n)
    assert blocks.synergy_formula(t, "X1") == pytest.approx(expected, abs=TOL)
    # uniform construction: every support point has the same log factor
    factors = set(blocks.formula_breakdown(t, "X1")["factors"].values())
    assert len(factors) == 1
    assert factors.pop() == pytest.approx(expected, abs=TOL)


def test_synergy_formula_breakdown_sums():
    t = cases.generate_case(2)
    br = blocks.formula_breakdown(t, "X1")
    assert len(br["per_value"]) == 16
    assert sum(br["per_value"].values()) == pytest.approx(1.0, abs=TOL)


@pytest.mark.parametrize("name,expected", [("xor_triple", 1.0), ("copy_triple", 0.0),
                                           ("independent_bits", 0.0), ("partial_copy", 0.0)])
def test_synergy_formula_fixtures(name, expected):
    assert blocks.synergy_formula(cases.fixture(name)) == pytest.approx(expected, abs=TOL)


def test_positivity_anchor_directions_agree_on_fixtures():
    for t in [cases.generate_case(n) for n in (1, 2, 3, 4)] + [cases.fixture(f) for f in cases.FIXTURES]:
        assert blocks.positivity_all(t)["disagreements"] == []
