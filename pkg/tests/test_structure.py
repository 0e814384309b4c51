"""Structural computations checked against the brute-force oracle."""

import pytest

import known
import oracle
from pgroups.pcbuild import pc_presentation_of
from pgroups.structure import (abelian_invariants, center, conjugacy_classes,
                               central_cyclic_subgroups, derived_subgroup,
                               derived_series_abelian_invariants,
                               element_order_multiset, frattini_subgroup,
                               maximal_subgroups, normal_subgroups, quotient,
                               rank, series, table_of)


CASES = [
    ("D8", known.dihedral8, lambda: oracle.dihedral(4)),
    ("Q8", known.quaternion8, oracle.quaternion8),
    ("SD16", lambda: known.oracle_to_presentation(oracle.semidihedral(4), 2),
     lambda: oracle.semidihedral(4)),
    ("H27", lambda: known.heisenberg(3), lambda: oracle.heisenberg(3)),
    ("M27", lambda: known.extraspecial_p2(3), lambda: oracle.modular_group_p(3)),
    ("C4xC4", lambda: known.oracle_to_presentation(
        oracle.direct_product(oracle.cyclic(4), oracle.cyclic(4)), 2),
     lambda: oracle.direct_product(oracle.cyclic(4), oracle.cyclic(4))),
]


@pytest.mark.parametrize("name,build,obuild", CASES, ids=[c[0] for c in CASES])
def test_classes_and_orders_match_oracle(name, build, obuild):
    G, og = build(), obuild()
    assert sorted((c.size, c.element_order) for c in conjugacy_classes(G)) \
        == og.conjugacy_classes()
    assert element_order_multiset(G) == og.order_multiset()


@pytest.mark.parametrize("name,build,obuild", CASES, ids=[c[0] for c in CASES])
def test_center_and_derived_match_oracle(name, build, obuild):
    G, og = build(), obuild()
    assert len(center(G).elements) == og.center_size()
    assert len(derived_subgroup(G).elements) == og.derived_size()


def test_frozen_class_data():
    # [DERIVED] from the oracle, frozen.
    assert sorted((c.size, c.element_order)
                  for c in conjugacy_classes(known.dihedral8())) \
        == known.D8_CLASSES
    assert sorted((c.size, c.element_order)
                  for c in conjugacy_classes(known.quaternion8())) \
        == known.Q8_CLASSES


def test_series_dihedral8():
    G = known.dihedral8()
    lc = series(G, "lower_central")
    assert [len(t.elements) for t in lc.terms] == [8, 2, 1]
    uc = series(G, "upper_central")
    assert [len(t.elements) for t in uc.terms] == [1, 2, 8]
    dv = series(G, "derived")
    assert [len(t.elements) for t in dv.terms] == [8, 2, 1]
    ep = series(G, "lower_exponent_p")
    assert [len(t.elements) for t in ep.terms] == [8, 2, 1]


def test_series_kind_validated():
    with pytest.raises(ValueError):
        series(known.dihedral8(), "nonsense")


def test_rank_and_abelian_invariants():
    assert rank(known.dihedral8()) == 2
    assert rank(known.elementary_abelian(3, 4)) == 4
    assert abelian_invariants(known.cyclic(2, 3)) == [8]
    assert abelian_invariants(known.dihedral8()) == [2, 2]
    assert abelian_invariants(known.quaternion8()) == [2, 2]
    G = known.oracle_to_presentation(
        oracle.direct_product(oracle.cyclic(4), oracle.cyclic(2)), 2)
    assert abelian_invariants(G) == [2, 4]


def test_derived_series_abelian_invariants():
    assert derived_series_abelian_invariants(known.dihedral8()) \
        == [[2, 2], [2], []]
    assert derived_series_abelian_invariants(known.cyclic(3, 2)) == [[9], []]


def test_quotient_of_center():
    G = known.dihedral8()
    Q = quotient(G, center(G))
    assert Q.order == 4
    assert abelian_invariants(Q) == [2, 2]


def test_frattini_subgroup():
    G = known.dihedral8()
    F = frattini_subgroup(G)
    assert len(F.elements) == 2
    assert len(frattini_subgroup(known.elementary_abelian(5, 2)).elements) == 1


def test_maximal_subgroups_count():
    # (p^d - 1)/(p - 1) maximal subgroups for rank d
    assert len(maximal_subgroups(known.dihedral8())) == 3
    assert len(maximal_subgroups(known.elementary_abelian(3, 2))) == 4
    assert len(maximal_subgroups(known.cyclic(7, 2))) == 1


def test_central_cyclic_subgroups():
    # Q8 has a single minimal central subgroup; C2 x C2 has three.
    assert len(central_cyclic_subgroups(known.quaternion8())) == 1
    assert len(central_cyclic_subgroups(known.elementary_abelian(2, 2))) == 3


def test_normal_subgroups_against_oracle():
    G = known.dihedral8()
    og = oracle.dihedral(4)
    oracle_normals = sorted(
        len(s) for s in og.all_subgroups()
        if len(s) > 1 and all(
            frozenset(og.table[og.table[og.inverse[g]][x]][g] for x in s) == s
            for g in range(og.order)))
    assert sorted(len(N.elements) for N in normal_subgroups(G)) \
        == oracle_normals


def test_subgroup_membership_consistency():
    G = known.quaternion8()
    tg = table_of(G)
    for N in normal_subgroups(G):
        elems = set(int(x) for x in N.elements)
        # closed under multiplication
        for a in elems:
            for b in elems:
                assert int(tg.table[a][b]) in elems


def test_oracle_round_trip_presentation():
    og = oracle.sylow2_s8()
    G = known.oracle_to_presentation(og, 2)
    assert G.order == 128
    assert element_order_multiset(G) == og.order_multiset()
