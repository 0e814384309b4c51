"""Acceptance gate: one test (and one printed verdict line) per criterion.

Each test prints ``acceptance criterion N (<name>): PASS|FAIL`` through the
terminal reporter so the verdicts are visible in a captured pytest run.
Criterion 9 (order-2^7 catalog) is an optional stretch goal and only runs
when PGROUPS_STRETCH=1 is set.
"""

import os
import random

import pytest

import known
from pgroups.canonical import canonical_code_of_table
from pgroups.catalog import FamilySpec, enumerate_groups, family_parameters, \
    paper_family
from pgroups.chartab import (are_twins, brauer_pair, character_table,
                             char_tables_equivalent, check_orthogonality)
from pgroups.fingerprint import sibling_census, sibling_fingerprint
from pgroups.idtree import evaluate_step, identify, pipeline_labels
from pgroups.isomorphism import is_isomorphic
from pgroups.pcbuild import random_presentation
from pgroups.structure import table_of


def _verdict(report, num, name, fn):
    try:
        fn()
    except BaseException:
        report(f"acceptance criterion {num} ({name}): FAIL")
        raise
    report(f"acceptance criterion {num} ({name}): PASS")


def test_criterion_1_catalog_counts(report, catalog_entries):
    def run():
        for (p, n), count in known.GROUP_COUNTS.items():
            assert len(catalog_entries(p, n)) == count, (p, n)

    _verdict(report, 1, "catalog counts", run)


def test_criterion_2_sibling_censuses(report, catalog_entries):
    def run():
        for p, n in known.EMPTY_CENSUS_ORDERS:
            ent = catalog_entries(p, n)
            assert sibling_census([e.presentation for e in ent]) == []
        ent = catalog_entries(5, 4)
        buckets = sibling_census([e.presentation for e in ent])
        assert len(buckets) == 1 and len(buckets[0]) == 2
        # the unique pair is {G_1, G_v} from the order-p^4 family
        by_code = {e.code: e.index for e in ent}
        family_idx = sorted(
            by_code[canonical_code_of_table(table_of(
                paper_family(FamilySpec("theorem1_Gx", 5, x))))]
            for x in family_parameters("theorem1_Gx", 5))
        assert buckets[0] == family_idx

    _verdict(report, 2, "sibling censuses", run)


def test_criterion_3_order_p4_table(report):
    def run():
        for p in (5, 7):
            expected = known.theorem1_expected_rows(p)
            members = [paper_family(FamilySpec("theorem1_Gx", p, x))
                       for x in family_parameters("theorem1_Gx", p)]
            for G in members:
                assert known.observed_subgroup_rows(G) == expected
            G1, Gv = members
            assert sibling_fingerprint(G1) == sibling_fingerprint(Gv)
            assert is_isomorphic(G1, Gv) is None

    _verdict(report, 3, "order-p^4 subgroup table", run)


def test_criterion_4_order_p5_table(report):
    def run():
        expected = known.tuple2_expected_rows(5)
        v = family_parameters("tuple2", 5)[0]
        members = [paper_family(FamilySpec("tuple2", 5, w))
                   for w in (v, pow(v, 2, 5))]
        fps, codes = [], []
        for G in members:
            assert known.observed_subgroup_rows(G) == expected
            fps.append(sibling_fingerprint(G))
            codes.append(canonical_code_of_table(table_of(G)))
        assert fps[0] == fps[1]
        assert codes[0] != codes[1]   # non-isomorphic

    _verdict(report, 4, "order-p^5 subgroup table", run)


def test_criterion_5_brauer_twin_verdicts(report):
    def run():
        D8, Q8 = known.dihedral8(), known.quaternion8()
        assert char_tables_equivalent(D8, Q8) is not None
        assert brauer_pair(D8, Q8) is None
        v = family_parameters("tuple2", 5)[0]
        t2 = [paper_family(FamilySpec("tuple2", 5, w))
              for w in (v, pow(v, 2, 5))]
        assert brauer_pair(*t2) is not None
        assert are_twins(*t2)
        t1 = [paper_family(FamilySpec("tuple1", 5, w))
              for w in family_parameters("tuple1", 5)]
        assert brauer_pair(*t1) is not None
        assert not are_twins(*t1)

    _verdict(report, 5, "Brauer/twin verdicts", run)


def test_criterion_6_character_tables(report, catalog_entries):
    def run():
        groups = []
        for p, n in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
                     (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)]:
            groups += [e.presentation for e in catalog_entries(p, n)]
        for p in (11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61):
            groups.append(known.cyclic(p, 1))
        for fam in ("tuple1", "tuple2", "tuple3"):
            for w in family_parameters(fam, 5):
                groups.append(paper_family(FamilySpec(fam, 5, w)))
        for G in groups:
            ct = character_table(G)
            assert sum(d * d for d in ct.degrees) == G.order
            assert check_orthogonality(ct)

    _verdict(report, 6, "exact character tables", run)


def test_criterion_7_identification_round_trip(report, catalog_entries,
                                               tree_of):
    def run():
        for p, n in [(2, 4), (2, 5), (2, 6), (3, 4), (5, 4)]:
            tree = tree_of(p, n)
            for e in catalog_entries(p, n):
                rng = random.Random(1000 * p + n + e.index)
                for _ in range(10):
                    G = random_presentation(e.presentation, rng)
                    assert identify(tree, G) == e.index, (p, n, e.index)

    _verdict(report, 7, "identification round-trip", run)


def test_criterion_8_invariance_suite(report, catalog_entries):
    def run():
        for p, n in [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
                     (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)]:
            labels = pipeline_labels(p, n)
            for e in catalog_entries(p, n):
                G = e.presentation
                base_fp = sibling_fingerprint(G)
                base_steps = [evaluate_step(G, lab).key() for lab in labels]
                rng = random.Random(e.order * 100 + e.index)
                for _ in range(20):
                    H = random_presentation(G, rng)
                    assert sibling_fingerprint(H) == base_fp, (p, n, e.index)
                    assert [evaluate_step(H, lab).key()
                            for lab in labels] == base_steps, (p, n, e.index)

    _verdict(report, 8, "re-presentation invariance", run)


@pytest.mark.skipif(os.environ.get("PGROUPS_STRETCH") != "1",
                    reason="optional stretch criterion; set PGROUPS_STRETCH=1")
def test_criterion_9_order_128_catalog(report):
    def run():
        ent = enumerate_groups(2, 7, allow_long=True)
        assert len(ent) == 2328
        buckets = sibling_census([e.presentation for e in ent])
        assert len(buckets) == 3
        assert all(len(b) == 2 for b in buckets)
        for bucket in buckets:
            a = ent[bucket[0] - 1].presentation
            b = ent[bucket[1] - 1].presentation
            assert not are_twins(a, b)

    _verdict(report, 9, "order-2^7 catalog (stretch)", run)
