"""Shared fixtures-in-code for the test suite.

Known presentations, independently derived reference values, and the two
published subgroup tables that the acceptance criteria reproduce.  Values
tagged [DERIVED] were computed by the brute-force oracle in ``oracle.py``
(or by hand) and frozen here; values tagged [PAPER] come from the published
tables; [TRIVIAL] facts are asserted directly.
"""

from __future__ import annotations

import numpy as np

from pgroups.presentation import PcPresentation
from pgroups.pcbuild import pc_presentation_of
from pgroups.table import TableGroup


# -- small named groups -------------------------------------------------------

def dihedral8() -> PcPresentation:
    return PcPresentation(2, 3, {1: (0, 0, 1)}, {(1, 0): (0, 0, 1)})


def quaternion8() -> PcPresentation:
    return PcPresentation(2, 3, {0: (0, 0, 1), 1: (0, 0, 1)},
                          {(1, 0): (0, 0, 1)})


def cyclic(p: int, n: int) -> PcPresentation:
    pw = {i: tuple(1 if k == i + 1 else 0 for k in range(n))
          for i in range(n - 1)}
    return PcPresentation(p, n, pw, {})


def elementary_abelian(p: int, n: int) -> PcPresentation:
    return PcPresentation(p, n, {}, {})


def heisenberg(p: int) -> PcPresentation:
    """Nonabelian group of order p^3 and exponent p (p odd)."""
    return PcPresentation(p, 3, {}, {(1, 0): (0, 0, 1)})


def extraspecial_p2(p: int) -> PcPresentation:
    """Nonabelian group of order p^3 and exponent p^2 (p odd)."""
    return PcPresentation(p, 3, {0: (0, 0, 1)}, {(1, 0): (0, 0, 1)})


# -- oracle bridge ------------------------------------------------------------

def oracle_to_presentation(og, p: int) -> PcPresentation:
    """A pc-presentation of a brute-force oracle group."""
    tg = TableGroup(np.asarray(og.table), p=p)
    return pc_presentation_of(tg)


# -- frozen reference values --------------------------------------------------

# [DERIVED] conjugacy class data (size, element order), sorted.
D8_CLASSES = [(1, 1), (1, 2), (2, 2), (2, 2), (2, 4)]
Q8_CLASSES = [(1, 1), (1, 2), (2, 4), (2, 4), (2, 4)]

# [DERIVED] automorphism group orders.
AUT_ORDERS = {"D8": 8, "Q8": 24, "C2^3": 168}

# [DERIVED] complete counts from the brute-force oracle (orders 8 and 16)
# and [PAPER] counts for the larger orders.
GROUP_COUNTS = {(2, 3): 5, (2, 4): 14, (2, 5): 51, (2, 6): 267,
                (3, 4): 15, (5, 4): 15}

# [PAPER] census shapes: no sibling tuples at 2^4, 2^5, 3^4; exactly one
# pair at 5^4, and that pair is {G_1, G_v} from the order-p^4 family.
EMPTY_CENSUS_ORDERS = [(2, 4), (2, 5), (3, 4)]


# -- published subgroup tables ------------------------------------------------

def _abelian_label(invariants: tuple) -> str:
    return "A" + "x".join(str(q) for q in sorted(invariants, reverse=True))


def subgroup_type_label(sub_pres: PcPresentation) -> str:
    """A readable isomorphism-type label, complete for the orders that occur
    in the published tables (up to p^4 subgroups of the studied groups)."""
    from pgroups.structure import abelian_invariants, rank
    from pgroups.structure import element_order_multiset
    inv = tuple(abelian_invariants(sub_pres))
    p = sub_pres.p
    order = sub_pres.order
    total = 1
    for q in inv:
        total *= q
    if total == order:
        return _abelian_label(inv) if inv else "1"
    exponent = max(element_order_multiset(sub_pres))
    if order == p ** 3:
        # nonabelian of order p^3: exponent separates the two types (p odd)
        return "Heis" if exponent == p else "ExSpec-p2"
    if order == p ** 4:
        # the two nonabelian order-p^4 types occurring in the Tuple-2 table:
        # rank 3, exponent p (central product type) vs rank 2 maximal class
        return f"p4-rank{rank(sub_pres)}-exp{exponent}"
    raise AssertionError(f"unclassified subgroup of order {order}")


def theorem1_expected_rows(p: int) -> list[tuple[str, int, int]]:
    """[PAPER] proper nontrivial subgroup classes of G_x, order p^4, as
    (type label, class length, number of classes)."""
    cp, cp2 = _abelian_label((p,)), _abelian_label((p * p,))
    cpcp = _abelian_label((p, p))
    cp2cp = _abelian_label((p * p, p))
    rows = [
        (cp, 1, 1), (cp, p, 1), (cp, p * p, 1),
        (cpcp, 1, 1), (cpcp, p, 1),
        (cp2, p, p - 1), (cp2, p, 1),
        (cp2cp, 1, 1),
        ("Heis", 1, 1),
        ("ExSpec-p2", 1, p - 1),
    ]
    return _merge_rows(rows)


def tuple2_expected_rows(p: int) -> list[tuple[str, int, int]]:
    """[PAPER] proper nontrivial subgroup classes of the Tuple-2 groups,
    order p^5, as (type label, class length, number of classes)."""
    cp, cp2 = _abelian_label((p,)), _abelian_label((p * p,))
    cpcp = _abelian_label((p, p))
    cp3 = _abelian_label((p, p, p))
    rows = [
        (cp, 1, 1), (cp, p, 1), (cp, p * p, 1), (cp, p * p, p),
        (cpcp, 1, 1), (cpcp, p, 1), (cpcp, p * p, 1),
        (cpcp, p, p), (cpcp, p * p, p),
        (cp2, p * p, p),
        (cp3, 1, 1), (cp3, p, 1),
        ("Heis", p, p),
        ("ExSpec-p2", p, p),
        (f"p4-rank3-exp{p}", 1, 1),
        (f"p4-rank2-exp{p * p}", 1, p),
    ]
    return _merge_rows(rows)


def _merge_rows(rows):
    merged: dict[tuple[str, int], int] = {}
    for label, length, count in rows:
        merged[(label, length)] = merged.get((label, length), 0) + count
    return sorted((lab, ln, ct) for (lab, ln), ct in merged.items())


def observed_subgroup_rows(G: PcPresentation) -> list[tuple[str, int, int]]:
    """The (type label, class length, class count) rows actually computed,
    over the proper nontrivial subgroups of G."""
    from pgroups.structure import subgroup_conjugacy_classes, table_of
    from pgroups.pcbuild import subgroup_presentation
    tg = table_of(G)
    rows: dict[tuple[str, int], int] = {}
    for sub, length in subgroup_conjugacy_classes(G):
        if sub.order in (1, G.order):
            continue
        sp = subgroup_presentation(tg, sub.elements)
        key = (subgroup_type_label(sp), length)
        rows[key] = rows.get(key, 0) + 1
    return sorted((lab, ln, ct) for (lab, ln), ct in rows.items())
