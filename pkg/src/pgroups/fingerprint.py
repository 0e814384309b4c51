"""Sibling fingerprints: subgroup fingerprint (SF), factor fingerprint (FF),
and the combined sibling fingerprint (SS), plus sibling detection and census.

Two non-isomorphic groups are *siblings* when their combined fingerprints
agree: identical multisets of (class length, type) over conjugacy classes of
proper subgroups, identical multisets of proper-quotient types, and matching
types for the Frattini subgroup and the proper terms of the upper and lower
central series.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .presentation import PcPresentation
from .canonical import CanonicalCode, canonical_code_of_table
from .structure import (table_of, subgroup_conjugacy_classes, normal_subgroups,
                        SUBGROUP_ENUM_BOUND)
from .pcbuild import pc_presentation_of


@total_ordering
@dataclass(frozen=True)
class Identifier:
    """Isomorphism-type identifier: a catalog id (order, index) when the
    order is covered by the supplied catalog, else a canonical code."""
    kind: str            # "catalog" or "code"
    value: tuple

    def __lt__(self, other):
        return (self.kind, self.value) < (other.kind, other.value)

    def to_text(self) -> str:
        if self.kind == "catalog":
            return f"{self.value[0]}#{self.value[1]}"
        return "code:" + ",".join(str(x) for x in self.value)


def _identify_table(tg, catalog=None) -> Identifier:
    code = canonical_code_of_table(tg)
    if catalog is not None:
        hit = catalog.lookup(code)
        if hit is not None:
            return Identifier("catalog", tuple(hit))
    return Identifier("code", code.ints)


def group_id(G: PcPresentation, catalog=None) -> Identifier:
    return _identify_table(table_of(G), catalog)


@dataclass(frozen=True)
class SubgroupFingerprint:
    entries: tuple  # sorted (class_length, Identifier)


@dataclass(frozen=True)
class FactorFingerprint:
    entries: tuple  # sorted Identifier


@dataclass(frozen=True)
class SiblingFingerprint:
    sf: SubgroupFingerprint
    ff: FactorFingerprint
    frattini_id: Identifier
    upper_series_ids: tuple
    lower_series_ids: tuple


def subgroup_fingerprint(G: PcPresentation, catalog=None,
                         bound: int = SUBGROUP_ENUM_BOUND) -> SubgroupFingerprint:
    """Sorted (class length, type) pairs over all conjugacy classes of proper
    subgroups, the trivial subgroup included."""
    tg = table_of(G)
    entries = []
    for sub, length in subgroup_conjugacy_classes(G, bound=bound):
        sid = _identify_table(tg.subgroup(sub.elements), catalog)
        entries.append((length, sid))
    entries.sort()
    return SubgroupFingerprint(entries=tuple(entries))


def factor_fingerprint(G: PcPresentation, catalog=None,
                       bound: int = SUBGROUP_ENUM_BOUND) -> FactorFingerprint:
    """Sorted types of G/N over all nontrivial normal subgroups N (N = G
    included, contributing the trivial quotient)."""
    tg = table_of(G)
    entries = []
    for nsub in normal_subgroups(G, bound=bound):
        entries.append(_identify_table(tg.quotient(nsub.elements), catalog))
    entries.sort()
    return FactorFingerprint(entries=tuple(entries))


def sibling_fingerprint(G: PcPresentation, catalog=None,
                        bound: int = SUBGROUP_ENUM_BOUND) -> SiblingFingerprint:
    tg = table_of(G)
    frat = _identify_table(tg.subgroup(tg.frattini_subgroup()), catalog)
    upper = tuple(_identify_table(tg.subgroup(term), catalog)
                  for term in tg.upper_central_series()
                  if 1 < len(term) < tg.size)
    lower = tuple(_identify_table(tg.subgroup(term), catalog)
                  for term in tg.lower_central_series()
                  if 1 < len(term) < tg.size)
    return SiblingFingerprint(
        sf=subgroup_fingerprint(G, catalog, bound),
        ff=factor_fingerprint(G, catalog, bound),
        frattini_id=frat, upper_series_ids=upper, lower_series_ids=lower)


def are_siblings(G: PcPresentation, H: PcPresentation, catalog=None,
                 bound: int = SUBGROUP_ENUM_BOUND) -> bool:
    """True iff G and H are non-isomorphic but share the full fingerprint."""
    if G.order != H.order or G.p != H.p:
        return False
    if canonical_code_of_table(table_of(G)) == canonical_code_of_table(table_of(H)):
        return False
    return (sibling_fingerprint(G, catalog, bound)
            == sibling_fingerprint(H, catalog, bound))


def sibling_census(groups, catalog=None,
                   bound: int = SUBGROUP_ENUM_BOUND) -> list[list[int]]:
    """Bucket the groups (a complete catalog of one order) by fingerprint.

    ``groups`` is a sequence of PcPresentation; returns the buckets of size
    >= 2 as sorted lists of 1-based positions, in deterministic order.
    """
    buckets: dict[int, list[tuple]] = {}
    for pos, G in enumerate(groups, start=1):
        ss = sibling_fingerprint(G, catalog, bound)
        buckets.setdefault(hash(ss), []).append((pos, ss))
    out = []
    for _, members in buckets.items():
        # confirm on hash collision: split by full equality
        groups_eq: list[list[tuple]] = []
        for pos, ss in members:
            for ge in groups_eq:
                if ge[0][1] == ss:
                    ge.append((pos, ss))
                    break
            else:
                groups_eq.append([(pos, ss)])
        for ge in groups_eq:
            if len(ge) >= 2:
                out.append(sorted(p for p, _ in ge))
    out.sort()
    return out


def census_report(order: int, buckets: list[list[int]]) -> str:
    """Stable text report: one line per bucket plus a summary line."""
    lines = [f"{order} {len(b)} " + " ".join(str(i) for i in b) for b in buckets]
    sizes = [len(b) for b in buckets]
    lines.append(f"pairs={sizes.count(2)} triples={sizes.count(3)} "
                 f"quadruples={sizes.count(4)}")
    return "\n".join(lines)
