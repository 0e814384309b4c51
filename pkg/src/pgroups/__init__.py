"""Finite p-group engine.

Power-commutator presentations with consistency checking, structural
computations, canonical codes, isomorphism/automorphism/isoclinism testing,
sibling fingerprints, exact character tables with Brauer-pair and twin
testing, small-group catalogs via central extensions, and decision-tree
identification.
"""

from .presentation import (PcPresentation, PresentationError,
                           check_consistency, format_presentation,
                           parse_presentation)
from .table import TableGroup, SizeBoundError, MAX_TABLE_ORDER
from .pcbuild import (pc_presentation_of, quotient_presentation,
                      random_presentation, subgroup_presentation)
from .structure import (Subgroup, abelian_invariants, center,
                        central_cyclic_subgroups, conjugacy_classes,
                        derived_series_abelian_invariants, derived_subgroup,
                        element_order_multiset, frattini_subgroup,
                        maximal_subgroups, normal_subgroups, quotient, rank,
                        series, subgroup_conjugacy_classes, table_of)
from .canonical import CanonicalCode, canonical_code, canonical_code_of_table
from .isomorphism import (BudgetExceeded, Isomorphism, automorphism_order,
                          is_isomorphic, isoclinic, outer_equivalent,
                          random_iso_test, table_isomorphic)
from .fingerprint import (Identifier, SiblingFingerprint, are_siblings,
                          census_report, factor_fingerprint, group_id,
                          sibling_census, sibling_fingerprint,
                          subgroup_fingerprint)
from .cyclotomic import Cyc
from .chartab import (CharacterTable, are_twins, brauer_pair,
                      character_table, char_tables_equivalent,
                      check_orthogonality, power_map, table_from_text,
                      table_to_text)
from .catalog import (Catalog, CatalogEntry, CatalogError, FamilySpec,
                      SizeError, central_extensions, enumerate_groups,
                      family_parameters, feasible, load_catalog, paper_family,
                      save_catalog)
from .idtree import (DecisionTree, TreeIntegrityError, build_tree,
                     cluster_partition, cube_map_cycle_type, identify,
                     invariant_step, load_tree, refine_by_power,
                     serialize_tree)

__version__ = "0.1.0"

__all__ = [
    "PcPresentation", "PresentationError", "check_consistency",
    "format_presentation", "parse_presentation",
    "TableGroup", "SizeBoundError", "MAX_TABLE_ORDER",
    "pc_presentation_of", "quotient_presentation", "random_presentation",
    "subgroup_presentation",
    "Subgroup", "abelian_invariants", "center", "central_cyclic_subgroups",
    "conjugacy_classes", "derived_series_abelian_invariants",
    "derived_subgroup", "element_order_multiset", "frattini_subgroup",
    "maximal_subgroups", "normal_subgroups", "quotient", "rank", "series",
    "subgroup_conjugacy_classes", "table_of",
    "CanonicalCode", "canonical_code", "canonical_code_of_table",
    "BudgetExceeded", "Isomorphism", "automorphism_order", "is_isomorphic",
    "isoclinic", "outer_equivalent", "random_iso_test", "table_isomorphic",
    "Identifier", "SiblingFingerprint", "are_siblings", "census_report",
    "factor_fingerprint", "group_id", "sibling_census", "sibling_fingerprint",
    "subgroup_fingerprint",
    "Cyc",
    "CharacterTable", "are_twins", "brauer_pair", "character_table",
    "char_tables_equivalent", "check_orthogonality", "power_map",
    "table_from_text", "table_to_text",
    "Catalog", "CatalogEntry", "CatalogError", "FamilySpec", "SizeError",
    "central_extensions", "enumerate_groups", "family_parameters", "feasible",
    "load_catalog", "paper_family", "save_catalog",
    "DecisionTree", "TreeIntegrityError", "build_tree", "cluster_partition",
    "cube_map_cycle_type", "identify", "invariant_step", "load_tree",
    "refine_by_power", "serialize_tree",
]
