"""Tour 3: sibling fingerprints and twin groups.

Two non-isomorphic groups are *siblings* when they cannot be told apart by
their subgroup types (with conjugacy-class lengths), their proper quotient
types, the Frattini subgroup, or the upper/lower central series. They are
*twins* when additionally their character tables match including all power
maps (a Brauer pair).

This demo finds the unique sibling pair among the 15 groups of order 5^4,
then exhibits an order-5^5 pair of genuine twins. Takes about a minute.

Run:  python3 demos/03_siblings_and_twins.py
"""

from pgroups import (FamilySpec, are_twins, brauer_pair, census_report,
                     enumerate_groups, family_parameters, is_isomorphic,
                     paper_family, sibling_census, sibling_fingerprint)

print("enumerating the 15 groups of order 5^4 (about 30s) ...")
entries = enumerate_groups(5, 4)
buckets = sibling_census([e.presentation for e in entries])
print("sibling census at order 625:")
print(census_report(625, buckets))

a, b = (entries[i - 1].presentation for i in buckets[0])
print("\nthe pair is non-isomorphic:", is_isomorphic(a, b) is None)
print("but has equal fingerprints:",
      sibling_fingerprint(a) == sibling_fingerprint(b))

print("\nnow an order-5^5 twin pair (rank-2 family, parameters v, v^2):")
v = family_parameters("tuple2", 5)[0]
G1 = paper_family(FamilySpec("tuple2", 5, v))
G2 = paper_family(FamilySpec("tuple2", 5, pow(v, 2, 5)))
print("  Brauer pair:", brauer_pair(G1, G2) is not None)
print("  twins (siblings + Brauer):", are_twins(G1, G2))

print("\nfor contrast, a family pair that is Brauer but *not* twins:")
w1, w2 = family_parameters("tuple1", 5)
H1 = paper_family(FamilySpec("tuple1", 5, w1))
H2 = paper_family(FamilySpec("tuple1", 5, w2))
print("  Brauer pair:", brauer_pair(H1, H2) is not None)
print("  twins:", are_twins(H1, H2))
