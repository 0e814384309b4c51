"""Tour 1: presentations, structure, and exact character tables.

Builds the dihedral and quaternion groups of order 8 from power-commutator
presentations, inspects their structure, and shows the classic phenomenon
that motivates everything downstream: the two groups have *identical*
character tables yet are not isomorphic — and the squaring map tells them
apart.

Run:  python3 demos/01_presentations_and_characters.py
"""

from pgroups import (PcPresentation, brauer_pair, char_tables_equivalent,
                     character_table, check_consistency, conjugacy_classes,
                     is_isomorphic)

# D8 = <a, b | a^2 = 1, b^4 = 1, [b, a] = b^2>   (generators a, b, c=b^2)
D8 = PcPresentation(2, 3, {1: (0, 0, 1)}, {(1, 0): (0, 0, 1)})
# Q8 = <a, b | a^4 = 1, a^2 = b^2, [b, a] = a^2>
Q8 = PcPresentation(2, 3, {0: (0, 0, 1), 1: (0, 0, 1)}, {(1, 0): (0, 0, 1)})

for name, G in (("D8", D8), ("Q8", Q8)):
    print(f"{name}: order {G.order}, consistent: {check_consistency(G)}")
    classes = sorted((c.size, c.element_order) for c in conjugacy_classes(G))
    print(f"  conjugacy classes (size, element order): {classes}")
    ct = character_table(G)
    print(f"  irreducible degrees: {sorted(ct.degrees)}")

print()
print("isomorphic:", is_isomorphic(D8, Q8) is not None)
print("character tables equivalent:",
      char_tables_equivalent(D8, Q8) is not None)
print("Brauer pair (tables + power maps):", brauer_pair(D8, Q8) is not None)
print()
print("The tables match but the squaring map does not: D8 has two classes")
print("of involutions squaring to 1 where Q8 has classes of order-4")
print("elements squaring to the central involution.")
