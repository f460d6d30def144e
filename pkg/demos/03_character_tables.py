#!/usr/bin/env python3
"""Exact character tables and the fusion rings they generate.

The A5 table shows genuinely irrational entries (golden-ratio values at the
5-cycles); the D4 and Q8 representation rings have identical fusion rules
even though the groups differ.
"""

from fusionrings import rings
from fusionrings.chartab import character_table, rep_g_fusion_ring
from fusionrings.equivalence import find_equivalence, verify_properties
from fusionrings.perms import alternating_group, dihedral_group, quaternion_group, symmetric_group

print("== character table of A5 ==")
t = character_table(alternating_group(5))
print("classes:", [(rep.cycle_string(), size) for rep, size in t.classes])
print("degrees:", t.degrees, " (modular lift prime:", t.dixon_prime, ")")
for i, row in enumerate(t.chars):
    print(f"  chi{i}:", "  ".join(str(v) for v in row))

print("\n== the fusion ring of Rep S4 ==")
ring = rep_g_fusion_ring(character_table(symmetric_group(4)))
print("type:", rings.format_type(rings.type_signature(ring)))
v = rings.fp_dims(ring).dims.index(2)
print("the 2-dimensional simple squares to:", dict(zip(ring.labels, ring.N[v, v])))

print("\n== D4 and Q8: same fusion rules, different groups ==")
r1 = rep_g_fusion_ring(character_table(dihedral_group(4)))
r2 = rep_g_fusion_ring(character_table(quaternion_group()))
witness = find_equivalence(r1, r2)
print("witness bijection:", witness.bijection)
print("verified consequences:", verify_properties(r1, r2, witness))
