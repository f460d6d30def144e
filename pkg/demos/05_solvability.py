#!/usr/bin/env python3
"""Solvability verdicts from fusion rules alone, with rule traces.

The engine is conservative: each verdict is justified by a fixed-order rule
(R1..R8), and UNKNOWN is an honest answer when no rule applies.
"""

from fusionrings import rings
from fusionrings.bicross import split_fusion_ring
from fusionrings.catalog import pair_cyclic_alternating
from fusionrings.chartab import character_table, rep_g_fusion_ring
from fusionrings.perms import alternating_group, dihedral_group, symmetric_group
from fusionrings.solvability import solvability_verdict


def show(name, ring):
    v = solvability_verdict(ring)
    print(f"{name}: {v.verdict}  (rule {v.fired_rule()})")
    for rule, statement, fact in v.trace:
        line = f"    {rule}: {statement}"
        if fact:
            line += f"  [{fact}]"
        print(line)


show("Rep S5", rep_g_fusion_ring(character_table(symmetric_group(5))))
print()
show("Rep D6", rep_g_fusion_ring(character_table(dihedral_group(6))))
print()
show("Rep A5", rep_g_fusion_ring(character_table(alternating_group(5))))
print()
show("k^C5 # kA4 ring", split_fusion_ring(pair_cyclic_alternating(5).dual()))
print()
show("k^A4 # kC5 ring", split_fusion_ring(pair_cyclic_alternating(5)))
print()
show("Rep S4 (honest UNKNOWN)", rep_g_fusion_ring(character_table(symmetric_group(4))))
