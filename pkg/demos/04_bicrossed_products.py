#!/usr/bin/env python3
"""Split bicrossed products from exact factorizations of S5 and A5.

The centerpiece: A5 = C5 * A4 induces a 60-dimensional product whose
representation ring has ten invertibles forming a dihedral group of order 10
and two self-dual five-dimensional simples with fully explicit fusion rules.
"""

from fusionrings import rings
from fusionrings.bicross import dual_invertibles, gamma_action, split_fusion_ring, split_type
from fusionrings.catalog import (
    pair_cyclic_alternating,
    pair_cyclic_symmetric,
    pair_transposition_alternating,
)

print("== the matched pair from A5 = C5 * A4 ==")
mp = pair_cyclic_alternating(5)
orbits = gamma_action(mp).orbits()
print("orbits of the cyclic factor on A4:", [len(o.members) for o in orbits])

print("\n== its representation ring ==")
ring = split_fusion_ring(mp)
print("type:", rings.format_type(rings.type_signature(ring)))
inv = rings.invertibles(ring)
print(f"invertibles: order {inv.order}, isomorphism type {inv.name}")
dims = rings.fp_dims(ring).dims
y, y2 = [i for i, d in enumerate(dims) if d == 5]
print(f"the five-dimensional simples: {ring.labels[y]} and {ring.labels[y2]}")
print(f"Y (x) Y decomposes as:", {ring.labels[k]: int(m) for k, m in enumerate(ring.N[y, y]) if m})

print("\n== the sibling products at n = 5 ==")
print("k^S4 # kC5 type:", split_type(pair_cyclic_symmetric(5)))
print("k^C5 # kS4 type:", split_type(pair_cyclic_symmetric(5).dual()))
print("k^C5 # kA4 type:", split_type(pair_cyclic_alternating(5).dual()))
print("k^A5 # kC2 type:", split_type(pair_transposition_alternating(5)))

print("\n== dual invertible groups ==")
for name, pair in [
    ("k^S4 # kC5", pair_cyclic_symmetric(5)),
    ("k^A4 # kC5", pair_cyclic_alternating(5)),
    ("k^A5 # kC2", pair_transposition_alternating(5)),
]:
    di = dual_invertibles(pair)
    print(f"{name}: order {di.order}, type {di.name}, center order {di.center_order}")
