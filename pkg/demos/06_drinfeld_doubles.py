#!/usr/bin/env python3
"""Modular data of quantum doubles: S/T matrices, fusion recovery,
Tannakian detection and S-equivalence."""

from fusionrings import rings
from fusionrings.doubles import (
    central_charge,
    centralizer_subset,
    double_modular_data,
    is_tannakian_subset,
    mueger_center,
    pointed_labels,
    s_equivalence,
    verlinde_fusion,
)
from fusionrings.perms import symmetric_group

print("== the double of S3 ==")
md = double_modular_data(symmetric_group(3))
print("labels:", [l.name() for l in md.labels])
print("dims:  ", md.dims, " global dimension:", md.global_dim)
print("T diagonal:", [str(t) for t in md.T])
print("S matrix:")
for row in md.S:
    print("   ", "  ".join(f"{str(v):>10s}" for v in row))

print("\n== fusion ring recovered from S ==")
ring = verlinde_fusion(md)
print("type:", rings.format_type(rings.type_signature(ring)))
print("Mueger center:", mueger_center(md), " (only the unit: non-degenerate)")
print("central charge:", central_charge(md))

print("\n== Tannakian detection on the pointed part ==")
for n in (3, 4, 5):
    m = double_modular_data(symmetric_group(n))
    pts = pointed_labels(m)
    print(
        f"double of S{n}: pointed part size {len(pts)}, "
        f"centralizes itself: {set(pts) <= set(centralizer_subset(m, pts))}, "
        f"verdict: {is_tannakian_subset(m, pts)}"
    )

print("\n== S-equivalence of the double with itself ==")
f = s_equivalence(md, double_modular_data(symmetric_group(3)))
print("witness:", f)
