"""Solvability verdicts with rule traces."""

import random

import pytest

from fusionrings import rings
from fusionrings.bicross import split_fusion_ring
from fusionrings.catalog import (
    default_catalog,
    pair_cyclic_alternating,
    pair_cyclic_symmetric,
    pair_transposition_alternating,
)
from fusionrings.chartab import character_table, rep_g_fusion_ring
from fusionrings.perms import alternating_group, dihedral_group, symmetric_group
from fusionrings.solvability import NOT_SOLVABLE, SOLVABLE, UNKNOWN, solvability_verdict


def rep_ring(group):
    return rep_g_fusion_ring(character_table(group))


def test_trivial_ring_r1():
    from fusionrings.perms import cyclic_group

    v = solvability_verdict(rings.group_ring(cyclic_group(1)))
    assert v.verdict == SOLVABLE and v.fired_rule() == "R1"


def test_rep_a5_r2():
    v = solvability_verdict(rep_ring(alternating_group(5)))
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R2"


def test_group_ring_s3_r3():
    v = solvability_verdict(rings.group_ring(symmetric_group(3)))
    assert v.verdict == SOLVABLE and v.fired_rule() == "R3"


def test_rep_d6_r4():
    v = solvability_verdict(rep_ring(dihedral_group(6)))
    assert v.verdict == SOLVABLE and v.fired_rule() == "R4"


def test_rep_dn_all_solvable():
    for n in range(3, 13):
        v = solvability_verdict(rep_ring(dihedral_group(n)))
        assert v.verdict == SOLVABLE, n
        assert v.trace


def test_rep_s5_r5():
    v = solvability_verdict(rep_ring(symmetric_group(5)))
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R5"


def test_l5_r6():
    ring = split_fusion_ring(pair_cyclic_alternating(5).dual())
    v = solvability_verdict(ring)
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R6"


@pytest.mark.parametrize(
    "pair_fn",
    [
        lambda: pair_cyclic_symmetric(5),
        lambda: pair_cyclic_alternating(5),
        lambda: pair_cyclic_symmetric(5).dual(),
        lambda: pair_transposition_alternating(5),
    ],
    ids=["J5-like", "K5-like", "H5-like", "B5-like"],
)
def test_catalog_rule_r7(pair_fn):
    ring = split_fusion_ring(pair_fn())
    v = solvability_verdict(ring)
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R7"


def test_pointed_a5_r8():
    v = solvability_verdict(rings.group_ring(alternating_group(5)))
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R8"


def test_rep_s4_unknown():
    # solvable in truth, but no conservative ring-level rule certifies it
    v = solvability_verdict(rep_ring(symmetric_group(4)))
    assert v.verdict == UNKNOWN
    assert len(v.trace) == 9


def test_verdict_deterministic_and_relabeling_invariant():
    ring = rep_ring(symmetric_group(5))
    v1 = solvability_verdict(ring)
    v2 = solvability_verdict(ring)
    assert v1 == v2
    perm = [0] + random.Random(11).sample(range(1, ring.size), ring.size - 1)
    v3 = solvability_verdict(ring.relabel(perm))
    assert v3.verdict == v1.verdict and v3.trace == v1.trace


def test_traces_nonempty_and_ordered():
    v = solvability_verdict(rep_ring(symmetric_group(5)))
    assert [r for r, _, _ in v.trace] == ["R1", "R2", "R3", "R4", "R5"]


def test_catalog_rule_on_large_ring():
    # the 72-simple ring finds its own catalog twin through the prefilter
    k7_entry = next(e for e in default_catalog() if e.name == "Rep(k^A6 # kC7)")
    v = solvability_verdict(k7_entry.ring())
    assert v.verdict == NOT_SOLVABLE and v.fired_rule() == "R7"


def test_catalog_signatures():
    sigs = {e.name: e.type_signature() for e in default_catalog()}
    assert sigs["Rep(k^A4 # kC5)"] == ((1, 10), (5, 2))
    assert sigs["Rep(k^C5 # kS4)"] == ((1, 2), (2, 1), (3, 2), (4, 2), (8, 1))
    assert sigs["Rep(k^A5 # kC2)"] == ((1, 12), (2, 27))
    assert sigs["Rep(k^S4 # kC5)"] == ((1, 20), (5, 4))
    assert sigs["Rep(k^S6 # kC7)"] == ((1, 42), (7, 102))
    assert sigs["Rep(k^A6 # kC7)"] == ((1, 21), (7, 51))
    assert sigs["Rep(k^C2 # kA5)"] == ((1, 2), (3, 4), (4, 2), (5, 2))
    assert sigs["Rep(S5)"] == ((1, 2), (4, 2), (5, 2), (6, 1))
