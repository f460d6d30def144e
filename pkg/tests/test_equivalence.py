"""Equivalence search against brute-force bijection enumeration."""

import itertools
import random

import numpy as np
import pytest

from fusionrings import rings
from fusionrings.chartab import character_table, rep_g_fusion_ring
from fusionrings.equivalence import EquivalenceWitness, find_equivalence, fingerprint, verify_properties
from fusionrings.errors import SearchBudgetExceeded
from fusionrings.perms import (
    PermGroup,
    Permutation,
    cyclic_group,
    dihedral_group,
    quaternion_group,
    symmetric_group,
)


def rep_ring(group):
    return rep_g_fusion_ring(character_table(group))


def brute_force_equivalent(r1, r2):
    """Oracle: enumerate all unit-fixing bijections (only for tiny rings)."""
    n = r1.size
    if n != r2.size:
        return False
    for rest in itertools.permutations(range(1, n)):
        f = (0,) + rest
        inv = np.argsort(np.array(f))
        if np.array_equal(r2.N, r1.N[np.ix_(inv, inv, inv)]) and all(
            f[r1.dual[i]] == r2.dual[f[i]] for i in range(n)
        ):
            return True
    return False


def test_quaternion_group_structure():
    from fusionrings import tables

    g = quaternion_group()
    assert tables.iso_name(g.cayley_table()) == "Q8"


def test_fingerprint_rep_d4_equals_rep_q8():
    assert fingerprint(rep_ring(dihedral_group(4))) == fingerprint(rep_ring(quaternion_group()))


def test_fingerprint_distinguishes_sizes():
    assert fingerprint(rep_ring(symmetric_group(3))) != fingerprint(rep_ring(cyclic_group(6)))


def test_fingerprint_invariant_under_relabeling():
    ring = rep_ring(symmetric_group(4))
    rng = random.Random(5)
    perm = [0] + random.Random(5).sample(range(1, 5), 4)
    assert fingerprint(ring.relabel(perm)) == fingerprint(ring)


def test_d4_q8_witness_found_and_verified():
    r1, r2 = rep_ring(dihedral_group(4)), rep_ring(quaternion_group())
    w = find_equivalence(r1, r2)
    assert w is not None
    report = verify_properties(r1, r2, w)
    assert all(report.values())
    assert brute_force_equivalent(r1, r2)


def test_relabeled_rep_s5_witness():
    ring = rep_ring(symmetric_group(5))
    perm = [0, 3, 1, 6, 2, 5, 4]
    other = ring.relabel(perm)
    w = find_equivalence(ring, other)
    assert w is not None
    assert all(verify_properties(ring, other, w).values())
    # deterministic: same witness twice
    assert find_equivalence(ring, other).bijection == w.bijection


def test_size_mismatch_is_none():
    assert find_equivalence(rep_ring(symmetric_group(3)), rep_ring(cyclic_group(6))) is None


def test_none_answers_match_brute_force_on_small_pairs():
    small = [
        rep_ring(cyclic_group(4)),
        rep_ring(PermGroup.from_generators(4, [Permutation.parse("(1 2)", 4), Permutation.parse("(3 4)", 4)])),
        rep_ring(symmetric_group(3)),
        rep_ring(dihedral_group(4)),
        rep_ring(quaternion_group()),
        rep_ring(cyclic_group(5)),
        rep_ring(dihedral_group(5)),
    ]
    for a in small:
        for b in small:
            got = find_equivalence(a, b) is not None
            assert got == brute_force_equivalent(a, b)


def test_corrupted_witness_fails_verification():
    r1, r2 = rep_ring(dihedral_group(4)), rep_ring(quaternion_group())
    w = find_equivalence(r1, r2)
    f = list(w.bijection)
    # swap two non-corresponding labels of different profile
    one = rings.fp_dims(r2).dims.index(1, 1)
    two = rings.fp_dims(r2).dims.index(2)
    a = f.index(one)
    b = f.index(two)
    f[a], f[b] = f[b], f[a]
    bad = EquivalenceWitness(bijection=tuple(f))
    report = verify_properties(r1, r2, bad)
    assert not report["tensor_equal"]


def test_budget_exceeded_is_an_error():
    ring = rep_ring(symmetric_group(5))
    other = ring.relabel([0, 3, 1, 6, 2, 5, 4])
    with pytest.raises(SearchBudgetExceeded):
        find_equivalence(ring, other, budget=1)


def test_fingerprint_mismatch_implies_none():
    a = rep_ring(dihedral_group(6))
    b = rep_ring(symmetric_group(4))
    # same size (6 vs 5)? D6 has 6 classes, S4 has 5 - also covers size path
    assert (fingerprint(a) == fingerprint(b)) == (find_equivalence(a, b) is not None)
