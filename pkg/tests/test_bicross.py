"""Matched pairs and split bicrossed products: K5-style fusion rules, types,
dual invertibles, equivariantization types."""

import pytest

from fusionrings import rings
from fusionrings.bicross import (
    bowtie_group,
    dual_invertibles,
    equivariantization_type,
    gamma_action,
    matched_pair_from_factorization,
    split_fusion_ring,
    split_irreps,
    split_type,
)
from fusionrings.cyclo import Cyclotomic
from fusionrings.errors import NotAutomorphism, NotExactFactorization
from fusionrings.perms import (
    Permutation,
    alternating_group,
    cyclic_group,
    symmetric_group,
)


def pair_in_s5_c5_s4():
    g = symmetric_group(5)
    f = cyclic_group(5, degree=5)
    gamma = symmetric_group(4, degree=5)
    return matched_pair_from_factorization(g, f, gamma)


def pair_in_a5_c5_a4():
    g = alternating_group(5)
    f = cyclic_group(5, degree=5)
    gamma = alternating_group(4, degree=5)
    return matched_pair_from_factorization(g, f, gamma)


def pair_b5():
    g = symmetric_group(5)
    f = g.subgroup([Permutation.parse("(1 2)", 5)])
    gamma = alternating_group(5)
    return matched_pair_from_factorization(g, f, gamma)


def test_s5_factorization_valid():
    mp = pair_in_s5_c5_s4()
    assert mp.f.order == 5 and mp.gamma.order == 24


def test_not_exact_factorization():
    g = symmetric_group(3)
    with pytest.raises(NotExactFactorization):
        matched_pair_from_factorization(g, g, g)


def test_nontrivial_cocycles_rejected():
    with pytest.raises(ValueError):
        split_irreps(pair_in_a5_c5_a4(), cocycles={})


def test_decomposition_identity():
    mp = pair_in_s5_c5_s4()
    for s in mp.gamma.elements:
        for x in mp.f.elements:
            assert s * x == mp.right[(s, x)] * mp.left[(s, x)]


def test_even_case_a3_not_stable():
    # inside S4 the <|-action of the 4-cycle moves even elements of S3 to odd ones
    g = symmetric_group(4)
    f = cyclic_group(4, degree=4)
    gamma = symmetric_group(3, degree=4)
    mp = matched_pair_from_factorization(g, f, gamma)
    z = Permutation.parse("(1 2 3 4)", 4)
    sigma = Permutation.parse("(1 2 3)", 4)
    moved = mp.left[(sigma, z)]
    assert moved.sign() == -1


def test_bowtie_group_isomorphic_to_ambient():
    mp = pair_in_a5_c5_a4()
    assert bowtie_group(mp).order == 60
    mp2 = pair_in_s5_c5_s4()
    assert bowtie_group(mp2).order == 120


def test_bowtie_trivial_gamma():
    g = cyclic_group(4)
    triv = g.subgroup([])
    mp = matched_pair_from_factorization(g, g, triv)
    assert bowtie_group(mp).order == 4


def orbit_sizes_oracle(mp):
    """Independent orbit partition: decompose s*x by scanning F x Gamma."""
    decomp = {}
    for x in mp.f.elements:
        for s in mp.gamma.elements:
            decomp[x * s] = s
    remaining = set(mp.gamma.elements)
    sizes = []
    while remaining:
        seed = remaining.pop()
        orbit = {seed}
        frontier = [seed]
        while frontier:
            s = frontier.pop()
            for x in mp.f.elements:
                t = decomp[s * x]
                if t not in orbit:
                    orbit.add(t)
                    frontier.append(t)
        remaining -= orbit
        sizes.append(len(orbit))
    return sorted(sizes)


def test_orbits_of_c5_on_a4():
    mp = pair_in_a5_c5_a4()
    orbs = gamma_action(mp).orbits()
    sizes = sorted(len(o.members) for o in orbs)
    assert sizes == [1, 1, 5, 5]
    assert orbit_sizes_oracle(mp) == sizes


def test_orbits_of_c5_on_s4_and_fixed_subgroup():
    mp = pair_in_s5_c5_s4()
    orbs = gamma_action(mp).orbits()
    sizes = sorted(len(o.members) for o in orbs)
    assert sizes == [1, 1, 1, 1, 5, 5, 5, 5]
    assert orbit_sizes_oracle(mp) == sizes
    fixed = [o.representative for o in orbs if len(o.members) == 1]
    sub = mp.gamma.subgroup([f for f in fixed if not f.is_identity()])
    assert sub.order == 4 and sub.is_abelian()
    orders = sorted(f.order() for f in fixed)
    assert orders == [1, 2, 4, 4]  # a cyclic group generated by a 4-cycle


def test_k5_type_and_invertibles():
    mp = pair_in_a5_c5_a4()
    assert split_type(mp) == ((1, 10), (5, 2))
    ring = split_fusion_ring(mp)
    inv = rings.invertibles(ring)
    assert inv.order == 10 and inv.name == "D5"


def test_k5_exact_fusion_rules():
    ring = split_fusion_ring(pair_in_a5_c5_a4())
    dims = rings.fp_dims(ring).dims
    five = [i for i, d in enumerate(dims) if d == 5]
    assert len(five) == 2
    y, y2 = five
    inv = rings.invertibles(ring)
    orders = {}
    for g in inv.indices:
        k, x = 1, g
        while x != 0:
            x = ring.support(x, g)[0]
            k += 1
        orders[g] = k
    r_sub = [g for g in inv.indices if orders[g] in (1, 5)]
    assert len(r_sub) == 5
    two_els = [g for g in inv.indices if orders[g] == 2]
    assert len(two_els) == 5
    for g in two_els:
        assert ring.support(g, y) == (y2,) and ring.N[g, y, y2] == 1
        assert ring.support(y, g) == (y2,)
    for g in r_sub:
        assert ring.support(g, y) == (y,)
    # Y Y = sum of R + 2Y + 2Y', same for Y'
    for a in (y, y2):
        vec = ring.N[a, a]
        assert all(vec[g] == 1 for g in r_sub)
        assert all(vec[g] == 0 for g in two_els)
        assert vec[y] == 2 and vec[y2] == 2
    assert ring.dual[y] == y and ring.dual[y2] == y2


def test_k5_stabilizer_and_pointed_subring():
    ring = split_fusion_ring(pair_in_a5_c5_a4())
    dims = rings.fp_dims(ring).dims
    y = dims.index(5)
    stab = rings.invertible_stabilizer(ring, y)
    assert len(stab) == 5  # the order-5 subgroup of the dihedral invertibles
    inv = rings.invertibles(ring)
    assert rings.subring_generated(ring, inv.indices) == inv.indices
    # the adjoint subring of the K5 ring is everything: no faithful grading
    assert rings.universal_grading(ring).order == 1


def test_h5_type():
    mp = pair_in_s5_c5_s4().dual()
    assert split_type(mp) == ((1, 2), (2, 1), (3, 2), (4, 2), (8, 1))


def test_l5_type():
    mp = pair_in_a5_c5_a4().dual()
    assert split_type(mp) == ((1, 3), (3, 1), (4, 3))


def test_b5_type():
    assert split_type(pair_b5()) == ((1, 12), (2, 27))


def test_j5_type():
    assert split_type(pair_in_s5_c5_s4()) == ((1, 20), (5, 4))


def test_dim_squares_sum_to_dim_h():
    for mp in [pair_in_a5_c5_a4(), pair_in_s5_c5_s4(), pair_b5()]:
        ws = split_irreps(mp)
        assert sum(w.dim**2 for w in ws) == mp.f.order * mp.gamma.order


def test_dual_invertibles_j5():
    di = dual_invertibles(pair_in_s5_c5_s4())
    assert di.order == 20 and di.center_order == 1


def test_dual_invertibles_k5():
    di = dual_invertibles(pair_in_a5_c5_a4())
    assert di.order == 10 and di.name == "D5" and di.center_order == 1


def test_dual_invertibles_b5():
    di = dual_invertibles(pair_b5())
    assert di.order == 12 and di.name == "D6"  # C2 x S3, non-abelian of order 12
    from fusionrings import tables

    assert not tables.is_abelian([list(r) for r in di.table])


def test_dual_invertibles_match_dimension_one_count():
    # the group-theoretic semidirect construction counts the same objects as
    # the dimension-1 entries of the irreducible classification
    for mp in [pair_in_a5_c5_a4(), pair_in_s5_c5_s4(), pair_b5()]:
        di = dual_invertibles(mp)
        ones = [w for w in split_irreps(mp) if w.dim == 1]
        assert di.order == len(ones)


def test_dual_of_dual_restores_actions():
    mp = pair_in_s5_c5_s4()
    back = mp.dual().dual()
    assert back.f == mp.f and back.gamma == mp.gamma
    assert back.left == mp.left and back.right == mp.right


def test_module_matrices_satisfy_relations():
    mp = pair_in_a5_c5_a4()
    ws = split_irreps(mp)
    w = next(x for x in ws if x.dim == 5)
    weights, mats = w.module_matrices(mp)
    f_els = mp.f.elements
    # multiplicativity of 1 # y
    for a in f_els:
        for b in f_els:
            assert _matmul(mats[a], mats[b]) == mats[a * b]
    # weight compatibility: rho(1#x) e_t = e_{t <| x^-1} rho(1#x) as block moves
    x = f_els[1]
    d = w.stab_degree
    for i, t in enumerate(weights):
        moved = mp.left[(t, x.inverse())]
        j = weights.index(moved)
        block = [[mats[x][j * d + a][i * d + b] for b in range(d)] for a in range(d)]
        assert any(not v.is_zero() for row in block for v in row)


def test_equivariantization_type_b5():
    g = alternating_group(5)
    ring = rings.group_ring(g)
    t = Permutation.parse("(1 2)", 5)
    action = tuple(g.index_of(t.inverse() * x * t) for x in g.elements)
    assert equivariantization_type(ring, action, 2) == ((1, 12), (2, 27))


def test_equivariantization_type_b6():
    g = alternating_group(6)
    ring = rings.group_ring(g)
    t = Permutation.parse("(1 2)", 6)
    action = tuple(g.index_of(t.inverse() * x * t) for x in g.elements)
    assert equivariantization_type(ring, action, 2) == ((1, 48), (2, 168))


def test_equivariantization_trivial_ring():
    ring = rings.group_ring(cyclic_group(1))
    assert equivariantization_type(ring, (0,), 2) == ((1, 2),)


def test_equivariantization_prime_invertibles_force_prime_simple():
    # inversion on the 3-element pointed ring: exactly p invertibles survive,
    # so a dimension-p simple must appear
    g = cyclic_group(3)
    ring = rings.group_ring(g)
    action = tuple(g.index_of(x.inverse()) for x in g.elements)
    sig = equivariantization_type(ring, action, 2)
    assert sig == ((1, 2), (2, 1))
    counts = dict(sig)
    if counts.get(1) == 2 and rings.invertibles(ring).order > 1:
        assert counts.get(2, 0) >= 1


def test_equivariantization_rejects_non_automorphism():
    from fusionrings.chartab import character_table, rep_g_fusion_ring

    ring = rep_g_fusion_ring(character_table(symmetric_group(3)))
    with pytest.raises(NotAutomorphism):
        equivariantization_type(ring, (0, 2, 1), 2)  # swaps sgn with V


def test_k7_ring_builds_exactly():
    from fusionrings.catalog import pair_cyclic_alternating

    ring = split_fusion_ring(pair_cyclic_alternating(7))
    assert rings.type_signature(ring) == ((1, 21), (7, 51))
    inv = rings.invertibles(ring)
    assert inv.order == 21
    from fusionrings import tables

    assert not tables.is_abelian([list(r) for r in inv.table])


@pytest.mark.slow
def test_j7_ring_builds_exactly():
    from fusionrings.catalog import pair_cyclic_symmetric

    ring = split_fusion_ring(pair_cyclic_symmetric(7))
    assert rings.type_signature(ring) == ((1, 42), (7, 102))
    assert rings.invertibles(ring).order == 42


def _matmul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = Cyclotomic.zero()
            for l in range(n):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)
