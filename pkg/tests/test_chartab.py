"""Character tables against orthogonality oracles and known degree multisets."""

import pytest

from fusionrings import rings
from fusionrings.chartab import (
    character_table,
    inner_product,
    irrep_matrices,
    rep_g_fusion_ring,
)
from fusionrings.cyclo import Cyclotomic, root_of_unity
from fusionrings.errors import LengthMismatch
from fusionrings.perms import (
    PermGroup,
    Permutation,
    alternating_group,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)


def column_orthogonality_holds(t):
    r = t.num_classes
    for a in range(r):
        for b in range(r):
            acc = Cyclotomic.zero()
            for i in range(r):
                acc = acc + t.chars[i][a] * t.chars[i][b].conjugate()
            cent = t.group.order // t.classes[a][1]
            want = cent if a == b else 0
            if acc != Cyclotomic.rational(want):
                return False
    return True


def test_trivial_group():
    t = character_table(PermGroup.from_elements(1, [Permutation.identity(1)]))
    assert t.degrees == (1,)
    assert t.chars[0][0] == Cyclotomic.one()


def test_s3_degrees():
    t = character_table(symmetric_group(3))
    assert sorted(t.degrees) == [1, 1, 2]
    assert t.degrees[0] == 1 and all(v == Cyclotomic.one() for v in t.chars[0])
    assert column_orthogonality_holds(t)


def test_s4_degrees():
    t = character_table(symmetric_group(4))
    assert sorted(t.degrees) == [1, 1, 2, 3, 3]
    assert column_orthogonality_holds(t)


def test_a4_degrees():
    t = character_table(alternating_group(4))
    assert sorted(t.degrees) == [1, 1, 1, 3]
    assert column_orthogonality_holds(t)


def test_a5_table_golden_values():
    t = character_table(alternating_group(5))
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]
    assert column_orthogonality_holds(t)
    golden = Cyclotomic.one() + root_of_unity(5) + root_of_unity(5, 4)
    golden2 = Cyclotomic.one() + root_of_unity(5, 2) + root_of_unity(5, 3)
    five_cycle_cols = [j for j, (rep, _) in enumerate(t.classes) if rep.order() == 5]
    assert len(five_cycle_cols) == 2
    deg3_rows = [i for i, d in enumerate(t.degrees) if d == 3]
    vals = {t.chars[i][j] for i in deg3_rows for j in five_cycle_cols}
    assert vals == {golden, golden2}


def test_exponent_and_value_field():
    t = character_table(alternating_group(5))
    assert t.exponent == 30
    for row in t.chars:
        for v in row:
            assert t.exponent % v.conductor == 0


def test_determinism():
    t1 = character_table(symmetric_group(4))
    t2 = character_table(symmetric_group(4))
    assert t1.degrees == t2.degrees and t1.chars == t2.chars
    assert t1.dixon_prime == t2.dixon_prime


def test_inner_product_orthonormality():
    t = character_table(symmetric_group(3))
    for i in range(3):
        for k in range(3):
            ip = inner_product(t, t.chars[i], t.chars[k])
            assert ip == (Cyclotomic.one() if i == k else Cyclotomic.zero())


def test_inner_product_v_tensor_v_contains_trivial_once():
    t = character_table(symmetric_group(3))
    v = t.chars[t.degrees.index(2)]
    prod = [v[j] * v[j] for j in range(3)]
    assert inner_product(t, prod, t.chars[0]) == Cyclotomic.one()


def test_inner_product_length_mismatch():
    t = character_table(symmetric_group(3))
    with pytest.raises(LengthMismatch):
        inner_product(t, [Cyclotomic.one()], t.chars[0])


def test_rep_ring_s3_v_squared():
    t = character_table(symmetric_group(3))
    ring = rep_g_fusion_ring(t)
    rings.validate(ring)
    v = t.degrees.index(2)
    sgn = next(i for i in (1, 2) if t.degrees[i] == 1 and i != 0)
    assert ring.support(v, v) == tuple(sorted((0, sgn, v)))
    assert all(ring.N[v, v, k] == 1 for k in ring.support(v, v))


def test_rep_ring_s4_type():
    ring = rep_g_fusion_ring(character_table(symmetric_group(4)))
    assert rings.type_signature(ring) == ((1, 2), (2, 1), (3, 2))


def test_rep_ring_d5_type():
    ring = rep_g_fusion_ring(character_table(dihedral_group(5)))
    assert rings.type_signature(ring) == ((1, 2), (2, 2))


def test_rep_ring_dims_match_degrees():
    t = character_table(alternating_group(5))
    ring = rep_g_fusion_ring(t)
    dims = rings.fp_dims(ring)
    assert dims.exact and dims.dims == t.degrees
    assert dims.total == 60


def test_rep_ring_abelian_group_is_pointed():
    ring = rep_g_fusion_ring(character_table(cyclic_group(6)))
    inv = rings.invertibles(ring)
    assert inv.order == 6
    assert inv.name == "C6"


def test_irrep_matrices_s3():
    t = character_table(symmetric_group(3))
    g = t.group
    for row in range(t.num_classes):
        mats = irrep_matrices(t, row)
        d = t.degrees[row]
        for a in g.elements:
            for b in g.elements:
                prod = _matmul(mats[a], mats[b])
                assert prod == mats[a * b]
        for a in g.elements:
            tr = Cyclotomic.zero()
            for i in range(d):
                tr = tr + mats[a][i][i]
            assert tr == t.value(row, a)


def test_irrep_matrices_degree3_s4():
    t = character_table(symmetric_group(4))
    row = t.degrees.index(3)
    mats = irrep_matrices(t, row)
    g = t.group
    els = g.elements[::5]
    for a in els:
        for b in els:
            assert _matmul(mats[a], mats[b]) == mats[a * b]


def _matmul(a, b):
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Cyclotomic.zero()
            for l in range(k):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)
