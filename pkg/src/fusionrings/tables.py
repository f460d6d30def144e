"""Small finite groups presented by Cayley tables on indices 0..n-1.

Grading groups, invertible-object groups and quotients all surface as plain
multiplication tables; everything structural we need about them (orders,
centers, solvability, small-order isomorphism labels, prime-index subgroups
with cyclic quotient) lives here.
"""

from __future__ import annotations

from collections import Counter


def check_table(table):
    n = len(table)
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise ValueError("not a Cayley table")


def identity_index(table):
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    raise ValueError("table has no identity")


def inverses(table):
    n = len(table)
    e = identity_index(table)
    inv = [None] * n
    for a in range(n):
        for b in range(n):
            if table[a][b] == e:
                inv[a] = b
                break
    return inv


def element_orders(table):
    n = len(table)
    e = identity_index(table)
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != e:
            x = table[x][a]
            k += 1
        orders.append(k)
    return orders


def order_multiset(table):
    return tuple(sorted(Counter(element_orders(table)).items()))


def is_abelian(table):
    n = len(table)
    return all(table[a][b] == table[b][a] for a in range(n) for b in range(a))


def subgroup_closure(table, seed):
    e = identity_index(table)
    sub = {e}
    frontier = list(set(seed) | {e})
    sub.update(frontier)
    inv = inverses(table)
    gens = [g for g in set(seed)] + [inv[g] for g in set(seed)]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = table[a][g]
                if c not in sub:
                    sub.add(c)
                    new.append(c)
        frontier = new
    return tuple(sorted(sub))


def commutator_subgroup(table):
    n = len(table)
    inv = inverses(table)
    comms = {table[table[inv[a]][inv[b]]][table[a][b]] for a in range(n) for b in range(n)}
    return subgroup_closure(table, comms)


def center(table):
    n = len(table)
    return tuple(a for a in range(n) if all(table[a][b] == table[b][a] for b in range(n)))


def restrict(table, sub):
    """Cayley table of a subgroup given as a sorted index tuple."""
    pos = {g: i for i, g in enumerate(sub)}
    return [[pos[table[a][b]] for b in sub] for a in sub]


def quotient(table, normal_sub):
    """Quotient table by a normal subgroup; also returns element -> coset index."""
    n = len(table)
    nset = set(normal_sub)
    coset_of = [None] * n
    reps = []
    for a in range(n):
        if coset_of[a] is None:
            idx = len(reps)
            reps.append(a)
            for h in nset:
                coset_of[table[a][h]] = idx
    k = len(reps)
    qt = [[coset_of[table[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    check_table(qt)
    return qt, coset_of


def is_normal(table, sub):
    n = len(table)
    inv = inverses(table)
    sset = set(sub)
    return all(table[table[inv[g]][h]][g] in sset for g in range(n) for h in sub)


def derived_series_reaches_trivial(table):
    t = table
    while True:
        d = commutator_subgroup(t)
        if len(d) == len(t):
            return len(t) == 1
        if len(d) == 1:
            return True
        t = restrict(t, d)


is_solvable = derived_series_reaches_trivial


def abelian_invariants(table):
    """Invariant factors d1 | d2 | ... of an abelian table, ascending."""
    if not is_abelian(table):
        raise ValueError("table is not abelian")
    factors = []
    t = table
    while len(t) > 1:
        orders = element_orders(t)
        m = max(orders)
        a = orders.index(m)
        factors.append(m)
        t, _ = quotient(t, subgroup_closure(t, [a]))
    return tuple(sorted(factors))


def power(table, a, k):
    e = identity_index(table)
    x = e
    for _ in range(k):
        x = table[x][a]
    return x


def prime_index_cyclic_subgroups(table, q):
    """Index-q subgroups K with G/K cyclic of order q (kernels of maps onto Z_q).

    Any such K contains the commutator subgroup and all q-th powers, so the
    candidates are preimages of hyperplanes in the elementary abelian quotient.
    """
    n = len(table)
    seed = set(commutator_subgroup(table))
    seed.update(power(table, a, q) for a in range(n))
    b = subgroup_closure(table, seed)
    if len(b) == n:
        return []
    qt, coset_of = quotient(table, b)
    m = len(qt)
    if m % q:
        raise ValueError("quotient size not a power of the prime")
    # coordinates of the elementary abelian quotient over F_q
    basis = []
    span = {identity_index(qt)}
    for x in range(m):
        if x not in span:
            basis.append(x)
            span = set(subgroup_closure(qt, basis))
    r = len(basis)
    coords = {identity_index(qt): (0,) * r}
    for vec_idx in range(q**r):
        vec = []
        v = vec_idx
        for _ in range(r):
            v, c = divmod(v, q)
            vec.append(c)
        x = identity_index(qt)
        for bi, c in zip(basis, vec):
            x = qt[x][power(qt, bi, c)]
        coords[x] = tuple(vec)
    assert len(coords) == m
    # hyperplanes = kernels of nonzero functionals, up to scalar
    out = []
    seen = set()
    for f_idx in range(1, q**r):
        f = []
        v = f_idx
        for _ in range(r):
            v, c = divmod(v, q)
            f.append(c)
        lead = next(c for c in f if c)
        if lead != 1:
            continue
        kernel = frozenset(x for x, vec in coords.items() if sum(a * b for a, b in zip(f, vec)) % q == 0)
        if kernel in seen:
            continue
        seen.add(kernel)
        sub = tuple(sorted(i for i in range(n) if coset_of[i] in kernel))
        out.append(sub)
    return sorted(out)


_KNOWN_NONABELIAN = {
    (12, ((1, 1), (2, 3), (3, 8))): "A4",
    (12, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))): "Dic3",
    (24, ((1, 1), (2, 9), (3, 8), (4, 6))): "S4",
    (8, ((1, 1), (2, 1), (4, 6))): "Q8",
    (20, ((1, 1), (2, 5), (4, 10), (5, 4))): "C5:C4",
    (60, ((1, 1), (2, 15), (3, 20), (5, 24))): "A5",
    (120, ((1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20))): "S5",
    (48, ((1, 1), (2, 19), (3, 8), (4, 12), (6, 8))): "C2xS4",
}


def _is_dihedral(table):
    n = len(table)
    if n % 2 or n < 4:
        return False
    m = n // 2
    orders = element_orders(table)
    try:
        a = orders.index(m)
    except ValueError:
        return False
    cyc = set(subgroup_closure(table, [a]))
    if len(cyc) != m:
        return False
    inv = inverses(table)
    for s in range(n):
        if s in cyc:
            continue
        return orders[s] == 2 and table[table[inv[s]][a]][s] == inv[a]
    return False


def iso_name(table):
    """Isomorphism-type label from order, abelian invariants and element orders.

    Reliable for the small orders this library meets; falls back to a
    descriptor when the data does not pin a familiar family.
    """
    n = len(table)
    if n == 1:
        return "1"
    if is_abelian(table):
        return " x ".join(f"C{d}" for d in abelian_invariants(table))
    if _is_dihedral(table):
        return f"D{n // 2}"
    key = (n, order_multiset(table))
    if key in _KNOWN_NONABELIAN:
        return _KNOWN_NONABELIAN[key]
    orders = ",".join(f"{o}^{c}" for o, c in order_multiset(table))
    return f"nonabelian(order={n}, element_orders={orders})"
