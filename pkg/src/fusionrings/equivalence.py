"""Grothendieck equivalence of based rings: invariant fingerprints, pruned
backtracking search for a witness bijection, and consequence verification."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import rings, tables
from .errors import SearchBudgetExceeded

DEFAULT_NODE_BUDGET = 10_000_000


def _node_budget(budget):
    if budget is not None:
        return budget
    env = os.environ.get("WORKBENCH_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


@dataclass(frozen=True)
class EquivalenceWitness:
    bijection: tuple  # index map, domain ring -> codomain ring


def _element_profile(ring, dims, i):
    row = ring.N[i]
    return (
        dims[i],
        dims[ring.dual[i]],
        ring.dual[i] == i,
        tuple(sorted(Counter(map(int, row.flatten())).items())),
        tuple(sorted(map(int, row.sum(axis=1)))),
        tuple(sorted(Counter(int(ring.N[i, j, j]) for j in range(ring.size)).items())),
    )


def fingerprint(ring):
    """Relabeling-invariant summary: type, element profiles, invertible-group
    data, adjoint chain sizes, universal grading data."""
    dims = rings.fp_dims(ring).dims
    inv = rings.invertibles(ring)
    inv_table = [list(r) for r in inv.table]
    chain, _ = rings.adjoint_series(ring)
    grading = rings.universal_grading(ring)
    g_table = [list(r) for r in grading.group_table]
    return (
        ring.size,
        tuple(sorted(Counter(dims).items())),
        tuple(sorted(_element_profile(ring, dims, i) for i in range(ring.size))),
        (inv.order, tables.order_multiset(inv_table), tables.iso_name(inv_table)),
        tuple(len(c) for c in chain),
        (grading.order, tables.order_multiset(g_table), tuple(sorted(map(len, grading.blocks)))),
    )


def find_equivalence(r1, r2, budget=None):
    """Search for a unit-preserving bijection matching all fusion rules.

    Returns an EquivalenceWitness or None; None is only reported after the
    pruned tree is exhausted.  Raises SearchBudgetExceeded past the node cap.
    """
    budget = _node_budget(budget)
    n = r1.size
    if n != r2.size:
        return None
    if fingerprint(r1) != fingerprint(r2):
        return None
    d1 = rings.fp_dims(r1).dims
    d2 = rings.fp_dims(r2).dims
    prof1 = [_element_profile(r1, d1, i) for i in range(n)]
    prof2 = [_element_profile(r2, d2, i) for i in range(n)]
    candidates = [
        tuple(j for j in range(n) if prof2[j] == prof1[i]) for i in range(n)
    ]
    if any(not c for c in candidates):
        return None
    order = sorted(range(1, n), key=lambda i: (len(candidates[i]), i))
    order = [0] + order
    assign = [-1] * n
    used = [False] * n
    nodes = 0
    N1, N2 = r1.N, r2.N

    def consistent(i, j, depth):
        di = r1.dual[i]
        if di == i and r2.dual[j] != j:
            return False
        if assign[di] != -1 and assign[di] != r2.dual[j]:
            return False
        # check every rule triple touching i against the partial assignment
        pairs = [(order[t], assign[order[t]]) for t in range(depth)]
        pairs.append((i, j))
        for a, fa in pairs:
            for b, fb in pairs:
                if (
                    N1[a, b, i] != N2[fa, fb, j]
                    or N1[a, i, b] != N2[fa, j, fb]
                    or N1[i, a, b] != N2[j, fa, fb]
                ):
                    return False
        return True

    def dfs(depth):
        nonlocal nodes
        if depth == n:
            return True
        i = order[depth]
        for j in candidates[i]:
            if used[j]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"budget {budget} hit")
            if not consistent(i, j, depth):
                continue
            assign[i] = j
            used[j] = True
            if dfs(depth + 1):
                return True
            assign[i] = -1
            used[j] = False
        return False

    if not dfs(0):
        return None
    perm = tuple(assign)
    # full tensor verification before returning
    inv = np.argsort(np.array(perm))
    if not np.array_equal(N2, N1[np.ix_(inv, inv, inv)][...]):
        raise AssertionError("witness failed full tensor verification (bug)")
    for i in range(n):
        if perm[r1.dual[i]] != r2.dual[perm[i]]:
            raise AssertionError("witness breaks duality (bug)")
    return EquivalenceWitness(bijection=perm)


def _image(ring2, witness, indices):
    return tuple(sorted(witness.bijection[i] for i in indices))


def verify_properties(r1, r2, witness):
    """Re-check the structural consequences of a Grothendieck equivalence."""
    f = witness.bijection
    n = r1.size
    report = {}
    perm_inv = np.argsort(np.array(f))
    report["tensor_equal"] = bool(
        np.array_equal(r2.N, r1.N[np.ix_(perm_inv, perm_inv, perm_inv)])
    ) and f[0] == 0
    d1 = rings.fp_dims(r1).dims
    d2 = rings.fp_dims(r2).dims
    report["dims_equal"] = all(d1[i] == d2[f[i]] for i in range(n))
    inv1 = rings.invertibles(r1).indices
    inv2 = rings.invertibles(r2).indices
    report["invertibles_correspond"] = _image(r2, witness, inv1) == tuple(inv2)
    report["duals_correspond"] = all(f[r1.dual[i]] == r2.dual[f[i]] for i in range(n))
    chain1, _ = rings.adjoint_series(r1)
    chain2, _ = rings.adjoint_series(r2)
    report["adjoint_series_correspond"] = len(chain1) == len(chain2) and all(
        _image(r2, witness, c1) == c2 for c1, c2 in zip(chain1, chain2)
    )
    g1 = rings.universal_grading(r1)
    g2 = rings.universal_grading(r2)
    blocks2 = {b: idx for idx, b in enumerate(g2.blocks)}
    mapping = {}
    ok = g1.order == g2.order
    if ok:
        for idx, b in enumerate(g1.blocks):
            img = _image(r2, witness, b)
            if img not in blocks2:
                ok = False
                break
            mapping[idx] = blocks2[img]
        if ok:
            t1, t2 = g1.group_table, g2.group_table
            ok = all(
                mapping[t1[a][b]] == t2[mapping[a]][mapping[b]]
                for a in range(g1.order)
                for b in range(g1.order)
            )
    report["grading_group_isomorphism"] = ok
    return report
