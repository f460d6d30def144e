"""Based rings with non-negative structure constants: validation, dimensions,
subring lattice, gradings, nilpotency.

The structure tensor is held as a write-locked numpy int array; all axiom
checks are exhaustive.  Large tensor contractions go through float64 matmuls,
which are exact for the integer ranges this library meets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import tables
from .errors import AxiomViolation, GradingInconsistent, NoPositiveEigenvector


class FusionRing:
    """A unital based ring: basis labels, structure tensor, duality involution."""

    __slots__ = ("labels", "N", "dual", "_dims")

    def __init__(self, labels, tensor, dual=None):
        labels = tuple(labels)
        n = len(labels)
        tensor = np.asarray(tensor, dtype=np.int64).reshape(n, n, n).copy()
        tensor.setflags(write=False)
        self.labels = labels
        self.N = tensor
        if dual is None:
            dual = tuple(int(np.argmax(tensor[i, :, 0])) for i in range(n))
        self.dual = tuple(dual)
        self._dims = None

    @property
    def size(self):
        return len(self.labels)

    def product(self, i, j):
        return self.N[i, j]

    def support(self, i, j):
        return tuple(int(k) for k in np.nonzero(self.N[i, j])[0])

    def relabel(self, perm):
        """Isomorphic copy with basis index i renamed to perm[i] (unit must stay)."""
        n = self.size
        if perm[0] != 0:
            raise ValueError("relabeling must fix the unit")
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        labels = tuple(self.labels[inv[i]] for i in range(n))
        tensor = self.N[np.ix_(inv, inv, inv)]
        dual = tuple(perm[self.dual[inv[i]]] for i in range(n))
        return FusionRing(labels, tensor, dual)

    def restrict(self, indices):
        """Based subring on a closed index set (unit must be a member)."""
        indices = tuple(indices)
        if 0 not in indices:
            raise ValueError("subring must contain the unit")
        pos = {g: i for i, g in enumerate(indices)}
        sub = self.N[np.ix_(indices, indices, indices)]
        dual = tuple(pos[self.dual[g]] for g in indices)
        return FusionRing(tuple(self.labels[g] for g in indices), sub, dual)

    def __eq__(self, other):
        return (
            isinstance(other, FusionRing)
            and self.labels == other.labels
            and self.dual == other.dual
            and np.array_equal(self.N, other.N)
        )

    def __hash__(self):
        return hash((self.labels, self.dual, self.N.tobytes()))

    def __repr__(self):
        return f"FusionRing(size={self.size})"


@dataclass(frozen=True)
class FPDims:
    dims: tuple
    exact: bool
    total: object  # int when exact, float otherwise


@dataclass(frozen=True)
class Invertibles:
    indices: tuple
    table: tuple
    name: str

    @property
    def order(self):
        return len(self.indices)


@dataclass(frozen=True)
class GradingDecomposition:
    blocks: tuple  # tuple of sorted index tuples
    group_table: tuple
    neutral_block: int

    @property
    def order(self):
        return len(self.blocks)

    def block_of(self):
        out = {}
        for b, members in enumerate(self.blocks):
            for i in members:
                out[i] = b
        return out


def validate(ring):
    """Check every based-ring axiom exhaustively; raise AxiomViolation on failure."""
    n = ring.size
    N = ring.N
    if np.any(N < 0):
        i, j, k = map(int, np.argwhere(N < 0)[0])
        raise AxiomViolation("non_negative", (i, j, k))
    eye = np.eye(n, dtype=np.int64)
    if not np.array_equal(N[0], eye):
        raise AxiomViolation("unit_left")
    if not np.array_equal(N[:, 0, :], eye):
        raise AxiomViolation("unit_right")
    dual = ring.dual
    if sorted(dual) != list(range(n)):
        raise AxiomViolation("dual_not_bijective")
    for i in range(n):
        if dual[dual[i]] != i:
            raise AxiomViolation("dual_involution", (i,))
        for j in range(n):
            want = 1 if j == dual[i] else 0
            if N[i, j, 0] != want:
                raise AxiomViolation("duality", (i, j))
    # transpose symmetry N[i,j,k] == N[dual(j), dual(i), dual(k)]
    perm = np.array(dual)
    if not np.array_equal(N, N[np.ix_(perm, perm, perm)].transpose(1, 0, 2)):
        raise AxiomViolation("transpose_symmetry")
    # associativity, chunked over the first index; float64 matmul is exact here
    Nf = N.astype(np.float64)
    flat_r = Nf.reshape(n, n * n)
    flat_l = Nf.reshape(n * n, n)
    for i in range(n):
        lhs = (Nf[i] @ flat_r).reshape(n, n, n)
        rhs = (flat_l @ Nf[i]).reshape(n, n, n)
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise AxiomViolation("associativity", (i, int(bad[0]), int(bad[1]), int(bad[2])))


def fp_dims(ring):
    """Per-basis Frobenius-Perron dimensions plus the global dimension.

    Tries the exact integer vector first; falls back to a certified numeric
    eigenvector when the basis dimensions are not rational integers.
    """
    if ring._dims is not None:
        return ring._dims
    n = ring.size
    N = ring.N.astype(np.float64)
    A = N.sum(axis=0)
    v = np.ones(n)
    for _ in range(20000):
        w = A @ v
        w /= w.max()
        if np.max(np.abs(w - v)) < 1e-15:
            v = w
            break
        v = w
    if v[0] <= 0:
        raise NoPositiveEigenvector()
    d = v / v[0]
    cand = np.rint(d).astype(np.int64)
    if np.all(cand >= 1):
        lhs = np.einsum("ijk,k->ij", ring.N, cand)
        if np.array_equal(lhs, np.outer(cand, cand)):
            dims = tuple(int(x) for x in cand)
            result = FPDims(dims=dims, exact=True, total=int(sum(x * x for x in dims)))
            ring._dims = result
            return result
    resid = np.max(np.abs(np.einsum("ijk,k->ij", N, d) - np.outer(d, d)))
    if not np.all(d > 0) or resid > 1e-10 * max(1.0, d.max() ** 2):
        raise NoPositiveEigenvector(f"residual {resid}")
    result = FPDims(dims=tuple(float(x) for x in d), exact=False, total=float(np.sum(d * d)))
    ring._dims = result
    return result


def type_signature(ring):
    """Sorted (dimension, count) pairs; requires certified integer dimensions."""
    dims = fp_dims(ring)
    if not dims.exact:
        raise ValueError("type signature needs certified integer dimensions")
    counts = {}
    for d in dims.dims:
        counts[d] = counts.get(d, 0) + 1
    return tuple(sorted(counts.items()))


def format_type(sig):
    return "(" + "; ".join(f"{d},{c}" for d, c in sig) + ")"


def invertibles(ring):
    """Group table on the dimension-1 basis elements, with a small-order name."""
    dims = fp_dims(ring)
    if dims.exact:
        idx = tuple(i for i, d in enumerate(dims.dims) if d == 1)
    else:
        idx = tuple(i for i, d in enumerate(dims.dims) if abs(d - 1.0) < 1e-9)
    pos = {g: a for a, g in enumerate(idx)}
    table = []
    for a in idx:
        row = []
        for b in idx:
            supp = ring.support(a, b)
            if len(supp) != 1 or ring.N[a, b, supp[0]] != 1:
                raise AxiomViolation("invertible_product", (a, b))
            row.append(pos[supp[0]])
        table.append(row)
    tables.check_table(table)
    return Invertibles(indices=idx, table=tuple(map(tuple, table)), name=tables.iso_name(table))


def invertible_stabilizer(ring, x):
    """Invertible g with g*x = x, as root-ring indices."""
    inv = invertibles(ring)
    return tuple(g for g in inv.indices if ring.N[g, x, x] == 1)


def subring_generated(ring, seed):
    """Least based subring containing the seed indices."""
    current = set(seed) | {0}
    current |= {ring.dual[i] for i in current}
    while True:
        new = set()
        cur = sorted(current)
        for i in cur:
            for j in cur:
                for k in ring.support(i, j):
                    if k not in current:
                        new.add(k)
        if not new:
            return tuple(sorted(current))
        current |= new
        current |= {ring.dual[i] for i in new}


def adjoint_indices(ring):
    seed = set()
    for i in range(ring.size):
        seed.update(ring.support(i, ring.dual[i]))
    return subring_generated(ring, seed)


def adjoint_series(ring):
    """Descending chain of index sets C >= C_ad >= ... until stationary."""
    chain = [tuple(range(ring.size))]
    while True:
        sub = ring.restrict(chain[-1])
        nxt_local = adjoint_indices(sub)
        nxt = tuple(chain[-1][i] for i in nxt_local)
        if nxt == chain[-1]:
            return chain, True
        chain.append(nxt)


def universal_grading(ring):
    """Finest faithful group grading; neutral block must equal the adjoint subring."""
    n = ring.size
    ad = adjoint_indices(ring)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for a in ad:
        for j in range(n):
            for k in ring.support(a, j):
                union(j, k)
            for k in ring.support(j, a):
                union(j, k)
    comps = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    blocks = sorted((tuple(sorted(m)) for m in comps.values()), key=lambda b: (b[0] != 0, b))
    if blocks[0] != tuple(ad):
        raise GradingInconsistent("neutral block differs from adjoint subring")
    block_of = {}
    for b, members in enumerate(blocks):
        for i in members:
            block_of[i] = b
    k = len(blocks)
    table = [[None] * k for _ in range(k)]
    for i in range(n):
        for j in range(n):
            supp = ring.support(i, j)
            if not supp:
                raise GradingInconsistent(f"empty product at ({i},{j})")
            tgt = {block_of[s] for s in supp}
            if len(tgt) != 1:
                raise GradingInconsistent(f"product ({i},{j}) spreads over blocks {sorted(tgt)}")
            g, h, t = block_of[i], block_of[j], tgt.pop()
            if table[g][h] is None:
                table[g][h] = t
            elif table[g][h] != t:
                raise GradingInconsistent(f"inconsistent block product at ({g},{h})")
    for row in table:
        if any(x is None for x in row):
            raise GradingInconsistent("partial block product")
    tables.check_table(table)
    for a in range(k):
        for b in range(k):
            for c in range(k):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise GradingInconsistent("block product not associative")
    return GradingDecomposition(
        blocks=tuple(blocks), group_table=tuple(map(tuple, table)), neutral_block=0
    )


def is_nilpotent(ring):
    chain, _ = adjoint_series(ring)
    return len(chain[-1]) == 1


def is_cyclically_nilpotent(ring):
    """True when iterated prime-cyclic quotient gradings reach the trivial ring.

    Recurses through index-q subgroups of the universal grading group with
    cyclic quotient; memoized on basis index subsets of the root ring.
    """
    memo = {}

    def rec(indices):
        if indices in memo:
            return memo[indices]
        if len(indices) == 1:
            memo[indices] = True
            return True
        sub = ring.restrict(indices)
        grading = universal_grading(sub)
        result = False
        u = [list(r) for r in grading.group_table]
        for q in _prime_divisors(len(u)):
            for sub_k in tables.prime_index_cyclic_subgroups(u, q):
                keep = []
                for b in sub_k:
                    keep.extend(grading.blocks[b])
                neutral = tuple(sorted(indices[i] for i in keep))
                if rec(neutral):
                    result = True
                    break
            if result:
                break
        memo[indices] = result
        return result

    return rec(tuple(range(ring.size)))


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def group_ring(group):
    """Pointed ring of a permutation group: basis = group elements."""
    els = group.elements
    n = len(els)
    idx = group.index_of
    tensor = np.zeros((n, n, n), dtype=np.int64)
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            tensor[i, j, idx(a * b)] = 1
    dual = tuple(idx(a.inverse()) for a in els)
    labels = tuple(a.cycle_string() for a in els)
    return FusionRing(labels, tensor, dual)


def group_ring_from_table(table, labels=None):
    n = len(table)
    tables.check_table(table)
    e = tables.identity_index(table)
    if e != 0:
        order = [e] + [i for i in range(n) if i != e]
        table = [[order.index(table[a][b]) for b in order] for a in order]
        if labels:
            labels = [labels[i] for i in order]
    tensor = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            tensor[i, j, table[i][j]] = 1
    inv = tables.inverses(table)
    if labels is None:
        labels = [f"g{i}" for i in range(n)]
    return FusionRing(tuple(labels), tensor, tuple(inv))
