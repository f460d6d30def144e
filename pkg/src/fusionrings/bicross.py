"""Matched pairs from exact group factorizations and the representation
invariants of the split bicrossed product k^Gamma # kF.

Irreducibles are indexed by (F-orbit on Gamma, irreducible of the stabilizer);
their characters live on the basis {e_t # y}, products of characters follow
the comultiplication sum over factorizations g*h = t in Gamma, and fusion
multiplicities are recovered by solving against the linearly independent
simple characters, then certified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rings
from .chartab import character_table, irrep_matrices
from .cyclo import Cyclotomic, _monomial_reduction, _phi
from .errors import (
    GroupLawFailure,
    NonIntegralMultiplicity,
    NotAutomorphism,
    NotExactFactorization,
    SingularCharacterSystem,
)
from .perms import GroupAction, PermGroup


@dataclass(frozen=True)
class MatchedPair:
    """Exact factorization G = F*Gamma with the four induced actions.

    left/right actions: for s in Gamma, x in F the product s*x decomposes
    uniquely as (s |> x) * (s <| x) with s |> x in F and s <| x in Gamma.
    Dual actions do the same for x*s inside G = Gamma*F.
    """

    ambient: PermGroup
    f: PermGroup
    gamma: PermGroup
    right: dict   # (s, x) -> s |> x   in F
    left: dict    # (s, x) -> s <| x   in Gamma
    dual_left: dict   # (x, s) -> x <|' s  in F
    dual_right: dict  # (x, s) -> x |>' s  in Gamma

    def dual(self):
        """The matched pair of the dual product k^F # kGamma."""
        return matched_pair_from_factorization(self.ambient, self.gamma, self.f)

    def acts_trivially_right(self):
        return all(v == x for (s, x), v in self.right.items())


def matched_pair_from_factorization(group, f, gamma):
    """Verify G = F*Gamma exactly and compute all four action tables."""
    if not (group.is_subgroup(f) and group.is_subgroup(gamma)):
        raise NotExactFactorization("F and Gamma must be subgroups of the ambient group")
    if f.order * gamma.order != group.order:
        raise NotExactFactorization(
            f"|F|*|Gamma| = {f.order * gamma.order} != |G| = {group.order}"
        )
    common = set(f.elements) & set(gamma.elements)
    if len(common) != 1:
        raise NotExactFactorization(f"F and Gamma intersect in {len(common)} elements")
    decomp = {}
    for x in f.elements:
        for s in gamma.elements:
            decomp[x * s] = (x, s)
    if len(decomp) != group.order:
        raise NotExactFactorization("products F*Gamma do not cover the group")

    right, left = {}, {}
    for s in gamma.elements:
        for x in f.elements:
            fx, gs = decomp[s * x]
            right[(s, x)] = fx
            left[(s, x)] = gs

    dual_left, dual_right = {}, {}
    for x in f.elements:
        for s in gamma.elements:
            dual_left[(x, s)] = right[(s.inverse(), x.inverse())].inverse()
            dual_right[(x, s)] = left[(s.inverse(), x.inverse())].inverse()
            prod = dual_right[(x, s)] * dual_left[(x, s)]
            if prod != x * s:
                raise NotExactFactorization("dual decomposition identity failed")

    return MatchedPair(
        ambient=group,
        f=f,
        gamma=gamma,
        right=right,
        left=left,
        dual_left=dual_left,
        dual_right=dual_right,
    )


def bowtie_group(mp):
    """The group on F x Gamma with (x,s)(y,t) = (x(s|>y), (s<|y)t), realized
    inside the ambient group via (x,s) -> x*s; the law is verified."""
    g = mp.ambient
    sample_all = g.order <= 400
    fs = mp.f.elements
    gs = mp.gamma.elements
    xs = fs if sample_all else mp.f.generators + (mp.f.identity,)
    ss = gs if sample_all else mp.gamma.generators + (mp.gamma.identity,)
    for x in xs:
        for s in ss:
            for y in fs:
                for t in gs if sample_all else (mp.gamma.identity,) + mp.gamma.generators:
                    lhs = (x * s) * (y * t)
                    rhs = (x * mp.right[(s, y)]) * (mp.left[(s, y)] * t)
                    if lhs != rhs:
                        raise GroupLawFailure(f"law fails at {(x, s, y, t)}")
    return g


def gamma_action(mp):
    """The F-action on Gamma's elements as a left GroupAction (via <| of x^-1)."""
    table = {}
    for s in mp.gamma.elements:
        for x in mp.f.elements:
            table[(x, mp.left[(s, x)])] = s
    return GroupAction(mp.f, mp.gamma.elements, table, verify=True)


@dataclass(frozen=True)
class ExtIrrep:
    """One irreducible of k^Gamma # kF: an F-orbit representative on Gamma,
    a stabilizer irreducible, and the induced-module data."""

    orbit_rep: object
    stabilizer: PermGroup
    stab_table: object
    stab_row: int
    coset_reps: tuple
    weights: tuple  # weights[i] = orbit_rep <| coset_reps[i]^(-1), all distinct

    @property
    def stab_degree(self):
        return self.stab_table.degrees[self.stab_row]

    @property
    def dim(self):
        return len(self.coset_reps) * self.stab_degree

    def character_value(self, mp, t, y):
        """chi(e_t # y); nonzero only when t sits in the orbit and y returns
        the matching coset to itself."""
        try:
            i = self.weights.index(t)
        except ValueError:
            return Cyclotomic.zero()
        xi = self.coset_reps[i]
        f = xi.inverse() * y * xi
        if f not in self.stabilizer:
            return Cyclotomic.zero()
        return self.stab_table.value(self.stab_row, f)

    def module_matrices(self, mp):
        """Explicit action matrices: weight vector for the idempotents e_t and
        a matrix for each 1 # y, on the basis (coset rep) x (stab irrep basis)."""
        umats = irrep_matrices(self.stab_table, self.stab_row)
        d = self.stab_degree
        c = len(self.coset_reps)
        rep_pos = {x: i for i, x in enumerate(self.coset_reps)}
        coset_of = {}
        for i, x in enumerate(self.coset_reps):
            for h in self.stabilizer.elements:
                coset_of[x * h] = i
        mats = {}
        zero = Cyclotomic.zero()
        for y in mp.f.elements:
            mat = [[zero] * (c * d) for _ in range(c * d)]
            for i, xi in enumerate(self.coset_reps):
                j = coset_of[y * xi]
                fij = self.coset_reps[j].inverse() * (y * xi)
                u = umats[fij]
                for a in range(d):
                    for b in range(d):
                        mat[j * d + a][i * d + b] = u[a][b]
            mats[y] = tuple(tuple(r) for r in mat)
        return self.weights, mats


def split_irreps(mp, cocycles=None):
    """All irreducibles of k^Gamma # kF in canonical order (unit first).

    Only the split case is supported; passing cocycle data is rejected.
    """
    if cocycles is not None:
        raise ValueError("only split products (trivial cocycles) are supported")
    orbits = gamma_action(mp).orbits()
    out = []
    for orb in orbits:
        s = orb.representative
        stab = orb.stabilizer
        table = character_table(stab)
        # coset rep x_i <-> weight s <| x_i^(-1); enumerate cosets canonically
        reps = mp.f.coset_representatives(stab)
        weights = tuple(mp.left[(s, x.inverse())] for x in reps)
        assert sorted(weights) == sorted(orb.members)
        for row in range(table.num_classes):
            out.append(
                ExtIrrep(
                    orbit_rep=s,
                    stabilizer=stab,
                    stab_table=table,
                    stab_row=row,
                    coset_reps=tuple(reps),
                    weights=weights,
                )
            )
    dims = [w.dim for w in out]
    if sum(d * d for d in dims) != mp.f.order * mp.gamma.order:
        raise NonIntegralMultiplicity("irreducible dimensions do not exhaust dim H")
    return out


def split_type(mp):
    """Type signature of Rep(k^Gamma # kF) from orbit data alone (cheap)."""
    counts = {}
    for w in split_irreps(mp):
        counts[w.dim] = counts.get(w.dim, 0) + 1
    return tuple(sorted(counts.items()))


def _encode(value, m):
    """Canonical cyclotomic value -> integer coefficient vector over zeta_m."""
    vec = [0] * m
    if value.is_zero():
        return vec
    if m % value.conductor:
        raise SingularCharacterSystem(f"value at conductor {value.conductor} outside Q(zeta_{m})")
    lift = m // value.conductor
    for e, c in value.coeffs.items():
        if c.denominator != 1:
            raise SingularCharacterSystem("character value is not an algebraic integer")
        vec[e * lift] = int(c)
    return vec


def split_fusion_ring(mp, cocycles=None):
    """The based ring of Rep(k^Gamma # kF) via exact character decomposition."""
    irreps = split_irreps(mp, cocycles)
    n = len(irreps)
    gamma_els = mp.gamma.elements
    f_els = mp.f.elements
    m = mp.f.exponent()
    phim = _phi(m)
    reduction = np.array(_monomial_reduction(m), dtype=np.int64)  # (2m-1, phim)

    g_idx = {g: i for i, g in enumerate(gamma_els)}
    f_idx = {x: i for i, x in enumerate(f_els)}
    n_gamma, n_f = len(gamma_els), len(f_els)

    # per-irrep sparse characters: orbit element index -> (n_f, m) int matrix
    chi_int = []
    chi_cyc = []
    for w in irreps:
        rows = {}
        vals = {}
        for i, xi in enumerate(w.coset_reps):
            t = w.weights[i]
            block = np.zeros((n_f, m), dtype=np.int64)
            xi_inv = xi.inverse()
            for yi, y in enumerate(f_els):
                f = xi_inv * y * xi
                if f in w.stabilizer:
                    v = w.stab_table.value(w.stab_row, f)
                    if not v.is_zero():
                        block[yi] = _encode(v, m)
                        vals[(g_idx[t], yi)] = v
            rows[g_idx[t]] = block
        chi_int.append(rows)
        chi_cyc.append(vals)

    # pivot columns: greedily select (t, y) columns keeping the n x n system invertible
    pivots = _select_pivot_columns(chi_cyc, n, n_gamma, n_f)

    # gamma multiplication index helpers
    inv_of = [g_idx[g.inverse()] for g in gamma_els]
    mul = np.empty((n_gamma, n_gamma), dtype=np.int64)
    for a, ga in enumerate(gamma_els):
        for b, gb in enumerate(gamma_els):
            mul[a, b] = g_idx[ga * gb]
    radj = np.empty((n_gamma, n_f), dtype=np.int64)
    for s in gamma_els:
        for x in f_els:
            radj[g_idx[s], f_idx[x]] = f_idx[mp.right[(s, x)]]

    t_canon = np.zeros((len(pivots), n, n, phim), dtype=np.int64)
    for k, (t_i, y_i) in enumerate(pivots):
        # A[i, h, :] = chi_i(e_{t h^-1} # (h |> y)); B[j, h, :] = chi_j(e_h # y)
        a = np.zeros((n, n_gamma, m), dtype=np.int64)
        b = np.zeros((n, n_gamma, m), dtype=np.int64)
        for h in range(n_gamma):
            g = mul[t_i, inv_of[h]]
            y2 = radj[h, y_i]
            for i in range(n):
                blk = chi_int[i].get(g)
                if blk is not None:
                    a[i, h] = blk[y2]
                blk = chi_int[i].get(h)
                if blk is not None:
                    b[i, h] = blk[y_i]
        acc = np.zeros((n, n, m), dtype=np.int64)
        af = a.astype(np.float64)
        bf = b.astype(np.float64)
        for ea in range(m):
            if not a[:, :, ea].any():
                continue
            left = af[:, :, ea]
            for eb in range(m):
                if not b[:, :, eb].any():
                    continue
                prod = left @ bf[:, :, eb].T
                acc[:, :, (ea + eb) % m] += np.rint(prod).astype(np.int64)
        t_canon[k] = acc @ reduction[:m]

    # canonical coordinates of simple characters at the pivots
    x_canon = np.zeros((n, len(pivots), phim), dtype=np.int64)
    for k, (t_i, y_i) in enumerate(pivots):
        for l in range(n):
            v = chi_cyc[l].get((t_i, y_i))
            if v is not None:
                x_canon[l, k] = np.array(_encode(v, m), dtype=np.int64) @ reduction[:m]

    design = x_canon.reshape(n, -1).T.astype(np.float64)  # (piv*phim, n)
    rhs = t_canon.transpose(0, 3, 1, 2).reshape(len(pivots) * phim, n * n)
    sol, *_ = np.linalg.lstsq(design, rhs.astype(np.float64), rcond=None)
    mult = np.rint(sol).astype(np.int64)
    # exact certification of the solved decomposition at the pivot columns
    check = x_canon.reshape(n, -1).T  # int64
    if not np.array_equal(check @ mult, rhs):
        raise NonIntegralMultiplicity("character decomposition failed exact check")
    if mult.min() < 0:
        raise NonIntegralMultiplicity("negative multiplicity")
    tensor = mult.T.reshape(n, n, n)

    dims = np.array([w.dim for w in irreps], dtype=np.int64)
    if not np.array_equal(tensor.astype(np.float64) @ dims, np.outer(dims, dims)):
        raise NonIntegralMultiplicity("dimension additivity failed")

    labels = tuple(f"({w.orbit_rep.cycle_string()},{w.stab_row})" for w in irreps)
    ring = rings.FusionRing(labels, tensor)
    rings.validate(ring)
    got = rings.fp_dims(ring)
    if not (got.exact and got.dims == tuple(int(d) for d in dims)):
        raise NonIntegralMultiplicity("ring dimensions disagree with induced dimensions")
    return ring


def _select_pivot_columns(chi_cyc, n, n_gamma, n_f):
    zero = Cyclotomic.zero()
    echelon = []
    piv_rows = []
    pivots = []
    for t_i in range(n_gamma):
        for y_i in range(n_f):
            col = [chi_cyc[l].get((t_i, y_i), zero) for l in range(n)]
            if all(v.is_zero() for v in col):
                continue
            red = list(col)
            for prev, pr in zip(echelon, piv_rows):
                fct = red[pr]
                if not fct.is_zero():
                    red = [x - fct * y for x, y in zip(red, prev)]
            pr = next((i for i, x in enumerate(red) if not x.is_zero()), None)
            if pr is None:
                continue
            inv = red[pr].inverse()
            red = [x * inv for x in red]
            echelon.append(red)
            piv_rows.append(pr)
            pivots.append((t_i, y_i))
            if len(pivots) == n:
                return pivots
    raise SingularCharacterSystem(f"only {len(pivots)} independent character columns")


def dual_invertibles(mp):
    """The invertibles of Rep(k^Gamma # kF): one-dimensional F-characters
    extended by the <|-fixed points of Gamma (split case)."""
    table_f = character_table(mp.f)
    lin_rows = [r for r in range(table_f.num_classes) if table_f.degrees[r] == 1]
    chars = []
    for r in lin_rows:
        chars.append(tuple(table_f.value(r, x) for x in mp.f.elements))
    char_pos = {c: i for i, c in enumerate(chars)}
    fixed = [
        s
        for s in mp.gamma.elements
        if all(mp.left[(s, x)] == s for x in mp.f.elements)
    ]
    fixed_pos = {s: i for i, s in enumerate(fixed)}
    f_pos = {x: i for i, x in enumerate(mp.f.elements)}

    def act(s, char):
        return tuple(char[f_pos[mp.dual_left[(x, s)]]] for x in mp.f.elements)

    elements = [(ci, si) for ci in range(len(chars)) for si in range(len(fixed))]
    pos = {e: i for i, e in enumerate(elements)}
    k = len(elements)
    table = [[0] * k for _ in range(k)]
    for i, (ci, si) in enumerate(elements):
        for j, (cj, sj) in enumerate(elements):
            moved = act(fixed[si], chars[cj])
            prod_char = tuple(a * b for a, b in zip(chars[ci], moved))
            s_new = fixed[si] * fixed[sj]
            table[i][j] = pos[(char_pos[prod_char], fixed_pos[s_new])]
    from . import tables as _tables

    _tables.check_table(table)
    return DualInvertibles(
        order=k,
        table=tuple(map(tuple, table)),
        name=_tables.iso_name(table),
        center_order=len(_tables.center(table)),
    )


@dataclass(frozen=True)
class DualInvertibles:
    order: int
    table: tuple
    name: str
    center_order: int


def equivariantization_type(ring, action, p):
    """Type of the prime-order equivariantization attached to a fusion-ring
    automorphism whose order divides p (cyclic case: trivial cocycles)."""
    n = ring.size
    action = tuple(action)
    if sorted(action) != list(range(n)) or action[0] != 0:
        raise NotAutomorphism("action must be a unit-fixing basis bijection")
    if not np.array_equal(ring.N[np.ix_(action, action, action)], ring.N):
        raise NotAutomorphism("action does not preserve the fusion rules")
    power = list(range(n))
    for _ in range(p):
        power = [action[i] for i in power]
    if power != list(range(n)):
        raise NotAutomorphism(f"action order does not divide {p}")
    dims = rings.fp_dims(ring)
    if not dims.exact:
        raise NotAutomorphism("equivariantization needs integer dimensions")
    seen = set()
    counts = {}
    for i in range(n):
        if i in seen:
            continue
        orbit = {i}
        j = action[i]
        while j != i:
            orbit.add(j)
            j = action[j]
        seen |= orbit
        if len(orbit) == 1:
            counts[dims.dims[i]] = counts.get(dims.dims[i], 0) + p
        elif len(orbit) == p:
            d = p * dims.dims[i]
            counts[d] = counts.get(d, 0) + 1
        else:
            raise NotAutomorphism("orbit size neither 1 nor p")
    sig = tuple(sorted(counts.items()))
    if sum(d * d * c for d, c in sig) != p * dims.total:
        raise NotAutomorphism("squared dimensions do not rescale by p")
    return sig
