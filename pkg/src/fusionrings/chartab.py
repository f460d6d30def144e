"""Exact character tables of finite groups, and the based ring of Rep G.

The table is computed by the classical class-sum eigenvector method: the
commuting class-sum matrices are simultaneously diagonalized over a prime
field F_p with p = 1 (mod exponent) and p beyond the lift bound, and the
eigenvalues are pulled back to exact root-of-unity sums through a discrete
logarithm against a fixed primitive root.  All certification (orthogonality,
degree sums) happens in exact cyclotomic arithmetic afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import rings
from .cyclo import Cyclotomic
from .errors import LengthMismatch, LiftFailure, NonIntegralMultiplicity

# ---------------------------------------------------------------------------
# F_p utilities


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _prime_factors(n):
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


def dixon_prime(order, exponent, max_class_size):
    """Smallest prime = 1 (mod exponent) above the lift safeguard bound."""
    bound = 2 * math.isqrt(order) * max_class_size + 1
    p = (bound // exponent + 1) * exponent + 1
    while not _is_prime(p):
        p += exponent
    return p


def _primitive_root(p):
    facs = _prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in facs):
            return g
        g += 1


def _sqrt_mod(a, p):
    """Tonelli-Shanks; returns r with r^2 = a (mod p) or None."""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) == 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r


# dense ascending-coefficient polynomials over F_p


def _pnorm(f):
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def _pmul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pnorm(out)


def _pmod(f, g, p):
    f = list(f)
    dg = len(g) - 1
    inv = pow(g[-1], p - 2, p)
    while len(f) - 1 >= dg and any(f):
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        if c:
            for j, b in enumerate(g):
                f[shift + j] = (f[shift + j] - c * b) % p
        f.pop()
    return _pnorm(f if f else [0])


def _pgcd(f, g, p):
    f, g = list(f), list(g)
    while g != [0]:
        f, g = g, _pmod(f, g, p)
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pmod(base, mod, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), mod, p)
        base = _pmod(_pmul(base, base, p), mod, p)
        e >>= 1
    return result


def _proots(f, p):
    """Distinct roots of f over F_p (f is assumed to split into linears)."""
    f = _pnorm(list(f))
    roots = []
    if f[0] == 0:
        roots.append(0)
        while f[0] == 0 and len(f) > 1:
            f = f[1:]
    if len(f) == 1:
        return sorted(roots)
    if len(f) == 2:
        roots.append((-f[0]) * pow(f[1], p - 2, p) % p)
        return sorted(roots)
    xp = _ppowmod([0, 1], p, f, p)
    while len(xp) < 2:
        xp.append(0)
    xp[1] = (xp[1] - 1) % p
    g = _pgcd(f, _pnorm(xp), p)

    def split(h):
        if len(h) == 1:
            return
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], p - 2, p) % p)
            return
        a = 0
        while True:
            t = _ppowmod([a, 1], (p - 1) // 2, h, p)
            t[0] = (t[0] - 1) % p
            d = _pgcd(h, _pnorm(t), p)
            if 1 < len(d) < len(h):
                split(d)
                split(_pdiv_exact(h, d, p))
                return
            a += 1

    split(g)
    return sorted(roots)


def _pdiv_exact(f, g, p):
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    inv = pow(g[-1], p - 2, p)
    for i in range(len(q) - 1, -1, -1):
        c = f[i + len(g) - 1] * inv % p
        q[i] = c
        if c:
            for j, b in enumerate(g):
                f[i + j] = (f[i + j] - c * b) % p
    return _pnorm(q)


def _charpoly(mat, p):
    """Faddeev-LeVerrier over F_p; ascending coefficients, monic."""
    n = len(mat)
    a = np.array(mat, dtype=object)
    eye = np.identity(n, dtype=object)
    m = eye.copy()
    coeffs = [1]  # leading
    for k in range(1, n + 1):
        m = (a @ m) % p
        c = (-sum(int(m[i, i]) for i in range(n)) * pow(k, p - 2, p)) % p
        coeffs.append(c)
        m = (m + c * eye) % p
    return coeffs[::-1]


def _nullspace(mat, p):
    """Row basis of the right nullspace of mat over F_p."""
    rows = len(mat)
    cols = len(mat[0])
    a = [list(r) for r in mat]
    pivots = []
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if a[r][col] % p), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [v * inv % p for v in a[rank]]
        for r in range(rows):
            if r != rank and a[r][col] % p:
                f = a[r][col]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-a[r][fc]) % p
        basis.append(v)
    return basis


def _column_echelon(cols, p):
    """Reduce a list of column vectors; returns (columns, pivot_rows)."""
    out = []
    pivots = []
    for c in cols:
        c = list(c)
        for pc, pr in zip(out, pivots):
            f = c[pr]
            if f:
                c = [(x - f * y) % p for x, y in zip(c, pc)]
        pr = next((i for i, x in enumerate(c) if x % p), None)
        if pr is None:
            continue
        inv = pow(c[pr], p - 2, p)
        c = [x * inv % p for x in c]
        for i, (pc, opr) in enumerate(zip(out, pivots)):
            f = pc[pr]
            if f:
                out[i] = [(x - f * y) % p for x, y in zip(pc, c)]
        out.append(c)
        pivots.append(pr)
    return out, pivots


# ---------------------------------------------------------------------------
# the table


@dataclass(frozen=True)
class CharacterTable:
    group: object
    classes: tuple          # (representative, size) per class, canonical order
    class_of: object        # dict element -> class index
    exponent: int
    degrees: tuple
    chars: tuple            # rows of Cyclotomic values, trivial character first
    dixon_prime: int

    @property
    def num_classes(self):
        return len(self.classes)

    def value(self, row, element):
        return self.chars[row][self.class_of[element]]


def character_table(group):
    """Complete exact character table in canonical row order."""
    classes = group.conjugacy_classes()
    r = len(classes)
    class_of = group.class_index_map()
    reps = [rep for rep, _ in classes]
    sizes = [len(members) for _, members in classes]
    exponent = group.exponent()
    order = group.order
    p = dixon_prime(order, exponent, max(sizes))

    # class multiplication constants a[i][j][k]
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = reps[k]
        for x in group.elements:
            i = class_of[x]
            j = class_of[x.inverse() * z]
            a[i][j][k] += 1

    mats = [[[a[i][j][k] % p for k in range(r)] for j in range(r)] for i in range(r)]
    spaces = _common_eigenlines(mats, p, r)
    if any(len(cols) != 1 for cols, _ in spaces):
        raise LiftFailure("class algebra did not split into lines")

    e_idx = 0  # identity class is first in canonical order
    omegas = []
    for cols, _ in spaces:
        w = list(cols[0])
        if w[e_idx] == 0:
            raise LiftFailure("eigenvector vanishes at the identity class")
        inv = pow(w[e_idx], p - 2, p)
        omegas.append([x * inv % p for x in w])

    inv_class = [class_of[reps[j].inverse()] for j in range(r)]
    chars_fp = []
    degrees = []
    for w in omegas:
        s = sum(w[j] * w[inv_class[j]] * pow(sizes[j], p - 2, p) for j in range(r)) % p
        d2 = order * pow(s, p - 2, p) % p
        root = _sqrt_mod(d2, p)
        if root is None:
            raise LiftFailure("degree is not a square mod p")
        deg = min(root, p - root)
        if deg == 0 or order % deg or deg * deg > order:
            raise LiftFailure(f"implausible degree {deg}")
        degrees.append(deg)
        chars_fp.append([deg * w[j] * pow(sizes[j], p - 2, p) % p for j in range(r)])

    if sum(d * d for d in degrees) != order:
        raise LiftFailure("degree squares do not sum to the group order")

    # lift to exact cyclotomic values
    g0 = _primitive_root(p)
    z_e = pow(g0, (p - 1) // exponent, p)
    powmap = []
    for j in range(r):
        g = reps[j]
        m = g.order()
        row = []
        x = group.identity
        for _ in range(m):
            row.append(class_of[x])
            x = x * g
        powmap.append(row)

    rows = []
    for deg, fvals in zip(degrees, chars_fp):
        values = []
        for j in range(r):
            m = len(powmap[j])
            zm = pow(z_e, exponent // m, p)
            minv = pow(m, p - 2, p)
            coeffs = {}
            for k in range(m):
                ck = minv * sum(
                    fvals[powmap[j][l]] * pow(zm, (-l * k) % (p - 1), p) for l in range(m)
                ) % p
                if ck:
                    if ck > deg:
                        raise LiftFailure(f"eigenvalue multiplicity {ck} exceeds degree {deg}")
                    coeffs[k] = Fraction(ck)
            values.append(Cyclotomic(m, coeffs))
        rows.append((deg, tuple(values)))

    rows.sort(key=lambda dr: (dr[0], tuple(v.sort_key() for v in dr[1])))
    one = Cyclotomic.one()
    triv = next(i for i, (_, vals) in enumerate(rows) if all(v == one for v in vals))
    rows.insert(0, rows.pop(triv))

    table = CharacterTable(
        group=group,
        classes=tuple((rep, size) for rep, size in zip(reps, sizes)),
        class_of=class_of,
        exponent=exponent,
        degrees=tuple(d for d, _ in rows),
        chars=tuple(vals for _, vals in rows),
        dixon_prime=p,
    )
    _certify(table)
    return table


def _common_eigenlines(mats, p, r):
    """Simultaneous eigenspace refinement of commuting matrices over F_p.

    Spaces are kept as (echelonized column basis, pivot rows); the class
    algebra is semisimple and split, so refinement ends in r lines.
    """
    eye = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    spaces = [_column_echelon(eye, p)]
    for m in mats:
        if all(len(cols) == 1 for cols, _ in spaces):
            break
        refined = []
        for cols, pivot_rows in spaces:
            d = len(cols)
            if d == 1:
                refined.append((cols, pivot_rows))
                continue
            images = [
                tuple(sum(m[i][k] * c[k] for k in range(r)) % p for i in range(r))
                for c in cols
            ]
            # coordinates in the echelon basis read off at the pivot rows
            op = [[images[j][pivot_rows[i]] for j in range(d)] for i in range(d)]
            for j in range(d):
                recon = [sum(op[s][j] * cols[s][t] for s in range(d)) % p for t in range(r)]
                if list(images[j]) != recon:
                    raise LiftFailure("subspace not invariant under class sum")
            for lam in _proots(_charpoly(op, p), p):
                shifted = [
                    [(op[i][j] - (lam if i == j else 0)) % p for j in range(d)]
                    for i in range(d)
                ]
                lifted = []
                for coords in _nullspace(shifted, p):
                    lifted.append(
                        tuple(sum(coords[s] * cols[s][t] for s in range(d)) % p for t in range(r))
                    )
                if lifted:
                    refined.append(_column_echelon(lifted, p))
        spaces = refined
    return spaces


def _certify(table):
    """Exact orthogonality and degree checks; LiftFailure on any miss."""
    r = table.num_classes
    order = table.group.order
    sizes = [s for _, s in table.classes]
    for i in range(r):
        for k in range(i, r):
            acc = Cyclotomic.zero()
            for j in range(r):
                acc = acc + table.chars[i][j] * table.chars[k][j].conjugate() * sizes[j]
            want = order if i == k else 0
            if acc != Cyclotomic.rational(want):
                raise LiftFailure(f"row orthogonality failed at ({i},{k})")
    for i in range(r):
        if table.chars[i][0] != Cyclotomic.rational(table.degrees[i]):
            raise LiftFailure("degree column mismatch")


# ---------------------------------------------------------------------------
# class functions and the representation ring


def inner_product(table, a, b):
    """(1/|G|) sum over classes of size * a_j * conj(b_j)."""
    r = table.num_classes
    if len(a) != r or len(b) != r:
        raise LengthMismatch(f"expected {r} values")
    acc = Cyclotomic.zero()
    for j, (_, size) in enumerate(table.classes):
        acc = acc + Cyclotomic._coerce(a[j]) * Cyclotomic._coerce(b[j]).conjugate() * size
    return acc / table.group.order


def rep_g_fusion_ring(table):
    """The based ring of Rep G from exact character arithmetic."""
    r = table.num_classes
    chars = table.chars
    tensor = np.zeros((r, r, r), dtype=np.int64)
    for x in range(r):
        for y in range(x, r):
            prod = [chars[x][j] * chars[y][j] for j in range(r)]
            for z in range(r):
                mult = inner_product(table, prod, chars[z])
                q = mult.rational_part()
                if q is None or q.denominator != 1 or q < 0:
                    raise NonIntegralMultiplicity(f"<{x}*{y},{z}> = {mult}")
                tensor[x, y, z] = int(q)
                tensor[y, x, z] = int(q)
    dual = []
    for x in range(r):
        conj = tuple(v.conjugate() for v in chars[x])
        dual.append(next(i for i in range(r) if chars[i] == conj))
    labels = tuple(f"chi{i}" for i in range(r))
    ring = rings.FusionRing(labels, tensor, tuple(dual))
    rings.validate(ring)
    dims = rings.fp_dims(ring)
    if not (dims.exact and dims.dims == table.degrees):
        raise NonIntegralMultiplicity("ring dimensions disagree with character degrees")
    return ring


# ---------------------------------------------------------------------------
# explicit irreducible matrices (used for induced-module constructions)


@lru_cache(maxsize=None)
def _all_subgroups(group):
    triv = frozenset([group.identity])
    cyclic = {frozenset(group.subgroup([g]).elements) for g in group.elements}
    cyclic.add(triv)
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        new = set()
        for a in frontier:
            for b in cyclic:
                if b <= a:
                    continue
                c = frozenset(group.subgroup(list(a | b)).elements)
                if c not in found:
                    found.add(c)
                    new.add(c)
        frontier = new
    return sorted(found, key=lambda s: (-len(s), sorted(s)))


def irrep_matrices(table, row):
    """Exact matrices of one irreducible, as a dict element -> tuple-matrix.

    Realized inside the smallest coset action containing the character once;
    the trace of every returned matrix is certified against the table.
    """
    group = table.group
    deg = table.degrees[row]
    if deg == 1:
        return {g: ((table.value(row, g),),) for g in group.elements}
    for sub_elems in _all_subgroups(group):
        acc = Cyclotomic.zero()
        for h in sub_elems:
            acc = acc + table.value(row, h)
        mult = (acc / len(sub_elems)).rational_part()
        if mult != 1:
            continue
        sub = group.subgroup([g for g in sub_elems if not g.is_identity()] or [group.identity])
        reps = group.coset_representatives(sub)
        c = len(reps)
        coset_of = {}
        for i, x in enumerate(reps):
            for h in sub.elements:
                coset_of[x * h] = i
        perm_of = {g: [coset_of[g * x] for x in reps] for g in group.elements}
        # isotypic projector (deg/|G|) sum chi(g^-1) rho(g)
        proj = [[Cyclotomic.zero() for _ in range(c)] for _ in range(c)]
        for g in group.elements:
            coeff = table.value(row, g.inverse())
            if coeff.is_zero():
                continue
            pg = perm_of[g]
            for j in range(c):
                proj[pg[j]][j] = proj[pg[j]][j] + coeff
        scale = Fraction(deg, group.order)
        cols = [[proj[i][j] * scale for i in range(c)] for j in range(c)]
        basis, pivots = _cyclo_column_echelon(cols)
        if len(basis) != deg:
            continue
        mats = {}
        ok = True
        for g in group.elements:
            pg_inv = perm_of[g.inverse()]
            permuted = [[basis[l][pg_inv[i]] for l in range(deg)] for i in range(c)]
            mat = tuple(tuple(permuted[pivots[i]][l] for l in range(deg)) for i in range(deg))
            tr = Cyclotomic.zero()
            for i in range(deg):
                tr = tr + mat[i][i]
            if tr != table.value(row, g):
                ok = False
                break
            mats[g] = mat
        if ok:
            return mats
    raise LiftFailure(f"no multiplicity-one coset realization for character {row}")


def _cyclo_column_echelon(cols):
    """Column echelon over Q(zeta); returns (independent columns, pivot rows)."""
    out = []
    pivots = []
    for col in cols:
        col = list(col)
        for prev, pr in zip(out, pivots):
            f = col[pr]
            if not f.is_zero():
                col = [x - f * y for x, y in zip(col, prev)]
        pr = next((i for i, x in enumerate(col) if not x.is_zero()), None)
        if pr is None:
            continue
        inv = col[pr].inverse()
        col = [x * inv for x in col]
        for i in range(len(out)):
            f = out[i][pr]
            if not f.is_zero():
                out[i] = [x - f * y for x, y in zip(out[i], col)]
        out.append(col)
        pivots.append(pr)
    return out, pivots
