"""Exact permutation groups at desk scale.

Every group is materialized as a sorted tuple of elements; nothing here is
asymptotically clever, and that is the point: all representatives, orderings
and outputs are deterministic and cheap to reason about.

Composition convention, fixed globally: permutations act on the right,
``(f * g)(x) == g(f(x))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ClosureTooLarge

DEFAULT_CLOSURE_CAP = 10_000


class Permutation:
    """A permutation of {0, ..., n-1} stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection on 0..{len(images)-1}: {images}")
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles):
        """Build from 0-based disjoint cycles, e.g. ``[(0, 1, 2), (3, 4)]``."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                if a in seen:
                    raise ValueError(f"cycles not disjoint at point {a}")
                seen.add(a)
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, degree):
        """Parse 1-based cycle notation like ``"(1 2 3)(4 5)"`` or ``"()"``."""
        text = text.strip()
        if text in ("", "()", "e"):
            return cls.identity(degree)
        cycles = []
        for part in re.findall(r"\(([^()]*)\)", text):
            pts = [int(tok) - 1 for tok in re.split(r"[,\s]+", part.strip()) if tok]
            if not pts:
                continue
            if any(p < 0 or p >= degree for p in pts):
                raise ValueError(f"point out of range in {text!r} for degree {degree}")
            cycles.append(tuple(pts))
        return cls.from_cycles(degree, cycles)

    def __call__(self, x):
        return self.images[x]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        imgs = other.images
        return Permutation(imgs[i] for i in self.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def conjugate_by(self, g):
        """g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self, include_fixed=False):
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_string(self):
        """1-based cycle notation; identity prints as ``"()"``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __le__(self, other):
        return self.images <= other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def _close(degree, gens, cap):
    identity = Permutation.identity(degree)
    els = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                c = a * g
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > cap:
                        raise ClosureTooLarge(f"closure exceeds cap {cap}")
        frontier = new
    return els


class PermGroup:
    """A finite permutation group with its full, canonically sorted element list."""

    __slots__ = ("degree", "generators", "elements", "_index")

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._index = {g: i for i, g in enumerate(self.elements)}

    @classmethod
    def from_generators(cls, degree, gens, cap=DEFAULT_CLOSURE_CAP):
        gens = tuple(gens)
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != {degree}")
        return cls(degree, gens, _close(degree, gens, cap))

    @classmethod
    def from_elements(cls, degree, elements):
        """Wrap an already-closed element set (trusted)."""
        elements = tuple(sorted(set(elements)))
        gens = tuple(g for g in elements if not g.is_identity())
        return cls(degree, gens, elements)

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return Permutation.identity(self.degree)

    def __contains__(self, g):
        return g in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def index_of(self, g):
        return self._index[g]

    def is_subgroup(self, other):
        """True if ``other``'s elements all lie in this group."""
        return all(g in self._index for g in other.elements)

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def exponent(self):
        return math.lcm(*(g.order() for g in self.elements))

    def subgroup(self, gens):
        closed = _close(self.degree, tuple(gens), len(self.elements))
        return PermGroup(self.degree, tuple(gens), closed)

    def conjugacy_classes(self):
        """Partition into classes; reps are class minima; sorted by (size, rep)."""
        unassigned = set(self.elements)
        classes = []
        gens = self.generators or (self.identity,)
        while unassigned:
            x = min(unassigned)
            orbit = {x}
            frontier = [x]
            while frontier:
                new = []
                for y in frontier:
                    for g in gens:
                        z = y.conjugate_by(g)
                        if z not in orbit:
                            orbit.add(z)
                            new.append(z)
                frontier = new
            unassigned -= orbit
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda c: (len(c), c[0]))
        return [(c[0], c) for c in classes]

    def class_index_map(self):
        """Map element -> index of its conjugacy class (canonical class order)."""
        out = {}
        for j, (_, members) in enumerate(self.conjugacy_classes()):
            for g in members:
                out[g] = j
        return out

    def centralizer_of(self, g):
        """Subgroup of elements commuting with g (g need not lie here)."""
        members = [h for h in self.elements if h * g == g * h]
        return PermGroup.from_elements(self.degree, members)

    def center(self):
        gens = self.generators or (self.identity,)
        members = [h for h in self.elements if all(h * g == g * h for g in gens)]
        return PermGroup.from_elements(self.degree, members)

    def normal_closure(self, seed):
        """Smallest normal subgroup containing ``seed`` elements."""
        gens = list(seed)
        while True:
            sub = _close(self.degree, tuple(gens), len(self.elements)) if gens else {self.identity}
            grown = False
            for h in list(gens):
                for g in self.generators:
                    c = h.conjugate_by(g)
                    if c not in sub:
                        gens.append(c)
                        grown = True
            if not grown:
                return PermGroup(self.degree, tuple(gens), sub)

    def derived_subgroup(self):
        comms = {
            a.inverse() * b.inverse() * a * b
            for a in self.generators
            for b in self.generators
        }
        comms.discard(self.identity)
        return self.normal_closure(comms)

    def derived_series(self):
        series = [self]
        while series[-1].order > 1:
            nxt = series[-1].derived_subgroup()
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
        return series

    def lower_central_series(self):
        series = [self]
        while series[-1].order > 1:
            prev = series[-1]
            comms = {
                a.inverse() * b.inverse() * a * b
                for a in self.generators
                for b in prev.generators
            }
            comms.discard(self.identity)
            nxt = self.normal_closure(comms)
            if nxt.order == prev.order:
                break
            series.append(nxt)
        return series

    def is_solvable(self):
        return self.derived_series()[-1].order == 1

    def is_nilpotent(self):
        return self.lower_central_series()[-1].order == 1

    def coset_representatives(self, sub):
        """Canonical reps of the left cosets x*sub, in element order."""
        reps = []
        seen = set()
        for g in self.elements:
            if g not in seen:
                reps.append(g)
                seen.update(g * h for h in sub.elements)
        return reps

    def quotient_table(self, normal):
        """Cayley table of G/N on coset indices, plus element -> coset index."""
        coset_of = {}
        reps = []
        for g in self.elements:
            if g not in coset_of:
                idx = len(reps)
                reps.append(g)
                for h in normal.elements:
                    coset_of[g * h] = idx
        k = len(reps)
        table = [[coset_of[reps[i] * reps[j]] for j in range(k)] for i in range(k)]
        return table, coset_of

    def cayley_table(self):
        idx = self._index
        return [[idx[a * b] for b in self.elements] for a in self.elements]


@dataclass(frozen=True)
class Orbit:
    representative: object
    members: tuple
    stabilizer: PermGroup


class GroupAction:
    """Action table of a PermGroup on a finite labelled set.

    Convention: ``table[(g, x)]`` is g.x with ``(gh).x == g.(h.x)``.
    """

    def __init__(self, group, domain, table, verify=True):
        self.group = group
        self.domain = tuple(domain)
        self.table = dict(table)
        if verify:
            self._verify()

    @classmethod
    def from_function(cls, group, domain, act, verify=True):
        table = {(g, x): act(g, x) for g in group.elements for x in domain}
        return cls(group, domain, table, verify=verify)

    def _verify(self):
        e = self.group.identity
        for x in self.domain:
            if self.table[(e, x)] != x:
                raise ValueError(f"identity moves {x!r}")
        pairs = (
            ((g, h) for g in self.group.elements for h in self.group.elements)
            if self.group.order**2 * len(self.domain) <= 2_000_000
            else ((g, h) for g in self.group.generators for h in self.group.elements)
        )
        for g, h in pairs:
            gh = g * h
            for x in self.domain:
                if self.table[(gh, x)] != self.table[(g, self.table[(h, x)])]:
                    raise ValueError("not an action: composition fails")

    def apply(self, g, x):
        return self.table[(g, x)]

    def orbits(self):
        """Orbits sorted by (size, representative position); reps carry stabilizers."""
        pos = {x: i for i, x in enumerate(self.domain)}
        unseen = set(self.domain)
        out = []
        while unseen:
            x = min(unseen, key=pos.get)
            members = {self.table[(g, x)] for g in self.group.elements}
            stab = [g for g in self.group.elements if self.table[(g, x)] == x]
            unseen -= members
            out.append(
                Orbit(
                    representative=x,
                    members=tuple(sorted(members, key=pos.get)),
                    stabilizer=PermGroup.from_elements(self.group.degree, stab),
                )
            )
        out.sort(key=lambda o: (len(o.members), pos[o.representative]))
        return out


@dataclass(frozen=True)
class StructureInvariants:
    center: PermGroup
    commutator_subgroup: PermGroup
    abelianization_type: tuple
    is_solvable: bool
    is_nilpotent: bool


def group_from_generators(degree, gens, cap=DEFAULT_CLOSURE_CAP):
    return PermGroup.from_generators(degree, gens, cap=cap)


def conjugacy_classes(group):
    return group.conjugacy_classes()


def centralizer_in(group, g):
    return group.centralizer_of(g)


def orbits(action):
    return action.orbits()


def structure_invariants(group):
    from . import tables

    derived = group.derived_subgroup()
    qtable, _ = group.quotient_table(derived)
    return StructureInvariants(
        center=group.center(),
        commutator_subgroup=derived,
        abelianization_type=tables.abelian_invariants(qtable),
        is_solvable=group.is_solvable(),
        is_nilpotent=group.is_nilpotent(),
    )


# Named families.  All are realized on exactly n points so that family
# subgroups of S_n sit on the first points of the ambient set.

def symmetric_group(n, degree=None):
    degree = degree or n
    if n < 1 or degree < n:
        raise ValueError("need 1 <= n <= degree")
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles(degree, [(0, 1)]))
    if n >= 3:
        gens.append(Permutation.from_cycles(degree, [tuple(range(n))]))
    return PermGroup.from_generators(degree, gens, cap=math.factorial(n))


def alternating_group(n, degree=None):
    degree = degree or n
    if n < 1 or degree < n:
        raise ValueError("need 1 <= n <= degree")
    gens = []
    if n >= 3:
        gens.append(Permutation.from_cycles(degree, [(0, 1, 2)]))
    if n >= 4:
        cyc = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens.append(Permutation.from_cycles(degree, [cyc]))
    return PermGroup.from_generators(degree, gens, cap=max(math.factorial(n) // 2, 1))


def cyclic_group(n, degree=None):
    degree = degree or n
    if n < 1 or degree < n:
        raise ValueError("need 1 <= n <= degree")
    gens = [Permutation.from_cycles(degree, [tuple(range(n))])] if n > 1 else []
    return PermGroup.from_generators(degree, gens, cap=n)


def dihedral_group(n):
    """Symmetries of the regular n-gon on n points (order 2n); needs n >= 3."""
    if n < 3:
        raise ValueError("dihedral family realized on n points needs n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    refl = Permutation([(n - i) % n for i in range(n)])
    return PermGroup.from_generators(n, [rot, refl], cap=2 * n)


def quaternion_group():
    """The quaternion group of order 8 in its regular representation."""
    i = Permutation.from_cycles(8, [(0, 2, 1, 3), (4, 6, 5, 7)])
    j = Permutation.from_cycles(8, [(0, 4, 1, 5), (2, 7, 3, 6)])
    return PermGroup.from_generators(8, [i, j], cap=8)
