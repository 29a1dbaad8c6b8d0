"""Subgroup lattices of small permutation groups.

Subgroups are stored as bitsets over the group's element list.  The lattice
is built bottom-up by cyclic extension: starting from the trivial group, each
class representative H is joined with every cyclic subgroup of prime-power
order not already inside it.  Every subgroup K > 1 arises this way, because
for a maximal subgroup M of K some prime-power element of K lies outside M,
and then K = <M, c>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import CapExceeded, VerificationError
from .groups import LATTICE_CAP, PermGroup
from .perm import Permutation, compose, conjugate, order as perm_order


def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = next(d for d in range(2, k + 1) if k % d == 0)
    while k % p == 0:
        k //= p
    return k == 1


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass
class SubgroupClass:
    """A conjugacy class of subgroups."""

    id: int
    order: int
    representative: PermGroup
    members: list[int] = field(repr=False)
    core: int = field(repr=False, default=0)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_normal(self) -> bool:
        return len(self.members) == 1

    def core_order(self) -> int:
        return self.core.bit_count()

    @property
    def core_free(self) -> bool:
        return self.core == 1


class SubgroupLattice:
    """All subgroups of ``G`` grouped into conjugacy classes, ordered by
    subgroup order (then by the order they were found)."""

    def __init__(self, G: PermGroup, cap: int = LATTICE_CAP):
        if G.order() > cap:
            raise CapExceeded(f"group of order {G.order()} exceeds lattice cap {cap}")
        self.group = G
        self.elements = G.elements()
        self.index = {g: i for i, g in enumerate(self.elements)}
        idn = self.index[G.identity()]
        if idn != 0:
            raise VerificationError("identity must be the first element")
        self._conj = [[self.index[conjugate(g, s)] for g in self.elements] for s in G.generators]
        self._build()

    def _mask(self, elems) -> int:
        m = 0
        for g in elems:
            m |= 1 << self.index[g]
        return m

    def _closure(self, gens: list[Permutation]) -> int:
        seen = {self.elements[0]}
        queue = [self.elements[0]]
        for g in queue:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    queue.append(h)
        return self._mask(seen)

    def _conjugates(self, mask: int) -> list[int]:
        orbit = [mask]
        seen = {mask}
        for m in orbit:
            bits = _bits(m)
            for table in self._conj:
                c = 0
                for b in bits:
                    c |= 1 << table[b]
                if c not in seen:
                    seen.add(c)
                    orbit.append(c)
        return orbit

    def _build(self) -> None:
        n = self.group.degree
        cyclics: dict[int, Permutation] = {}
        for g in self.elements:
            if _is_prime_power(perm_order(g)):
                m = self._closure([g])
                cyclics.setdefault(m, g)

        found: dict[int, int] = {}  # subgroup mask -> provisional class id
        raw = []  # (mask, gens, members)

        def register(mask, gens):
            if mask in found:
                return False
            members = self._conjugates(mask)
            cid = len(raw)
            for m in members:
                found[m] = cid
            raw.append((mask, gens, members))
            return True

        register(1, [])
        k = 0
        while k < len(raw):
            mask, gens, _ = raw[k]
            for cmask, c in cyclics.items():
                if cmask & ~mask == 0:
                    continue
                new_gens = gens + [c]
                sub = self._closure(new_gens)
                if sub not in found:
                    register(sub, new_gens)
            k += 1

        order_key = sorted(range(len(raw)), key=lambda i: (raw[i][0].bit_count(), i))
        self.classes: list[SubgroupClass] = []
        for new_id, i in enumerate(order_key):
            mask, gens, members = raw[i]
            core = members[0]
            for m in members[1:]:
                core &= m
            rep = PermGroup(gens, n)
            self.classes.append(SubgroupClass(new_id, mask.bit_count(), rep, sorted(members), core))
        self.subgroups: list[int] = [m for c in self.classes for m in c.members]
        self.class_of = {m: c.id for c in self.classes for m in c.members}
        if self.classes[-1].order != self.group.order():
            raise VerificationError("lattice does not reach the whole group")

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.classes)

    def containing_counts(self, cls: SubgroupClass) -> dict[int, int]:
        """For the representative H of ``cls``: class id -> number of members
        of that class containing H (including H itself)."""
        h = cls.members[0]
        counts = {}
        for other in self.classes:
            if other.order < cls.order or other.order % cls.order:
                continue
            k = sum(1 for m in other.members if h & ~m == 0)
            if k:
                counts[other.id] = k
        return counts

    def members_as_groups(self, cls: SubgroupClass) -> list[PermGroup]:
        return [self.group.closure_of(self.elements[b] for b in _bits(m)) for m in cls.members]

    def elements_of(self, mask: int) -> list[Permutation]:
        return [self.elements[b] for b in _bits(mask)]

    def classes_of_index(self, index: int) -> list[SubgroupClass]:
        N = self.group.order()
        return [c for c in self.classes if c.order * index == N]

    @cached_property
    def maximal_inclusions(self) -> list[tuple[int, int]]:
        """Edges (i, j) of the Hasse diagram on subgroup ids, H_i < H_j maximal."""
        subs = self.subgroups
        above = []
        for i, h in enumerate(subs):
            above.append([j for j, k in enumerate(subs)
                          if j != i and h & ~k == 0 and k.bit_count() > h.bit_count()])
        edges = []
        for i, ups in enumerate(above):
            upset = set(ups)
            for j in ups:
                if not any(k in upset and j in above[k] for k in ups if k != j):
                    edges.append((i, j))
        return edges

    def to_json(self, with_edges: bool = True) -> dict:
        from .perm import render
        subs = []
        for i, m in enumerate(self.subgroups):
            gens = self.group.closure_of(self.elements_of(m)).generators
            subs.append({"id": i, "order": m.bit_count(), "class": self.class_of[m],
                         "generators": [render(g) for g in gens]})
        out = {"order": self.group.order(), "subgroups": subs,
               "classes": [{"id": c.id, "order": c.order, "size": c.size,
                            "core_free": c.core_free} for c in self.classes]}
        if with_edges:
            out["maximal_inclusions"] = [list(e) for e in self.maximal_inclusions]
        return out


def subgroup_lattice(G: PermGroup, cap: int = LATTICE_CAP) -> SubgroupLattice:
    cached = getattr(G, "_lattice", None)
    if cached is None:
        cached = SubgroupLattice(G, cap)
        G._lattice = cached
    return cached


def all_subgroups(G: PermGroup, cap: int = LATTICE_CAP) -> SubgroupLattice:
    return subgroup_lattice(G, cap)


def count_core_free_classes(G: PermGroup, index: int | None = None, cap: int = LATTICE_CAP) -> int:
    """Conjugacy classes of core-free subgroups (optionally of a given index)."""
    L = subgroup_lattice(G, cap)
    N = G.order()
    return sum(1 for c in L.classes
               if c.core_free and (index is None or c.order * index == N))
