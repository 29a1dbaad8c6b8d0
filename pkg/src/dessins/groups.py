"""Finite permutation groups given by generators.

Order and membership go through a deterministic Schreier-Sims stabilizer
chain, so they work for groups far too large to list (A15 has about 6.5e11
elements).  Everything that needs the elements themselves (classes, subgroup
lattices, automorphism counts) checks a size cap first and raises
:class:`CapExceeded` rather than grinding.
"""

from __future__ import annotations

import logging
import math
import string
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, NotSubgroupError, NotTransitiveError, VerificationError
from .perm import (
    Permutation,
    _perm,
    compose,
    conjugate,
    cycle_type,
    identity,
    inverse,
    is_identity,
    order as perm_order,
    parse,
    power,
    render,
)

logger = logging.getLogger(__name__)

ENUMERATION_CAP = 10**6
LATTICE_CAP = 2000


# -- stabilizer chains -------------------------------------------------------


def _orbit_transversal(point: int, gens: Sequence[Permutation], n: int) -> dict:
    """Map each orbit point b to (u, u^-1) with point^u = b."""
    idn = identity(n)
    trans = {point: (idn, idn)}
    queue = [point]
    for b in queue:
        u = trans[b][0]
        for s in gens:
            c = s[b]
            if c not in trans:
                v = compose(u, s)
                trans[c] = (v, inverse(v))
                queue.append(c)
    return trans


def _orbits(gens: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        seen[i] = True
        orb = [i]
        for b in orb:
            for s in gens:
                c = s[b]
                if not seen[c]:
                    seen[c] = True
                    orb.append(c)
        out.append(sorted(orb))
    return out


def _pick_base_point(h: Sequence[int], gens: Sequence[Sequence[int]], n: int) -> int:
    # greedy: a point moved by h lying in the largest orbit of <gens, h>
    orbs = _orbits(list(gens) + [h], n)
    size = {}
    for orb in orbs:
        for b in orb:
            size[b] = len(orb)
    moved = [b for b in range(n) if h[b] != b]
    return min(moved, key=lambda b: (-size[b], b))


def _strip(h, base, trans, start):
    for level in range(start, len(base)):
        entry = trans[level].get(h[base[level]])
        if entry is None:
            return h, level
        h = compose(h, entry[1])
    return h, len(base)


def schreier_sims(gens: Sequence[Permutation], n: int, base_prefix: Sequence[int] = ()):
    """Deterministic Schreier-Sims.

    Returns ``(base, level_gens, transversals)`` where ``level_gens[i]`` are
    the strong generators fixing ``base[:i]`` pointwise.
    """
    gens = [g for g in gens if not is_identity(g)]
    base = list(base_prefix)
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_pick_base_point(g, gens, n))
    level_gens = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    trans = [_orbit_transversal(base[i], level_gens[i], n) for i in range(len(base))]

    # Schreier generators already known to sift stay siftable as the deeper
    # levels grow, so each (point, generator) pair is checked once per level
    done = [set() for _ in base]
    idn = identity(n)
    i = len(base) - 1
    while i >= 0:
        jumped = False
        for gamma, (u, _) in list(trans[i].items()):
            for k, s in enumerate(level_gens[i]):
                if (gamma, k) in done[i]:
                    continue
                done[i].add((gamma, k))
                delta = s[gamma]
                h = compose(compose(u, s), trans[i][delta][1])
                if h == idn:
                    continue
                h, j = _strip(h, base, trans, i + 1)
                if j < len(base) or h != idn:
                    if j == len(base):
                        base.append(_pick_base_point(h, [], n))
                        level_gens.append([])
                        trans.append({})
                        done.append(set())
                    for level in range(i + 1, j + 1):
                        level_gens[level].append(h)
                        trans[level] = _orbit_transversal(base[level], level_gens[level], n)
                    i = j
                    jumped = True
                    break
            if jumped:
                break
        if not jumped:
            i -= 1
    return base, level_gens, trans


# -- value types ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ConjClass:
    """A conjugacy class of a permutation group."""

    representative: Permutation
    size: int
    element_order: int
    label: str
    members: frozenset = field(repr=False)

    @property
    def cycle_type(self):
        return cycle_type(self.representative)

    def __contains__(self, g) -> bool:
        return g in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"ConjClass({self.label}, size={self.size}, rep={render(self.representative)})"


@dataclass(frozen=True)
class BlockSystem:
    """A partition of the points into blocks of equal size."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> BlockSystem:
        bl = sorted(tuple(sorted(b)) for b in blocks)
        return cls(tuple(bl))

    @property
    def degree(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def __len__(self) -> int:
        return len(self.blocks)

    def block_of(self) -> list[int]:
        where = [0] * self.degree
        for k, b in enumerate(self.blocks):
            for a in b:
                where[a] = k
        return where

    def is_invariant(self, gens: Iterable[Sequence[int]]) -> bool:
        where = self.block_of()
        for g in gens:
            for b in self.blocks:
                if len({where[g[a]] for a in b}) != 1:
                    return False
        return True

    def action(self, g: Sequence[int]) -> Permutation:
        """The permutation induced by ``g`` on the blocks."""
        where = self.block_of()
        return _perm(where[g[b[0]]] for b in self.blocks)


# -- the group -----------------------------------------------------------------


class PermGroup:
    """A permutation group of degree ``n`` generated by ``generators``."""

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None, *,
                 base: Sequence[int] = (), name: str | None = None):
        gens = [_perm(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group with no generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(g for g in gens if not is_identity(g))
        self.name = name
        self._base_prefix = tuple(base)

    @classmethod
    def from_cycles(cls, texts: Iterable[str], degree: int, **kw) -> PermGroup:
        return cls([parse(t, degree) for t in texts], degree, **kw)

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n < 2:
            return cls([], max(n, 1), name=f"S{n}")
        gens = [Permutation.from_cycles([range(n)], n), Permutation.from_cycles([(0, 1)], n)]
        return cls(gens, n, name=f"S{n}")

    @classmethod
    def alternating(cls, n: int) -> PermGroup:
        if n < 3:
            return cls([], max(n, 1), name=f"A{n}")
        gens = [Permutation.from_cycles([(0, 1, k)], n) for k in range(2, n)]
        return cls(gens, n, name=f"A{n}")

    @classmethod
    def cyclic(cls, n: int) -> PermGroup:
        return cls([Permutation.from_cycles([range(n)], n)] if n > 1 else [], n, name=f"C{n}")

    def __repr__(self) -> str:
        label = f"{self.name}, " if self.name else ""
        return f"PermGroup({label}degree={self.degree}, gens={[render(g) for g in self.generators]})"

    def identity(self) -> Permutation:
        return identity(self.degree)

    # -- stabilizer chain ----------------------------------------------------

    @cached_property
    def _chain(self):
        return schreier_sims(self.generators, self.degree, self._base_prefix)

    @property
    def base(self) -> list[int]:
        return list(self._chain[0])

    @property
    def strong_generators(self) -> list[Permutation]:
        out = []
        for gens in self._chain[1]:
            for g in gens:
                if g not in out:
                    out.append(g)
        return out

    def basic_orbit_lengths(self) -> list[int]:
        return [len(t) for t in self._chain[2]]

    def order(self) -> int:
        return math.prod(self.basic_orbit_lengths())

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Sequence[int]) -> bool:
        if len(g) != self.degree:
            return False
        base, _, trans = self._chain
        h, j = _strip(_perm(g), base, trans, 0)
        return j == len(base) and is_identity(h)

    __contains__ = contains

    def stabilizer_chain_subgroup(self, level: int) -> PermGroup:
        """Pointwise stabilizer of ``base[:level]``."""
        base, level_gens, _ = self._chain
        gens = level_gens[level] if level < len(base) else []
        return PermGroup(gens, self.degree)

    # -- elements --------------------------------------------------------------

    def elements(self, cap: int = ENUMERATION_CAP) -> list[Permutation]:
        """All elements, each once, in a fixed order."""
        if self.order() > cap:
            raise CapExceeded(f"group of order {self.order()} exceeds enumeration cap {cap}")
        return self._elements

    def iter_elements(self, cap: int = ENUMERATION_CAP) -> Iterator[Permutation]:
        return iter(self.elements(cap))

    @cached_property
    def _elements(self) -> list[Permutation]:
        elems = [self.identity()]
        for trans in reversed(self._chain[2]):
            reps = [u for u, _ in trans.values()]
            elems = [compose(h, u) for h in elems for u in reps]
        return elems

    @cached_property
    def _index(self) -> dict:
        return {g: i for i, g in enumerate(self._elements)}

    def index_of(self, g) -> int:
        return self._index[g]

    def orbits(self) -> list[list[int]]:
        return _orbits(self.generators, self.degree)

    def orbit(self, point: int) -> list[int]:
        for orb in self.orbits():
            if point in orb:
                return orb
        raise ValueError(point)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def exponent(self) -> int:
        return math.lcm(*(c.element_order for c in self.conjugacy_classes()))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    # -- subgroups ---------------------------------------------------------------

    def subgroup(self, gens: Iterable[Sequence[int]], name: str | None = None) -> PermGroup:
        gens = [_perm(g) for g in gens]
        for g in gens:
            if not self.contains(g):
                raise NotSubgroupError(f"{render(g)} is not in the group")
        return PermGroup(gens, self.degree, name=name)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def is_normal_in(self, other: PermGroup) -> bool:
        if not self.is_subgroup_of(other):
            return False
        return all(self.contains(conjugate(h, g)) for h in self.generators for g in other.generators)

    def normalizes(self, H: PermGroup) -> bool:
        return all(H.contains(conjugate(h, g)) for h in H.generators for g in self.generators)

    def equals(self, other: PermGroup) -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def closure_of(self, elements: Iterable[Sequence[int]]) -> PermGroup:
        """Subgroup generated by a set of elements, with a small generating set."""
        gens: list[Permutation] = []
        H = PermGroup([], self.degree)
        for e in elements:
            if not H.contains(e):
                gens.append(_perm(e))
                H = PermGroup(gens, self.degree)
        return H

    def centralizer_of(self, g: Sequence[int], cap: int = ENUMERATION_CAP) -> PermGroup:
        return self.closure_of(h for h in self.elements(cap) if compose(h, g) == compose(g, h))

    def normalizer_of(self, H: PermGroup, cap: int = ENUMERATION_CAP) -> PermGroup:
        return self.closure_of(
            g for g in self.elements(cap) if all(H.contains(conjugate(h, g)) for h in H.generators))

    # -- conjugacy classes ---------------------------------------------------------

    def conjugacy_classes(self, cap: int = ENUMERATION_CAP) -> list[ConjClass]:
        """Classes ordered by element order, then size, then least rendering;
        labelled like ``7A``."""
        self.elements(cap)
        return self._classes

    @cached_property
    def _classes(self) -> list[ConjClass]:
        elems = self._elements
        gens = self.generators
        assigned = set()
        raw = []
        for e in elems:
            if e in assigned:
                continue
            orbit = [e]
            assigned.add(e)
            for a in orbit:
                for s in gens:
                    c = conjugate(a, s)
                    if c not in assigned:
                        assigned.add(c)
                        orbit.append(c)
            rep = min(orbit, key=render)
            raw.append((perm_order(rep), len(orbit), render(rep), rep, frozenset(orbit)))
        raw.sort(key=lambda t: t[:3])
        classes = []
        count: dict[int, int] = {}
        for o, size, _, rep, members in raw:
            k = count.get(o, 0)
            count[o] = k + 1
            classes.append(ConjClass(rep, size, o, f"{o}{_letters(k)}", members))
        if sum(c.size for c in classes) != len(elems):
            raise VerificationError("class sizes do not sum to the group order")
        return classes

    @cached_property
    def _class_index(self) -> dict:
        where = {}
        for k, c in enumerate(self._classes):
            for g in c.members:
                where[g] = k
        return where

    def class_of(self, g: Sequence[int]) -> ConjClass:
        self.conjugacy_classes()
        return self._classes[self._class_index[_perm(g)]]

    def class_index(self, g: Sequence[int]) -> int:
        self.conjugacy_classes()
        return self._class_index[g]

    def class_by_label(self, label: str) -> ConjClass:
        for c in self.conjugacy_classes():
            if c.label == label:
                return c
        raise KeyError(label)

    def power_map(self, cls: ConjClass, k: int) -> ConjClass:
        return self.class_of(power(cls.representative, k))

    def centralizer_order(self, cls: ConjClass) -> int:
        return self.order() // cls.size

    # -- actions ------------------------------------------------------------------

    def centralizer_in_sym(self) -> PermGroup:
        """Centralizer of a transitive group in S_n; it acts semiregularly."""
        if not self.is_transitive():
            raise NotTransitiveError("centralizer_in_sym needs a transitive group")
        n = self.degree
        found: list[Permutation] = []
        reached = {0}
        for j in range(n):
            if j in reached:
                continue
            c = anchored_map(self.generators, self.generators, 0, j, n)
            if c is not None:
                found.append(c)
                reached = set(_orbit_transversal(0, found, n))
        return PermGroup(found, n)

    def right_cosets(self, H: PermGroup, cap: int = ENUMERATION_CAP):
        """Right cosets ``Hg`` as (representatives, key function)."""
        if not H.is_subgroup_of(self):
            raise NotSubgroupError("H is not a subgroup of G")
        index = self.order() // H.order()
        if index > cap:
            raise CapExceeded(f"index {index} exceeds cap {cap}")
        if H.order() == 1:
            def key(g):
                return g
        else:
            h_elems = H.elements(cap)

            def key(g):
                return min(compose(h, g) for h in h_elems)
        reps = [self.identity()]
        keys = {key(reps[0]): 0}
        for r in reps:
            for s in self.generators:
                k = key(compose(r, s))
                if k not in keys:
                    keys[k] = len(reps)
                    reps.append(compose(r, s))
        if len(reps) != index:
            raise VerificationError(f"found {len(reps)} cosets, expected {index}")
        return reps, keys, key

    def coset_action(self, H: PermGroup, elements: Sequence[Sequence[int]] | None = None,
                     cap: int = ENUMERATION_CAP):
        """Action on the right cosets of ``H``.

        Returns ``(image group, images)`` where ``images`` are the induced
        permutations of ``elements`` (default: the generators).
        """
        reps, keys, key = self.right_cosets(H, cap)
        elements = self.generators if elements is None else [_perm(e) for e in elements]
        images = [_perm(keys[key(compose(r, e))] for r in reps) for e in elements]
        gen_images = images if elements is self.generators else [
            _perm(keys[key(compose(r, s))] for r in reps) for s in self.generators]
        return PermGroup(gen_images, len(reps)), images

    def kernel_of_action(self, gen_images: Sequence[Sequence[int]]) -> PermGroup:
        """Kernel of the homomorphism sending each generator to ``gen_images``."""
        m = len(gen_images[0]) if gen_images else 1
        n = self.degree
        diag = [_perm(list(g) + [n + a for a in img]) for g, img in zip(self.generators, gen_images)]
        big = PermGroup(diag, n + m, base=range(n, n + m))
        level = m
        kern = big.stabilizer_chain_subgroup(level)
        return PermGroup([_perm(g[:n]) for g in kern.generators], n)

    def core(self, H: PermGroup, cap: int = ENUMERATION_CAP) -> PermGroup:
        """Largest normal subgroup of G inside H."""
        if H.order() == self.order():
            if not H.is_subgroup_of(self):
                raise NotSubgroupError("H is not a subgroup of G")
            return H
        image, gen_images = self.coset_action(H, cap=cap)
        return self.kernel_of_action(gen_images)

    def point_stabilizer(self, point: int = 0) -> PermGroup:
        G = PermGroup(self.generators, self.degree, base=[point])
        return G.stabilizer_chain_subgroup(1)

    # -- blocks ----------------------------------------------------------------

    def finest_block_system(self, a: int, b: int) -> BlockSystem:
        """Smallest block system with ``a`` and ``b`` in the same block."""
        n = self.degree
        parent = list(range(n))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        parent[find(b)] = find(a)
        queue = [(a, b)]
        while queue:
            p, q = queue.pop()
            for s in self.generators:
                rp, rq = find(s[p]), find(s[q])
                if rp != rq:
                    parent[rq] = rp
                    queue.append((rp, rq))
        groups: dict[int, list[int]] = {}
        for u in range(n):
            groups.setdefault(find(u), []).append(u)
        return BlockSystem.from_blocks(groups.values())

    def minimal_block_systems(self) -> list[BlockSystem]:
        """Minimal non-trivial block systems; empty iff primitive."""
        if not self.is_transitive():
            raise NotTransitiveError("block systems need a transitive group")
        n = self.degree
        systems = {}
        for j in range(1, n):
            bs = self.finest_block_system(0, j)
            if len(bs) > 1:
                systems[bs] = next(set(b) for b in bs.blocks if 0 in b)
        minimal = [bs for bs, b0 in systems.items()
                   if not any(other < b0 for other in systems.values())]
        return sorted(minimal, key=lambda bs: (-len(bs), bs.blocks))

    def is_primitive(self) -> bool:
        return self.is_transitive() and not self.minimal_block_systems()

    def block_action(self, B: BlockSystem) -> tuple[PermGroup, list[Permutation]]:
        if not B.is_invariant(self.generators):
            raise ValueError("not a block system for this group")
        images = [B.action(g) for g in self.generators]
        return PermGroup(images, len(B)), images

    def block_kernel(self, B: BlockSystem) -> PermGroup:
        _, images = self.block_action(B)
        return self.kernel_of_action(images)

    # -- special subgroups -------------------------------------------------------

    def sylow_subgroup(self, p: int, cap: int = ENUMERATION_CAP) -> PermGroup:
        N = self.order()
        target = 1
        while N % p == 0:
            N //= p
            target *= p
        P = PermGroup([], self.degree)
        elems = self.elements(cap)
        while P.order() < target:
            step = None
            for g in elems:
                if P.contains(g):
                    continue
                if not P.contains(power(g, p)):
                    continue
                if all(P.contains(conjugate(h, g)) for h in P.generators):
                    step = g
                    break
            if step is None:
                raise VerificationError(f"no way to enlarge a {p}-subgroup of order {P.order()}")
            P = PermGroup(list(P.generators) + [step], self.degree)
        return P

    def dihedral_subgroup(self, m: int, cap: int = ENUMERATION_CAP) -> PermGroup:
        """A dihedral subgroup of order ``m`` (even)."""
        if m % 2:
            raise ValueError("dihedral order must be even")
        half = m // 2
        elems = self.elements(cap)
        involutions = [s for s in elems if perm_order(s) == 2]
        for r in elems:
            if perm_order(r) != half:
                continue
            r_inv = inverse(r)
            for s in involutions:
                if conjugate(r, s) == r_inv:
                    D = PermGroup([r, s], self.degree)
                    if D.order() == m:
                        return D
        raise LookupError(f"no dihedral subgroup of order {m}")

    def cyclic_subgroup(self, m: int, cap: int = ENUMERATION_CAP) -> PermGroup:
        for g in self.elements(cap):
            if perm_order(g) == m:
                return PermGroup([g], self.degree)
        raise LookupError(f"no element of order {m}")

    def find_subgroup(self, *, order: int | None = None, sylow: int | None = None,
                      dihedral: int | None = None, cap: int = ENUMERATION_CAP) -> PermGroup:
        if sylow is not None:
            return self.sylow_subgroup(sylow, cap)
        if dihedral is not None:
            return self.dihedral_subgroup(dihedral, cap)
        if order is not None:
            from .lattice import subgroup_lattice
            for cls in subgroup_lattice(self):
                if cls.order == order:
                    return cls.representative
            raise LookupError(f"no subgroup of order {order}")
        raise ValueError("no predicate given")

    # -- automorphisms -----------------------------------------------------------

    def generating_pair(self, cap: int = ENUMERATION_CAP) -> tuple[Permutation, Permutation]:
        """A generating pair (a, b), preferring b in a rare element order."""
        classes = self.conjugacy_classes(cap)
        N = self.order()
        per_order: dict[int, int] = {}
        for c in classes:
            per_order[c.element_order] = per_order.get(c.element_order, 0) + c.size
        by_rarity = sorted(classes, key=lambda c: (per_order[c.element_order], c.element_order))
        for B in by_rarity:
            for A in sorted(classes, key=lambda c: (-c.element_order, c.size)):
                for b in sorted(B.members)[:64]:
                    if PermGroup([A.representative, b], self.degree).order() == N:
                        return A.representative, b
        raise LookupError("group is not 2-generated")

    def automorphism_count(self, overrides: dict | None = None, cap: int = ENUMERATION_CAP) -> int:
        """|Aut(G)|, by counting images of a generating pair that extend to
        automorphisms (checked by simultaneous closure)."""
        if overrides and self.name in overrides:
            return overrides[self.name]
        if self.order() == 1:
            return 1
        classes = self.conjugacy_classes(cap)
        a, b = self.generating_pair(cap)
        ca = self.class_of(a)
        ob = perm_order(b)
        words = _test_words(a, b)
        signature = [perm_order(w) for w in words]
        b_candidates = [g for c in classes if c.element_order == ob for g in sorted(c.members)]
        total = 0
        N = self.order()
        for A in classes:
            if A.element_order != ca.element_order or A.size != ca.size:
                continue
            a2 = A.representative
            hits = 0
            for b2 in b_candidates:
                if [perm_order(w) for w in _test_words(a2, b2)] != signature:
                    continue
                if _extends_to_isomorphism(a, b, a2, b2, N, self.degree):
                    hits += 1
            total += A.size * hits
        return total


def _letters(k: int) -> str:
    letters = string.ascii_uppercase
    if k < 26:
        return letters[k]
    return letters[k % 26] + str(k // 26)


def _test_words(a, b) -> list[Permutation]:
    ai, bi = inverse(a), inverse(b)
    ab = compose(a, b)
    return [ab, compose(a, bi), compose(ab, b), compose(compose(ai, bi), ab),
            compose(ab, compose(a, bi)), compose(compose(ab, ab), b)]


def _extends_to_isomorphism(a, b, a2, b2, N: int, n: int) -> bool:
    idn = identity(n)
    image = {idn: idn}
    queue = [idn]
    for g in queue:
        t = image[g]
        for s, s2 in ((a, a2), (b, b2)):
            gs = compose(g, s)
            ts = compose(t, s2)
            prev = image.get(gs)
            if prev is None:
                image[gs] = ts
                queue.append(gs)
            elif prev != ts:
                return False
    return len(image) == N and len(set(image.values())) == N


def anchored_map(gens1: Sequence[Sequence[int]], gens2: Sequence[Sequence[int]],
                 source: int, target: int, n: int) -> Permutation | None:
    """The unique c with c(source) = target and c(p^g1) = c(p)^g2 for each
    generator pair, if it exists (needs <gens1> transitive)."""
    c = [-1] * n
    used = [False] * n
    c[source] = target
    used[target] = True
    queue = [source]
    for p in queue:
        cp = c[p]
        for g1, g2 in zip(gens1, gens2):
            q, cq = g1[p], g2[cp]
            if c[q] == -1:
                if used[cq]:
                    return None
                c[q] = cq
                used[cq] = True
                queue.append(q)
            elif c[q] != cq:
                return None
    if len(queue) != n:
        return None
    return _perm(c)


def group_from_json(data: dict) -> PermGroup:
    n = int(data["degree"])
    return PermGroup.from_cycles(data.get("generators", []), n, name=data.get("name"))


def group_to_json(G: PermGroup) -> dict:
    out = {"degree": G.degree, "generators": [render(g) for g in G.generators]}
    if G.name:
        out["name"] = G.name
    return out
