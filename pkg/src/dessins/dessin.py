"""Dessins as transitive permutation triples x y z = 1 on the edge set.

Black vertices are the cycles of x, white vertices the cycles of y and faces
the cycles of z.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import CapExceeded, NotTransitiveError, VerificationError
from .groups import BlockSystem, PermGroup, _orbits, anchored_map
from .perm import (
    CycleType,
    Permutation,
    _perm,
    compose,
    cycle_type,
    cycles,
    fixed_points,
    identity,
    inverse,
    num_cycles,
    order as perm_order,
    parse,
    render,
)

DEGREE_CAP = 10**5


class Passport(NamedTuple):
    x: CycleType
    y: CycleType
    z: CycleType

    def __str__(self) -> str:
        return f"({self.x}, {self.y}, {self.z})"

    @classmethod
    def parse(cls, text: str) -> Passport:
        parts = [p for p in re.split(r"[;|]", text.strip().strip("()")) if p.strip()]
        if len(parts) == 1:
            parts = [p for p in text.strip().strip("()").split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected three cycle types in {text!r}")
        return cls(*(CycleType.parse(p) for p in parts))


class Dessin:
    """A dessin of degree n given by x, y and z = (x y)^-1."""

    __slots__ = ("x", "y", "z", "__dict__")

    def __init__(self, x: Sequence[int], y: Sequence[int], z: Sequence[int] | None = None, *,
                 check_transitive: bool = True):
        x, y = _perm(x), _perm(y)
        if len(x) != len(y):
            raise ValueError(f"degree mismatch: {len(x)} vs {len(y)}")
        expected = inverse(compose(x, y))
        if z is None:
            z = expected
        else:
            z = _perm(z)
            if z != expected:
                raise ValueError("x y z is not the identity")
        self.x, self.y, self.z = x, y, z
        if check_transitive and len(_orbits([x, y], len(x))) != 1:
            raise NotTransitiveError("x and y do not act transitively")

    @property
    def degree(self) -> int:
        return len(self.x)

    @property
    def triple(self) -> tuple[Permutation, Permutation, Permutation]:
        return self.x, self.y, self.z

    def __eq__(self, other) -> bool:
        return isinstance(other, Dessin) and self.triple == other.triple

    def __hash__(self) -> int:
        return hash(self.triple)

    def __repr__(self) -> str:
        return f"Dessin(x={render(self.x)}, y={render(self.y)}, z={render(self.z)})"

    # -- invariants ------------------------------------------------------------

    @property
    def passport(self) -> Passport:
        return Passport(cycle_type(self.x), cycle_type(self.y), cycle_type(self.z))

    @property
    def type(self) -> tuple[int, int, int]:
        return perm_order(self.x), perm_order(self.y), perm_order(self.z)

    def euler_characteristic(self) -> int:
        return num_cycles(self.x) + num_cycles(self.y) + num_cycles(self.z) - self.degree

    @property
    def genus(self) -> int:
        chi = self.euler_characteristic()
        if chi % 2 or chi > 2:
            raise VerificationError(f"impossible Euler characteristic {chi}")
        return (2 - chi) // 2

    def fixed_point_counts(self) -> tuple[int, int, int]:
        return tuple(len(fixed_points(p)) for p in self.triple)

    @cached_property
    def monodromy(self) -> PermGroup:
        return PermGroup([self.x, self.y], self.degree)

    @cached_property
    def automorphisms(self) -> PermGroup:
        return self.monodromy.centralizer_in_sym() if self.degree > 1 else PermGroup([], 1)

    def is_regular(self) -> bool:
        return self.automorphisms.order() == self.degree

    def is_faithful(self) -> bool:
        """A dessin given by permutations is a faithful quotient of its regular
        cover: the point stabilizer of a permutation group is core-free."""
        return True

    def is_primitive(self) -> bool:
        return self.degree == 1 or self.monodromy.is_primitive()

    def mirror(self) -> Dessin:
        return Dessin(inverse(self.x), inverse(self.y))

    def relabel(self, g: Sequence[int]) -> Dessin:
        """The dessin with point i renamed g[i]."""
        from .perm import conjugate
        return Dessin(conjugate(self.x, g), conjugate(self.y, g))

    # -- formats -----------------------------------------------------------------

    def to_text(self) -> str:
        return (f"degree {self.degree}\n"
                f"x = {render(self.x)}\ny = {render(self.y)}\nz = {render(self.z)}\n")

    @classmethod
    def from_text(cls, text: str) -> Dessin:
        n = None
        perms = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if m:
                n = int(m.group(1))
                continue
            m = re.fullmatch(r"([xyz])\s*=\s*(.*)", line)
            if not m:
                raise ValueError(f"unrecognized line {raw!r}")
            perms[m.group(1)] = m.group(2)
        if n is None:
            raise ValueError("missing 'degree n' line")
        if "x" not in perms or "y" not in perms:
            raise ValueError("need at least x and y")
        z = parse(perms["z"], n) if "z" in perms else None
        return cls(parse(perms["x"], n), parse(perms["y"], n), z)

    def to_json(self) -> dict:
        return {"degree": self.degree, "x": render(self.x), "y": render(self.y), "z": render(self.z)}

    @classmethod
    def from_json(cls, data: dict | str) -> Dessin:
        if isinstance(data, str):
            data = json.loads(data)
        n = int(data["degree"])
        z = parse(data["z"], n) if data.get("z") else None
        return cls(parse(data["x"], n), parse(data["y"], n), z)

    def to_dot(self, suppress_white: bool = False, name: str = "dessin") -> str:
        """Bipartite graph: black nodes = cycles of x, white nodes = cycles of y,
        one edge per point.  With ``suppress_white`` white vertices of valency 2
        become plain edges and those of valency 1 become free ends."""
        black = cycles(self.x, include_fixed=True)
        white = cycles(self.y, include_fixed=True)
        bof = {a: k for k, c in enumerate(black) for a in c}
        lines = [f"graph {name} {{", "  node [style=filled];"]
        for k, c in enumerate(black):
            lines.append(f'  b{k} [label="", shape=circle, fillcolor=black, width=0.15];')
        for k, c in enumerate(white):
            if suppress_white and len(c) == 2:
                a, b = c
                lines.append(f'  b{bof[a]} -- b{bof[b]} [label="{a},{b}"];')
                continue
            shape = "point" if suppress_white else "circle"
            lines.append(f'  w{k} [label="", shape={shape}, fillcolor=white, width=0.15];')
            for a in c:
                lines.append(f'  b{bof[a]} -- w{k} [label="{a}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- module-level operations ------------------------------------------------------


def dessin_from_pair(x: Sequence[int], y: Sequence[int], n: int | None = None) -> Dessin:
    if n is not None and (len(x) != n or len(y) != n):
        raise ValueError(f"permutations must have degree {n}")
    return Dessin(x, y)


def trivial_dessin() -> Dessin:
    return Dessin(identity(1), identity(1))


def passport(D: Dessin) -> Passport:
    return D.passport


def dessin_type(D: Dessin) -> tuple[int, int, int]:
    return D.type


def genus(D: Dessin) -> int:
    return D.genus


def genus_327(n: int, u: int, v: int, w: int) -> Fraction:
    """Genus of a degree-n dessin whose x, y, z have orders dividing 3, 2, 7
    and u, v, w fixed points."""
    return Fraction(n - 28 * u - 21 * v - 36 * w, 84) + 1


def monodromy(D: Dessin) -> PermGroup:
    return D.monodromy


def automorphisms(D: Dessin) -> PermGroup:
    return D.automorphisms


def is_regular(D: Dessin) -> bool:
    return D.is_regular()


def is_faithful(D: Dessin) -> bool:
    return D.is_faithful()


def mirror(D: Dessin) -> Dessin:
    return D.mirror()


def isomorphic(D1: Dessin, D2: Dessin) -> Permutation | None:
    """A relabelling g with g^-1 x1 g = x2 and g^-1 y1 g = y2, if one exists."""
    if D1.degree != D2.degree or D1.passport != D2.passport:
        return None
    n = D1.degree
    for j in range(n):
        g = anchored_map([D1.x, D1.y], [D2.x, D2.y], 0, j, n)
        if g is not None:
            return g
    return None


def coset_dessin(R: Dessin, H: PermGroup, cap: int = DEGREE_CAP) -> Dessin:
    """The quotient of R by H ≤ monodromy(R): the action of x, y, z on the
    right cosets of H."""
    G = R.monodromy
    index = G.order() // H.order()
    if index > cap:
        raise CapExceeded(f"quotient degree {index} exceeds cap {cap}")
    _, (x, y, z) = G.coset_action(H, [R.x, R.y, R.z], cap=cap)
    return Dessin(x, y, z)


def regular_cover(D: Dessin, cap: int = DEGREE_CAP) -> Dessin:
    """The minimal regular cover: the right-regular action of the monodromy group."""
    G = D.monodromy
    if G.order() > cap:
        raise CapExceeded(f"regular cover degree {G.order()} exceeds cap {cap}")
    if D.degree == G.order() and D.is_regular():
        return D
    return coset_dessin(D, PermGroup([], D.degree), cap)


def regular_cover_with_subgroup(D: Dessin, H: PermGroup | None = None,
                                cap: int = DEGREE_CAP) -> tuple[Dessin, PermGroup]:
    """The regular cover R of D together with the image in monodromy(R) of a
    subgroup H of monodromy(D) (default: the stabilizer of point 0), so that
    coset_dessin(R, image) recovers the corresponding quotient."""
    G = D.monodromy
    if G.order() > cap:
        raise CapExceeded(f"regular cover degree {G.order()} exceeds cap {cap}")
    H = G.point_stabilizer(0) if H is None else H
    extra = list(H.generators)
    _, images = G.coset_action(PermGroup([], D.degree), [D.x, D.y, D.z] + extra, cap=cap)
    R = Dessin(images[0], images[1], images[2])
    return R, PermGroup(images[3:], G.order())


def cover_genus(D: Dessin) -> int:
    """Genus of the regular cover, from |G| and the orders of x, y, z."""
    N = D.monodromy.order()
    p, q, r = D.type
    chi = N * (Fraction(1, p) + Fraction(1, q) + Fraction(1, r) - 1)
    g = 1 - chi / 2
    if g.denominator != 1 or g < 0:
        raise VerificationError(f"non-integral cover genus {g}")
    return int(g)


def block_quotient(D: Dessin, B: BlockSystem) -> Dessin:
    if not B.is_invariant([D.x, D.y]):
        raise ValueError("not a block system for the monodromy group")
    return Dessin(B.action(D.x), B.action(D.y), B.action(D.z))


def count_faithful_quotients(G: PermGroup, n: int) -> int:
    """Conjugacy classes of core-free subgroups of index n."""
    from .lattice import count_core_free_classes
    if G.order() % n:
        return 0
    return count_core_free_classes(G, n)
