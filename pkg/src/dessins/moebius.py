"""Möbius inversion on subgroup lattices: counting generating triples.

σ(H) counts all triples of a given type with x y z = 1 in H, φ(H) those that
generate H.  Since σ(G) = Σ_{H ≤ G} φ(H), inversion gives
φ(G) = Σ_{H ≤ G} μ_G(H) σ(H), where Σ_{K ≥ H} μ_G(K) = δ_{H,G}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartab import dixon_table, triple_count_by_type
from .errors import VerificationError
from .groups import LATTICE_CAP, PermGroup
from .lattice import SubgroupLattice, count_core_free_classes, subgroup_lattice
from .perm import compose, order as perm_order


def _by_order(G: PermGroup) -> dict[int, list]:
    out: dict[int, list] = {}
    for g in G.elements():
        out.setdefault(perm_order(g), []).append(g)
    return out


def sigma_brute(H: PermGroup, orders: tuple[int, int, int]) -> int:
    """Triples of exact orders (p, q, r) with x y z = 1, by direct iteration."""
    p, q, r = orders
    by = _by_order(H)
    count = 0
    for x in by.get(p, []):
        for y in by.get(q, []):
            if perm_order(compose(x, y)) == r:
                count += 1
    return count


def sigma_frobenius(H: PermGroup, orders: tuple[int, int, int]) -> int:
    return triple_count_by_type(H, dixon_table(H), orders)


def sigma(H: PermGroup, orders: tuple[int, int, int], method: str = "brute") -> int:
    if method == "brute":
        return sigma_brute(H, orders)
    if method == "frobenius":
        return sigma_frobenius(H, orders)
    if method == "both":
        a, b = sigma_brute(H, orders), sigma_frobenius(H, orders)
        if a != b:
            raise VerificationError(f"σ disagrees: brute force {a}, Frobenius {b}")
        return a
    raise ValueError(f"unknown method {method!r}")


@dataclass
class MoebiusRow:
    class_id: int
    order: int
    size: int
    mu: int
    sigma: int | None = None

    @property
    def contribution(self) -> int:
        return self.size * self.mu * (self.sigma or 0)


@dataclass
class MoebiusTable:
    group: PermGroup
    lattice: SubgroupLattice
    rows: list[MoebiusRow]
    orders: tuple[int, int, int] | None = None

    @property
    def phi(self) -> int:
        if self.orders is None:
            raise ValueError("no type given")
        return sum(r.contribution for r in self.rows)

    def mu(self, class_id: int) -> int:
        return self.rows[class_id].mu

    def to_json(self) -> dict:
        out = {"order": self.group.order(),
               "classes": [{"class": r.class_id, "order": r.order, "size": r.size, "mu": r.mu,
                            "sigma": r.sigma, "contribution": r.contribution if r.sigma is not None else None}
                           for r in self.rows]}
        if self.orders is not None:
            out["type"] = list(self.orders)
            out["phi"] = self.phi
        return out

    def pretty(self) -> str:
        lines = [f"{'class':>5} {'order':>6} {'size':>5} {'mu':>5} {'sigma':>8} {'contrib':>9}"]
        for r in self.rows:
            s = "-" if r.sigma is None else str(r.sigma)
            c = "-" if r.sigma is None else str(r.contribution)
            lines.append(f"{r.class_id:>5} {r.order:>6} {r.size:>5} {r.mu:>5} {s:>8} {c:>9}")
        return "\n".join(lines)


def mobius_values(L: SubgroupLattice) -> list[int]:
    """μ_G on every subgroup class, top-down, then checked against its defining sum."""
    classes = L.classes
    mu = [0] * len(classes)
    counts = [L.containing_counts(c) for c in classes]
    for c in sorted(classes, key=lambda c: -c.order):
        if c.order == L.group.order():
            mu[c.id] = 1
            continue
        mu[c.id] = -sum(mu[k] * m for k, m in counts[c.id].items() if k != c.id)
    for c in classes:
        total = sum(mu[k] * m for k, m in counts[c.id].items())
        if total != (1 if c.order == L.group.order() else 0):
            raise VerificationError(f"Möbius identity fails at class {c.id}")
    return mu


def mobius_table(G: PermGroup, orders: tuple[int, int, int] | None = None,
                 method: str = "brute", cap: int = LATTICE_CAP) -> MoebiusTable:
    L = subgroup_lattice(G, cap)
    mu = mobius_values(L)
    rows = []
    for c in L.classes:
        s = None
        if orders is not None:
            s = sigma(c.representative, orders, method) if _could_contain(c.order, orders) else 0
        rows.append(MoebiusRow(c.id, c.order, c.size, mu[c.id], s))
    return MoebiusTable(G, L, rows, orders)


def _could_contain(n: int, orders) -> bool:
    return all(n % o == 0 for o in orders)


def eq3_holds(G: PermGroup, cap: int = LATTICE_CAP) -> bool:
    L = subgroup_lattice(G, cap)
    try:
        mobius_values(L)
    except VerificationError:
        return False
    return True


def phi(G: PermGroup, orders: tuple[int, int, int], method: str = "brute",
        cap: int = LATTICE_CAP) -> int:
    """Generating triples of exact type ``orders``, by Möbius inversion."""
    value = mobius_table(G, orders, method, cap).phi
    if value < 0:
        raise VerificationError("negative φ")
    return value


def generating_triples_direct(G: PermGroup, orders: tuple[int, int, int]) -> int:
    """φ without a lattice: for one x per class of order p, count the y of
    order q with o(xy) = r and <x, y> = G, weighted by the class size."""
    p, q, r = orders
    N = G.order()
    ys = [g for g in G.elements() if perm_order(g) == q]
    total = 0
    for X in G.conjugacy_classes():
        if X.element_order != p:
            continue
        x = X.representative
        hits = 0
        for y in ys:
            if perm_order(compose(x, y)) == r and PermGroup([x, y], G.degree).order() == N:
                hits += 1
        total += X.size * hits
    return total


def generating_triples_brute(G: PermGroup, orders: tuple[int, int, int]) -> int:
    """φ by checking every triple of the right orders for generation."""
    p, q, r = orders
    by = _by_order(G)
    N = G.order()
    count = 0
    for x in by.get(p, []):
        for y in by.get(q, []):
            if perm_order(compose(x, y)) == r and PermGroup([x, y], G.degree).order() == N:
                count += 1
    return count


def regular_dessin_count(G: PermGroup, orders: tuple[int, int, int],
                         aut_order: int | None = None, cap: int = LATTICE_CAP) -> int:
    """φ(G)/|Aut(G)|: regular dessins of the given type with automorphism group G."""
    if G.order() <= cap:
        f = phi(G, orders, cap=cap)
    else:
        f = generating_triples_direct(G, orders)
    a = aut_order if aut_order is not None else G.automorphism_count()
    q, rem = divmod(f, a)
    if rem:
        raise VerificationError(f"φ = {f} is not divisible by |Aut| = {a}")
    return q


@dataclass
class PairStatistics:
    generating_pairs: int
    orbits: int
    faithful_representations: int
    dessins: int
    pairs_by_mobius: int = field(default=0)


def generating_pair_statistics(G: PermGroup, cap: int = LATTICE_CAP) -> PairStatistics:
    """Generating pairs (brute force, cross-checked by Möbius inversion), their
    Aut(G)-orbits (= normal subgroups of F_2 with quotient G), the core-free
    subgroup classes (faithful transitive representations), and the product
    (dessins with monodromy group G)."""
    N = G.order()
    elems = G.elements()
    brute = 0
    for a in elems:
        for b in elems:
            if PermGroup([a, b], G.degree).order() == N:
                brute += 1
    L = subgroup_lattice(G, cap)
    mu = mobius_values(L)
    mobius = sum(c.size * mu[c.id] * c.order**2 for c in L.classes)
    if mobius != brute:
        raise VerificationError(f"generating pairs: brute force {brute}, Möbius {mobius}")
    aut = G.automorphism_count()
    orbits, rem = divmod(brute, aut)
    if rem:
        raise VerificationError("Aut(G) does not act semiregularly on generating pairs")
    reps = count_core_free_classes(G, cap=cap)
    return PairStatistics(brute, orbits, reps, orbits * reps, mobius)
