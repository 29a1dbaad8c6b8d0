"""Exhaustive, isomorph-free enumeration of dessins with passport constraints.

For each admissible passport (λ, μ, ν) the black permutation is fixed to the
canonical x0 of type λ and y runs over all permutations of type μ, built one
cycle at a time.  The product w = x0·y (so z = w^-1) is tracked as a set of
partial paths; a branch dies as soon as a closed cycle of w has a length not
left in ν or an open path is longer than the largest remaining part of ν.

Two solutions y, y' give isomorphic dessins exactly when they are conjugate
under the centralizer C(x0), so the solutions are grouped by a canonical form
of the dessin; each group is one C(x0)-orbit, its least y is the listed
representative and |orbit| / |C(x0)| = 1/|Aut| is its weight.  The total
number of solutions is reconciled with the Frobenius count in S_n.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .chartab import partitions, sym_triple_count
from .dessin import Dessin, Passport
from .errors import CapExceeded, VerificationError
from .groups import _orbits
from .perm import CycleType, Permutation, _perm, compose, from_cycle_type, inverse

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9

Constraint = Union[int, CycleType, Sequence[CycleType], None]


class BudgetExceeded(CapExceeded):
    """The search visited more nodes than allowed; ``frontier`` is the y prefix
    being explored when it stopped."""

    def __init__(self, message: str, frontier=None):
        super().__init__(message)
        self.frontier = frontier


@dataclass
class EnumQuery:
    """Degree and per-permutation constraints.  A constraint is an integer d
    (all cycle lengths divide d), a cycle type, a list of cycle types, or None
    (anything)."""

    degree: int
    x: Constraint = None
    y: Constraint = None
    z: Constraint = None
    transitive: bool = True
    budget: int = DEFAULT_BUDGET
    workers: int = 1

    def cycle_types(self, which: str) -> list[CycleType]:
        c = getattr(self, which)
        n = self.degree
        if c is None:
            return [CycleType(p) for p in partitions(n)]
        if isinstance(c, int):
            return [CycleType(p) for p in partitions(n) if all(c % k == 0 for k in p)]
        if isinstance(c, CycleType):
            return [c] if c.degree == n else []
        if isinstance(c, str):
            ct = CycleType.parse(c)
            return [ct] if ct.degree == n else []
        out = [CycleType(t) if not isinstance(t, CycleType) else t for t in c]
        return [t for t in out if t.degree == n]

    def passports(self) -> list[Passport]:
        n = self.degree
        out = []
        for lam in self.cycle_types("x"):
            for mu in self.cycle_types("y"):
                for nu in self.cycle_types("z"):
                    chi = len(lam) + len(mu) + len(nu) - n
                    if chi % 2:
                        continue
                    if self.transitive and chi > 2:
                        continue
                    out.append(Passport(lam, mu, nu))
        return out


@dataclass
class DessinReport:
    dessin: Dessin
    passport: Passport
    genus: int
    monodromy_order: int
    primitive: bool
    block_counts: list[int]
    automorphism_order: int

    def to_json(self) -> dict:
        return {"dessin": self.dessin.to_json(), "passport": str(self.passport), "genus": self.genus,
                "monodromy_order": self.monodromy_order, "primitive": self.primitive,
                "block_counts": self.block_counts, "automorphism_order": self.automorphism_order}


@dataclass
class Disconnected:
    """A non-transitive configuration: its components' passports and weight."""

    passport: Passport
    components: list[Passport]
    weight: Fraction
    representative_y: Permutation

    def to_json(self) -> dict:
        return {"passport": str(self.passport), "components": [str(p) for p in self.components],
                "weight": str(self.weight)}


@dataclass
class CensusResult:
    dessins: list[Dessin] = field(default_factory=list)
    reports: list[DessinReport] = field(default_factory=list)
    weights: list[Fraction] = field(default_factory=list)
    disconnected: list[Disconnected] = field(default_factory=list)
    discarded_nontransitive: int = 0
    solutions: int = 0
    nodes: int = 0
    passports_searched: list[Passport] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.dessins)

    def extend(self, other: CensusResult) -> None:
        self.dessins += other.dessins
        self.reports += other.reports
        self.weights += other.weights
        self.disconnected += other.disconnected
        self.discarded_nontransitive += other.discarded_nontransitive
        self.solutions += other.solutions
        self.nodes += other.nodes
        self.passports_searched += other.passports_searched

    def connected_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def disconnected_weight(self) -> Fraction:
        return sum((d.weight for d in self.disconnected), Fraction(0))

    def to_json(self) -> dict:
        return {
            "count": len(self.dessins),
            "dessins": [r.to_json() for r in self.reports],
            "weights": [str(w) for w in self.weights],
            "disconnected": [d.to_json() for d in self.disconnected],
            "discarded_nontransitive": self.discarded_nontransitive,
            "solutions": self.solutions,
            "passports": [str(p) for p in self.passports_searched],
        }


# -- canonical forms -------------------------------------------------------------------


def _canon_component(x: Sequence[int], y: Sequence[int], points: Sequence[int]) -> tuple:
    # start points: those with the least (x-cycle, y-cycle) length signature
    def cyc_len(p, a):
        k, b = 1, p[a]
        while b != a:
            b = p[b]
            k += 1
        return k

    sig = {a: (cyc_len(x, a), cyc_len(y, a)) for a in points}
    best_sig = min(sig.values())
    best = None
    for s in points:
        if sig[s] != best_sig:
            continue
        label = {s: 0}
        order = [s]
        for a in order:
            for p in (x, y):
                b = p[a]
                if b not in label:
                    label[b] = len(order)
                    order.append(b)
        form = tuple(label[x[a]] for a in order) + tuple(label[y[a]] for a in order)
        if best is None or form < best:
            best = form
    return best


def canonical_form(x: Sequence[int], y: Sequence[int]) -> tuple:
    """Isomorphism invariant of the pair (x, y): equal iff simultaneously conjugate.
    Disconnected pairs give the sorted tuple of their components' forms."""
    comps = _orbits([x, y], len(x))
    if len(comps) == 1:
        return _canon_component(x, y, comps[0])
    return ("disconnected",) + tuple(sorted(_canon_component(x, y, c) for c in comps))


def centralizer_order_of_type(ct: CycleType) -> int:
    return CycleType(ct).centralizer_order()


# -- the search --------------------------------------------------------------------------


class _Search:
    """Backtracking over y of type μ with w = x0·y constrained to type ν."""

    def __init__(self, x0: Permutation, mu: CycleType, nu: CycleType, budget: int):
        n = len(x0)
        self.n = n
        self.x0 = x0
        self.xinv = inverse(x0)
        self.yrem = Counter(mu)
        self.zrem = Counter(nu)
        self.budget = budget
        self.nodes = 0
        self.y = [-1] * n
        self.used = [False] * n
        self.pstart = list(range(n))
        self.pend = list(range(n))
        self.plen = [1] * n
        self.maxz = max(nu)

    def _max_remaining(self) -> int:
        return max((k for k, c in self.zrem.items() if c), default=0)

    def _edge(self, a: int, b: int):
        """Set y[a] = b; return an undo token or None when pruned."""
        u = self.xinv[a]
        s = self.pstart[u]
        if s == b:
            L = self.plen[s]
            if not self.zrem[L]:
                return None
            self.zrem[L] -= 1
            if L == self.maxz and not self.zrem[L]:
                old = self.maxz
                self.maxz = self._max_remaining()
                return ("close", L, old)
            return ("close", L, None)
        e = self.pend[b]
        L = self.plen[s] + self.plen[b]
        if L > self.maxz:
            return None
        token = ("merge", s, e, self.pend[s], self.pstart[e], self.plen[s])
        self.pend[s] = e
        self.pstart[e] = s
        self.plen[s] = L
        return token

    def _undo(self, token) -> None:
        if token[0] == "close":
            _, L, old = token
            self.zrem[L] += 1
            if old is not None:
                self.maxz = old
        else:
            _, s, e, pend_s, pstart_e, plen_s = token
            self.pend[s] = pend_s
            self.pstart[e] = pstart_e
            self.plen[s] = plen_s

    def run(self, on_leaf, first_choices=None) -> None:
        self.on_leaf = on_leaf
        self.first_choices = first_choices
        self._next_cycle(0, True)

    def _next_cycle(self, start: int, first: bool) -> None:
        n = self.n
        used = self.used
        a0 = start
        while a0 < n and used[a0]:
            a0 += 1
        if a0 == n:
            self.on_leaf(_perm(self.y))
            return
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"search budget {self.budget} exhausted",
                                 frontier=[i for i in self.y])
        for k in sorted(self.yrem):
            if not self.yrem[k]:
                continue
            self.yrem[k] -= 1
            used[a0] = True
            self._extend(a0, a0, k - 1, a0, first, (k,))
            used[a0] = False
            self.yrem[k] += 1

    def _extend(self, a0: int, cur: int, rem: int, start: int, first: bool, path: tuple) -> None:
        if rem == 0:
            if first and len(path) == 1 and self.first_choices is not None \
                    and path not in self.first_choices:
                return
            token = self._edge(cur, a0)
            if token is None:
                return
            self.y[cur] = a0
            self._next_cycle(start + 1, False)
            self.y[cur] = -1
            self._undo(token)
            return
        used = self.used
        check = first and len(path) == 1 and self.first_choices is not None
        for b in range(a0 + 1, self.n):
            if used[b]:
                continue
            if check and path + (b,) not in self.first_choices:
                continue
            token = self._edge(cur, b)
            if token is None:
                continue
            self.y[cur] = b
            used[b] = True
            self._extend(a0, b, rem - 1, start, first, path + (b,))
            used[b] = False
            self.y[cur] = -1
            self._undo(token)


def _first_choices(x0, mu, nu):
    """Keys (k,) or (k, b) for the first cycle of y (through 0), used to split work."""
    n = len(x0)
    keys = []
    for k in sorted(set(mu)):
        if k == 1:
            keys.append((1,))
        else:
            keys.extend((k, b) for b in range(1, n))
    return keys


def _search_passport(x0, mu, nu, budget, first_choices=None):
    """Run the search; return {canonical form: [count, least y, transitive]} and node count."""
    groups: dict = {}

    def on_leaf(y):
        key = canonical_form(x0, y)
        g = groups.get(key)
        if g is None:
            groups[key] = [1, y]
        else:
            g[0] += 1
            if y < g[1]:
                g[1] = y

    s = _Search(x0, mu, nu, budget)
    s.run(on_leaf, first_choices)
    return groups, s.nodes


def _worker(args):
    x0, mu, nu, budget, chunk = args
    groups, nodes = _search_passport(x0, mu, nu, budget, set(chunk))
    return groups, nodes


def _merge(into: dict, part: dict) -> None:
    for key, (count, y) in part.items():
        g = into.get(key)
        if g is None:
            into[key] = [count, y]
        else:
            g[0] += count
            if y < g[1]:
                g[1] = y


def search_passport(pp: Passport, transitive: bool = True, budget: int = DEFAULT_BUDGET,
                    workers: int = 1, with_reports: bool = True) -> CensusResult:
    n = pp.x.degree
    x0 = from_cycle_type(pp.x)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        choices = _first_choices(x0, pp.y, pp.z)
        chunks = [choices[i::workers] for i in range(workers)]
        groups: dict = {}
        nodes = 0
        with ProcessPoolExecutor(workers) as ex:
            for part, k in ex.map(_worker, [(x0, pp.y, pp.z, budget, c) for c in chunks]):
                _merge(groups, part)
                nodes += k
    else:
        groups, nodes = _search_passport(x0, pp.y, pp.z, budget)

    cent = pp.x.centralizer_order()
    result = CensusResult(nodes=nodes, passports_searched=[pp])
    for key in sorted(groups, key=lambda k: groups[k][1]):
        count, y = groups[key]
        result.solutions += count
        weight = Fraction(count, cent)
        if key[0] == "disconnected":
            comps = _orbits([x0, y], n)
            cps = sorted((_component_passport(x0, y, c) for c in comps), key=str)
            if transitive:
                result.discarded_nontransitive += count
            result.disconnected.append(Disconnected(pp, cps, weight, y))
            continue
        D = Dessin(x0, y)
        if cent % count:
            raise VerificationError("orbit size does not divide |C(x0)|")
        result.dessins.append(D)
        result.weights.append(weight)
        if with_reports:
            result.reports.append(report(D))
    # reconciliation with the Frobenius count in S_n
    expected = sym_triple_count(pp.x, pp.y, pp.z) / pp.x.class_size()
    if expected != result.solutions:
        raise VerificationError(
            f"{pp}: found {result.solutions} solutions, character theory predicts {expected}")
    return result


def _component_passport(x, y, points) -> Passport:
    index = {a: i for i, a in enumerate(points)}
    xs = _perm(index[x[a]] for a in points)
    ys = _perm(index[y[a]] for a in points)
    zs = inverse(compose(xs, ys))
    from .perm import cycle_type
    return Passport(cycle_type(xs), cycle_type(ys), cycle_type(zs))


def report(D: Dessin) -> DessinReport:
    G = D.monodromy
    systems = G.minimal_block_systems() if D.degree > 1 else []
    return DessinReport(D, D.passport, D.genus, G.order(), not systems,
                        [len(B) for B in systems], D.automorphisms.order())


def enumerate_dessins(q: EnumQuery) -> CensusResult:
    """All dessins matching the query, up to isomorphism, in a fixed order."""
    result = CensusResult()
    for pp in q.passports():
        logger.info("searching passport %s", pp)
        result.extend(search_passport(pp, q.transitive, q.budget, q.workers))
    # safety net: no two listed dessins may be isomorphic
    seen = set()
    for D in result.dessins:
        key = canonical_form(D.x, D.y)
        if key in seen:
            raise VerificationError("duplicate dessin in census")
        seen.add(key)
    return result


def census_two_seven_faces(degrees: Iterable[int] = range(14, 21), workers: int = 1,
                           budget: int = DEFAULT_BUDGET) -> dict[int, CensusResult]:
    """(3,2,7)-maps whose z is two 7-cycles plus fixed points, per degree."""
    out = {}
    for n in degrees:
        z = CycleType([7, 7] + [1] * (n - 14))
        out[n] = enumerate_dessins(EnumQuery(n, 3, 2, z, workers=workers, budget=budget))
    return out


def count_one_seven_face(degrees: Iterable[int] = range(7, 14), workers: int = 1,
                         budget: int = DEFAULT_BUDGET) -> dict[int, CensusResult]:
    """(3,2,7)-maps whose z is one 7-cycle plus fixed points, per degree."""
    out = {}
    for n in degrees:
        z = CycleType([7] + [1] * (n - 7))
        out[n] = enumerate_dessins(EnumQuery(n, 3, 2, z, workers=workers, budget=budget))
    return out
