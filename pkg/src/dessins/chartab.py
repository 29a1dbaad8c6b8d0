"""Character tables and the Frobenius count of solutions to x y z = 1.

``dixon_table`` computes the full table of a small permutation group: the
class multiplication coefficients are reduced modulo a prime p ≡ 1 (mod the
group exponent), their common eigenvectors give the central characters mod p,
and each value is lifted to an exact cyclotomic number from the eigenvalue
multiplicities of the representing matrices.  Symmetric groups also get the
Murnaghan–Nakayama rule, which needs no group at all.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .cyclotomic import Cyclotomic
from .errors import VerificationError
from .groups import ConjClass, PermGroup
from .perm import CycleType, compose, inverse, power

logger = logging.getLogger(__name__)


# -- linear algebra mod p --------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def dixon_prime(exponent: int, order: int) -> int:
    """Least prime p ≡ 1 (mod exponent) with p > 2·sqrt(order)."""
    p = exponent + 1
    while not (_is_prime(p) and p * p > 4 * order):
        p += exponent
    return p


def _primitive_root(p: int) -> int:
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _nullspace(A: list[list[int]], p: int) -> list[list[int]]:
    n = len(A[0])
    R, pivots = _rref(A, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, c in zip(R, pivots):
            v[c] = (-row[f]) % p
        basis.append(v)
    return basis


def _charpoly(A: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial (coefficients low to high) via Hessenberg form."""
    n = len(A)
    H = [row[:] for row in A]
    for m in range(1, n - 1):
        i = next((i for i in range(m, n) if H[i][m - 1] % p), None)
        if i is None:
            continue
        if i != m:
            H[i], H[m] = H[m], H[i]
            for row in H:
                row[i], row[m] = row[m], row[i]
        t_inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = (H[i][m - 1] * t_inv) % p
            if u:
                H[i] = [(a - u * b) % p for a, b in zip(H[i], H[m])]
                for row in H:
                    row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for k, c in enumerate(prev):
            cur[k + 1] = (cur[k + 1] + c) % p
            cur[k] = (cur[k] - H[m - 1][m - 1] * c) % p
        t = 1
        for i in range(1, m):
            t = (t * H[m - i][m - i - 1]) % p
            f = (H[m - i - 1][m - 1] * t) % p
            for k, c in enumerate(polys[m - i - 1]):
                cur[k] = (cur[k] - f * c) % p
        polys.append(cur)
    return polys[n]


def _roots(poly: list[int], p: int) -> list[int]:
    out = []
    for x in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % p
        if acc == 0:
            out.append(x)
    return out


# -- the table -----------------------------------------------------------------------


@dataclass
class CharacterTable:
    """Irreducible characters of ``group``; ``rows[i][k]`` is χ_i on class k."""

    group: PermGroup
    classes: list[ConjClass]
    rows: list[list[Cyclotomic]]
    prime: int | None = None

    @property
    def degrees(self) -> list[int]:
        return [row[0].to_int() for row in self.rows]

    @property
    def order(self) -> int:
        return sum(c.size for c in self.classes)

    def class_position(self, cls: ConjClass) -> int:
        for k, c in enumerate(self.classes):
            if c.label == cls.label:
                return k
        raise KeyError(cls.label)

    def inverse_positions(self) -> list[int]:
        G = self.group
        return [self.class_position(G.class_of(inverse(c.representative))) for c in self.classes]

    def verify(self) -> None:
        """Exact row/column orthogonality and Σ χ(1)² = |G|; raises on failure."""
        N = self.order
        r = len(self.classes)
        if len(self.rows) != r:
            raise VerificationError(f"{len(self.rows)} characters for {r} classes")
        if sum(d * d for d in self.degrees) != N:
            raise VerificationError("sum of squared degrees differs from |G|")
        inv = self.inverse_positions()
        sizes = [c.size for c in self.classes]
        for i in range(r):
            for j in range(i, r):
                s = Cyclotomic()
                for k in range(r):
                    s = s + self.rows[i][k] * self.rows[j][inv[k]] * sizes[k]
                if s != (N if i == j else 0):
                    raise VerificationError(f"rows {i}, {j} not orthogonal")
        for k in range(r):
            for l in range(k, r):
                s = Cyclotomic()
                for row in self.rows:
                    s = s + row[k] * row[inv[l]]
                expect = N // sizes[k] if k == l else 0
                if s != expect:
                    raise VerificationError(f"columns {k}, {l} not orthogonal")

    def to_json(self) -> dict:
        from .perm import render
        return {
            "classes": [{"label": c.label, "size": c.size, "order": c.element_order,
                         "representative": render(c.representative)} for c in self.classes],
            "rows": [[v.to_json() for v in row] for row in self.rows],
        }

    def pretty(self) -> str:
        """Atlas-style layout: centralizer orders, class labels, then rows.
        Irrational values are abbreviated A, B, ... (with /A for the complex
        conjugate of A) and listed below the table."""
        N = self.order
        head = [[str(N // c.size) for c in self.classes], [c.label.lower() for c in self.classes]]
        names: dict[Cyclotomic, str] = {}
        legend = []

        def show(v: Cyclotomic) -> str:
            if v.is_rational():
                r = v.to_rational()
                return "." if r == 0 else str(r)
            if v in names:
                return names[v]
            if v.conj() in names:
                return "/" + names[v.conj()]
            if -v in names:
                return "-" + names[-v]
            name = _letters(len(legend))
            names[v] = name
            legend.append(f"{name} = {v}")
            return name

        body = [[show(v) for v in row] for row in self.rows]
        widths = [max(len(line[j]) for line in head + body) + 1 for j in range(len(self.classes))]
        fmt = lambda line: "".join(s.rjust(w) for s, w in zip(line, widths))
        lines = ["     " + fmt(head[0]), "", "     " + fmt(head[1])]
        for i, line in enumerate(body, 1):
            lines.append(f"X.{i}".ljust(5) + fmt(line))
        if legend:
            lines.append("")
            lines.extend(legend)
        return "\n".join(lines)


def _letters(k: int) -> str:
    out = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        out = chr(ord("A") + r) + out
    return out


def dixon_table(G: PermGroup, seed: int = 0) -> CharacterTable:
    """Exact character table by Dixon's method (with Schneider-style
    eigenspace splitting); verified before return."""
    cached = getattr(G, "_chartab", None)
    if cached is not None:
        return cached
    classes = G.conjugacy_classes()
    N = G.order()
    r = len(classes)
    exponent = math.lcm(*(c.element_order for c in classes))
    p = dixon_prime(exponent, N)
    logger.debug("dixon: |G|=%d classes=%d exponent=%d prime=%d", N, r, exponent, p)

    coeff = class_coefficients(G)
    mats = [[[coeff[i][j][k] % p for k in range(r)] for j in range(r)] for i in range(r)]

    rng = random.Random(seed)
    done: list[list[int]] = []
    pending = [[[int(i == j) for j in range(r)] for i in range(r)]]
    attempts = 0
    while pending:
        basis = pending.pop()
        if len(basis) == 1:
            done.append(basis[0])
            continue
        attempts += 1
        if attempts > 50 * r + 100:
            raise VerificationError("eigenspace splitting did not terminate")
        if attempts % 3 == 0:
            combo = [0] * r
            combo[rng.randrange(1, r)] = 1
        else:
            combo = [rng.randrange(p) for _ in range(r)]
        M = [[sum(combo[i] * mats[i][j][k] for i in range(r)) % p for k in range(r)]
             for j in range(r)]
        pieces = _split(M, basis, p)
        if len(pieces) == 1:
            pending.append(basis)
        else:
            pending.extend(pieces)

    sizes = [c.size for c in classes]
    idx = {c.label: k for k, c in enumerate(classes)}
    e_root = pow(_primitive_root(p), (p - 1) // exponent, p)
    rows = []
    for v in done:
        v1 = v[0]
        w = [(a * pow(v1, -1, p)) % p for a in v]
        inv_pos = [idx[G.class_of(inverse(c.representative)).label] for c in classes]
        s = sum(w[k] * w[inv_pos[k]] * pow(sizes[k], -1, p) for k in range(r)) % p
        d2 = (N * pow(s, -1, p)) % p
        d = next((d for d in range(1, math.isqrt(N) + 1) if (d * d) % p == d2), None)
        if d is None:
            raise VerificationError("no degree matches the central character")
        theta = [(w[k] * d * pow(sizes[k], -1, p)) % p for k in range(r)]
        row = []
        for k, c in enumerate(classes):
            o = c.element_order
            z = pow(e_root, exponent // o, p)
            power_pos = [idx[G.class_of(power(c.representative, l)).label] for l in range(o)]
            inv_o = pow(o, -1, p)
            mult = []
            for j in range(o):
                m = sum(theta[power_pos[l]] * pow(z, (-j * l) % o, p) for l in range(o)) * inv_o % p
                if m > d:
                    raise VerificationError("eigenvalue multiplicity exceeds the degree")
                mult.append(m)
            if sum(mult) != d:
                raise VerificationError("eigenvalue multiplicities do not sum to the degree")
            row.append(Cyclotomic.from_powers(o, mult))
        rows.append(row)
    rows.sort(key=lambda row: (row[0].to_int(), [v.sort_key() for v in row]))
    table = CharacterTable(G, classes, rows, p)
    table.verify()
    G._chartab = table
    return table


def _split(M, basis, p):
    """Split span(basis) (an invariant subspace, rows in RREF) into eigenspaces of M."""
    basis, pivots = _rref(basis, p)
    d = len(basis)
    r = len(M)
    images = [[sum(M[j][k] * b[k] for k in range(r)) % p for j in range(r)] for b in basis]
    # A[t][s]: coordinate t of M·b_s
    A = [[images[s][pivots[t]] for s in range(d)] for t in range(d)]
    pieces = []
    for lam in _roots(_charpoly(A, p), p):
        shifted = [[(A[t][s] - (lam if s == t else 0)) % p for s in range(d)] for t in range(d)]
        vecs = _nullspace(shifted, p)
        space = [[sum(u[s] * basis[s][k] for s in range(d)) % p for k in range(r)] for u in vecs]
        pieces.append(space)
    if sum(len(x) for x in pieces) != d:
        # not diagonalizable over F_p for this combination: keep as is
        return [basis]
    return pieces


def class_coefficients(G: PermGroup) -> list[list[list[int]]]:
    """a[i][j][k] = #{(x, y) : x ∈ C_i, y ∈ C_j, x y = g_k} for a fixed g_k ∈ C_k."""
    classes = G.conjugacy_classes()
    r = len(classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    where = G._class_index
    elems = G.elements()
    inverses = [inverse(x) for x in elems]
    for k, c in enumerate(classes):
        g = c.representative
        for x, xi in zip(elems, inverses):
            y = compose(xi, g)
            a[where[x]][where[y]][k] += 1
    return a


# -- Frobenius ---------------------------------------------------------------------


def frobenius_count_k(G: PermGroup, classes: Sequence[ConjClass], table: CharacterTable | None = None) -> int:
    """Number of tuples (g_1..g_k), g_i ∈ classes[i], with g_1 ⋯ g_k = 1."""
    k = len(classes)
    if k < 2:
        raise ValueError("need at least two classes")
    table = table or dixon_table(G)
    pos = [table.class_position(c) for c in classes]
    total = Cyclotomic()
    for row in table.rows:
        term = Cyclotomic.rational(1)
        for q in pos:
            term = term * row[q]
        total = total + term * Fraction(1, row[0].to_int() ** (k - 2))
    scale = Fraction(math.prod(c.size for c in classes), table.order)
    value = total * scale
    if not value.is_integer() or value.to_int() < 0:
        raise VerificationError(f"Frobenius sum is not a nonnegative integer: {value}")
    return value.to_int()


def frobenius_count(G: PermGroup, X: ConjClass, Y: ConjClass, Z: ConjClass,
                    table: CharacterTable | None = None) -> int:
    return frobenius_count_k(G, [X, Y, Z], table)


def naive_estimate(G: PermGroup, X: ConjClass, Y: ConjClass, Z: ConjClass) -> Fraction:
    """|X||Y||Z|/|G|, the contribution of the trivial character."""
    return Fraction(X.size * Y.size * Z.size, G.order())


def character_correction(G: PermGroup, X, Y, Z, table: CharacterTable | None = None) -> Cyclotomic:
    """The non-trivial characters' part of the Frobenius sum."""
    table = table or dixon_table(G)
    pos = [table.class_position(c) for c in (X, Y, Z)]
    total = Cyclotomic()
    for row in table.rows[1:]:
        total = total + row[pos[0]] * row[pos[1]] * row[pos[2]] * Fraction(1, row[0].to_int())
    return total * naive_estimate(G, X, Y, Z)


def brute_force_triple_count(G: PermGroup, X: ConjClass, Y: ConjClass, Z: ConjClass) -> int:
    count = 0
    for x in X.members:
        for y in Y.members:
            if inverse(compose(x, y)) in Z.members:
                count += 1
    return count


def brute_force_tuple_count(G: PermGroup, classes: Sequence[ConjClass]) -> int:
    """Tuples with product 1, by iterating all but the last entry."""
    idn = G.identity()
    count = 0

    def walk(i, prod):
        nonlocal count
        if i == len(classes) - 1:
            if inverse(prod) in classes[i].members:
                count += 1
            return
        for g in classes[i].members:
            walk(i + 1, compose(prod, g))

    walk(0, idn)
    return count


def triple_count_by_type(G: PermGroup, table: CharacterTable | None, orders: tuple[int, int, int]) -> int:
    """All triples with x y z = 1 whose element orders are exactly ``orders``."""
    table = table or dixon_table(G)
    p, q, r = orders
    by = {o: [c for c in table.classes if c.element_order == o] for o in (p, q, r)}
    return sum(frobenius_count(G, X, Y, Z, table) for X in by[p] for Y in by[q] for Z in by[r])


# -- symmetric groups ------------------------------------------------------------------


def partitions(n: int, largest: int | None = None):
    """All partitions of n, parts descending, in reverse lexicographic order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _mn(beta: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        c = b - k
        if c < 0 or c in bset:
            continue
        sign = -1 if sum(1 for t in beta if c < t < b) % 2 else 1
        new = tuple(sorted((bset - {b}) | {c}, reverse=True))
        total += sign * _mn(new, rest)
    return total


def sym_char_value(lam: Sequence[int], mu: Sequence[int]) -> int:
    """χ^λ on the class of cycle type μ, by the Murnaghan–Nakayama rule."""
    lam = tuple(sorted((int(a) for a in lam if a), reverse=True))
    mu = tuple(sorted((int(a) for a in mu if a), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"partitions of different sizes: {sum(lam)} vs {sum(mu)}")
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))
    return _mn(beta, mu)


def sym_char_table(n: int) -> tuple[list[tuple], list[list[int]]]:
    """(class partitions, rows indexed [λ][μ]) for S_n."""
    parts = list(partitions(n))
    return parts, [[sym_char_value(lam, mu) for mu in parts] for lam in parts]


def sym_triple_count(lam, mu, nu) -> Fraction:
    """Number of triples in S_n with cycle types (λ, μ, ν) and x y z = 1."""
    lam, mu, nu = CycleType(lam), CycleType(mu), CycleType(nu)
    n = lam.degree
    if mu.degree != n or nu.degree != n:
        raise ValueError("partitions of different sizes")
    total = Fraction(0)
    for chi in partitions(n):
        d = sym_char_value(chi, (1,) * n)
        total += Fraction(sym_char_value(chi, lam) * sym_char_value(chi, mu) * sym_char_value(chi, nu), d)
    value = total * lam.class_size() * mu.class_size() * nu.class_size() / math.factorial(n)
    if value.denominator != 1 or value < 0:
        raise VerificationError(f"S_n triple count is not a nonnegative integer: {value}")
    return value


def weighted_passport_count(n: int, passport) -> Fraction:
    """Triples of the given passport divided by n!: every (possibly disconnected)
    object weighted by 1/|Aut|."""
    lam, mu, nu = passport
    return sym_triple_count(lam, mu, nu) / math.factorial(n)
