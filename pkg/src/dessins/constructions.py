"""Named dessins and groups: Fano-plane trees, PSL_2(q) on the projective
line, an explicit degree-28 map, the degree-14 genus-17 maps, AGL_3(2), and
the genus arithmetic of Hurwitz quotients of PSL_2(q)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .dessin import Dessin, coset_dessin, cover_genus
from .errors import VerificationError
from .fields import (
    _prime_power as _factor_prime_power,
    field,
    frobenius_perm,
    is_scalar_identity,
    mat_mul,
    mobius_perm,
    psl2_generators,
)
from .groups import BlockSystem, PermGroup
from .perm import compose, conjugate, inverse, order as perm_order, parse

# -- the Fano plane and its two trees ---------------------------------------------


def fano_plane() -> list[frozenset[int]]:
    """Lines {i, i+1, i+3} mod 7, i = 0..6."""
    return [frozenset({i, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]


def line_through(a: int, b: int) -> frozenset[int]:
    return next(L for L in fano_plane() if a in L and b in L)


def preserves_lines(g) -> bool:
    lines = set(fano_plane())
    return all(frozenset(g[a] for a in L) in lines for L in lines)


def fano_tree_triples() -> tuple[Dessin, Dessin]:
    """The two degree-7 trees in PSL_3(2) acting on the points of the plane:
    x = (1,5,2)(3,4,6), y = (0,4)(1,6), z = γ^3 for γ = (0,1,...,6); the
    second is (x^-1, x z, z^-1), whose z is γ^4."""
    x = parse("(1,5,2)(3,4,6)", 7)
    y = parse("(0,4)(1,6)", 7)
    z = parse("(0,3,6,2,5,1,4)", 7)
    left = Dessin(x, y, z)
    xi, zi = inverse(x), inverse(z)
    right = Dessin(xi, compose(x, z), zi)
    return left, right


# -- PSL_2(q) on the projective line -----------------------------------------------


@lru_cache(maxsize=None)
def psl2_group(q: int) -> PermGroup:
    F = field(q)
    gens = [mobius_perm(F, M) for M in psl2_generators(F)]
    G = PermGroup(gens, q + 1, name=f"PSL2({q})")
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    if G.order() != expected:
        raise VerificationError(f"PSL2({q}) has order {G.order()}, expected {expected}")
    return G


def moebius_action(q: int, M) -> tuple:
    """The permutation of P^1(q) (field elements 0..q-1, then ∞ = q) induced by
    t ↦ (a t + b)/(c t + d) for M = (a, b, c, d)."""
    return mobius_perm(field(q), M)


def psl2_natural_matrices(q: int = 7) -> dict[str, tuple]:
    """Matrices of y: t ↦ -1/t, z: t ↦ t+1 and x = (y z)^-1: t ↦ -1/(t-1)."""
    F = field(q)
    one, m1 = 1, F.neg(1)
    return {"x": (0, m1, one, m1), "y": (0, m1, one, 0), "z": (one, one, 0, one)}


def psl2_natural_triple(q: int = 7) -> Dessin:
    mats = psl2_natural_matrices(q)
    F = field(q)
    x, y, z = (mobius_perm(F, mats[k]) for k in "xyz")
    return Dessin(x, y, z)


def matrix_order_check(q: int = 7) -> bool:
    """Permutations compose left to right, matrices right to left: x y z = 1
    corresponds to Z Y X = ±I."""
    F = field(q)
    m = psl2_natural_matrices(q)
    return is_scalar_identity(F, mat_mul(F, mat_mul(F, m["z"], m["y"]), m["x"]))


def psl2_hurwitz_triples(q: int, limit: int | None = None) -> list[Dessin]:
    """(3,2,7) triples in the natural action of PSL_2(q) with y: t ↦ -1/t
    fixed, x running over matrices of trace ±1 (so of order 3 in PSL_2),
    keeping those with o(xy) = 7 that generate the whole group."""
    F = field(q)
    G = psl2_group(q)
    N = G.order()
    y = mobius_perm(F, (0, F.neg(1), 1, 0))
    traces = sorted({1, F.neg(1)})
    seen = set()
    out = []
    for t in traces:
        for a in F.elements():
            d = F.sub(t, a)
            ad = F.mul(a, d)
            for b in F.elements():
                if b == 0:
                    if ad != 1:
                        continue
                    cs = list(F.elements())
                else:
                    cs = [F.div(F.sub(ad, 1), b)]
                for c in cs:
                    x = mobius_perm(F, (a, b, c, d))
                    if x in seen or perm_order(x) != 3:
                        continue
                    seen.add(x)
                    xy = compose(x, y)
                    if perm_order(xy) != 7:
                        continue
                    if PermGroup([x, y], q + 1).order() != N:
                        continue
                    out.append(Dessin(x, y))
                    if limit is not None and len(out) >= limit:
                        return out
    return out


def psl2_hurwitz_triple(q: int) -> Dessin:
    found = psl2_hurwitz_triples(q, limit=1)
    if not found:
        raise VerificationError(f"PSL2({q}) has no generating (3,2,7) triple")
    return found[0]


def psl2_order7_fusion(q: int = 27) -> int:
    """Number of order-7 classes of PSL_2(q) permuted in one orbit by the
    field automorphism t ↦ t^p (which normalizes the natural action)."""
    F = field(q)
    G = psl2_group(q)
    phi = frobenius_perm(F)
    if not all(conjugate(g, phi) in G for g in G.generators):
        raise VerificationError("Frobenius does not normalize PSL2(q)")
    sevens = [C for C in G.conjugacy_classes() if C.element_order == 7]
    start = sevens[0]
    orbit = {start.label}
    g = start.representative
    while True:
        g = conjugate(g, phi)
        lab = G.class_of(g).label
        if lab in orbit:
            break
        orbit.add(lab)
    return len(orbit)


# -- explicit degree-28 and degree-14 maps -----------------------------------------

PSL2_27_TRIPLE = {
    "x": "(1,2,4)(5,8,24)(6,21,10)(7,16,15)(9,25,28)(11,13,14)(12,27,23)(17,26,18)(19,20,22)",
    "y": "(1,13)(2,25)(3,27)(4,23)(5,16)(6,12)(7,26)(8,22)(9,11)(10,17)(14,18)(15,21)(19,24)(20,28)",
    "z": "(1,11,28,19,8,20,25)(2,9,14,26,15,6,23)(3,12,10,18,13,4,27)(5,7,17,21,16,24,22)",
}


def psl2_27_triple() -> Dessin:
    """The degree-28 genus-1 map with monodromy group PSL_2(27), given on the
    labels 1..28 (point k is stored as k-1)."""
    support = range(1, 29)
    x, y, z = (parse(PSL2_27_TRIPLE[k], support) for k in "xyz")
    try:
        return Dessin(x, y, z)
    except ValueError as exc:
        raise VerificationError(f"degree-28 triple fails validation: {exc}") from exc


GENUS17_X = "(0,2,4)(1,3,5)(6,8,10)(7,9,11)"
GENUS17_TRIPLES = (
    ("(0,1)(2,3)(4,6)(5,7)(8,12)(9,13)", "(0,5,11,9,13,7,3)(1,4,10,8,12,6,2)"),
    ("(2,3)(4,6)(5,7)(8,12)(9,13)(10,11)", "(0,4,10,9,13,7,3)(1,5,11,8,12,6,2)"),
    # the third map's printed z repeats the second one's and fails x y z = 1;
    # its z is recomputed as (x y)^-1
    ("(0,1)(4,6)(5,7)(8,12)(9,13)(10,11)", None),
)
GENUS17_BLOCKS = BlockSystem.from_blocks([(2 * i, 2 * i + 1) for i in range(7)])


def genus17_triples() -> list[Dessin]:
    """The three degree-14 maps whose first two have monodromy of order 1344
    (regular cover of genus 17) and whose third has monodromy PSL_3(2)."""
    x = parse(GENUS17_X, 14)
    return [Dessin(x, parse(y, 14), parse(z, 14) if z else None) for y, z in GENUS17_TRIPLES]


def agl32() -> PermGroup:
    """AGL_3(2) on the vectors of F_2^3, vector v encoded as the integer with bits v."""
    def affine(M, b):
        def img(v):
            w = 0
            for i in range(3):
                bit = sum(M[i][j] * ((v >> j) & 1) for j in range(3)) % 2
                w |= bit << i
            return w ^ b
        return tuple(img(v) for v in range(8))
    translation = affine([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1)
    # GL_3(2) is generated by a Singer cycle of order 7 and a transvection
    singer = affine([[0, 0, 1], [1, 0, 1], [0, 1, 0]], 0)
    transvection = affine([[1, 1, 0], [0, 1, 0], [0, 0, 1]], 0)
    return PermGroup([translation, singer, transvection], 8, name="AGL3(2)")


def max_element_order(G: PermGroup) -> int:
    return max(C.element_order for C in G.conjugacy_classes())


@dataclass
class NonsplitWitness:
    degree8_count: int
    degree8_orders: list[int]
    group_order: int
    kernel_order: int
    kernel_exponent: int
    kernel_abelian: bool
    yz3_order: int
    agl_order: int
    agl_max_order: int

    @property
    def ok(self) -> bool:
        return (self.degree8_count == 1 and self.degree8_orders == [168] and self.group_order == 1344
                and self.kernel_order == 8 and self.kernel_exponent == 2 and self.kernel_abelian
                and self.yz3_order == 8 and self.agl_order == 1344 and self.agl_max_order < 8)


def nonsplit_witness() -> NonsplitWitness:
    """Why the order-1344 group of the genus-17 maps is not AGL_3(2): no
    degree-8 (3,2,7) quotient exists except the PSL_2(7) one, the kernel T of
    the action on seven blocks is elementary abelian of order 8, and y z^3
    has order 8 while AGL_3(2) has no element of order 8."""
    from .enumeration import EnumQuery, enumerate_dessins
    census = enumerate_dessins(EnumQuery(8, 3, 2, 7))
    orders = sorted(r.monodromy_order for r in census.reports)
    D = genus17_triples()[0]
    G = D.monodromy
    if not GENUS17_BLOCKS.is_invariant([D.x, D.y]):
        raise VerificationError("block system not invariant")
    T = G.block_kernel(GENUS17_BLOCKS)
    yz3 = compose(D.y, compose(D.z, compose(D.z, D.z)))
    A = agl32()
    w = NonsplitWitness(len(census.dessins), orders, G.order(), T.order(), T.exponent(),
                        T.is_abelian(), perm_order(yz3), A.order(), max_element_order(A))
    if not w.ok:
        raise VerificationError(f"non-split witness failed: {w}")
    return w


# -- genus arithmetic for PSL_2(q) -------------------------------------------------


@dataclass(frozen=True)
class HurwitzGenusParams:
    q: int
    alpha: int
    beta: int
    gamma: int


def _pm1(q: int, m: int) -> int:
    r = q % m
    if r == 1:
        return 1
    if r == m - 1:
        return -1
    raise ValueError(f"q = {q} is not ±1 mod {m}")


def hurwitz_params(q: int) -> HurwitzGenusParams:
    if math.gcd(q, 42) != 1:
        raise ValueError(f"q = {q} is not coprime to 42")
    return HurwitzGenusParams(q, _pm1(q, 3), _pm1(q, 4), _pm1(q, 7))


def _prime_power(q: int) -> tuple[int, int] | None:
    try:
        return _factor_prime_power(q)
    except ValueError:
        return None


def hurwitz_case(q: int) -> int | None:
    """Which case of the classification of Hurwitz groups PSL_2(q) applies:
    1 for q = 7, 2 for primes ≡ ±1 mod 7, 3 for p^3 with p ≡ ±2, ±3 mod 7."""
    pe = _prime_power(q)
    if pe is None:
        return None
    p, e = pe
    if q == 7:
        return 1
    if e == 1 and p % 7 in (1, 6):
        return 2
    if e == 3 and p % 7 in (2, 3, 4, 5):
        return 3
    return None


def quotient_genus_psl2(q: int) -> int:
    """Genus of the degree-(q+1) quotient of a Hurwitz dessin for PSL_2(q)
    (the natural action on the projective line)."""
    if hurwitz_case(q) is None:
        raise ValueError(f"PSL2({q}) is not a Hurwitz group")
    special = {7: 0, 8: 0, 27: 1}
    if q in special:
        return special[q]
    h = hurwitz_params(q)
    g, rem = divmod(q - 28 * h.alpha - 21 * h.beta - 36 * h.gamma, 84)
    if rem:
        raise VerificationError(f"non-integral genus for q = {q}")
    return g


def hurwitz_cover_genus(q: int) -> int:
    """Genus |G|/84 + 1 of the Hurwitz surface with automorphism group PSL_2(q)."""
    if hurwitz_case(q) is None:
        raise ValueError(f"PSL2({q}) is not a Hurwitz group")
    N = q * (q * q - 1) // math.gcd(2, q - 1)
    return N // 84 + 1


def constructed_quotient_genus(q: int) -> int:
    return psl2_hurwitz_triple(q).genus


@dataclass
class MonotonicityReport:
    q: int
    n: int
    g: int
    n2: int
    g2: int
    second: str

    @property
    def fails(self) -> bool:
        """n < n' yet g > g' (or the genera are otherwise out of order)."""
        return self.n < self.n2 and self.g != self.g2


def monotonicity_failure_demo(q: int) -> MonotonicityReport:
    """Quotients of the Hurwitz dessin of PSL_2(q) by a Sylow p-subgroup and by
    a dihedral subgroup of order q - 1 (a cyclic one of order 7 when q = 8)."""
    D = psl2_hurwitz_triple(q)
    G = D.monodromy
    p = field(q).p
    H1 = G.sylow_subgroup(p)
    if q == 8:
        H2, what = G.cyclic_subgroup(7), "C7"
    else:
        H2, what = G.dihedral_subgroup(q - 1), f"D{q - 1}"
    Q1 = coset_dessin(D, H1)
    Q2 = coset_dessin(D, H2)
    return MonotonicityReport(q, Q1.degree, Q1.genus, Q2.degree, Q2.genus, what)


def hurwitz_dessin_count(q: int) -> int:
    """Regular (3,2,7) dessins with automorphism group PSL_2(q)."""
    from .moebius import regular_dessin_count
    if q > 43:
        raise ValueError(f"q = {q} above the counting limit 43")
    return regular_dessin_count(psl2_group(q), (3, 2, 7))


def expected_hurwitz_count(q: int) -> int:
    case = hurwitz_case(q)
    return {1: 1, 2: 3, 3: 1}.get(case, 0)


A15_TRIPLE = ("(0,1,2)(3,4,5)(6,7,8)(9,10,11)(12,13,14)", "(2,3)(4,6)(5,9)(7,11)(10,12)(13,14)")


def a15_triple() -> Dessin:
    """A degree-15 (3,2,7) map with monodromy A_15 (one of the three found by
    the degree-15 census)."""
    return Dessin(parse(A15_TRIPLE[0], 15), parse(A15_TRIPLE[1], 15))


def a15_cover_genus() -> int:
    """|A_15|/84 + 1, with |A_15| from a stabilizer chain."""
    return cover_genus(a15_triple())
