"""The claim ledger: each numbered check recomputes one published fact from
scratch and compares it exactly with the expected value."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cyclotomic import Cyclotomic, sqrt_neg7
from .perm import CycleType


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:>2}. {self.title} ({self.seconds:.1f}s)"


class _Ledger:
    def __init__(self):
        self.ok = True
        self.details: list[str] = []

    def expect(self, what: str, got, want) -> None:
        good = got == want
        self.ok &= good
        self.details.append(f"{'ok ' if good else 'BAD'} {what}: got {got}, expected {want}")

    def holds(self, what: str, cond: bool) -> None:
        self.ok &= bool(cond)
        self.details.append(f"{'ok ' if cond else 'BAD'} {what}")


def _psl32():
    from .constructions import fano_tree_triples
    return fano_tree_triples()[0].monodromy


def check_character_table(L: _Ledger, workers: int) -> None:
    from .chartab import dixon_table
    G = _psl32()
    T = dixon_table(G)
    T.verify()
    L.expect("degrees", sorted(T.degrees), [1, 3, 3, 6, 7, 8])
    L.expect("class sizes", sorted(C.size for C in T.classes), [1, 21, 24, 24, 42, 56])
    s = sqrt_neg7()
    pair = {(-1 + s) / 2, (-1 - s) / 2}
    sevens = [i for i, C in enumerate(T.classes) if C.element_order == 7]
    values = {row[i] for row in T.rows for i in sevens if row[i] in pair}
    L.expect("order-7 values (-1±√-7)/2 present", values == pair, True)
    b7 = Cyclotomic.zeta(7, 3) + Cyclotomic.zeta(7, 5) + Cyclotomic.zeta(7, 6)
    L.expect("E(7)^3+E(7)^5+E(7)^6 is one of them", b7 in pair, True)


def check_frobenius(L: _Ledger, workers: int) -> None:
    from .chartab import brute_force_triple_count, dixon_table, frobenius_count, triple_count_by_type
    G = _psl32()
    T = dixon_table(G)
    A3, A2 = G.class_by_label("3A"), G.class_by_label("2A")
    for lab in ("7A", "7B"):
        C = G.class_by_label(lab)
        L.expect(f"Frobenius (3A,2A,{lab})", frobenius_count(G, A3, A2, C, T), 168)
        L.expect(f"brute force (3A,2A,{lab})", brute_force_triple_count(G, A3, A2, C), 168)
    L.expect("type (3,2,7) total", triple_count_by_type(G, T, (3, 2, 7)), 336)


def check_example_passport(L: _Ledger, workers: int) -> None:
    from .chartab import weighted_passport_count
    from .dessin import Passport
    from .enumeration import search_passport
    pp = Passport(CycleType.parse("6 3 2 1"), CycleType.parse("2^6"), CycleType.parse("6 3 2 1"))
    L.expect("weighted count by characters", weighted_passport_count(12, pp), Fraction(39, 2))
    res = search_passport(pp, transitive=False, workers=workers, with_reports=False)
    L.expect("connected maps", len(res.dessins), 18)
    L.expect("connected weight", res.connected_weight(), 18)
    L.expect("disconnected weight", res.disconnected_weight(), Fraction(3, 2))
    L.expect("disconnected weights", sorted(d.weight for d in res.disconnected),
             [Fraction(1, 2), Fraction(1)])


def check_a5_pairs(L: _Ledger, workers: int) -> None:
    from .groups import PermGroup
    from .moebius import generating_pair_statistics
    st = generating_pair_statistics(PermGroup.alternating(5))
    L.expect("generating pairs", st.generating_pairs, 2280)
    L.expect("generating pairs by Möbius inversion", st.pairs_by_mobius, 2280)
    L.expect("Aut-orbits", st.orbits, 19)
    L.expect("core-free subgroup classes", st.faithful_representations, 8)
    L.expect("dessins", st.dessins, 152)


def check_mobius(L: _Ledger, workers: int) -> None:
    from .moebius import eq3_holds, generating_triples_brute, phi, regular_dessin_count
    G = _psl32()
    L.expect("φ by Möbius inversion", phi(G, (3, 2, 7)), 336)
    L.expect("φ by brute force", generating_triples_brute(G, (3, 2, 7)), 336)
    L.holds("Σ_{K≥H} μ(K) = δ(H,G) at every class", eq3_holds(G))
    L.expect("regular dessins", regular_dessin_count(G, (3, 2, 7)), 1)


def check_one_seven(L: _Ledger, workers: int) -> None:
    from .enumeration import count_one_seven_face
    res = count_one_seven_face(workers=workers)
    per = {n: len(r.dessins) for n, r in res.items()}
    L.expect("maps per degree 7..13", per, {7: 2, 8: 1, 9: 1, 10: 0, 11: 0, 12: 0, 13: 0})
    orders = sorted(rep.monodromy_order for r in res.values() for rep in r.reports)
    L.expect("monodromy orders", orders, [168, 168, 168, 504])


def check_two_seven(L: _Ledger, workers: int) -> None:
    import math
    from .enumeration import census_two_seven_faces
    res = census_two_seven_faces(workers=workers)
    per = {n: len(r.dessins) for n, r in res.items()}
    L.expect("maps per degree 14..20", per, {14: 9, 15: 3, 16: 0, 17: 0, 18: 0, 19: 0, 20: 0})
    L.expect("total", sum(per.values()), 12)
    L.expect("degree-14 orders", sorted(rep.monodromy_order for rep in res[14].reports),
             [168, 168, 1092, 1092, 1092, 1344, 1344, 1344, 1344])
    L.expect("degree-15 orders", [rep.monodromy_order for rep in res[15].reports],
             [math.factorial(15) // 2] * 3)
    L.expect("degree-15 passports", {str(rep.passport) for rep in res[15].reports},
             {"(3^5, 2^6 1^3, 7^2 1^1)"})


def check_hurwitz_counts(L: _Ledger, workers: int) -> None:
    from .chartab import dixon_table, triple_count_by_type
    from .constructions import expected_hurwitz_count, hurwitz_dessin_count, psl2_group
    for q in (7, 13, 8, 29, 27):
        L.expect(f"q = {q}", hurwitz_dessin_count(q), expected_hurwitz_count(q))
    # for q = 27 every (3,2,7) triple generates, so the class count must agree
    G = psl2_group(27)
    sigma = triple_count_by_type(G, dixon_table(G), (3, 2, 7))
    L.expect("q = 27 via characters: σ / |Aut|", sigma // G.automorphism_count(), 1)


def check_genus17(L: _Ledger, workers: int) -> None:
    from .constructions import genus17_triples, nonsplit_witness
    w = nonsplit_witness()
    L.expect("degree-8 census", (w.degree8_count, w.degree8_orders), (1, [168]))
    L.expect("monodromy orders of the three maps",
             [D.monodromy.order() for D in genus17_triples()], [1344, 1344, 168])
    L.expect("block kernel order / exponent", (w.kernel_order, w.kernel_exponent), (8, 2))
    L.holds("block kernel abelian", w.kernel_abelian)
    L.expect("order of y z^3", w.yz3_order, 8)
    L.expect("|AGL3(2)|", w.agl_order, 1344)
    L.holds("AGL3(2) has no element of order 8", w.agl_max_order < 8)


def check_psl2_27(L: _Ledger, workers: int) -> None:
    from .constructions import psl2_27_triple
    from .dessin import cover_genus
    D = psl2_27_triple()
    L.expect("passport", str(D.passport), "(3^9 1^1, 2^14, 7^4)")
    L.expect("genus", D.genus, 1)
    L.holds("transitive", D.monodromy.is_transitive())
    L.expect("monodromy order", D.monodromy.order(), 9828)
    L.expect("cover genus", cover_genus(D), 118)
    L.expect("fixed point of x (1-based label)", [i + 1 for i in range(28) if D.x[i] == i], [3])


def check_genus_table(L: _Ledger, workers: int) -> None:
    from .constructions import constructed_quotient_genus, quotient_genus_psl2
    want = {13: 0, 29: 0, 43: 0, 41: 1, 71: 1, 97: 1, 83: 2}
    L.expect("formula", {q: quotient_genus_psl2(q) for q in want}, want)
    for q in (13, 29, 41, 43):
        L.expect(f"constructed quotient, q = {q}", constructed_quotient_genus(q), want[q])


def check_monotonicity(L: _Ledger, workers: int) -> None:
    from .constructions import monotonicity_failure_demo
    want = {13: (84, 2, 91, 0), 8: (63, 0, 72, 1), 27: (364, 1, 378, 2)}
    for q, w in want.items():
        r = monotonicity_failure_demo(q)
        L.expect(f"q = {q} (n, g, n', g')", (r.n, r.g, r.n2, r.g2), w)


def check_belyi(L: _Ledger, workers: int) -> None:
    from .belyi import verify_klein_tree_belyi
    rep = verify_klein_tree_belyi()
    for c in rep.checks:
        L.holds(c.name + (f" ({c.detail})" if c.detail else ""), c.passed)


def check_cover_genera(L: _Ledger, workers: int) -> None:
    from .constructions import a15_cover_genus, fano_tree_triples, psl2_hurwitz_triple
    from .dessin import cover_genus
    L.expect("A15", a15_cover_genus(), 7783776001)
    L.expect("PSL2(8)", cover_genus(psl2_hurwitz_triple(8)), 7)
    L.expect("PSL3(2)", cover_genus(fano_tree_triples()[0]), 3)


CHECKS: list[tuple[int, str, Callable[[_Ledger, int], None]]] = [
    (1, "PSL3(2) character table", check_character_table),
    (2, "Frobenius counts in PSL3(2)", check_frobenius),
    (3, "weighted passport count 39/2 at n = 12", check_example_passport),
    (4, "A5 generating pairs and faithful representations", check_a5_pairs),
    (5, "Möbius inversion for PSL3(2), type (3,2,7)", check_mobius),
    (6, "census with one 7-face, degrees 7-13", check_one_seven),
    (7, "census with two 7-faces, degrees 14-20", check_two_seven),
    (8, "Hurwitz dessin counts for PSL2(q)", check_hurwitz_counts),
    (9, "genus-17 maps and the non-split extension", check_genus17),
    (10, "degree-28 map for PSL2(27)", check_psl2_27),
    (11, "genus of the natural PSL2(q) quotient", check_genus_table),
    (12, "genus is not monotone in the degree", check_monotonicity),
    (13, "Belyi polynomial of the Fano trees", check_belyi),
    (14, "regular cover genera from group orders", check_cover_genera),
]


def run_check(number: int, workers: int = 1) -> CheckResult:
    num, title, fn = next(c for c in CHECKS if c[0] == number)
    L = _Ledger()
    t = time.perf_counter()
    try:
        fn(L, workers)
    except Exception as exc:  # a crash is a failed check, reported as such
        L.ok = False
        L.details.append(f"BAD raised {type(exc).__name__}: {exc}")
    return CheckResult(num, title, L.ok, L.details, time.perf_counter() - t)


def run_all(numbers=None, workers: int = 1, on_result=None) -> list[CheckResult]:
    out = []
    for num, _, _ in CHECKS:
        if numbers is not None and num not in numbers:
            continue
        r = run_check(num, workers)
        if on_result:
            on_result(r)
        out.append(r)
    return out
