"""Small finite fields, the projective line over them, and Möbius maps.

Elements of F_q (q = p^e) are the integers 0..q-1, the base-p digits of an
integer being the coefficients of a polynomial in the generator.  The
modulus is the irreducible monic polynomial of degree e whose lower
coefficients, read as such an integer, are least (x^3+x+1 for F_8,
x^3+2x+1 for F_27).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .perm import INFINITY, Permutation, _perm


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _digits(a: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(a % p)
        a //= p
    return out


def _polymulmod(u: list[int], v: list[int], mod: list[int], p: int) -> list[int]:
    """Product modulo the monic polynomial x^e + mod[e-1] x^(e-1) + ... + mod[0]."""
    e = len(mod)
    prod = [0] * (2 * e - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                prod[i + j] = (prod[i + j] + a * b) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(e):
                prod[k - e + i] = (prod[k - e + i] - c * mod[i]) % p
    return prod[:e]


def _is_irreducible(mod: list[int], p: int) -> bool:
    # a monic polynomial of degree e ≤ 3 is irreducible iff it has no root;
    # in general test that no polynomial of degree ≤ e/2 divides it
    e = len(mod)
    if e == 1:
        return True
    full = mod + [1]
    for d in range(1, e // 2 + 1):
        for low in range(p**d):
            div = _digits(low, p, d) + [1]
            rem = full[:]
            for k in range(len(rem) - 1, d - 1, -1):
                c = rem[k]
                if c:
                    for i in range(d + 1):
                        rem[k - d + i] = (rem[k - d + i] - c * div[i]) % p
            if not any(rem[:d]):
                return False
    return True


class FField:
    """The field with q = p^e elements, with precomputed operation tables."""

    def __init__(self, p: int, e: int = 1):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)) or e < 1:
            raise ValueError(f"F_{p}^{e} is not a field")
        self.p, self.e, self.q = p, e, p**e
        if e == 1:
            self.modulus = [0]
        else:
            self.modulus = next(m for m in (_digits(k, p, e) for k in range(p**e))
                                if _is_irreducible(m, p))
        q = self.q
        vecs = [_digits(a, p, e) for a in range(q)]
        enc = lambda v: sum(c * p**i for i, c in enumerate(v))
        self._add = [[enc([(a + b) % p for a, b in zip(vecs[i], vecs[j])]) for j in range(q)]
                     for i in range(q)]
        if e == 1:
            self._mul = [[(i * j) % p for j in range(q)] for i in range(q)]
        else:
            self._mul = [[enc(_polymulmod(vecs[i], vecs[j], self.modulus, p)) for j in range(q)]
                         for i in range(q)]
        self._neg = [self._add[i].index(0) for i in range(q)]
        self._inv = [None] + [self._mul[i].index(1) for i in range(1, q)]
        self.primitive = next(g for g in range(1, q) if self._mult_order(g) == q - 1)

    def __repr__(self) -> str:
        return f"FField({self.p}, {self.e})"

    def _mult_order(self, a: int) -> int:
        k, b = 1, a
        while b != 1:
            b = self._mul[b][a]
            k += 1
        return k

    @property
    def modulus_polynomial(self) -> list[int]:
        """Coefficients low to high, including the leading 1."""
        return self.modulus + [1] if self.e > 1 else [0, 1]

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        r = 1
        while k:
            if k & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            k >>= 1
        return r

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def label(self, a: int) -> str:
        """Polynomial in the generator 'w', e.g. 'w^2+2'."""
        if self.e == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(_digits(a, self.p, self.e)))):
            if c:
                mono = "" if i == 0 else "w" if i == 1 else f"w^{i}"
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
        return "+".join(terms) or "0"


@lru_cache(maxsize=None)
def field(q: int) -> FField:
    return FField(*_prime_power(q))


# -- the projective line ----------------------------------------------------------


def projective_line(F: FField) -> list:
    """Points of P^1(q): field elements in their canonical order, then ∞."""
    return list(F.elements()) + [INFINITY]


def mobius_image(F: FField, M: Sequence[int], t) -> object:
    """Image of t ∈ P^1 under t ↦ (a t + b)/(c t + d)."""
    a, b, c, d = M
    if t == INFINITY:
        return INFINITY if c == 0 else F.div(a, c)
    num = F.add(F.mul(a, t), b)
    den = F.add(F.mul(c, t), d)
    return INFINITY if den == 0 else F.div(num, den)


def mobius_perm(F: FField, M: Sequence[int]) -> Permutation:
    """The permutation of P^1(q) (∞ is point q) induced by the matrix M."""
    q = F.q
    idx = lambda t: q if t == INFINITY else t
    return _perm(idx(mobius_image(F, M, t)) for t in projective_line(F))


def mat_mul(F: FField, A: Sequence[int], B: Sequence[int]) -> tuple[int, int, int, int]:
    a, b, c, d = A
    e, f, g, h = B
    return (F.add(F.mul(a, e), F.mul(b, g)), F.add(F.mul(a, f), F.mul(b, h)),
            F.add(F.mul(c, e), F.mul(d, g)), F.add(F.mul(c, f), F.mul(d, h)))


def det(F: FField, M: Sequence[int]) -> int:
    a, b, c, d = M
    return F.sub(F.mul(a, d), F.mul(b, c))


def is_scalar_identity(F: FField, M: Sequence[int]) -> bool:
    """M = ±I, i.e. the identity of PSL_2."""
    a, b, c, d = M
    return b == 0 and c == 0 and a == d and F.mul(a, a) == 1


def psl2_generators(F: FField) -> list[tuple[int, int, int, int]]:
    """Matrices of t ↦ t+1, t ↦ -1/t and t ↦ ω² t."""
    w = F.primitive
    return [(1, 1, 0, 1), (0, F.neg(1), 1, 0), (w, 0, 0, F.inv(w))]


def frobenius_perm(F: FField) -> Permutation:
    """The field automorphism t ↦ t^p acting on P^1(q)."""
    q = F.q
    return _perm([F.frobenius(t) for t in range(q)] + [q])
