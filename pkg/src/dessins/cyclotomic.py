"""Exact arithmetic in cyclotomic fields.

A value is a rational combination of powers of ζ_n = exp(2πi/n), stored
in a fixed basis of ℚ(ζ_n) at the smallest possible conductor n, so two
values are equal exactly when their (conductor, coefficients) agree.

Basis: write n = Π p^k and split an exponent a into its components modulo
each p^k.  A component c = l + j·p^(k-1) with 0 ≤ l < p^(k-1), 0 ≤ j < p is
allowed when j ≠ 0 (p odd) or j = 0 (p = 2).  The relations
Σ_j ζ^(l + j·p^(k-1)) = 0 rewrite every other power in terms of allowed ones.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Union[int, Fraction]


def _factor(n: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def _layout(n: int):
    """Per prime power q = p^k of n: (p, k, q, idempotent e_q)."""
    parts = []
    for p, k in _factor(n):
        q = p**k
        m = n // q
        # e ≡ 1 (mod q), e ≡ 0 (mod m)
        e = (m * pow(m, -1, q)) % n if m > 1 else 1 % n
        parts.append((p, k, q, e))
    return tuple(parts)


def _add_term(d: dict, a: int, c) -> None:
    v = d.get(a, 0) + c
    if v:
        d[a] = v
    else:
        d.pop(a, None)


def _reduce(n: int, coeffs: dict) -> dict:
    """Rewrite ``coeffs`` (exponent -> coefficient, exponents mod n) into the basis."""
    d = {}
    for a, c in coeffs.items():
        if c:
            _add_term(d, a % n, c)
    for p, k, q, e in _layout(n):
        step = q // p
        if p == 2:
            for a in list(d):
                comp = a % q
                if comp // step == 1:
                    c = d.pop(a)
                    _add_term(d, (a - step * e) % n, -c)
        else:
            for a in list(d):
                comp = a % q
                if comp // step == 0:
                    c = d.pop(a)
                    for j in range(1, p):
                        _add_term(d, (a + j * step * e) % n, -c)
    return d


def _halve_conductor(n: int, d: dict) -> tuple[int, dict]:
    # n = 2m with m odd: ζ_n^a = ζ_m^(a/2) or -ζ_m^((a+m)/2)
    m = n // 2
    out = {}
    for a, c in d.items():
        if a % 2 == 0:
            _add_term(out, (a // 2) % m, c)
        else:
            _add_term(out, ((a + m) // 2) % m, -c)
    return m, out


def _normalize(n: int, coeffs: dict) -> tuple[int, dict]:
    d = {a % n: c for a, c in coeffs.items() if c}
    if n % 4 == 2:
        n, d = _halve_conductor(n, d)
    d = _reduce(n, d)
    changed = True
    while changed and n > 1:
        changed = False
        if not d:
            return 1, {}
        for p, k, q, e in _layout(n):
            if k >= 2 or p == 2:
                if all(a % p == 0 for a in d):
                    m = n // p
                    d = {a // p: c for a, c in d.items()}
                    n = m
                    if n % 4 == 2:
                        n, d = _halve_conductor(n, d)
                    d = _reduce(n, d)
                    changed = True
                    break
            else:
                # p odd, k = 1: coefficients constant along each p-fibre
                fibres: dict[int, list] = {}
                for a, c in d.items():
                    rest = (a - (a % p) * e) % n
                    fibres.setdefault(rest, []).append(c)
                if all(len(cs) == p - 1 and len(set(cs)) == 1 for cs in fibres.values()):
                    m = n // p
                    new = {}
                    for rest, cs in fibres.items():
                        # rest has p-component 0, so it is divisible by p
                        _add_term(new, (rest // p) % m, -cs[0])
                    n, d = m, new
                    if n % 4 == 2:
                        n, d = _halve_conductor(n, d)
                    d = _reduce(n, d)
                    changed = True
                    break
    if not d:
        return 1, {}
    return n, d


class Cyclotomic:
    """An element of ℚ(ζ_n) in canonical form."""

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int = 1, coeffs: dict | None = None, *, _canonical: bool = False):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        coeffs = {a: Fraction(c) for a, c in (coeffs or {}).items() if c}
        if not _canonical:
            conductor, coeffs = _normalize(conductor, coeffs)
        self.conductor = conductor
        self.coeffs = coeffs
        self._hash = None

    # constructors
    @classmethod
    def rational(cls, r: Rational) -> Cyclotomic:
        return cls(1, {0: Fraction(r)} if r else {}, _canonical=True)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> Cyclotomic:
        """ζ_n^k."""
        return cls(n, {k % n: 1})

    @classmethod
    def from_powers(cls, n: int, multiplicities) -> Cyclotomic:
        """Σ_j m_j ζ_n^j from a sequence or mapping of multiplicities."""
        items = multiplicities.items() if isinstance(multiplicities, dict) else enumerate(multiplicities)
        return cls(n, {j % n: m for j, m in items if m})

    @staticmethod
    def coerce(v) -> Cyclotomic:
        if isinstance(v, Cyclotomic):
            return v
        if isinstance(v, (int, Fraction)):
            return Cyclotomic.rational(v)
        raise TypeError(f"cannot coerce {type(v).__name__} to Cyclotomic")

    # lifting to a common conductor
    def _at(self, n: int) -> dict:
        if n % self.conductor:
            raise ValueError(f"{n} is not a multiple of {self.conductor}")
        s = n // self.conductor
        return {a * s: c for a, c in self.coeffs.items()}

    def __add__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        n = math.lcm(self.conductor, other.conductor)
        d = self._at(n)
        for a, c in other._at(n).items():
            _add_term(d, a, c)
        return Cyclotomic(n, d)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, {a: -c for a, c in self.coeffs.items()}, _canonical=True)

    def __sub__(self, other):
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Cyclotomic()
            return Cyclotomic(self.conductor, {a: c * other for a, c in self.coeffs.items()},
                              _canonical=True)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.conductor == 1:
            return self * other.coeffs.get(0, 0)
        if self.conductor == 1:
            return other * self.coeffs.get(0, 0)
        n = math.lcm(self.conductor, other.conductor)
        left, right = self._at(n), other._at(n)
        d: dict = {}
        for a, c in left.items():
            for b, e in right.items():
                _add_term(d, (a + b) % n, c * e)
        return Cyclotomic(n, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, k: int) -> Cyclotomic:
        """Image under ζ ↦ ζ^k (k coprime to the conductor)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        return Cyclotomic(n, {(a * k) % n: c for a, c in self.coeffs.items()})

    def conj(self) -> Cyclotomic:
        return self.galois(-1)

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.to_rational())
        n = self.conductor
        others = Cyclotomic.rational(1)
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                others = others * self.galois(k)
        norm = (self * others).to_rational()
        return others * (1 / norm)

    # queries
    def is_zero(self) -> bool:
        return not self.coeffs

    def is_rational(self) -> bool:
        return self.conductor == 1

    def is_integer(self) -> bool:
        return self.is_rational() and self.to_rational().denominator == 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def to_int(self) -> int:
        r = self.to_rational()
        if r.denominator != 1:
            raise ValueError(f"{r} is not an integer")
        return r.numerator

    def __complex__(self) -> complex:
        n = self.conductor
        return sum((complex(float(c)) * cmath.exp(2j * math.pi * a / n) for a, c in self.coeffs.items()),
                   0j)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_rational())
            else:
                self._hash = hash((self.conductor, frozenset(self.coeffs.items())))
        return self._hash

    def sort_key(self) -> tuple:
        return (self.conductor, tuple(sorted(self.coeffs.items())))

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.to_rational())
        n = self.conductor
        terms = []
        for a, c in sorted(self.coeffs.items()):
            base = "1" if a == 0 else f"E({n})" if a == 1 else f"E({n})^{a}"
            if c == 1:
                terms.append(base)
            elif c == -1:
                terms.append("-" + base)
            else:
                terms.append(f"{c}*{base}" if a else str(c))
        return "+".join(terms).replace("+-", "-")

    def to_json(self) -> dict:
        return {"conductor": self.conductor,
                "coeffs": {str(a): str(c) for a, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        return cls(int(data["conductor"]), {int(a): Fraction(c) for a, c in data["coeffs"].items()})


def E(n: int) -> Cyclotomic:
    """ζ_n, spelled as in common computer algebra systems."""
    return Cyclotomic.zeta(n)


def sqrt_neg7() -> Cyclotomic:
    """√−7 = ζ + ζ² + ζ⁴ − ζ³ − ζ⁵ − ζ⁶ with ζ = ζ_7 (the Gauss sum)."""
    z = [E(7) ** k for k in range(7)]
    return z[1] + z[2] + z[4] - z[3] - z[5] - z[6]
