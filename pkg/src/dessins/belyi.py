"""Exact check of the Belyi polynomial of the Fano-plane trees over
Q(a), a^2 + 3a + 4 = 0 (so s = 2a + 3 satisfies s^2 = -7):

    f(t)     = K (t^2 + 7a)^3 (t - 7)
    f(t) - 1 = K (t^2 - 6t + a)^2 P(t),  P = t^3 + 5t^2 + (19a+24) t + (83a+108)
    K        = -1 / (2^6 3^3 (7a + 17))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable


class QuadFieldElement:
    """c0 + c1 a with a^2 = -3a - 4."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0=0, c1=0):
        self.c0, self.c1 = Fraction(c0), Fraction(c1)

    @classmethod
    def coerce(cls, v) -> QuadFieldElement:
        return v if isinstance(v, QuadFieldElement) else cls(v)

    @staticmethod
    def _other(v):
        if isinstance(v, QuadFieldElement):
            return v
        if isinstance(v, (int, Fraction)):
            return QuadFieldElement(v)
        return None

    def __add__(self, other):
        o = QuadFieldElement._other(other)
        if o is None:
            return NotImplemented
        return QuadFieldElement(self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __neg__(self):
        return QuadFieldElement(-self.c0, -self.c1)

    def __sub__(self, other):
        o = QuadFieldElement._other(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = QuadFieldElement._other(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = QuadFieldElement._other(other)
        if o is None:
            return NotImplemented
        # (u + v a)(w + x a) = uw + (ux + vw) a + vx a^2,  a^2 = -3a - 4
        u, v, w, x = self.c0, self.c1, o.c0, o.c1
        return QuadFieldElement(u * w - 4 * v * x, u * x + v * w - 3 * v * x)

    __rmul__ = __mul__

    def conj(self) -> QuadFieldElement:
        """The other root of a^2 + 3a + 4 is -3 - a."""
        return QuadFieldElement(self.c0 - 3 * self.c1, -self.c1)

    def norm(self) -> Fraction:
        n = self * self.conj()
        assert n.c1 == 0
        return n.c0

    def inverse(self) -> QuadFieldElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in Q(a)")
        c = self.conj()
        return QuadFieldElement(c.c0 / n, c.c1 / n)

    def __truediv__(self, other):
        o = QuadFieldElement._other(other)
        return NotImplemented if o is None else self * o.inverse()

    def __rtruediv__(self, other):
        o = QuadFieldElement._other(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        r = QuadFieldElement(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def __eq__(self, other):
        o = QuadFieldElement._other(other)
        if o is None:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1))

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def is_rational(self) -> bool:
        return self.c1 == 0

    def __repr__(self):
        if self.c1 == 0:
            return str(self.c0)
        if self.c0 == 0:
            return f"{self.c1}a"
        return f"({self.c0} + {self.c1}a)"


A = QuadFieldElement(0, 1)
S = 2 * A + 3


class FieldPoly:
    """Dense polynomial in t over Q(a), coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [QuadFieldElement.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    @classmethod
    def t(cls) -> FieldPoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> QuadFieldElement:
        return self.coeffs[-1] if self.coeffs else QuadFieldElement(0)

    def __add__(self, other):
        o = _poly(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = QuadFieldElement(0)
        return FieldPoly([(self.coeffs[i] if i < len(self.coeffs) else z)
                          + (o.coeffs[i] if i < len(o.coeffs) else z) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return FieldPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        o = _poly(other)
        if not self.coeffs or not o.coeffs:
            return FieldPoly([])
        out = [QuadFieldElement(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            for j, v in enumerate(o.coeffs):
                out[i + j] = out[i + j] + u * v
        return FieldPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        r = FieldPoly([1])
        for _ in range(k):
            r = r * self
        return r

    def derivative(self) -> FieldPoly:
        return FieldPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other):
        return self.coeffs == _poly(other).coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms)

    def mismatches(self, other) -> list[tuple[int, QuadFieldElement, QuadFieldElement]]:
        """Monomials t^i on which the two polynomials differ."""
        o = _poly(other)
        n = max(len(self.coeffs), len(o.coeffs))
        z = QuadFieldElement(0)
        out = []
        for i in range(n):
            u = self.coeffs[i] if i < len(self.coeffs) else z
            v = o.coeffs[i] if i < len(o.coeffs) else z
            if u != v:
                out.append((i, u, v))
        return out


def _poly(v) -> FieldPoly:
    return v if isinstance(v, FieldPoly) else FieldPoly([v])


# -- the verification ----------------------------------------------------------------


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class BelyiReport:
    checks: list[SubCheck] = field(default_factory=list)
    sign: int = 0
    norm_K: Fraction | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
               for c in self.checks]
        return out


def belyi_data() -> dict[str, object]:
    t = FieldPoly.t()
    K = QuadFieldElement(-1) / (QuadFieldElement(2**6 * 3**3) * (7 * A + 17))
    P = t**3 + 5 * t**2 + (19 * A + 24) * t + (83 * A + 108)
    return {
        "K": K,
        "black": t**2 + 7 * A,
        "white": t**2 - 6 * t + A,
        "P": P,
        "f": K * (t**2 + 7 * A) ** 3 * (t - 7),
    }


def _factors(sign: int) -> tuple[FieldPoly, FieldPoly]:
    t = FieldPoly.t()
    s = sign * S
    Q = t**2 + (1 + s) * t + (-31 + 13 * s) / 2
    R = t + (4 - s)
    return Q, R


def _describe(mis) -> str:
    return "; ".join(f"t^{i}: {u} != {v}" for i, u, v in mis)


def verify_klein_tree_belyi() -> BelyiReport:
    d = belyi_data()
    K, f, P = d["K"], d["f"], d["P"]
    rep = BelyiReport()
    rep.checks.append(SubCheck("a^2 + 3a + 4 = 0 and (2a+3)^2 = -7",
                               (A * A + 3 * A + 4).is_zero() and S * S == -7))
    lhs = f - 1
    rhs = K * d["white"] ** 2 * P
    mis = lhs.mismatches(rhs)
    rep.checks.append(SubCheck("f - 1 = K (t^2 - 6t + a)^2 P", not mis, _describe(mis)))
    ok_signs = [e for e in (1, -1) if P == _factors(e)[0] * _factors(e)[1]]
    if len(ok_signs) == 1:
        rep.sign = ok_signs[0]
        rep.checks.append(SubCheck("P = Q R over Q(sqrt(-7))", True,
                                   f"with sqrt(-7) = {'+' if rep.sign > 0 else '-'}(2a + 3)"))
    else:
        Q, R = _factors(1)
        rep.checks.append(SubCheck("P = Q R over Q(sqrt(-7))", False,
                                   f"{len(ok_signs)} signs work; " + _describe(P.mismatches(Q * R))))
    df = f.derivative()
    crit = d["black"] ** 2 * d["white"]
    c = df.lead() / crit.lead()
    mis = df.mismatches(c * crit)
    rep.checks.append(SubCheck("f' = c (t^2 + 7a)^2 (t^2 - 6t + a)",
                               not mis and f.degree == 7 and df.degree == 6,
                               _describe(mis) or f"c = {c}"))
    rep.norm_K = K.norm()
    rep.checks.append(SubCheck("K times its conjugate is rational", (K * K.conj()).is_rational(),
                               f"N(K) = {rep.norm_K}"))
    return rep
