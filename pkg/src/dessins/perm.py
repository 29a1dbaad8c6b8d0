"""Permutations of {0, ..., n-1} and their cycle structure.

Products are taken left to right: ``p * q`` first applies ``p``, then ``q``,
so ``i ** (p * q) == q[p[i]]``.  All permutations are immutable tuples of
images; a plain tuple of images is accepted anywhere a permutation is.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from typing import Iterable, Sequence

INFINITY = "∞"

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation(tuple):
    """Immutable bijection of ``{0..n-1}`` stored as its image list."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        p = tuple.__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation: {tuple(p)!r}")
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return _perm(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        images = list(range(n))
        seen = set()
        for cycle in cycles:
            for a in cycle:
                if a in seen:
                    raise ValueError(f"repeated point {a} in cycles")
                if not 0 <= a < n:
                    raise ValueError(f"point {a} outside 0..{n - 1}")
                seen.add(a)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a] = b
        return _perm(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):
        return compose(self, other)

    def __rmul__(self, other):
        return compose(other, self)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def inverse(self) -> Permutation:
        return inverse(self)

    def order(self) -> int:
        return order(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycles(self)

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def fixed_points(self) -> set[int]:
        return fixed_points(self)

    def conjugate(self, g: Sequence[int]) -> Permutation:
        return conjugate(self, g)

    def is_identity(self) -> bool:
        return all(i == a for i, a in enumerate(self))

    def __repr__(self) -> str:
        return f"Permutation({render(self)!r}, degree={len(self)})"

    def __str__(self) -> str:
        return render(self)


def _perm(images: Iterable[int]) -> Permutation:
    # unchecked constructor for hot paths
    return tuple.__new__(Permutation, images)


class CycleType(tuple):
    """Partition of the degree into cycle lengths, sorted descending.

    Renders as ``"3^2 1^2"``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int]):
        parts = sorted((int(k) for k in parts), reverse=True)
        if any(k <= 0 for k in parts):
            raise ValueError("cycle lengths must be positive")
        return tuple.__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> CycleType:
        """Read ``"3^2 1^2"``, ``"3^2.1^2"`` or ``"3,3,1,1"``."""
        text = text.strip()
        if "^" not in text:
            return cls(int(t) for t in re.split(r"[\s,.]+", text) if t)
        parts = []
        for token in re.split(r"[\s,.]+", text):
            if not token:
                continue
            base, _, exp = token.partition("^")
            parts.extend([int(base)] * (int(exp) if exp else 1))
        return cls(parts)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def num_cycles(self) -> int:
        return len(self)

    def order(self) -> int:
        return math.lcm(*self) if self else 1

    def multiplicities(self) -> dict[int, int]:
        return dict(sorted(Counter(self).items(), reverse=True))

    def centralizer_order(self) -> int:
        """Order of the centralizer in S_n of a permutation of this type."""
        z = 1
        for k, m in Counter(self).items():
            z *= k**m * math.factorial(m)
        return z

    def class_size(self) -> int:
        return math.factorial(self.degree) // self.centralizer_order()

    def __str__(self) -> str:
        return " ".join(f"{k}^{m}" for k, m in self.multiplicities().items())

    def __repr__(self) -> str:
        return f"CycleType({str(self)!r})"


def identity(n: int) -> Permutation:
    return _perm(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Apply ``p`` then ``q``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return _perm(map(q.__getitem__, p))


def inverse(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, a in enumerate(p):
        inv[a] = i
    return _perm(inv)


def power(p: Sequence[int], k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(len(p))
    base = _perm(p)
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def conjugate(p: Sequence[int], g: Sequence[int]) -> Permutation:
    """Return ``g^-1 p g``, i.e. relabel ``p`` through ``g``."""
    if len(p) != len(g):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(g)}")
    images = [0] * len(p)
    for i, a in enumerate(p):
        images[g[i]] = g[a]
    return _perm(images)


def cycles(p: Sequence[int], include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Cycles of ``p``, each starting at its least point, sorted by that point."""
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cycle = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        if len(cycle) > 1 or include_fixed:
            out.append(tuple(cycle))
    return out


def cycle_lengths(p: Sequence[int]) -> list[int]:
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            k += 1
        lengths.append(k)
    return lengths


def num_cycles(p: Sequence[int]) -> int:
    return len(cycle_lengths(p))


def cycle_type(p: Sequence[int]) -> CycleType:
    return CycleType(cycle_lengths(p))


def order(p: Sequence[int]) -> int:
    return math.lcm(*cycle_lengths(p)) if len(p) else 1


def fixed_points(p: Sequence[int]) -> set[int]:
    return {i for i, a in enumerate(p) if i == a}


def is_identity(p: Sequence[int]) -> bool:
    return tuple(p) == tuple(range(len(p)))


def from_cycle_type(ct: Iterable[int]) -> Permutation:
    """Canonical permutation of a given type: cycles in decreasing length,
    filled with consecutive points, e.g. ``3^2 1^2 -> (0,1,2)(3,4,5)``."""
    ct = CycleType(ct)
    images = list(range(ct.degree))
    start = 0
    for k in ct:
        for i in range(k):
            images[start + i] = start + (i + 1) % k
        start += k
    return _perm(images)


# -- text format -----------------------------------------------------------


def _label_key(label):
    # integers first in numeric order, then the symbol for infinity
    return (1, 0) if label == INFINITY else (0, label)


def _read_label(token: str):
    token = token.strip()
    if token in (INFINITY, "oo", "inf", "Infinity"):
        return INFINITY
    if not re.fullmatch(r"\d+", token):
        raise ValueError(f"bad point label {token!r}")
    return int(token)


def parse_cycles(text: str) -> list[list]:
    """Split cycle notation into lists of labels, validating parentheses."""
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "()"):
        return []
    pos = 0
    out = []
    for match in _CYCLE_RE.finditer(stripped):
        if match.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = match.end()
        body = match.group(1)
        if body:
            out.append([_read_label(t) for t in body.split(",")])
    if pos != len(stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    labels = [a for c in out for a in c]
    if len(labels) != len(set(labels)):
        raise ValueError(f"repeated label in {text!r}")
    return out


def parse(text: str, support=None) -> Permutation:
    """Parse cycle notation into a permutation of ``0..n-1``.

    ``support`` is either the degree ``n`` (labels are then ``0..n-1``) or an
    explicit collection of labels; labels are renumbered ``0..n-1`` by sorted
    order, with the infinity symbol sorting after every integer.  With no
    support given, the moved labels themselves are used.
    """
    perm, _ = parse_with_labels(text, support)
    return perm


def parse_with_labels(text: str, support=None) -> tuple[Permutation, list]:
    cyc = parse_cycles(text)
    moved = {a for c in cyc for a in c}
    if support is None:
        labels = sorted(moved, key=_label_key)
    elif isinstance(support, int):
        labels = list(range(support))
    else:
        labels = sorted(set(support), key=_label_key)
    index = {a: i for i, a in enumerate(labels)}
    missing = moved - index.keys()
    if missing:
        raise ValueError(f"labels {sorted(missing, key=_label_key)} outside the support")
    perm = Permutation.from_cycles([[index[a] for a in c] for c in cyc], len(labels))
    return perm, labels


def render(p: Sequence[int], labels: Sequence | None = None) -> str:
    """Canonical cycle notation: ASCII, no blanks, cycles ordered by least point.

    The identity renders as ``()``.
    """
    cyc = cycles(p)
    if not cyc:
        return "()"
    if labels is None:
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)
    return "".join("(" + ",".join(str(labels[a]) for a in c) + ")" for c in cyc)
