"""ADE root lattices, integer Gram matrices and exact rational diagonalization.

Root lattices are negative definite throughout: simple roots have norm -2 and
adjacent Dynkin nodes pair to +1.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

GramMatrix = tuple[tuple[int, ...], ...]
DiagonalForm = tuple[Fraction, ...]

FAMILIES = ("A", "D", "E")
_FAMILY_ORDER = {"A": 0, "D": 1, "E": 2}


class TypeStringError(ValueError):
    """Base class for type-string parse failures."""


class MalformedTypeString(TypeStringError):
    pass


class DRankError(TypeStringError):
    pass


class ERankError(TypeStringError):
    pass


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class AdeComponent:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILY_ORDER:
            raise MalformedTypeString(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise MalformedTypeString(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 4:
            raise DRankError(f"D{self.rank}: D-rank must be at least 4")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise ERankError(f"E{self.rank}: E-rank must be 6, 7 or 8")

    def sort_key(self) -> tuple[int, int]:
        # larger key renders first: E before D before A, then by rank
        return (_FAMILY_ORDER[self.family], self.rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class AdeType:
    """A multiset of irreducible ADE components, stored in canonical order."""

    components: tuple[AdeComponent, ...]

    def __init__(self, components: Iterable[AdeComponent]):
        comps = tuple(sorted(components, key=AdeComponent.sort_key, reverse=True))
        object.__setattr__(self, "components", comps)

    @classmethod
    def parse(cls, s: str) -> "AdeType":
        return parse_type(s)

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return render_type(self)

    def __repr__(self) -> str:
        return f"AdeType({str(self)!r})"


_TERM = re.compile(r"([1-9][0-9]*)?([ADE])([0-9]+)\Z")


def parse_type(s: str) -> AdeType:
    """Parse a type string such as ``"2A3+A2+A1"``.

    Whitespace is not allowed; an omitted multiplicity means 1.
    """
    if not isinstance(s, str) or not s:
        raise MalformedTypeString("empty type string")
    components: list[AdeComponent] = []
    for token in s.split("+"):
        m = _TERM.match(token)
        if m is None or m.group(3).startswith("0"):
            raise MalformedTypeString(f"malformed term {token!r} in {s!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        comp = AdeComponent(m.group(2), int(m.group(3)))
        components.extend([comp] * mult)
    return AdeType(components)


def render_type(t: AdeType) -> str:
    counts = Counter(t.components)
    seen: list[AdeComponent] = []
    for c in t.components:
        if c not in seen:
            seen.append(c)
    return "+".join(f"{counts[c] if counts[c] > 1 else ''}{c}" for c in seen)


def _dynkin_edges(c: AdeComponent) -> list[tuple[int, int]]:
    n = c.rank
    if c.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    path = [(i, i + 1) for i in range(n - 2)]
    if c.family == "D":
        # last node hangs off the second node of a path of n-1
        return path + [(1, n - 1)]
    # E_n: path of n-1 with the last node attached to the third node
    return path + [(2, n - 1)]


def gram_irreducible(c: AdeComponent) -> GramMatrix:
    n = c.rank
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i, j in _dynkin_edges(c):
        g[i][j] = g[j][i] = 1
    return tuple(tuple(row) for row in g)


def block_sum(blocks: Sequence[GramMatrix]) -> GramMatrix:
    n = sum(len(b) for b in blocks)
    g = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                g[offset + i][offset + j] = b[i][j]
        offset += k
    return tuple(tuple(row) for row in g)


def gram_sum(t: AdeType) -> GramMatrix:
    if not t.components:
        raise ValueError("empty ADE type")
    return block_sum([gram_irreducible(c) for c in t.components])


def as_gram(rows: Sequence[Sequence[int]]) -> GramMatrix:
    """Validate and freeze a square symmetric integer matrix."""
    g = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(g)
    for row in g:
        if len(row) != n:
            raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i):
            if g[i][j] != g[j][i]:
                raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
    return g


def det(g: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    a = [list(map(int, row)) for row in g]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def permute(g: GramMatrix, order: Sequence[int]) -> GramMatrix:
    """Reorder the basis of ``g``; ``order[i]`` is the old index of new basis vector i."""
    if sorted(order) != list(range(len(g))):
        raise ValueError("order must be a permutation of the basis indices")
    return tuple(tuple(g[i][j] for j in order) for i in order)


def diagonalize(g: Sequence[Sequence[int]], order: Sequence[int] | None = None) -> DiagonalForm:
    """Rational diagonalization by symmetric completion of squares.

    ``order`` optionally permutes the basis first, which changes the pivot
    sequence but not the rational equivalence class of the result.
    """
    if order is not None:
        g = permute(as_gram(g), order)
    a = [[Fraction(x) for x in row] for row in g]
    n = len(a)
    out: list[Fraction] = []
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise SingularMatrixError("Gram matrix is singular")
                # e_k <- e_k + e_j; new pivot is 2*a[k][j] since a[j][j] == 0
                for c in range(n):
                    a[k][c] += a[j][c]
                for r in range(n):
                    a[r][k] += a[r][j]
        p = a[k][k]
        out.append(p)
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for c in range(k, n):
                    a[i][c] -= f * a[k][c]
                a[i][k] = Fraction(0)
        for c in range(k + 1, n):
            a[k][c] = Fraction(0)
    return tuple(out)


def signature(g: Sequence[Sequence[int]]) -> tuple[int, int]:
    """(positive, negative) inertia of a nondegenerate form."""
    d = diagonalize(g)
    pos = sum(1 for x in d if x > 0)
    return pos, len(d) - pos


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def transpose(a: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(zip(*a))


def congruent(g: Sequence[Sequence[int]], p: Sequence[Sequence[int]]) -> GramMatrix:
    """Return P^T g P."""
    return matmul(matmul(transpose(p), g), p)


def integer_inverse(p: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Inverse of a unimodular integer matrix; raises if the inverse is not integral."""
    n = len(p)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(p)]
    for k in range(n):
        r = next((r for r in range(k, n) if a[r][k] != 0), None)
        if r is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[r] = a[r], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("inverse is not integral")
    return tuple(tuple(int(x) for x in row) for row in inv)


def component_det(c: AdeComponent) -> int:
    """|det| of an irreducible root lattice."""
    if c.family == "A":
        return c.rank + 1
    if c.family == "D":
        return 4
    return {6: 3, 7: 2, 8: 1}[c.rank]


HYPERBOLIC: GramMatrix = ((0, 1), (1, 0))
E8_GRAM: GramMatrix = gram_irreducible(AdeComponent("E", 8))
