"""Exclusion filters for singularity types and small lattice verification tools.

Two filters decide whether an ADE type can occur:

* the square test: for rank < 9, ``|det R| * (9 - rank)`` must be a square;
* the local embedding test: ``R`` plus its forced rank-1 orthogonal complement
  must have the same epsilon invariants as the unimodular target
  (``H + E8`` for rank 9, ``I_{1,L}`` for rank L < 9) at every prime.

Every verdict is one-sided. Passing a filter means NOT_OBSTRUCTED; it is not a
proof that an embedding exists.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from pathlib import Path
from typing import Mapping, Sequence

from .core import (
    E8_GRAM,
    HYPERBOLIC,
    AdeType,
    GramMatrix,
    TypeStringError,
    as_gram,
    block_sum,
    congruent,
    det,
    diagonalize,
    gram_sum,
    parse_type,
    signature,
)
from .padic import INF, epsilon_invariant, relevant_primes, square_class

ENRIQUES_RANK = 9


class NotApplicableError(ValueError):
    """A filter was called outside the rank range it is defined for."""


class CertificateError(ValueError):
    pass


class TargetLattice(str, Enum):
    EVEN_1_9 = "EVEN_1_9"
    ODD_1_L = "ODD_1_L"
    HYPERBOLIC_H = "HYPERBOLIC_H"


def target_gram(kind: TargetLattice, rank_l: int | None = None) -> GramMatrix:
    """Gram matrix of a unimodular target: H+E8, I_{1,L} = <1> + L<-1>, or H."""
    if kind is TargetLattice.EVEN_1_9:
        return block_sum([HYPERBOLIC, E8_GRAM])
    if kind is TargetLattice.HYPERBOLIC_H:
        return HYPERBOLIC
    if rank_l is None or rank_l < 1:
        raise ValueError("I_{1,L} needs L >= 1")
    n = rank_l + 1
    return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class FilterVerdict:
    passed: bool
    reason: str  # SQUARE_VALUE or EPSILON_WITNESS
    detail: int | None = None


def square_value(t: AdeType) -> int:
    """|det R| * K^2 with K^2 = 9 - rank."""
    return abs(det(gram_sum(t))) * (ENRIQUES_RANK - t.rank)


def square_filter(t: AdeType) -> FilterVerdict:
    if t.rank >= ENRIQUES_RANK:
        raise NotApplicableError(f"{t}: square test needs rank < 9 (K not trivial)")
    value = square_value(t)
    return FilterVerdict(passed=math.isqrt(value) ** 2 == value, reason="SQUARE_VALUE", detail=value)


def _complement_class(t: AdeType, target_det: int) -> int:
    # d(R) d(R^perp) = d(target) modulo squares
    return square_class(target_det * det(gram_sum(t)))


def epsilon_mismatches(t: AdeType, kind: TargetLattice, order: Sequence[int] | None = None) -> list[int]:
    """Primes where eps_p(R + <c>) differs from eps_p(target).

    ``c`` is the square class the rank-1 complement is forced to have. Only
    primes dividing an entry of either diagonalization (plus 2) can differ:
    elsewhere all entries are units and every symbol is +1.
    """
    rank_l = t.rank
    tgt = target_gram(kind, rank_l)
    if len(tgt) != rank_l + 1:
        raise NotApplicableError(f"{t} has rank {rank_l}; target {kind.value} has rank {len(tgt)}")
    c = _complement_class(t, det(tgt))
    d_r = diagonalize(gram_sum(t), order)
    d_full = d_r + (c,)
    d_tgt = diagonalize(tgt)
    # signatures agree by construction, so the real place never separates them
    assert c > 0 and epsilon_invariant(d_full, INF) == epsilon_invariant(d_tgt, INF)
    primes = sorted(set(relevant_primes(d_full)) | set(relevant_primes(d_tgt)))
    return [p for p in primes if epsilon_invariant(d_full, p) != epsilon_invariant(d_tgt, p)]


def _odd_witness(mismatches: list[int]) -> int | None:
    # Reciprocity makes the number of mismatching primes even, so a 2-adic
    # mismatch always comes with an odd one; report the smallest odd prime.
    odd = [p for p in mismatches if p != 2]
    assert bool(odd) == bool(mismatches)
    return odd[0] if odd else None


def even_embedding_obstruction(t: AdeType, order: Sequence[int] | None = None) -> int | None:
    """Smallest odd prime ruling out R inside H + E8, if any (rank 9 only).

    The complement is rank 1 with class -d(R), so (d(R), -d(R))_p = 1 and the
    test reduces to eps_p(R) = +1 at every prime.
    """
    if t.rank != ENRIQUES_RANK:
        raise NotApplicableError(f"{t}: even target needs rank 9, got {t.rank}")
    return _odd_witness(epsilon_mismatches(t, TargetLattice.EVEN_1_9, order))


def odd_embedding_obstruction(t: AdeType, order: Sequence[int] | None = None) -> int | None:
    """Smallest odd prime ruling out R inside I_{1,L}, L = rank R (1 <= L <= 8)."""
    if not 1 <= t.rank < ENRIQUES_RANK:
        raise NotApplicableError(f"{t}: odd target needs 1 <= rank <= 8, got {t.rank}")
    return _odd_witness(epsilon_mismatches(t, TargetLattice.ODD_1_L, order))


def embeds_in_hyperbolic_plane(t: AdeType) -> bool:
    # negative definite of rank >= 2 cannot sit in signature (1, 1); A1 = <-2> does
    return t.rank == 1


# --- explicit vector certificates -------------------------------------------


@dataclass(frozen=True)
class EmbeddingCertificate:
    ambient: AdeType
    vectors: dict[str, tuple[int, ...]]
    expected_self: dict[str, int] = field(default_factory=dict)
    expected_pairs: tuple[tuple[str, str, int], ...] = ()

    def __post_init__(self):
        if len(self.ambient) != 1:
            raise CertificateError(f"ambient must be a single component, got {self.ambient}")
        n = self.ambient.rank
        for name, vec in self.vectors.items():
            if len(vec) != n:
                raise CertificateError(f"vector {name!r} has length {len(vec)}, ambient rank is {n}")
        for name in self.expected_self:
            if name not in self.vectors:
                raise CertificateError(f"unknown vector {name!r}")
        for a, b, _ in self.expected_pairs:
            if a not in self.vectors or b not in self.vectors:
                raise CertificateError(f"unknown vector in pair ({a!r}, {b!r})")

    @classmethod
    def from_dict(cls, doc: Mapping) -> "EmbeddingCertificate":
        try:
            ambient = parse_type(doc["ambient"])
            vectors = {str(k): tuple(_as_int(x) for x in v) for k, v in doc["vectors"].items()}
            selfs = {str(k): _as_int(v) for k, v in doc.get("expected_self", {}).items()}
            pairs = tuple((str(a), str(b), _as_int(w)) for a, b, w in doc.get("expected_pairs", []))
        except TypeStringError as exc:
            raise CertificateError(f"bad ambient: {exc}") from exc
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CertificateError(f"malformed certificate: {exc!r}") from exc
        return cls(ambient, vectors, selfs, pairs)


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise CertificateError(f"expected an integer, got {x!r}")
    return x


def load_certificate(path: str | Path) -> EmbeddingCertificate:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CertificateError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise CertificateError(f"{path}: top level must be an object")
    return EmbeddingCertificate.from_dict(doc)


@dataclass(frozen=True)
class Mismatch:
    left: str
    right: str
    expected: int
    actual: int


def inner(g: GramMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    return sum(x[i] * g[i][j] * y[j] for i in range(len(x)) for j in range(len(y)) if g[i][j])


def verify_embedding(cert: EmbeddingCertificate) -> list[Mismatch]:
    """Compare the certificate's stated inner products with the ambient Gram.

    An empty list means every stated value holds.
    """
    g = gram_sum(cert.ambient)
    out = []
    for name, want in cert.expected_self.items():
        got = inner(g, cert.vectors[name], cert.vectors[name])
        if got != want:
            out.append(Mismatch(name, name, want, got))
    for a, b, want in cert.expected_pairs:
        got = inner(g, cert.vectors[a], cert.vectors[b])
        if got != want:
            out.append(Mismatch(a, b, want, got))
    return out


def certificate_gram(cert: EmbeddingCertificate) -> tuple[list[str], GramMatrix]:
    """Names (sorted) and Gram matrix of the certificate's vectors."""
    g = gram_sum(cert.ambient)
    names = sorted(cert.vectors)
    return names, tuple(tuple(inner(g, cert.vectors[a], cert.vectors[b]) for b in names) for a in names)


# --- brute-force isometry ----------------------------------------------------


def _norm_table(g: GramMatrix, bound: int) -> dict[int, list[tuple[int, ...]]]:
    table: dict[int, list[tuple[int, ...]]] = {}
    for v in product(range(-bound, bound + 1), repeat=len(g)):
        if any(v):
            table.setdefault(inner(g, v, v), []).append(v)
    return table


def isometric_small(g1: Sequence[Sequence[int]], g2: Sequence[Sequence[int]], bound: int):
    """Search integer P with entries in [-bound, bound], det P = +-1 and P^T g1 P = g2.

    Returns the first witness in column-major lexicographic order (rows of P as
    a tuple of tuples), or None when nothing exists at this bound. None does
    not prove the lattices are non-isometric.
    """
    g1, g2 = as_gram(g1), as_gram(g2)
    n = len(g1)
    if len(g2) != n:
        raise ValueError(f"rank mismatch: {n} vs {len(g2)}")
    if bound < 1:
        raise ValueError("bound must be positive")
    if det(g1) != det(g2) or det(g1) == 0 or signature(g1) != signature(g2):
        return None
    table = _norm_table(g1, bound)
    candidates = [table.get(g2[i][i], []) for i in range(n)]
    if not all(candidates):
        return None

    cols: list[tuple[int, ...]] = []

    def extend(i: int):
        if i == n:
            p = tuple(zip(*cols))
            if abs(det(p)) == 1:
                return p
            return None
        for v in candidates[i]:
            if all(inner(g1, cols[j], v) == g2[j][i] for j in range(i)):
                cols.append(v)
                found = extend(i + 1)
                if found is not None:
                    return found
                cols.pop()
        return None

    p = extend(0)
    if p is not None:
        assert congruent(g1, p) == g2
    return p
