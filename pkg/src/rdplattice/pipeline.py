"""Candidate enumeration and the end-to-end classification of singularity types."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from .core import AdeComponent, AdeType, parse_type
from .obstruct import (
    ENRIQUES_RANK,
    even_embedding_obstruction,
    odd_embedding_obstruction,
    square_filter,
)

SCHEMA = "rdplattice.classification/1"

K_NEGATIVE_CANDIDATE = "K_NEGATIVE_CANDIDATE"
K_TRIVIAL = "K_TRIVIAL"

# Five singular points force this type by an external theorem; it is added, not searched.
FIVE_POINT_TYPE = parse_type("2A3+3A1")
UNREALIZED = frozenset({parse_type("2A3+A2+A1"), parse_type("A3+3A2")})

EXPECTED_TOTALS = {
    "candidates": 127,
    "admitted": 58,
    "admitted_k_negative": 27,
    "admitted_k_trivial": 31,
    "square_excluded": 56,
    "epsilon_excluded": 14,
}


class InconsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class Candidate:
    type: AdeType
    rank: int
    k_squared: int
    summands: int


def _partitions(n: int, max_parts: int, largest: int | None = None):
    """Partitions of n into at most max_parts parts, non-increasing."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


def _families_for(rank: int) -> list[str]:
    out = ["A"]
    if rank >= 4:
        out.append("D")
    if rank in (6, 7, 8):
        out.append("E")
    return out


def enumerate_candidates(max_summands: int = 4, max_rank: int = 9) -> list[Candidate]:
    """All ADE types with at most ``max_summands`` components and rank <= ``max_rank``.

    Rank partitions come first; equal parts then take a multiset of families,
    so no type is produced twice.
    """
    if max_summands < 1 or max_rank < 1:
        raise ValueError("max_summands and max_rank must be at least 1")
    out: list[Candidate] = []
    for total in range(1, max_rank + 1):
        for parts in _partitions(total, max_summands):
            groups = sorted(Counter(parts).items(), reverse=True)
            choices = [
                list(combinations_with_replacement(_families_for(r), count)) for r, count in groups
            ]
            for pick in product(*choices):
                comps = [
                    AdeComponent(fam, r) for (r, _), fams in zip(groups, pick) for fam in fams
                ]
                t = AdeType(comps)
                out.append(Candidate(t, total, ENRIQUES_RANK - total, len(comps)))
    out.sort(key=lambda c: candidate_key(c.type))
    if len({c.type for c in out}) != len(out):
        raise InconsistencyError("duplicate candidates generated")
    return out


def candidate_key(t: AdeType):
    return (-t.rank, tuple((-k[0], -k[1]) for k in (c.sort_key() for c in t.components)))


@dataclass(frozen=True)
class Verdict:
    type: AdeType
    admitted: bool
    klass: str
    reason: str
    detail: int | None = None
    realization: str | None = None

    def as_dict(self) -> dict:
        return {
            "type": str(self.type),
            "rank": self.type.rank,
            "verdict": "ADMITTED" if self.admitted else "EXCLUDED",
            "class": self.klass,
            "reason": self.reason,
            "detail": self.detail,
            "realization": self.realization,
        }


def _realization(t: AdeType) -> str:
    return "UNKNOWN_REALIZATION" if t in UNREALIZED else "EXTERNAL_EXAMPLE"


def classify_one(t: AdeType) -> Verdict:
    if t.rank > ENRIQUES_RANK:
        raise ValueError(f"{t}: rank {t.rank} exceeds 9")
    if t.rank == ENRIQUES_RANK:
        p = even_embedding_obstruction(t)
        if p is not None:
            return Verdict(t, False, K_TRIVIAL, "EPSILON_WITNESS", p)
        return Verdict(t, True, K_TRIVIAL, "NOT_OBSTRUCTED", None, _realization(t))
    sq = square_filter(t)
    if not sq.passed:
        return Verdict(t, False, K_NEGATIVE_CANDIDATE, "SQUARE_VALUE", sq.detail)
    p = odd_embedding_obstruction(t)
    if p is not None:
        return Verdict(t, False, K_NEGATIVE_CANDIDATE, "EPSILON_WITNESS", p)
    return Verdict(t, True, K_NEGATIVE_CANDIDATE, "NOT_OBSTRUCTED", None, _realization(t))


@dataclass
class ClassificationReport:
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def admitted(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.admitted]

    @property
    def excluded(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.admitted]

    def admitted_types(self, klass: str | None = None) -> list[AdeType]:
        return [v.type for v in self.admitted if klass is None or v.klass == klass]

    def counts(self) -> dict[str, int]:
        adm = self.admitted
        exc = self.excluded
        return {
            "candidates": sum(1 for v in self.verdicts if v.reason != "FIVE_POINT_THEOREM"),
            "admitted": len(adm),
            "admitted_k_negative": sum(1 for v in adm if v.klass == K_NEGATIVE_CANDIDATE),
            "admitted_k_trivial": sum(1 for v in adm if v.klass == K_TRIVIAL),
            "square_excluded": sum(1 for v in exc if v.reason == "SQUARE_VALUE"),
            "epsilon_excluded": sum(1 for v in exc if v.reason == "EPSILON_WITNESS"),
        }

    def summary_line(self) -> str:
        c = self.counts()
        return (
            f"{c['admitted']} admitted ({c['admitted_k_negative']} + {c['admitted_k_trivial']}), "
            f"{c['square_excluded']} square-excluded, {c['epsilon_excluded']} embedding-excluded"
        )

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "counts": self.counts(),
            "candidates": [v.as_dict() for v in self.verdicts],
        }


def classify_all(check_totals: bool = True) -> ClassificationReport:
    candidates = enumerate_candidates()
    verdicts = [classify_one(c.type) for c in candidates]
    if FIVE_POINT_TYPE in {v.type for v in verdicts}:
        raise InconsistencyError("five-point type appeared among four-summand candidates")
    verdicts.append(
        Verdict(FIVE_POINT_TYPE, True, K_TRIVIAL, "FIVE_POINT_THEOREM", None, _realization(FIVE_POINT_TYPE))
    )
    report = ClassificationReport(verdicts)
    counts = report.counts()
    if counts["admitted"] + counts["square_excluded"] + counts["epsilon_excluded"] != len(verdicts):
        raise InconsistencyError(f"verdicts do not partition the candidates: {counts}")
    if check_totals and counts != EXPECTED_TOTALS:
        raise InconsistencyError(f"totals {counts} differ from expected {EXPECTED_TOTALS}")
    return report
