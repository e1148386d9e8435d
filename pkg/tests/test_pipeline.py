import json
import math

import pytest

from rdplattice.core import det, gram_sum, parse_type
from rdplattice.pipeline import (
    K_NEGATIVE_CANDIDATE,
    K_TRIVIAL,
    InconsistencyError,
    classify_all,
    classify_one,
    enumerate_candidates,
)

import golden


def canon(strings):
    return {str(parse_type(s)) for s in strings}


def test_candidate_count():
    cands = enumerate_candidates()
    assert len(cands) == 127
    assert len({c.type for c in cands}) == 127


def test_irreducible_candidates():
    names = [str(c.type) for c in enumerate_candidates(1, 9)]
    assert sorted(names) == sorted(
        [f"A{n}" for n in range(1, 10)] + [f"D{n}" for n in range(4, 10)] + ["E6", "E7", "E8"]
    )


def test_candidate_membership():
    names = {str(c.type) for c in enumerate_candidates()}
    assert "A9" in names and "2A3+A2+A1" in names
    assert "2A3+3A1" not in names


def test_candidates_match_brute_force():
    # independent count: multisets of components drawn with repetition
    comps = [("A", n) for n in range(1, 10)] + [("D", n) for n in range(4, 10)] + [("E", n) for n in (6, 7, 8)]
    seen = set()

    def rec(start, chosen, rank):
        if chosen:
            seen.add(tuple(chosen))
        if len(chosen) == 4:
            return
        for i in range(start, len(comps)):
            if rank + comps[i][1] <= 9:
                rec(i, chosen + [comps[i]], rank + comps[i][1])

    rec(0, [], 0)
    assert len(seen) == 127
    # a smaller grid as well
    for s, r in [(2, 5), (3, 7), (4, 9), (9, 9)]:
        got = {str(c.type) for c in enumerate_candidates(s, r)}
        assert all(parse_type(x).rank <= r and len(parse_type(x)) <= s for x in got)


def test_candidate_fields():
    for c in enumerate_candidates():
        assert 1 <= c.rank <= 9
        assert c.k_squared == 9 - c.rank
        assert c.summands == len(c.type) <= 4


def test_enumerate_bad_args():
    with pytest.raises(ValueError):
        enumerate_candidates(0, 9)
    with pytest.raises(ValueError):
        enumerate_candidates(4, 0)


def test_classify_one_examples():
    v = classify_one(parse_type("D8+A1"))
    assert v.admitted and v.klass == K_TRIVIAL
    v = classify_one(parse_type("A3"))
    assert not v.admitted and (v.reason, v.detail) == ("SQUARE_VALUE", 24)
    v = classify_one(parse_type("E6+3A1"))
    assert not v.admitted and (v.reason, v.detail) == ("EPSILON_WITNESS", 3)
    v = classify_one(parse_type("D4+A2"))
    assert not v.admitted and (v.reason, v.detail) == ("EPSILON_WITNESS", 3)
    with pytest.raises(ValueError):
        classify_one(parse_type("A10"))


def test_classification_lists():
    report = classify_all()
    assert report.summary_line() == "58 admitted (27 + 31), 56 square-excluded, 14 embedding-excluded"
    assert {str(t) for t in report.admitted_types(K_NEGATIVE_CANDIDATE)} == canon(golden.K_NEGATIVE)
    assert {str(t) for t in report.admitted_types(K_TRIVIAL)} == canon(golden.K_TRIVIAL)
    excluded_eps = {str(v.type): v.detail for v in report.excluded if v.reason == "EPSILON_WITNESS"}
    assert excluded_eps == dict(golden.EVEN_OBSTRUCTED + golden.ODD_OBSTRUCTED)
    excluded_sq = {str(v.type): v.detail for v in report.excluded if v.reason == "SQUARE_VALUE"}
    assert excluded_sq == golden.SQUARE_EXCLUDED


def test_golden_strings_are_canonical():
    for s in golden.K_NEGATIVE + golden.K_TRIVIAL + list(golden.SQUARE_EXCLUDED):
        assert str(parse_type(s)) == s
    assert len(golden.K_NEGATIVE) == 27 and len(golden.K_TRIVIAL) == 31
    assert len(golden.SQUARE_EXCLUDED) == 56


def test_realization_status():
    report = classify_all()
    status = {str(v.type): v.realization for v in report.verdicts}
    assert sorted(s for s, r in status.items() if r == "UNKNOWN_REALIZATION") == sorted(golden.UNKNOWN_REALIZATION)
    five = [v for v in report.verdicts if v.reason == "FIVE_POINT_THEOREM"]
    assert [str(v.type) for v in five] == ["2A3+3A1"] and five[0].klass == K_TRIVIAL
    assert all(v.realization is None for v in report.excluded)


def test_admitted_low_rank_are_square():
    for v in classify_all().admitted:
        if v.type.rank < 9:
            value = abs(det(gram_sum(v.type))) * (9 - v.type.rank)
            assert math.isqrt(value) ** 2 == value


def test_report_deterministic():
    a = json.dumps(classify_all().as_dict())
    b = json.dumps(classify_all().as_dict())
    assert a == b


def test_report_document_schema():
    doc = classify_all().as_dict()
    assert doc["schema"].startswith("rdplattice.classification/")
    assert len(doc["candidates"]) == 128
    for row in doc["candidates"]:
        assert set(row) == {"type", "rank", "verdict", "class", "reason", "detail", "realization"}


def test_totals_mismatch_raises(monkeypatch):
    import rdplattice.pipeline as pl

    monkeypatch.setitem(pl.EXPECTED_TOTALS, "admitted", 57)
    with pytest.raises(InconsistencyError):
        classify_all()
    assert classify_all(check_totals=False).counts()["admitted"] == 58
