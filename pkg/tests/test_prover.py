import json
import random

import pytest

from gf2codes import (
    Gf2Matrix,
    LinearCode,
    a56_sharpness_construction,
    min_union_length,
    verify_lemma_2_6,
    verify_lemma_24_32_56,
    verify_remark_a56,
    verify_theorem_a,
)

THEOREM_A_STEP_IDS = [
    "weight-40-exists",
    "projection-dimension-12",
    "projection-doubly-even",
    "length-window",
    "n64-projection-self-dual",
    "n64-projected-weights-small",
    "n64-unique-56",
    "n64-contradiction",
    "n65-count-solve",
    "n65-dual-pair-exists",
    "n65-projection-has-no-dual-pair",
    "n65-contradiction",
    "n66-count-solve",
    "n66-dual-pairs-at-least-7",
    "n66-projected-pair-span",
    "n66-weight24-from-56",
    "n66-contradiction",
    "conclusion",
]


def test_min_union_length_examples():
    assert min_union_length(56, 56, 24) == 68
    assert min_union_length(8, 8, 8) == 12
    assert min_union_length(5, 3, 2) == 5
    assert min_union_length(3, 3, 0) == 3
    assert min_union_length(0, 0, 0) == 0
    assert min_union_length(4, 0, 4) == 4


def test_min_union_length_rejects_unrealizable_triples():
    with pytest.raises(ValueError, match="parity"):
        min_union_length(3, 3, 1)
    with pytest.raises(ValueError, match="between 0 and 4"):
        min_union_length(2, 2, 6)
    with pytest.raises(ValueError, match="between 2 and 8"):
        min_union_length(5, 3, 0)
    with pytest.raises(ValueError, match="nonnegative"):
        min_union_length(-1, 2, 3)


def test_min_union_length_matches_vector_search():
    # Smallest ambient containing an actual pair of vectors with the given
    # weights, found by enumerating supports for the second vector.
    for wa in range(5):
        for wb in range(5):
            for s in range(10):
                found = None
                for n in range(11):
                    v = (1 << wa) - 1
                    if wa > n:
                        continue
                    if any(
                        w.bit_count() == wb and (v ^ w).bit_count() == s
                        for w in range(1 << n)
                    ):
                        found = n
                        break
                try:
                    claimed = min_union_length(wa, wb, s)
                except ValueError:
                    assert found is None
                    continue
                assert found == claimed


def test_min_union_length_two_sided_up_to_weight_10():
    rng = random.Random(107)
    # Lower bound: no actual pair in F^20 beats the claimed union size.
    for _ in range(300):
        w1, w2 = rng.randrange(11), rng.randrange(11)
        v = sum(1 << i for i in rng.sample(range(20), w1))
        w = sum(1 << i for i in rng.sample(range(20), w2))
        claimed = min_union_length(w1, w2, (v ^ w).bit_count())
        assert claimed <= (v | w).bit_count()
    # Sharpness: an explicit pair attains it for every realizable triple.
    for w1 in range(11):
        for w2 in range(11):
            for overlap in range(min(w1, w2) + 1):
                s = w1 + w2 - 2 * overlap
                m = min_union_length(w1, w2, s)
                a = (1 << w1) - 1
                b = ((1 << w2) - 1) << (w1 - overlap)
                assert (a ^ b).bit_count() == s
                assert (a | b).bit_count() == m <= 20


def test_remark_a56_window():
    for ambient in (66, 67):
        ok = verify_remark_a56(ambient)
        assert ok.status
        assert ok.id == f"a56-at-most-one-n{ambient}"
        assert ok.data["max_overlap"] == 44
        assert ok.data["min_union_length"] == 68
    too_big = verify_remark_a56(68)
    assert not too_big.status


def test_two_weight_56_words_clash_below_68():
    rng = random.Random(103)
    for _ in range(200):
        n = rng.randrange(56, 68)
        v = sum(1 << i for i in rng.sample(range(n), 56))
        w = sum(1 << i for i in rng.sample(range(n), 56))
        if v != w:
            assert (v ^ w).bit_count() < 24


def test_sharpness_construction():
    code = a56_sharpness_construction()
    assert (code.n, code.dimension) == (68, 2)
    assert code.weight_distribution().nonzero() == ((0, 1), (24, 1), (56, 2))


def test_concrete_codes_below_68_have_at_most_one_weight_56_word():
    # Hand-built codes with ambient <= 67 and all nonzero weights >= 24.
    cases = [
        Gf2Matrix.from_ints([(1 << 56) - 1], 56),
        Gf2Matrix.from_ints(
            [(1 << 56) - 1, ((1 << 35) - 1) << 32], 67
        ),
        Gf2Matrix.from_ints(
            [(1 << 56) - 1, ((1 << 24) - 1) << 43, ((1 << 30) - 1) << 12], 67
        ),
    ]
    for matrix in cases:
        code = LinearCode.from_rows(matrix)
        we = code.weight_distribution()
        weights = [w for w, _ in we.nonzero() if w]
        assert min(weights) >= 24, weights
        assert we.count(56) <= 1


def test_two_weight_scan_contradicts_high_dimensions():
    for d in (10, 11, 13, 16):
        report = verify_lemma_2_6(d)
        assert report.overall, report.to_json()
        scan = report.steps[1]
        assert scan.id == "divisibility-scan"
        assert scan.data["valuations_seen"] == [8]
        assert scan.data["admissible_without_contradiction"] == []
        assert scan.data["zero_lhs_lengths"] == []


def test_two_weight_scan_admissible_window():
    report = verify_lemma_2_6(10)
    scan = report.steps[1]
    assert scan.data["admissible_lengths"] == list(range(48, 64))
    assert scan.data["required_valuation"] == 9


def test_two_weight_scan_ties_at_dimension_9():
    report = verify_lemma_2_6(9)
    assert not report.overall
    scan = report.steps[1]
    assert scan.data["valuations_seen"] == [8]
    assert scan.data["required_valuation"] == 8
    assert scan.data["lengths_without_contradiction"] == list(range(1, 129))
    assert scan.data["admissible_without_contradiction"] == list(range(48, 64))
    assert report.steps[0].status and report.steps[2].status


def test_two_weight_scan_vacuous_outside_admissible_window():
    # A single length where a count is negative: nothing is admissible, so
    # the scan passes even at dimension 9.
    report = verify_lemma_2_6(9, (64, 64))
    assert report.overall
    assert report.steps[1].data["admissible_lengths"] == []


def test_two_weight_scan_validation():
    with pytest.raises(ValueError, match="negative dimension"):
        verify_lemma_2_6(-1)
    with pytest.raises(ValueError, match="invalid length range"):
        verify_lemma_2_6(10, (0, 5))
    with pytest.raises(ValueError, match="invalid length range"):
        verify_lemma_2_6(10, (7, 3))


def test_three_weight_bound_report():
    report = verify_lemma_24_32_56()
    assert report.overall
    assert [s.id for s in report.steps] == [
        "a56-at-most-one-n67",
        "case-a56-zero",
        "case-a56-one",
    ]
    assert {s.kind for s in report.steps} == {"arithmetic", "cited-lemma", "structural"}


def test_three_weight_bound_rejects_stricter_claim():
    report = verify_lemma_24_32_56(claimed_bound=9)
    assert not report.overall
    by_id = {s.id: s for s in report.steps}
    assert by_id["case-a56-zero"].status
    assert not by_id["case-a56-one"].status


def test_dimension_bound_theorem_overall():
    report = verify_theorem_a()
    assert report.overall
    assert report.theorem == (
        "a binary linear code of length 66 whose nonzero weights lie in "
        "{24, 32, 40, 56} has dimension at most 12"
    )


def test_dimension_bound_theorem_step_ids():
    report = verify_theorem_a()
    ids = [s.id for s in report.steps]
    assert ids == THEOREM_A_STEP_IDS
    assert len(set(ids)) == len(ids)


def test_dimension_bound_theorem_step_schema():
    report = verify_theorem_a()
    for step in report.steps:
        d = step.to_json_dict()
        assert set(d) == {"id", "kind", "statement", "anchor", "status", "data"}
        assert d["kind"] in {"arithmetic", "cited-lemma", "structural"}
        assert isinstance(d["status"], bool)
        assert d["statement"] and d["anchor"]


def test_dimension_bound_theorem_count_forms():
    by_id = {s.id: s for s in verify_theorem_a().steps}
    assert by_id["n65-count-solve"].data["a56"] == "-5/2 + 1/2*a2_star - 1/2*a3_star"
    assert by_id["n66-count-solve"].data["a56"] == "-13/2 + a2_star - 1/2*a3_star"
    assert by_id["n65-dual-pair-exists"].data["a2_star_min"] == 5
    assert by_id["n66-dual-pairs-at-least-7"].data["a2_star_min"] == 7
    assert by_id["n66-weight24-from-56"].data["pairs_matching"] == [[32, 56]]
    pairs = by_id["projection-doubly-even"].data["pairs"]
    assert len(pairs) == 17  # all 16 ordered weight pairs plus the kernel case
    assert all(p[2] % 4 == 0 and 0 <= p[2] <= 36 for p in pairs)


def test_reports_serialize_deterministically():
    a = verify_theorem_a().to_json()
    b = verify_theorem_a().to_json()
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"theorem", "overall", "steps"}
    assert doc["overall"] is True
    assert len(doc["steps"]) == 18
    lemma = json.loads(verify_lemma_2_6(10).to_json())
    assert json.dumps(lemma)  # already plain JSON types
