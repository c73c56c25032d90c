import pytest

from superchar.bggcheck import (
    complex_shape,
    euler_check,
    character_shift_sweep,
    length_generating_polynomial,
    restriction_check,
    small_rank_exactness,
)
from superchar.charring import char_narrow
from superchar.rootdata import (
    RankProfile,
    atypicality,
    weight_from_coords,
)
from superchar.vermacalc import narrow_image_dims


def P(m, n):
    return RankProfile(m, n)


def test_euler_gl11_trivial():
    p = P(1, 1)
    lam = weight_from_coords(p, [0], [0])
    report = euler_check(lam, 4)
    assert report.equal
    assert report.lhs.coeffs == {lam: 1}
    assert report.rhs.coeffs == {lam: 1}
    assert report.first_discrepancy is None


def test_euler_atypical_and_typical_cases():
    cases = [
        (P(2, 1), ([3, 0], [3]), 6),
        (P(2, 1), ([3, 0], [7]), 6),
        (P(1, 2), ([3], [0, 3]), 6),
        (P(2, 2), ([7, 2], [2, 7]), 5),
        (P(2, 2), ([9, 1], [2, 8]), 5),
    ]
    for p, (eps, delta), depth in cases:
        report = euler_check(weight_from_coords(p, eps, delta), depth)
        assert report.equal, (p, eps, delta, report.first_discrepancy)


def test_euler_rejects_bad_inputs():
    p = P(2, 1)
    with pytest.raises(ValueError):
        euler_check(weight_from_coords(p, [0, 3], [3]), 4)  # not dominant
    with pytest.raises(ValueError):
        euler_check(weight_from_coords(p, [2, 1], [5]), 4)  # not generic
    p22 = P(2, 2)
    with pytest.raises(ValueError):
        euler_check(weight_from_coords(p22, [7, 2], [7, 2]), 4)  # not dominant


def test_euler_report_json():
    p = P(1, 1)
    obj = euler_check(weight_from_coords(p, [1], [1]), 3).to_json_obj()
    assert obj["check"] == "euler" and obj["pass"] is True
    assert obj["profile"] == [1, 1] and obj["lambda_coords"] == [1, 1]


def test_complex_shape():
    shape = complex_shape(P(2, 2))
    assert shape.ranks_by_degree == (1, 2, 1)
    assert sum(shape.ranks_by_degree) == 4
    for m, n in [(2, 1), (2, 2), (3, 2)]:
        shape = complex_shape(P(m, n))
        assert shape.ranks_by_degree == length_generating_polynomial(P(m, n))
        assert shape.ranks_by_degree == shape.ranks_by_degree[::-1]


def test_character_shift_sweep_pass_and_mismatches():
    report = character_shift_sweep(P(2, 2), trials=2, depth=5, seed=0, mismatches=5)
    assert report.passed
    assert report.pairs_checked == 36 * 2
    assert report.mismatches_detected == 5
    small = character_shift_sweep(P(1, 1), trials=2, depth=4, seed=1, mismatches=3)
    assert small.passed and small.pairs_checked == 8


def test_restriction_check():
    p11 = P(1, 1)
    assert restriction_check(weight_from_coords(p11, [2], [2]), 4)  # atypical
    p21 = P(2, 1)
    assert restriction_check(weight_from_coords(p21, [3, 0], [7]), 5)  # typical, 4 subsets
    assert restriction_check(weight_from_coords(p21, [3, 0], [3]), 5)  # 2 subsets
    p22 = P(2, 2)
    assert restriction_check(weight_from_coords(p22, [7, 2], [2, 7]), 4)


def test_restriction_check_rejects_non_generic():
    with pytest.raises(ValueError):
        restriction_check(weight_from_coords(P(2, 1), [2, 1], [5]), 4)


def test_restriction_subset_counts():
    p = P(2, 1)
    lam = weight_from_coords(p, [3, 0], [3])
    assert len(atypicality(lam).gamma) == 1  # so 2 of the 4 subsets survive


def test_small_rank_exactness():
    p21 = P(2, 1)
    report = small_rank_exactness(weight_from_coords(p21, [3, 0], [3]), 3)
    assert report.passed and report.injective and report.cokernel_matches
    report = small_rank_exactness(weight_from_coords(p21, [3, 0], [7]), 3)
    assert report.passed
    p12 = P(1, 2)
    report = small_rank_exactness(weight_from_coords(p12, [3], [0, 3]), 3)
    assert report.passed
    report = small_rank_exactness(weight_from_coords(p12, [9], [0, 4]), 3)
    assert report.passed


def test_small_rank_exactness_rejects():
    with pytest.raises(ValueError):
        small_rank_exactness(weight_from_coords(P(2, 2), [7, 2], [2, 7]), 2)
    with pytest.raises(ValueError):
        small_rank_exactness(weight_from_coords(P(2, 1), [0, 3], [3]), 2)


def test_antidominant_generic_narrow_is_simple_gl11():
    # antidominant generic weights: the narrow module is the simple one,
    # and its ranks match the closed character
    p = P(1, 1)
    for t in (-2, 0, 5):
        lam = weight_from_coords(p, [t], [t])  # atypical, antidominant
        ranks = narrow_image_dims(lam, 2)
        chart = char_narrow(lam, 2, warn=False)
        assert ranks == {nu: chart.coeff(nu) for nu in ranks}
        assert sum(ranks.values()) == 1  # one-dimensional simple module
