from collections import Counter
from fractions import Fraction

import pytest

from oracles import twentyv_count
from vertexlab import determinants, twentyv
from vertexlab.errors import IceRuleViolation, RegionOutOfBounds


def test_twenty_admissible_stars():
    assert len(twentyv.ADMISSIBLE_STARS) == 20
    assert sorted(Counter(twentyv.STAR_GROUP).values()) == [2, 2, 2, 2, 4, 4, 4]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_row_transfer(n):
    assert twentyv.count_dwbc_20v(n) == twentyv_count(n)


def test_unit_composite_partition_equals_series_determinant():
    for n in (1, 2, 3):
        assert twentyv.partition_brute_20v(n, twentyv.UNIT_COMPOSITE) == determinants.difrancesco_partition(n)


def test_matched_nine_weights_give_unit_composite():
    r = 2 ** 0.5
    w = twentyv.Weights20V(1, 1, 1, r, 1 / r, 1 / r, 1, 1 / r, 1 / r)
    cw = twentyv.composite_weights(w)
    assert all(abs(x - 1) < 1e-14 for x in cw.as_tuple())


def test_zero_cross_weights_kill_partition():
    w = twentyv.Weights20V(1, 1, 1, 1, 1, 1, 0, 0, 0)
    assert twentyv.partition_brute_20v(2, w) == 0


def test_classify_rejects_ice_violation():
    with pytest.raises(IceRuleViolation):
        twentyv.classify_vertex_20v((1, -1, 1, -1, 1, -1))


def test_probabilities_sum_to_one():
    w = twentyv.Weights20V(*(Fraction(k, 5) for k in range(1, 10)))
    Z = twentyv.partition_brute_20v(2, w)
    assert sum(twentyv.probability_20v(c, w, Z) for c in twentyv.enumerate_dwbc_20v(2)) == 1


def test_efp_edges_and_bounds():
    hs, ds = twentyv.efp_edges_20v(2, 0, None)
    assert hs == [(0, 0), (1, 0), (2, 0)] and ds == []
    with pytest.raises(RegionOutOfBounds):
        twentyv.efp_edges_20v(2, 3, None)
    with pytest.raises(RegionOutOfBounds):
        twentyv.efp_edges_20v(2, None, 4)
    for conf in twentyv.enumerate_dwbc_20v(2):
        assert twentyv.efp_region_20v(conf, 0, None)
        assert twentyv.efp_region_20v(conf, None, None)


def test_json_round_trip():
    conf = next(iter(twentyv.enumerate_dwbc_20v(2)))
    assert twentyv.Configuration20V.from_json(conf.to_json()) == conf
    cw = twentyv.CompositeWeights20V(Fraction(1, 3), 2, 3, 4, 5, 6, 7)
    assert twentyv.CompositeWeights20V.from_json(cw.to_json()) == cw
