from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from vertexlab import correlations as corr
from vertexlab import numeric, sixv, twentyv

pos = st.fractions(min_value=Fraction(1, 10), max_value=Fraction(5))


@settings(max_examples=25, deadline=None)
@given(st.tuples(*[pos] * 6))
def test_six_vertex_probabilities_normalized(ws):
    w = sixv.Weights6V(*ws)
    Z = sixv.partition_brute(3, w)
    assert sum(sixv.probability(c, w, Z) for c in sixv.enumerate_dwbc(3)) == 1


@settings(max_examples=25, deadline=None)
@given(st.tuples(*[pos] * 6), st.integers(0, 3), st.integers(0, 3))
def test_efp_is_a_probability(ws, r, s):
    v = corr.efp_6v_brute(3, sixv.Weights6V(*ws), r, s)
    assert 0 <= v <= 1


@settings(max_examples=25, deadline=None)
@given(st.tuples(*[pos] * 6), st.integers(1, 3))
def test_efp_decreases_with_depth(ws, r):
    w = sixv.Weights6V(*ws)
    vals = [corr.efp_6v_brute(3, w, r, s) for s in range(4)]
    assert all(x >= y for x, y in zip(vals, vals[1:]))


@settings(max_examples=15, deadline=None)
@given(st.tuples(*[pos] * 9))
def test_twenty_vertex_normalized(ws):
    w = twentyv.Weights20V(*ws)
    Z = twentyv.partition_brute_20v(2, w)
    assert sum(twentyv.probability_20v(c, w, Z) for c in twentyv.enumerate_dwbc_20v(2)) == 1


@settings(max_examples=25, deadline=None)
@given(pos, pos, pos)
def test_isotropic_closed_table(a, b, c):
    w = sixv.Weights6V.isotropic_weights(a, b, c)
    assert sixv.partition_isotropic(4, a, b, c) == sixv.partition_brute(4, w)


@given(st.dictionaries(st.text(min_size=1, max_size=4), st.fractions(min_value=0, max_value=1) | st.integers(-10, 10), max_size=6))
def test_dumps_ignores_key_order(d):
    assert numeric.dumps(d) == numeric.dumps(dict(reversed(list(d.items()))))
