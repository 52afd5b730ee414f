from fractions import Fraction

import pytest

from oracles import asm_count
from vertexlab import sixv
from vertexlab.errors import CapExceeded, IceRuleViolation


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_match_monotone_triangles(n):
    assert sixv.count_dwbc(n) == asm_count(n)


def test_enumeration_is_unique_and_valid():
    confs = list(sixv.enumerate_dwbc(4))
    assert len(confs) == len(set(confs)) == 42
    assert all(c.validate() for c in confs)


def test_flipped_variant_has_same_count():
    assert sixv.count_dwbc(4, "flipped") == 42
    assert all(c.validate("flipped") for c in sixv.enumerate_dwbc(3, "flipped"))


def test_each_row_has_odd_number_of_c_vertices():
    for conf in sixv.enumerate_dwbc(4):
        for row in conf.vertex_types:
            assert sum(t.value.startswith("c") for t in row) % 2 == 1


def test_classify_rejects_ice_violation():
    with pytest.raises(IceRuleViolation):
        sixv.classify_vertex((1, 1, 1, -1))
    with pytest.raises(ValueError):
        sixv.classify_vertex((1, 0, 1, -1))


def test_classify_from_sense():
    star = sixv.star_from_sense("in", "out", "in", "out")
    assert sixv.classify_vertex(star) == sixv.VertexType6V.a1
    assert sixv.classify_vertex(sixv.star_from_sense("out", "in", "out", "in")) == sixv.VertexType6V.a2
    kinds = set()
    for w in ("in", "out"):
        for e in ("in", "out"):
            for s in ("in", "out"):
                for n in ("in", "out"):
                    st = sixv.star_from_sense(w, e, s, n)
                    if sixv.inward_count(st) == 2:
                        kinds.add(sixv.classify_vertex(st))
    assert len(kinds) == 6


def test_unit_weights_give_counts():
    assert sixv.partition_brute(4, sixv.Weights6V()) == 42


def test_isotropic_table_matches_brute():
    w = sixv.Weights6V.isotropic_weights(Fraction(3, 2), Fraction(1, 2), Fraction(2))
    for n in range(1, 5):
        assert sixv.partition_isotropic(n, w.a, w.b, w.c) == sixv.partition_brute(n, w)


def test_two_by_two_probabilities():
    w = sixv.Weights6V()
    probs = [sixv.probability(c, w) for c in sixv.enumerate_dwbc(2)]
    assert probs == [Fraction(1, 2), Fraction(1, 2)]


def test_probabilities_sum_to_one_exactly():
    w = sixv.Weights6V(Fraction(1), Fraction(2), Fraction(1, 3), Fraction(5, 7), Fraction(2, 3), Fraction(3))
    Z = sixv.partition_brute(3, w)
    assert sum(sixv.probability(c, w, Z) for c in sixv.enumerate_dwbc(3)) == 1


def test_weights_validation_and_derived_quantities():
    with pytest.raises(ValueError):
        sixv.Weights6V(-1, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        sixv.Weights6V(0, 0, 0, 0, 0, 0)
    w = sixv.Weights6V.isotropic_weights(1, 1, 1)
    assert w.delta == Fraction(1, 2)
    assert w.t == 1
    with pytest.raises(ValueError):
        sixv.Weights6V(1, 2, 1, 1, 1, 1).delta


def test_field_weights_reduce_to_plain_at_zero_field():
    w = sixv.field_weights(sixv.FieldParams(a=2, c=3))
    assert w.as_tuple() == (2, 2, 1, 1, 3, 3)
    with pytest.raises(ValueError):
        sixv.FieldParams(a=1, c=1, lambda_c=0.5)


def test_json_round_trip():
    conf = next(iter(sixv.enumerate_dwbc(3)))
    assert sixv.Configuration6V.from_json(conf.to_json()) == conf
    w = sixv.Weights6V(Fraction(1, 2), 1, 2, 3, 4, 5)
    assert sixv.Weights6V.from_json(w.to_json()) == w


def test_cap(monkeypatch):
    monkeypatch.setenv("VERTEXLAB_CAPS", "sixv=3")
    with pytest.raises(CapExceeded):
        sixv.count_dwbc(4)
