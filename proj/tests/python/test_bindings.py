"""Smoke tests for the _twistspin extension module."""

import pytest

import _twistspin as ts


def test_parse_and_repr():
    k = ts.parse_knot("TB[3/1]", "trefoil")
    assert k.name == "trefoil"
    assert k.is_two_bridge
    g = ts.knot_group(k)
    assert g.generators == 2
    assert "|" in repr(g)


def test_parse_error():
    with pytest.raises(ts.TwistspinError):
        ts.parse_knot("nonsense")


def test_knot_group_abelianization_is_Z():
    g = ts.knot_group(ts.parse_knot("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]"))
    torsion, free_rank = ts.abelian_invariants(g)
    assert torsion == []
    assert free_rank == 1


def test_twist_quotient_orders():
    g = ts.knot_group(ts.parse_knot("TB[3/1]"))
    odd = ts.connect_sum_rp2(ts.twist_spin(g, 3))
    assert ts.group_order(odd) == 2
    even = ts.connect_sum_rp2(ts.twist_spin(g, 2))
    assert ts.group_order(even) == 6


def test_group_order_overflow_returns_none():
    g = ts.knot_group(ts.parse_knot("TB[3/1]"))
    assert ts.group_order(g, max_cosets=100) is None


def test_longitude_trivial_in_quotient():
    k = ts.parse_knot("TB[5/3]")
    g = ts.knot_group(k)
    lam = ts.knot_longitude(k)
    q = ts.connect_sum_rp2(ts.twist_spin(g, 2))
    assert ts.word_is_trivial(q, lam) is True
    # in the knot group itself the longitude is nontrivial but the
    # enumeration never closes, so the verdict is undecided
    assert ts.word_is_trivial(g, lam, max_cosets=100) is None


def test_meridian_subgroup_index_one_twist():
    g = ts.knot_group(ts.parse_knot("TB[3/1]"))
    t1 = ts.twist_spin(g, 1)
    assert ts.subgroup_index(t1, [ts.Word([t1.meridian])]) == 1


def test_parity_reduce_agrees_across_even_n():
    g = ts.knot_group(ts.parse_knot("TB[5/3]"))
    q2 = ts.connect_sum_rp2(ts.twist_spin(g, 2))
    q4 = ts.connect_sum_rp2(ts.twist_spin(g, 4))
    r2 = ts.parity_reduce(q2, 2)
    r4 = ts.parity_reduce(q4, 4)
    assert repr(r2) == repr(r4)


def test_simplify_collapses_odd_quotient():
    g = ts.knot_group(ts.parse_knot("TB[3/1]"))
    q = ts.connect_sum_rp2(ts.twist_spin(g, 3))
    small, exceeded = ts.simplify(q)
    assert not exceeded
    assert small.generators == 1
    assert ts.group_order(small) == 2


def test_verify_lemma2():
    odd = ts.verify_lemma2("TB[3/1]", 3)
    assert odd["verdict"] == "PASS"
    assert odd["order"] == 2
    even = ts.verify_lemma2("TB[5/3]", 2)
    assert even["verdict"] == "PASS"
    assert even["order"] == 10
    assert even["longitude_trivial"] == "true"
