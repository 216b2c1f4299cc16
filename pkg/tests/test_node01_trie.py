import pytest
from conftest import binding_lists
from hypothesis import given

from instrumentation import VisitCounter
from node01_trie import (LEAF, Node0, Node1, n_combine, n_elements, n_empty,
                         n_footprint, n_get, n_map_filter, n_node, n_remove,
                         n_set, n_structural_equal, n_well_formed)
from original_trie import o_elements, o_empty, o_footprint, o_set
from positive import Positive

P = Positive


def build(bindings):
    m = n_empty()
    for k, v in bindings:
        m = n_set(k, v, m)
    return m


def test_set_examples():
    assert n_set(P(1), 5, LEAF) == Node1(LEAF, 5, LEAF)
    assert n_get(P(2), n_set(P(3), "x", n_empty())) is None
    assert n_get(P(3), n_set(P(3), "x", n_empty())) == "x"


def test_set_builds_valueless_nodes_on_the_path():
    m = n_set(P(2), "x", n_empty())
    assert m == Node0(Node1(LEAF, "x", LEAF), LEAF)


def test_smart_constructor():
    assert n_node(LEAF, None, LEAF) is LEAF
    assert n_node(LEAF, 1, LEAF) == Node1(LEAF, 1, LEAF)
    assert type(n_node(Node1(LEAF, 1, LEAF), None, LEAF)) is Node0


def test_remove_collapses_empty_nodes():
    m = build([(P(4), "a")])
    assert n_remove(P(4), m) is LEAF
    assert n_remove(P(5), m) is m
    assert n_well_formed(n_remove(P(4), build([(P(4), "a"), (P(7), "b")])))


def test_not_extensional():
    assert n_elements(Node0(LEAF, LEAF)) == n_elements(LEAF)
    assert not n_structural_equal(Node0(LEAF, LEAF), LEAF)
    assert not n_well_formed(Node0(LEAF, LEAF))


@given(binding_lists)
def test_agrees_with_original(bindings):
    m = build(bindings)
    o = o_empty()
    for k, v in bindings:
        o = o_set(k, v, o)
    assert n_elements(m) == o_elements(o)


@given(binding_lists, binding_lists)
def test_combine_and_map_filter(b1, b2):
    m1, m2 = build(b1), build(b2)

    def prefer_right(a, b):
        return b if b is not None else a

    combined = n_combine(prefer_right, m1, m2)
    expected = dict(n_elements(m1))
    expected.update(n_elements(m2))
    assert n_elements(combined) == sorted(expected.items())
    assert n_well_formed(combined)
    odd = n_map_filter(lambda v: v if v % 2 else None, m1)
    assert n_elements(odd) == [(k, v) for k, v in n_elements(m1) if v % 2]


@pytest.mark.parametrize("size", [1, 100, 2048])
def test_payload_slots_equal_bindings(size):
    m = build((P(i), i) for i in range(1, size + 1))
    fp = n_footprint(m)
    assert fp.payload_slots == fp.values == size
    assert fp.words < o_footprint_for(size).words


def o_footprint_for(size):
    o = o_empty()
    for i in range(1, size + 1):
        o = o_set(P(i), i, o)
    return o_footprint(o)


def test_elements_visits_linear():
    for size in (2**7, 2**9, 2**11):
        visits = VisitCounter()
        m = build((P(i), i) for i in range(1, size + 1))
        assert len(n_elements(m, visits)) == size
        assert visits.visits <= 4 * size


def test_deep_keys_are_walked_without_recursion():
    deep = P(1 << 9000 | 77)
    m = build([(P(6), 6), (deep, 1)])
    assert n_well_formed(m)
    assert n_elements(m) == [(P(6), 6), (deep, 1)]
    assert n_footprint(m).values == 2
    assert n_structural_equal(n_map_filter(lambda v: v, m), m)
    assert n_structural_equal(n_combine(lambda a, b: a or b, m, m), m)
    assert n_structural_equal(n_remove(deep, m), build([(P(6), 6)]))
