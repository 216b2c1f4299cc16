import random

from conftest import binding_lists, positives, values
from hypothesis import given

from instrumentation import VisitCounter
from original_trie import (LEAF, Node, extensionality_witness, o_combine,
                           o_elements, o_empty, o_footprint, o_get,
                           o_map_filter, o_node_smart, o_remove, o_set,
                           o_structural_equal, well_formed)
from positive import Positive

P = Positive


def build(bindings):
    m = o_empty()
    for k, v in bindings:
        m = o_set(k, v, m)
    return m


def test_empty_has_no_bindings():
    assert o_get(P(1), o_empty()) is None
    assert o_get(P(13), o_empty()) is None
    assert o_elements(o_empty()) == []


def test_get_descends_by_bits():
    assert o_get(P(1), Node(LEAF, 9, LEAF)) == 9
    tree = Node(Node(LEAF, 7, LEAF), None, LEAF)
    assert o_get(P(2), tree) == 7
    assert o_get(P(3), tree) is None


def test_set_examples():
    assert o_set(P(1), 5, LEAF) == Node(LEAF, 5, LEAF)
    m = o_set(P(13), "x", o_empty())
    assert o_get(P(13), m) == "x"
    assert o_get(P(12), m) is None


def test_smart_constructor():
    assert o_node_smart(LEAF, None, LEAF) is LEAF
    assert o_node_smart(LEAF, 3, LEAF) == Node(LEAF, 3, LEAF)
    inner = Node(LEAF, 1, LEAF)
    assert o_node_smart(inner, None, LEAF) == Node(inner, None, LEAF)


def test_remove_examples():
    assert o_remove(P(1), o_set(P(1), 5, o_empty())) is LEAF
    assert o_remove(P(9), o_empty()) is LEAF
    m = build([(P(2), "a"), (P(3), "b")])
    assert o_elements(o_remove(P(2), m)) == [(P(3), "b")]


def test_remove_absent_key_returns_same_tree():
    m = build([(P(2), "a"), (P(3), "b")])
    assert o_remove(P(6), m) is m
    assert o_remove(P(1), m) is m


def test_elements_sorted():
    m = build([(P(3), "c"), (P(1), "a"), (P(2), "b")])
    assert o_elements(m) == [(P(1), "a"), (P(2), "b"), (P(3), "c")]


def test_map_filter_examples():
    m = build([(P(1), 1), (P(2), 2), (P(3), 3)])
    assert o_map_filter(lambda v: None, m) is LEAF
    assert o_elements(o_map_filter(lambda v: v, m)) == o_elements(m)
    evens = o_map_filter(lambda v: v if v % 2 == 0 else None, m)
    assert o_elements(evens) == [(P(2), 2)]


def left_union(a, b):
    return a if a is not None else b


def test_combine_examples():
    assert o_combine(left_union, LEAF, LEAF) is LEAF
    union = o_combine(left_union, build([(P(1), "a")]), build([(P(2), "b")]))
    assert o_elements(union) == [(P(1), "a"), (P(2), "b")]
    m = build([(P(5), 1), (P(9), 2)])
    assert o_elements(o_combine(left_union, m, LEAF)) == o_elements(m)


def test_well_formed_examples():
    assert well_formed(LEAF)
    assert not well_formed(Node(LEAF, None, LEAF))


def test_extensionality_witness():
    m1, m2 = extensionality_witness()
    probes = [P(i) for i in range(1, 64)]
    assert all(o_get(i, m1) == o_get(i, m2) for i in probes)
    assert o_elements(m1) == o_elements(m2) == [(P(1), 1), (P(5), 2), (P(7), 2)]
    assert not o_structural_equal(m1, m2)
    assert not well_formed(m2)


def test_built_trees_are_well_formed():
    rng = random.Random(24657)
    for _ in range(1000):
        m = o_empty()
        for _ in range(rng.randint(0, 30)):
            k = P(rng.randint(1, 300))
            if rng.random() < 0.3:
                m = o_remove(k, m)
            else:
                m = o_set(k, rng.randrange(10), m)
        assert well_formed(m)


@given(binding_lists, binding_lists)
def test_operations_preserve_well_formed(b1, b2):
    m1, m2 = build(b1), build(b2)
    assert well_formed(o_map_filter(lambda v: v if v % 3 else None, m1))
    assert well_formed(o_combine(lambda a, b: None if a is None else b, m1, m2))
    for k, _ in b2:
        m1 = o_remove(k, m1)
        assert well_formed(m1)


@given(binding_lists, positives, values)
def test_set_is_persistent(bindings, k, v):
    m = build(bindings)
    before = o_elements(m)
    o_set(k, v, m)
    o_remove(k, m)
    assert o_elements(m) == before


def test_elements_visits_linear():
    for size in (2**7, 2**9, 2**11):
        m = build((P(i), i) for i in range(1, size + 1))
        visits = VisitCounter()
        assert len(o_elements(m, visits)) == size
        assert visits.visits <= 4 * size


def test_structural_equal_with_value_equality():
    m1 = build([(P(3), 1.0)])
    m2 = build([(P(3), 1.0 + 1e-9)])
    assert not o_structural_equal(m1, m2)
    assert o_structural_equal(m1, m2, lambda a, b: abs(a - b) < 1e-6)


def test_footprint_counts_option_boxes():
    m = build([(P(2), "x")])
    fp = o_footprint(m)
    assert fp.nodes == 2
    assert fp.values == 1
    assert fp.words == 4 + 6


def test_deep_keys_are_walked_without_recursion():
    deep = P(1 << 9000 | 77)
    m = o_set(deep, 1, o_set(P(6), 6, o_empty()))
    assert well_formed(m)
    assert o_elements(m) == [(P(6), 6), (deep, 1)]
    assert o_footprint(m).values == 2
    assert o_structural_equal(o_map_filter(lambda v: v, m), m)
    assert o_structural_equal(o_combine(lambda a, b: a or b, m, m), m)
    assert o_remove(deep, m) == o_set(P(6), 6, o_empty())
