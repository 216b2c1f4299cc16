import random

import pytest
from conftest import binding_lists, positives, values
from hypothesis import given

from canonical_trie import (EMPTY, EMPTY_CASE, Node001, Node010, Node011,
                            Node100, Node101, Node110, Node111, NodeCase,
                            Nodes, c_combine, c_combine_by_view, c_elements,
                            c_empty, c_footprint, c_get, c_map_filter, c_node,
                            c_not_trivially_empty, c_rebuild, c_remove, c_set,
                            c_set0, c_view, structural_equal)
from instrumentation import VisitCounter
from mapkit import COMBINE_TABLES, random_bindings, random_key
from oracle import EMPTY_ORACLE, oracle_combine, oracle_elements, oracle_set
from positive import Positive, xH, xI, xO

P = Positive


def leaf(x):
    return Node010(x)


def random_tree(rng, max_size=12):
    return c_rebuild(random_bindings(rng, rng.randint(0, max_size)))


def test_empty():
    assert c_get(P(1), c_empty()) is None
    assert structural_equal(c_empty(), c_empty())
    assert c_elements(c_empty()) == []


def test_get_examples():
    assert c_get(P(1), Nodes(leaf("x"))) == "x"
    assert c_get(P(1), Nodes(Node101(leaf(1), leaf(2)))) is None
    assert c_get(P(2), Nodes(Node101(leaf(1), leaf(2)))) == 1
    assert c_get(P(3), Nodes(Node101(leaf(1), leaf(2)))) == 2
    assert c_get(P(6), c_set(P(6), "w", c_empty())) == "w"


def test_set0_examples():
    assert c_set0(xH, "v") == Node010("v")
    assert c_set0(xO(xH), "v") == Node100(Node010("v"))
    assert c_set0(xI(xH), "v") == Node001(Node010("v"))
    assert c_elements(Nodes(c_set0(P(13), "v"))) == [(P(13), "v")]


def test_set_upgrades_node_forms():
    l, r = leaf(1), leaf(2)
    assert c_set(P(1), "x", Nodes(Node101(l, r))) == Nodes(Node111(l, "x", r))
    assert c_set(P(1), "x", Nodes(Node100(l))) == Nodes(Node110(l, "x"))
    assert c_set(P(3), 5, Nodes(Node010("x"))) == Nodes(Node011("x", leaf(5)))


def test_overwrite_and_order_independence():
    assert c_set(P(1), 2, c_set(P(1), 1, c_empty())) == c_set(P(1), 2, c_empty())
    a = c_set(P(2), "a", c_set(P(3), "b", c_empty()))
    b = c_set(P(3), "b", c_set(P(2), "a", c_empty()))
    assert structural_equal(a, b)


def test_node_examples():
    r = leaf(4)
    assert c_node(EMPTY, None, EMPTY) is EMPTY
    assert c_node(EMPTY, "x", Nodes(r)) == Nodes(Node011("x", r))
    assert c_node(Nodes(r), None, Nodes(r)) == Nodes(Node101(r, r))
    assert not c_not_trivially_empty(EMPTY, None, EMPTY)
    assert c_not_trivially_empty(EMPTY, 0, EMPTY)


def test_view_examples():
    l = leaf(1)
    assert c_view(EMPTY) is EMPTY_CASE
    assert c_view(Nodes(Node110(l, "x"))) == NodeCase(Nodes(l), "x", EMPTY)
    assert c_view(Nodes(Node001(l))) == NodeCase(EMPTY, None, Nodes(l))


def test_view_node_roundtrips():
    rng = random.Random(24657)
    for _ in range(1000):
        l, r = random_tree(rng), random_tree(rng)
        o = rng.choice([None, rng.randrange(100)])
        if c_not_trivially_empty(l, o, r):
            assert c_view(c_node(l, o, r)) == NodeCase(l, o, r)
        m = random_tree(rng)
        view = c_view(m)
        if view is EMPTY_CASE:
            assert m is EMPTY
        else:
            assert c_not_trivially_empty(view.l, view.o, view.r)
            assert c_node(view.l, view.o, view.r) == m


def test_set_over_view_equations():
    rng = random.Random(24657)
    for _ in range(1000):
        l, r = random_tree(rng), random_tree(rng)
        o = rng.choice([None, rng.randrange(100)])
        q, v = random_key(rng), rng.randrange(100)
        node = c_node(l, o, r)
        assert c_set(xH, v, EMPTY) == c_node(EMPTY, v, EMPTY)
        assert c_set(xO(q), v, EMPTY) == c_node(c_set(q, v, EMPTY), None, EMPTY)
        assert c_set(xI(q), v, EMPTY) == c_node(EMPTY, None, c_set(q, v, EMPTY))
        assert c_set(xH, v, node) == c_node(l, v, r)
        assert c_set(xO(q), v, node) == c_node(c_set(q, v, l), o, r)
        assert c_set(xI(q), v, node) == c_node(l, o, c_set(q, v, r))


def test_remove_examples():
    assert c_remove(P(1), c_set(P(1), "v", c_empty())) is EMPTY
    assert c_remove(P(9), c_empty()) is EMPTY
    m = c_set(P(3), "b", c_set(P(2), "a", c_empty()))
    assert c_remove(P(3), m) == c_set(P(2), "a", c_empty())
    assert c_remove(P(7), m) is m


def test_map_filter_examples():
    m = c_rebuild([(P(i), i) for i in range(1, 20)])
    assert c_map_filter(lambda v: None, m) is EMPTY
    assert c_map_filter(lambda v: v + 1, Nodes(leaf(1))) == Nodes(leaf(2))
    evens = c_map_filter(lambda v: v if v % 2 == 0 else None, m)
    assert evens == c_rebuild([(P(i), i) for i in range(2, 20, 2)])


def test_combine_examples():
    f = COMBINE_TABLES["right_union"]
    assert c_combine(f, EMPTY, EMPTY) is EMPTY
    m1 = Nodes(Node101(leaf("l1"), leaf("r1")))
    m2 = Nodes(Node011("x2", leaf("r2")))
    combined = c_combine(f, m1, m2)
    assert c_get(P(1), combined) == "x2"
    assert c_elements(combined) == [(P(1), "x2"), (P(2), "l1"), (P(3), "r2")]


def test_union_matches_oracle_rebuild():
    rng = random.Random(24657)
    f = COMBINE_TABLES["left_union"]
    b1, b2 = random_bindings(rng, 100), random_bindings(rng, 100)
    o1 = o2 = EMPTY_ORACLE
    for k, v in b1:
        o1 = oracle_set(k, v, o1)
    for k, v in b2:
        o2 = oracle_set(k, v, o2)
    expected = oracle_elements(oracle_combine(f, o1, o2))
    combined = c_combine(f, c_rebuild(b1), c_rebuild(b2))
    assert c_elements(combined) == expected
    assert structural_equal(combined, c_rebuild(expected))


@pytest.mark.parametrize("table", sorted(COMBINE_TABLES))
def test_combine_by_view_agrees(table):
    rng = random.Random(24657)
    f = COMBINE_TABLES[table]
    for _ in range(200):
        m1, m2 = random_tree(rng, 30), random_tree(rng, 30)
        assert c_combine_by_view(f, m1, m2) == c_combine(f, m1, m2)


def test_canonicity_under_mixed_builds():
    rng = random.Random(24657)
    for _ in range(1000):
        target = dict(random_bindings(rng, rng.randint(0, 25)))
        trees = []
        for _ in range(2):
            m = c_empty()
            keys = list(target)
            rng.shuffle(keys)
            for k in keys:
                if rng.random() < 0.3:
                    m = c_set(k, -1, m)
                if rng.random() < 0.2:
                    m = c_remove(k, c_set(k, -2, m))
                m = c_set(k, target[k], m)
                if rng.random() < 0.2:
                    stray = random_key(rng)
                    if stray not in target:
                        m = c_remove(stray, c_set(stray, -3, m))
            trees.append(m)
        assert structural_equal(trees[0], trees[1])
        assert structural_equal(trees[0], c_rebuild(sorted(target.items())))


@given(binding_lists, binding_lists)
def test_extensional_implies_structural(b1, b2):
    m1 = c_rebuild(b1)
    m2 = c_rebuild(list(reversed(dict(b1).items())))
    assert structural_equal(m1, m2)
    other = c_rebuild(b2)
    same = all(
        c_get(k, m1) == c_get(k, other)
        for k in {k for k, _ in b1} | {k for k, _ in b2}
    )
    assert structural_equal(m1, other) == same


@given(binding_lists, positives, values)
def test_one_value_changed_breaks_equality(bindings, k, v):
    m = c_set(k, v, c_rebuild(bindings))
    assert not structural_equal(m, c_set(k, v + 1, m))


def test_minimal_tree_for_seven_keys():
    m = c_rebuild([(P(i), i) for i in range(1, 8)])
    assert c_footprint(m).nodes == 7
    for it in range(1000):
        m = c_set(P(it % 7 + 1), it, m)
    assert c_footprint(m).nodes == 7


def test_footprint_words():
    m = c_set(P(2), "x", c_empty())
    fp = c_footprint(m)
    assert fp.nodes == 2
    assert fp.words == 2 + 2 + 2


def test_elements_dense_and_linear():
    for size in (2**7, 2**9, 2**11):
        m = c_rebuild((P(i), i) for i in range(1, size + 1))
        visits = VisitCounter()
        assert c_elements(m, visits) == [(P(i), i) for i in range(1, size + 1)]
        assert visits.visits <= 4 * size


def test_keys_deeper_than_the_interpreter_stack():
    deep, deeper = P(1 << 9000 | 77), P(3 << 12000 | 5)
    m = c_set(deeper, 2, c_set(deep, 1, c_set(P(6), 6, c_empty())))
    assert c_elements(m) == [(P(6), 6), (deep, 1), (deeper, 2)]
    total = COMBINE_TABLES["sum"]
    assert structural_equal(c_combine_by_view(total, m, m), c_combine(total, m, m))
    assert c_get(deeper, c_combine(total, m, m)) == 4
    assert structural_equal(c_map_filter(lambda v: None if v == 1 else v, m), c_remove(deep, m))
    assert c_footprint(m).values == 3
    assert structural_equal(m, c_rebuild(c_elements(m)))
