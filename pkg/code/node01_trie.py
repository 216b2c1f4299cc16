#!/usr/bin/env python3

"""
Node01 binary tries: the original trie with payload presence moved into
the node form. Node0 carries no value, Node1 carries one, so no option
box is allocated. Still not extensional: Node0(Leaf, Leaf) is an empty
node distinct from Leaf.
"""

from dataclasses import dataclass
from operator import eq, itemgetter
from typing import Any, Callable, List, Optional, Tuple

from instrumentation import Footprint, VisitCounter
from positive import Positive


@dataclass(frozen=True, slots=True)
class Leaf:
    is_trie_node = False
    heap_words = 0


@dataclass(frozen=True, slots=True)
class Node0:
    """Internal node with no binding at its own path"""

    left: Any
    right: Any

    payload = None
    is_trie_node = True
    heap_words = 3


@dataclass(frozen=True, slots=True)
class Node1:
    """Internal node binding payload at its own path"""

    left: Any
    payload: Any
    right: Any

    is_trie_node = True
    heap_words = 4


LEAF = Leaf()

Node01Tree = Any


def n_empty() -> Node01Tree:
    return LEAF


def n_node(l: Node01Tree, o: Optional[Any], r: Node01Tree) -> Node01Tree:
    """Smart constructor choosing the node form from o; collapses empty nodes"""
    if o is not None:
        return Node1(l, o, r)
    if l is LEAF and r is LEAF:
        return LEAF
    return Node0(l, r)


def n_get(i: Positive, m: Node01Tree) -> Optional[Any]:
    key = i.value
    while m is not LEAF:
        if key == 1:
            return m.payload
        m = m.left if key & 1 == 0 else m.right
        key >>= 1
    return None


def n_set(i: Positive, v: Any, m: Node01Tree) -> Node01Tree:
    key = i.value
    path = []
    while key != 1:
        path.append((m, key & 1))
        if m is not LEAF:
            m = m.right if key & 1 else m.left
        key >>= 1
    if m is LEAF:
        new = Node1(LEAF, v, LEAF)
    else:
        new = Node1(m.left, v, m.right)
    for parent, bit in reversed(path):
        if parent is LEAF:
            new = Node0(LEAF, new) if bit else Node0(new, LEAF)
        elif type(parent) is Node1:
            if bit:
                new = Node1(parent.left, parent.payload, new)
            else:
                new = Node1(new, parent.payload, parent.right)
        else:
            new = Node0(parent.left, new) if bit else Node0(new, parent.right)
    return new


def n_remove(i: Positive, m: Node01Tree) -> Node01Tree:
    root = m
    key = i.value
    path = []
    while key != 1:
        if m is LEAF:
            return root
        path.append((m, key & 1))
        m = m.right if key & 1 else m.left
        key >>= 1
    if m is LEAF or m.payload is None:
        return root
    new = n_node(m.left, None, m.right)
    for parent, bit in reversed(path):
        if bit:
            new = n_node(parent.left, parent.payload, new)
        else:
            new = n_node(new, parent.payload, parent.right)
    return new


def n_elements(
    m: Node01Tree, visits: Optional[VisitCounter] = None
) -> List[Tuple[Positive, Any]]:
    acc = []
    stack = [(m, 0, 1)]
    while stack:
        m, key, depth_bit = stack.pop()
        if visits is not None:
            visits.visits += 1
        if m is LEAF:
            continue
        if m.payload is not None:
            acc.append((key | depth_bit, m.payload))
        stack.append((m.right, key | depth_bit, depth_bit << 1))
        stack.append((m.left, key, depth_bit << 1))
    acc.sort(key=itemgetter(0))
    return [(Positive(k), v) for k, v in acc]


def n_map_filter(f: Callable[[Any], Optional[Any]], m: Node01Tree) -> Node01Tree:
    built = []
    stack = [(m, False)]
    while stack:
        m, ready = stack.pop()
        if m is LEAF:
            built.append(LEAF)
        elif ready:
            r = built.pop()
            l = built.pop()
            built.append(n_node(l, None if m.payload is None else f(m.payload), r))
        else:
            stack.append((m, True))
            stack.append((m.right, False))
            stack.append((m.left, False))
    return built.pop()


def n_combine(f, m1: Node01Tree, m2: Node01Tree) -> Node01Tree:
    def right_only(b):
        return f(None, b)

    def left_only(a):
        return f(a, None)

    built = []
    stack = [(m1, m2, False)]
    while stack:
        m1, m2, ready = stack.pop()
        if m1 is LEAF:
            built.append(n_map_filter(right_only, m2))
        elif m2 is LEAF:
            built.append(n_map_filter(left_only, m1))
        elif ready:
            r = built.pop()
            l = built.pop()
            o1, o2 = m1.payload, m2.payload
            built.append(n_node(l, None if o1 is None and o2 is None else f(o1, o2), r))
        else:
            stack.append((m1, m2, True))
            stack.append((m1.right, m2.right, False))
            stack.append((m1.left, m2.left, False))
    return built.pop()


def n_well_formed(m: Node01Tree) -> bool:
    stack = [m]
    while stack:
        m = stack.pop()
        if m is LEAF:
            continue
        if type(m) is Node0 and m.left is LEAF and m.right is LEAF:
            return False
        stack.append(m.left)
        stack.append(m.right)
    return True


def n_structural_equal(m1: Node01Tree, m2: Node01Tree, value_eq=eq) -> bool:
    stack = [(m1, m2)]
    while stack:
        m1, m2 = stack.pop()
        if m1 is m2:
            continue
        if type(m1) is not type(m2):
            return False
        if m1 is LEAF or m2 is LEAF:
            continue
        if type(m1) is Node1 and not value_eq(m1.payload, m2.payload):
            return False
        stack.append((m1.left, m2.left))
        stack.append((m1.right, m2.right))
    return True


def n_footprint(m: Node01Tree) -> Footprint:
    nodes = words = values = 0
    stack = [m]
    while stack:
        m = stack.pop()
        if m is LEAF:
            continue
        nodes += 1
        words += m.heap_words
        values += type(m) is Node1
        stack.append(m.left)
        stack.append(m.right)
    return Footprint(nodes, words, values, values)
