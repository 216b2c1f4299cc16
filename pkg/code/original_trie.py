#!/usr/bin/env python3

"""
Original binary tries: Leaf, or Node(left, optional payload, right).

The representation is not extensional: Node(Leaf, None, Leaf) holds no
binding yet differs structurally from Leaf. Every operation here rebuilds
through `o_node_smart`, so trees built only with this module stay
well formed (no such empty node), but nothing in the type enforces it.

None marks an absent payload; None cannot be stored as a value.
"""

from dataclasses import dataclass
from operator import eq, itemgetter
from typing import Any, Callable, List, Optional, Tuple

from instrumentation import Footprint, VisitCounter
from positive import Positive


@dataclass(frozen=True, slots=True)
class Leaf:
    """The empty tree"""

    is_trie_node = False
    heap_words = 0


@dataclass(frozen=True, slots=True)
class Node:
    """
    Class to represent an internal node; left holds the xO extensions of the
    path, right the xI extensions, payload the binding at the path itself
    """

    left: Any
    payload: Any
    right: Any

    is_trie_node = True

    @property
    def heap_words(self) -> int:
        # header + 3 fields, plus a 2-word option box when a payload is present
        return 4 if self.payload is None else 6


LEAF = Leaf()

OriginalTree = Any


def o_empty() -> OriginalTree:
    return LEAF


def o_get(i: Positive, m: OriginalTree) -> Optional[Any]:
    key = i.value
    while m is not LEAF:
        if key == 1:
            return m.payload
        m = m.left if key & 1 == 0 else m.right
        key >>= 1
    return None


def o_set(i: Positive, v: Any, m: OriginalTree) -> OriginalTree:
    key = i.value
    path = []
    while key != 1:
        path.append((m, key & 1))
        if m is not LEAF:
            m = m.right if key & 1 else m.left
        key >>= 1
    if m is LEAF:
        new = Node(LEAF, v, LEAF)
    else:
        new = Node(m.left, v, m.right)
    for parent, bit in reversed(path):
        if parent is LEAF:
            new = Node(LEAF, None, new) if bit else Node(new, None, LEAF)
        elif bit:
            new = Node(parent.left, parent.payload, new)
        else:
            new = Node(new, parent.payload, parent.right)
    return new


def o_node_smart(l: OriginalTree, o: Optional[Any], r: OriginalTree) -> OriginalTree:
    """Node' pseudo-constructor: never builds Node(Leaf, None, Leaf)"""
    if l is LEAF and o is None and r is LEAF:
        return LEAF
    return Node(l, o, r)


def o_not_trivially_empty(l: OriginalTree, o: Optional[Any], r: OriginalTree) -> bool:
    return not (l is LEAF and o is None and r is LEAF)


def o_remove(i: Positive, m: OriginalTree) -> OriginalTree:
    """Drop the binding at i; an absent key returns m itself"""
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
    new = o_node_smart(m.left, None, m.right)
    for parent, bit in reversed(path):
        if bit:
            new = o_node_smart(parent.left, parent.payload, new)
        else:
            new = o_node_smart(new, parent.payload, parent.right)
    return new


def o_elements(
    m: OriginalTree, visits: Optional[VisitCounter] = None
) -> List[Tuple[Positive, Any]]:
    """Bindings in increasing key order"""
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


def o_map_filter(f: Callable[[Any], Optional[Any]], m: OriginalTree) -> OriginalTree:
    # post-order: children results are left on `built`, left below right
    built = []
    stack = [(m, False)]
    while stack:
        m, ready = stack.pop()
        if m is LEAF:
            built.append(LEAF)
        elif ready:
            r = built.pop()
            l = built.pop()
            built.append(o_node_smart(l, None if m.payload is None else f(m.payload), r))
        else:
            stack.append((m, True))
            stack.append((m.right, False))
            stack.append((m.left, False))
    return built.pop()


def o_combine(f, m1: OriginalTree, m2: OriginalTree) -> OriginalTree:
    """
    Pointwise combination: get(i, result) = f(get(i, m1), get(i, m2)).
    f(None, None) must be None. Once either side is a Leaf the other side
    is finished with a single map_filter pass.
    """

    def right_only(b):
        return f(None, b)

    def left_only(a):
        return f(a, None)

    built = []
    stack = [(m1, m2, False)]
    while stack:
        m1, m2, ready = stack.pop()
        if m1 is LEAF:
            built.append(o_map_filter(right_only, m2))
        elif m2 is LEAF:
            built.append(o_map_filter(left_only, m1))
        elif ready:
            r = built.pop()
            l = built.pop()
            o1, o2 = m1.payload, m2.payload
            built.append(
                o_node_smart(l, None if o1 is None and o2 is None else f(o1, o2), r)
            )
        else:
            stack.append((m1, m2, True))
            stack.append((m1.right, m2.right, False))
            stack.append((m1.left, m2.left, False))
    return built.pop()


def well_formed(m: OriginalTree) -> bool:
    """True iff m contains no Node(Leaf, None, Leaf)"""
    stack = [m]
    while stack:
        m = stack.pop()
        if m is LEAF:
            continue
        if not o_not_trivially_empty(m.left, m.payload, m.right):
            return False
        stack.append(m.left)
        stack.append(m.right)
    return True


def o_structural_equal(m1: OriginalTree, m2: OriginalTree, value_eq=eq) -> bool:
    """Same node shape and equal payloads; value_eq defaults to =="""
    stack = [(m1, m2)]
    while stack:
        m1, m2 = stack.pop()
        if m1 is m2:
            continue
        if type(m1) is not type(m2):
            return False
        if m1 is LEAF or m2 is LEAF:
            continue
        if (m1.payload is None) != (m2.payload is None):
            return False
        if m1.payload is not None and not value_eq(m1.payload, m2.payload):
            return False
        stack.append((m1.left, m2.left))
        stack.append((m1.right, m2.right))
    return True


def o_footprint(m: OriginalTree) -> Footprint:
    nodes = words = values = 0
    stack = [m]
    while stack:
        m = stack.pop()
        if m is LEAF:
            continue
        nodes += 1
        words += m.heap_words
        values += m.payload is not None
        stack.append(m.left)
        stack.append(m.right)
    return Footprint(nodes, words, nodes, values)


def extensionality_witness() -> Tuple[OriginalTree, OriginalTree]:
    """
    Two equivalent maps {1: 1, 5: 2, 7: 2} that differ structurally: the
    second carries an empty Node(Leaf, None, Leaf) where the first has a Leaf
    """
    twos = Node(Node(LEAF, 2, LEAF), None, Node(LEAF, 2, LEAF))
    m1 = Node(LEAF, 1, twos)
    m2 = Node(Node(LEAF, None, LEAF), 1, twos)
    return m1, m2
