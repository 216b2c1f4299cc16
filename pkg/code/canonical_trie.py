#!/usr/bin/env python3

"""
Canonical binary tries.

A CanonicalTree is Empty or Nodes(t), where t is one of seven nonempty
node forms named by which of (left, middle, right) they carry:

    Node001(r)  Node010(x)  Node011(x, r)  Node100(l)
    Node101(l, r)  Node110(l, x)  Node111(l, x, r)

There is no all-absent form, so every subtree holds at least one binding
and each finite map has exactly one representation: structural equality
coincides with extensional equality.

Every form exposes `l`, `x` and `r`; the parts a form lacks read as None
through class attributes. Whole-tree operations are written over these
parts and rebuilt with `_ne`, the nonempty counterpart of `c_node`.
The view layer (`c_node`, `c_view`) gives the two-case picture
Empty | Node(l, o, r) on top of the seven forms.

None marks absence; None cannot be stored as a value.
"""

from dataclasses import dataclass
from operator import eq, itemgetter
from typing import Any, Callable, Iterable, List, Optional, Tuple, Union

from instrumentation import Footprint, VisitCounter
from positive import Positive


class CanonicalNE:
    """Base of the seven nonempty node forms"""

    __slots__ = ()
    is_trie_node = True


@dataclass(frozen=True, slots=True)
class Node001(CanonicalNE):
    r: CanonicalNE

    l = None
    x = None
    heap_words = 2


@dataclass(frozen=True, slots=True)
class Node010(CanonicalNE):
    x: Any

    l = None
    r = None
    heap_words = 2


@dataclass(frozen=True, slots=True)
class Node011(CanonicalNE):
    x: Any
    r: CanonicalNE

    l = None
    heap_words = 3


@dataclass(frozen=True, slots=True)
class Node100(CanonicalNE):
    l: CanonicalNE

    x = None
    r = None
    heap_words = 2


@dataclass(frozen=True, slots=True)
class Node101(CanonicalNE):
    l: CanonicalNE
    r: CanonicalNE

    x = None
    heap_words = 3


@dataclass(frozen=True, slots=True)
class Node110(CanonicalNE):
    l: CanonicalNE
    x: Any

    r = None
    heap_words = 3


@dataclass(frozen=True, slots=True)
class Node111(CanonicalNE):
    l: CanonicalNE
    x: Any
    r: CanonicalNE

    heap_words = 4


@dataclass(frozen=True, slots=True)
class Empty:
    """The empty map"""

    is_trie_node = False
    heap_words = 0


@dataclass(frozen=True, slots=True)
class Nodes:
    """A nonempty map"""

    t: CanonicalNE

    is_trie_node = False
    heap_words = 2


EMPTY = Empty()

CanonicalTree = Union[Empty, Nodes]

NODE_CLASSES = (Node001, Node010, Node011, Node100, Node101, Node110, Node111)


@dataclass(frozen=True)
class EmptyCase:
    """View of the empty map"""


@dataclass(frozen=True)
class NodeCase:
    """View of a nonempty map as its left sub-map, middle binding and right sub-map"""

    l: CanonicalTree
    o: Optional[Any]
    r: CanonicalTree


ViewCase = Union[EmptyCase, NodeCase]

EMPTY_CASE = EmptyCase()


# Indexed by (l present) * 4 + (x present) * 2 + (r present)
_BUILD = (
    None,
    lambda l, x, r: Node001(r),
    lambda l, x, r: Node010(x),
    lambda l, x, r: Node011(x, r),
    lambda l, x, r: Node100(l),
    lambda l, x, r: Node101(l, r),
    lambda l, x, r: Node110(l, x),
    Node111,
)


def _ne(l: Optional[CanonicalNE], x: Optional[Any], r: Optional[CanonicalNE]):
    """The node form carrying exactly the present parts, or None when all are absent"""
    index = (l is not None) << 2 | (x is not None) << 1 | (r is not None)
    build = _BUILD[index]
    return None if build is None else build(l, x, r)


def _wrap(t: Optional[CanonicalNE]) -> CanonicalTree:
    return EMPTY if t is None else Nodes(t)


def _unwrap(m: CanonicalTree) -> Optional[CanonicalNE]:
    return None if m is EMPTY else m.t


def c_empty() -> CanonicalTree:
    return EMPTY


def c_get(p: Positive, m: CanonicalTree) -> Optional[Any]:
    if m is EMPTY:
        return None
    t = m.t
    key = p.value
    while key != 1:
        t = t.r if key & 1 else t.l
        if t is None:
            return None
        key >>= 1
    return t.x


def c_set0(p: Positive, x: Any) -> CanonicalNE:
    """The single-branch nonempty tree binding exactly p -> x"""
    return _set0(p.value, x)


def _set0(key: int, x: Any) -> CanonicalNE:
    bits = []
    while key != 1:
        bits.append(key & 1)
        key >>= 1
    t = Node010(x)
    for bit in reversed(bits):
        t = Node001(t) if bit else Node100(t)
    return t


# Form upgrades for set: replace the middle, the left or the right part of
# a node whatever it carried before. Seven forms times three key cases.
_WITH_MIDDLE = {
    Node001: lambda t, x: Node011(x, t.r),
    Node010: lambda t, x: Node010(x),
    Node011: lambda t, x: Node011(x, t.r),
    Node100: lambda t, x: Node110(t.l, x),
    Node101: lambda t, x: Node111(t.l, x, t.r),
    Node110: lambda t, x: Node110(t.l, x),
    Node111: lambda t, x: Node111(t.l, x, t.r),
}

_WITH_LEFT = {
    Node001: lambda t, c: Node101(c, t.r),
    Node010: lambda t, c: Node110(c, t.x),
    Node011: lambda t, c: Node111(c, t.x, t.r),
    Node100: lambda t, c: Node100(c),
    Node101: lambda t, c: Node101(c, t.r),
    Node110: lambda t, c: Node110(c, t.x),
    Node111: lambda t, c: Node111(c, t.x, t.r),
}

_WITH_RIGHT = {
    Node001: lambda t, c: Node001(c),
    Node010: lambda t, c: Node011(t.x, c),
    Node011: lambda t, c: Node011(t.x, c),
    Node100: lambda t, c: Node101(t.l, c),
    Node101: lambda t, c: Node101(t.l, c),
    Node110: lambda t, c: Node111(t.l, t.x, c),
    Node111: lambda t, c: Node111(t.l, t.x, c),
}


def _set_ne(key: int, x: Any, t: CanonicalNE) -> CanonicalNE:
    path = []
    while True:
        if key == 1:
            new = _WITH_MIDDLE[type(t)](t, x)
            break
        bit = key & 1
        child = t.r if bit else t.l
        if child is None:
            sub = _set0(key >> 1, x)
            new = (_WITH_RIGHT if bit else _WITH_LEFT)[type(t)](t, sub)
            break
        path.append((t, bit))
        t = child
        key >>= 1
    for parent, bit in reversed(path):
        new = (_WITH_RIGHT if bit else _WITH_LEFT)[type(parent)](parent, new)
    return new


def c_set(p: Positive, x: Any, m: CanonicalTree) -> CanonicalTree:
    if m is EMPTY:
        return Nodes(_set0(p.value, x))
    return Nodes(_set_ne(p.value, x, m.t))


def c_node(l: CanonicalTree, o: Optional[Any], r: CanonicalTree) -> CanonicalTree:
    """The unique canonical tree with left sub-map l, middle binding o, right sub-map r"""
    return _wrap(_ne(_unwrap(l), o, _unwrap(r)))


def c_not_trivially_empty(l: CanonicalTree, o: Optional[Any], r: CanonicalTree) -> bool:
    return not (l is EMPTY and o is None and r is EMPTY)


def c_view(m: CanonicalTree) -> ViewCase:
    if m is EMPTY:
        return EMPTY_CASE
    t = m.t
    return NodeCase(_wrap(t.l), t.x, _wrap(t.r))


def c_remove(p: Positive, m: CanonicalTree) -> CanonicalTree:
    """Drop the binding at p; an absent key returns m itself"""
    if m is EMPTY:
        return m
    t = m.t
    key = p.value
    path = []
    while key != 1:
        bit = key & 1
        child = t.r if bit else t.l
        if child is None:
            return m
        path.append((t, bit))
        t = child
        key >>= 1
    if t.x is None:
        return m
    new = _ne(t.l, None, t.r)
    for parent, bit in reversed(path):
        if bit:
            new = _ne(parent.l, parent.x, new)
        else:
            new = _ne(new, parent.x, parent.r)
    return _wrap(new)


def c_elements(
    m: CanonicalTree, visits: Optional[VisitCounter] = None
) -> List[Tuple[Positive, Any]]:
    if m is EMPTY:
        return []
    acc = []
    stack = [(m.t, 0, 1)]
    while stack:
        t, key, depth_bit = stack.pop()
        if visits is not None:
            visits.visits += 1
        if t.x is not None:
            acc.append((key | depth_bit, t.x))
        if t.r is not None:
            stack.append((t.r, key | depth_bit, depth_bit << 1))
        if t.l is not None:
            stack.append((t.l, key, depth_bit << 1))
    acc.sort(key=itemgetter(0))
    return [(Positive(k), v) for k, v in acc]


def _map_filter_ne(f, t: CanonicalNE) -> Optional[CanonicalNE]:
    # post-order; only present children leave a result on `built`
    built = []
    stack = [(t, False)]
    while stack:
        t, ready = stack.pop()
        if ready:
            r = None if t.r is None else built.pop()
            l = None if t.l is None else built.pop()
            built.append(_ne(l, None if t.x is None else f(t.x), r))
        else:
            stack.append((t, True))
            if t.r is not None:
                stack.append((t.r, False))
            if t.l is not None:
                stack.append((t.l, False))
    return built.pop()


def c_map_filter(f: Callable[[Any], Optional[Any]], m: CanonicalTree) -> CanonicalTree:
    if m is EMPTY:
        return EMPTY
    return _wrap(_map_filter_ne(f, m.t))


def _combine_ne(f, t1: Optional[CanonicalNE], t2: Optional[CanonicalNE]):
    def right_only(b):
        return f(None, b)

    def left_only(a):
        return f(a, None)

    built = []
    stack = [(t1, t2, False)]
    while stack:
        t1, t2, ready = stack.pop()
        if t1 is None:
            built.append(None if t2 is None else _map_filter_ne(right_only, t2))
        elif t2 is None:
            built.append(_map_filter_ne(left_only, t1))
        elif ready:
            r = built.pop()
            l = built.pop()
            x1, x2 = t1.x, t2.x
            built.append(_ne(l, None if x1 is None and x2 is None else f(x1, x2), r))
        else:
            stack.append((t1, t2, True))
            stack.append((t1.r, t2.r, False))
            stack.append((t1.l, t2.l, False))
    return built.pop()


def c_combine(f, m1: CanonicalTree, m2: CanonicalTree) -> CanonicalTree:
    """
    Pointwise combination, f(None, None) must be None. When one operand runs
    out, the other is finished by a single one-sided map_filter pass
    (b -> f(None, b) on the right, a -> f(a, None) on the left).
    """
    return _wrap(_combine_ne(f, _unwrap(m1), _unwrap(m2)))


def c_combine_by_view(f, m1: CanonicalTree, m2: CanonicalTree) -> CanonicalTree:
    """
    combine written with the two-case view only. The second operand is
    re-examined at every step; kept as an independent check on c_combine.
    """
    built = []
    stack = [(m1, m2, None)]
    while stack:
        m1, m2, views = stack.pop()
        if views is None:
            v1 = c_view(m1)
            if v1 is EMPTY_CASE:
                built.append(c_map_filter(lambda b: f(None, b), m2))
                continue
            v2 = c_view(m2)
            if v2 is EMPTY_CASE:
                built.append(c_map_filter(lambda a: f(a, None), m1))
                continue
            stack.append((m1, m2, (v1, v2)))
            stack.append((v1.r, v2.r, None))
            stack.append((v1.l, v2.l, None))
        else:
            v1, v2 = views
            r = built.pop()
            l = built.pop()
            o1, o2 = v1.o, v2.o
            built.append(c_node(l, None if o1 is None and o2 is None else f(o1, o2), r))
    return built.pop()


def c_structural_equal(m1: CanonicalTree, m2: CanonicalTree, value_eq=eq) -> bool:
    """Same forms, same shape, equal values; by canonicity, the same map"""
    if type(m1) is not type(m2):
        return False
    if type(m1) is Empty:
        return True
    stack = [(m1.t, m2.t)]
    while stack:
        t1, t2 = stack.pop()
        if t1 is t2:
            continue
        if type(t1) is not type(t2):
            return False
        if t1.x is not None and not value_eq(t1.x, t2.x):
            return False
        if t1.l is not None:
            stack.append((t1.l, t2.l))
        if t1.r is not None:
            stack.append((t1.r, t2.r))
    return True


structural_equal = c_structural_equal


def c_footprint(m: CanonicalTree) -> Footprint:
    """Live nodes and words; the Nodes wrapper adds 2 words but no node"""
    if m is EMPTY:
        return Footprint()
    nodes = values = 0
    words = m.heap_words
    stack = [m.t]
    while stack:
        t = stack.pop()
        nodes += 1
        words += t.heap_words
        values += t.x is not None
        if t.l is not None:
            stack.append(t.l)
        if t.r is not None:
            stack.append(t.r)
    return Footprint(nodes, words, values, values)


def c_rebuild(bindings: Iterable[Tuple[Positive, Any]]) -> CanonicalTree:
    """Fold c_set over bindings starting from Empty"""
    m = EMPTY
    for k, v in bindings:
        m = c_set(k, v, m)
    return m
