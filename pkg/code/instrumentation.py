#!/usr/bin/env python3

"""
Allocation and traversal counters used by the bench harness and the tests.

Counting is switched on per block with `counting_allocations`, which wraps
the __init__ of the given node classes and restores it on exit; outside the
block node construction runs the plain dataclass __init__ with no counting
cost at all. Counting is only meaningful single-threaded.
"""

from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable


@dataclass
class AllocationCounter:
    """
    Class to count trie-node constructions while instrumentation is enabled
    """

    constructions: int = 0
    nodes: int = 0
    words: int = 0
    by_class: Counter = field(default_factory=Counter)

    def record(self, obj) -> None:
        self.constructions += 1
        if obj.is_trie_node:
            self.nodes += 1
        self.words += obj.heap_words
        self.by_class[type(obj).__name__] += 1


@dataclass
class VisitCounter:
    """Number of nodes a traversal touched"""

    visits: int = 0


@dataclass(frozen=True)
class Footprint:
    """
    Live size of one map value
    """

    nodes: int = 0
    words: int = 0
    payload_slots: int = 0
    values: int = 0

    def __add__(self, other: "Footprint") -> "Footprint":
        return Footprint(
            self.nodes + other.nodes,
            self.words + other.words,
            self.payload_slots + other.payload_slots,
            self.values + other.values,
        )


def _counting_init(original, counter):
    def __init__(self, *args, **kwargs):
        original(self, *args, **kwargs)
        counter.record(self)

    return __init__


@contextmanager
def counting_allocations(counter: AllocationCounter, classes: Iterable[type]):
    """Count every construction of `classes` into `counter` inside the block"""
    saved = []
    try:
        for cls in classes:
            original = cls.__dict__["__init__"]
            saved.append((cls, original))
            cls.__init__ = _counting_init(original, counter)
        yield counter
    finally:
        for cls, original in reversed(saved):
            cls.__init__ = original
