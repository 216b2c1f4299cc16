#!/usr/bin/env python3

"""
Ground-truth finite map: a sorted tuple of (key, value) bindings, searched
by bisection and copied on every update. Its only job is to be obviously right.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Any, Callable, Optional, Tuple

from positive import Positive

Binding = Tuple[Positive, Any]


@dataclass(frozen=True)
class MapOracle:
    """
    Class to represent a map as bindings with strictly increasing keys
    """

    bindings: Tuple[Binding, ...] = ()


EMPTY_ORACLE = MapOracle()


def oracle_empty() -> MapOracle:
    return EMPTY_ORACLE


def _key_value(binding: Binding) -> int:
    return binding[0].value


def _find(k: Positive, m: MapOracle) -> Tuple[int, bool]:
    """Insertion index of k in m's bindings, and whether k is bound there"""
    i = bisect_left(m.bindings, k.value, key=_key_value)
    return i, i < len(m.bindings) and m.bindings[i][0] == k


def oracle_get(k: Positive, m: MapOracle) -> Optional[Any]:
    i, bound = _find(k, m)
    return m.bindings[i][1] if bound else None


def oracle_set(k: Positive, v: Any, m: MapOracle) -> MapOracle:
    i, bound = _find(k, m)
    return MapOracle(m.bindings[:i] + ((k, v),) + m.bindings[i + bound:])


def oracle_remove(k: Positive, m: MapOracle) -> MapOracle:
    i, bound = _find(k, m)
    if not bound:
        return m
    return MapOracle(m.bindings[:i] + m.bindings[i + 1:])


def oracle_elements(m: MapOracle) -> list:
    return list(m.bindings)


def oracle_map_filter(f: Callable[[Any], Optional[Any]], m: MapOracle) -> MapOracle:
    out = []
    for key, value in m.bindings:
        new = f(value)
        if new is not None:
            out.append((key, new))
    return MapOracle(tuple(out))


def oracle_combine(f, m1: MapOracle, m2: MapOracle) -> MapOracle:
    left, right = dict(m1.bindings), dict(m2.bindings)
    out = []
    for key in sorted(left.keys() | right.keys(), key=int):
        value = f(left.get(key), right.get(key))
        if value is not None:
            out.append((key, value))
    return MapOracle(tuple(out))


def oracle_structural_equal(m1: MapOracle, m2: MapOracle, value_eq=None) -> bool:
    if value_eq is None:
        return m1 == m2
    if len(m1.bindings) != len(m2.bindings):
        return False
    return all(
        k1 == k2 and value_eq(v1, v2)
        for (k1, v1), (k2, v2) in zip(m1.bindings, m2.bindings)
    )
