#!/usr/bin/env python3

"""
Sets of positive integers stored as difference lists: the first element
followed by the gap to each next element. {1, 4, 9, 11} is [1, 3, 5, 2].
Every gap is a Positive, so each set has exactly one such list.
"""

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, List, Tuple

from errors import DomainError
from positive import Positive


@dataclass(frozen=True)
class DiffSet:
    gaps: Tuple[Positive, ...] = ()

    def __len__(self):
        return len(self.gaps)


def _check(x: int) -> int:
    if isinstance(x, bool) or not isinstance(x, int) or x < 1:
        raise DomainError(f"set elements are positive integers, got {x!r}")
    return x


def ds_of_elements(xs: Iterable[int]) -> DiffSet:
    """Any order, duplicates allowed"""
    ordered = sorted({_check(x) for x in xs})
    previous = 0
    gaps = []
    for x in ordered:
        gaps.append(Positive(x - previous))
        previous = x
    return DiffSet(tuple(gaps))


def ds_elements(s: DiffSet) -> List[int]:
    return list(accumulate(g.value for g in s.gaps))


def ds_member(x: int, s: DiffSet) -> bool:
    _check(x)
    total = 0
    for g in s.gaps:
        total += g.value
        if total >= x:
            return total == x
    return False


def ds_insert(x: int, s: DiffSet) -> DiffSet:
    _check(x)
    if ds_member(x, s):
        return s
    return ds_of_elements(ds_elements(s) + [x])


def ds_union(s1: DiffSet, s2: DiffSet) -> DiffSet:
    return ds_of_elements(ds_elements(s1) + ds_elements(s2))


def gap_bits(s: DiffSet) -> int:
    """Total bit length of the stored gaps"""
    return sum(g.value.bit_length() for g in s.gaps)


def element_bits(s: DiffSet) -> int:
    """Total bit length the plain sorted elements would take"""
    return sum(x.bit_length() for x in ds_elements(s))
