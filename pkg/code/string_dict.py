#!/usr/bin/env python3

"""
Dictionaries keyed by byte strings: encode_string composed with any trie.

Keys are converted on every call; elements come back in encoded-key
order (little-endian bytes, so not lexicographic).
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Tuple

from mapkit import FiniteMap
from positive import decode_string, encode_string
from registry import CANONICAL


@dataclass(frozen=True, eq=False)
class StringDict:
    """
    Class to represent a string-keyed map over a backing trie
    """

    backing: Any
    impl: FiniteMap

    def __eq__(self, other):
        if not isinstance(other, StringDict) or other.impl is not self.impl:
            return NotImplemented
        return self.impl.structural_equal(self.backing, other.backing)


def d_empty(impl: FiniteMap = CANONICAL) -> StringDict:
    return StringDict(impl.empty(), impl)


def d_get(s: bytes, d: StringDict) -> Optional[Any]:
    return d.impl.get(encode_string(s), d.backing)


def d_set(s: bytes, v: Any, d: StringDict) -> StringDict:
    return StringDict(d.impl.set(encode_string(s), v, d.backing), d.impl)


def d_remove(s: bytes, d: StringDict) -> StringDict:
    return StringDict(d.impl.remove(encode_string(s), d.backing), d.impl)


def d_elements(d: StringDict) -> List[Tuple[bytes, Any]]:
    return [(decode_string(k), v) for k, v in d.impl.elements(d.backing)]
