#!/usr/bin/env python3

"""
Binary positive numbers, the key type of every map in this package.

A Positive is a bit path under an implicit leading 1:
xH is 1, xO(p) is 2p and xI(p) is 2p + 1. The value is kept as a
Python int, so the bit path is read with shifts (least significant bit
first, which is also the order a trie descends in).
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

from errors import DomainError, MalformedEncodingError


@dataclass(frozen=True, order=True, slots=True)
class Positive:
    """
    Class to represent a binary positive integer
    """

    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise DomainError(f"positive numbers are integers, got {self.value!r}")
        if self.value < 1:
            raise DomainError(f"{self.value} is not a positive number")

    @property
    def bit_length(self) -> int:
        """Number of bits below the leading 1 (constructor count minus one)"""
        return self.value.bit_length() - 1

    def bits(self) -> Iterator[int]:
        """Bits of the path, least significant first, terminal 1 excluded"""
        v = self.value
        while v != 1:
            yield v & 1
            v >>= 1

    def constructor_notation(self) -> str:
        """Render as nested constructors, e.g. 13 -> 'xI (xO (xI xH))'"""
        names = ["xI" if bit else "xO" for bit in self.bits()]
        text = "xH"
        for i, name in enumerate(reversed(names)):
            text = f"{name} {text}" if i == 0 else f"{name} ({text})"
        return text

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Positive({self.value})"


class Ordering(IntEnum):
    """Result of compare"""

    LESS = -1
    EQUAL = 0
    GREATER = 1


xH = Positive(1)


def xO(p: Positive) -> Positive:
    """Prepend a 0 bit: value 2p"""
    return Positive(p.value << 1)


def xI(p: Positive) -> Positive:
    """Prepend a 1 bit: value 2p + 1"""
    return Positive((p.value << 1) | 1)


def from_integer(n: int) -> Positive:
    """The unique Positive whose value is n (n >= 1)"""
    return Positive(n)


def to_integer(p: Positive) -> int:
    return p.value


def compare(a: Positive, b: Positive) -> Ordering:
    if a.value < b.value:
        return Ordering.LESS
    if a.value > b.value:
        return Ordering.GREATER
    return Ordering.EQUAL


def reverse(p: Positive) -> Positive:
    """Reverse the constructor sequence above xH, e.g. xI(xI(xO xH)) -> xO(xI(xI xH))"""
    v = p.value
    out = 1
    while v != 1:
        out = (out << 1) | (v & 1)
        v >>= 1
    return Positive(out)


def encode_string(s: bytes) -> Positive:
    """
    Encode a byte string as a Positive: byte i fills bits 8i..8i+7, least
    significant bit of the byte first, and the implicit leading 1 terminates it.
    Strings sharing a prefix share a path near the root of a trie.
    """
    if isinstance(s, str):
        raise TypeError("encode_string takes bytes; encode text first")
    return Positive(int.from_bytes(s, "little") | (1 << (8 * len(s))))


def decode_string(p: Positive) -> bytes:
    """Exact inverse of encode_string"""
    nbits = p.bit_length
    if nbits % 8:
        raise MalformedEncodingError(
            f"{p!r} carries {nbits} bits, not a whole number of bytes"
        )
    n = nbits // 8
    return (p.value ^ (1 << nbits)).to_bytes(n, "little")
