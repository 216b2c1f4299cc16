#!/usr/bin/env python3

"""
Exceptions raised by the trie library, the law kit and the bench harness
"""


class TrieError(Exception):
    """Base class for every error raised by this package"""


class DomainError(TrieError, ValueError):
    """A value outside the domain of positive numbers (zero, negatives, non-integers)"""


class MalformedEncodingError(TrieError, ValueError):
    """A positive number that is not the encoding of any byte string"""


class PreconditionError(TrieError, ValueError):
    """An operation or checker was called with arguments violating its precondition"""


class BenchmarkCorrectnessError(TrieError, AssertionError):
    """A correctness assertion embedded in a benchmark run failed"""
