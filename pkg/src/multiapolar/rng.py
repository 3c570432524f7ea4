"""Deterministic counter-based randomness.

Every random draw in the library flows from a single integer seed through
SHA-256 of ``(seed, stream path, counter)``.  There is no global RNG state,
streams with distinct paths are independent, and the output is identical
across platforms, Python versions, and thread counts.  Per-trial streams are
derived with :meth:`CounterRng.spawn`.
"""

from __future__ import annotations

import hashlib
from fractions import Fraction

_WORD_BYTES = 8
_WORD_MAX = 1 << 64


class CounterRng:
    """A stream of uniform values keyed by (seed, path), advanced by counter."""

    def __init__(self, seed: int, *path: int):
        self._prefix = ("%d:" % seed + ",".join(str(p) for p in path)).encode()
        self._counter = 0
        self._words: list[int] = []

    def spawn(self, *subpath: int) -> "CounterRng":
        """Independent child stream; used to give each trial its own stream."""
        child = object.__new__(CounterRng)
        child._prefix = self._prefix + b"/" + ",".join(str(p) for p in subpath).encode()
        child._counter = 0
        child._words = []
        return child

    def _next_word(self) -> int:
        if not self._words:
            block = hashlib.sha256(self._prefix + b"#%d" % self._counter).digest()
            self._counter += 1
            self._words = [
                int.from_bytes(block[i : i + _WORD_BYTES], "big")
                for i in range(0, len(block), _WORD_BYTES)
            ]
        return self._words.pop()

    def integer(self, bound: int) -> int:
        """Uniform integer in [0, bound), by rejection sampling on 64-bit words."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (_WORD_MAX // bound) * bound
        while True:
            w = self._next_word()
            if w < limit:
                return w % bound

    def field_element(self, field) -> object:
        """Uniform element of a prime field; over the rationals, a uniform
        integer in [0, 2^31 - 1) as an exact rational."""
        if field.prime is not None:
            return self.integer(field.prime)
        return Fraction(self.integer((1 << 31) - 1))

    def nonzero_field_element(self, field) -> object:
        while True:
            x = self.field_element(field)
            if x != 0:
                return x

    def vector(self, field, n: int) -> tuple:
        return tuple(self.field_element(field) for _ in range(n))

    def nonzero_vector(self, field, n: int) -> tuple:
        """A vector that is not identically zero (resampled if needed)."""
        while True:
            v = self.vector(field, n)
            if any(x != 0 for x in v):
                return v
