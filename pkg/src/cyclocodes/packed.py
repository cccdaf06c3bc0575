"""Vector arithmetic backends for batches of codewords.

A backend stores a batch of N length-n vectors over GF(q) as an array of
shape (N, *shape). Packed backends exist for q = 2, 3, 4:

* GF(2): one plane of uint64 words, bit i of the vector in word i // 64.
* GF(3): two planes, (x == 1) and (x == 2).
* GF(4): two planes holding a0 and a1 of a0 + a1*w, w^2 = w + 1.

``DenseBackend`` handles any q with one uint8 per coordinate and table
lookups; it doubles as the reference the packed backends are tested against.
All operations broadcast over leading axes.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf import FieldCtx, field_create, prime_power

__all__ = [
    "Backend",
    "DenseBackend",
    "GF2Backend",
    "GF3Backend",
    "GF4Backend",
    "field_tables",
    "get_backend",
]

_popcount = np.bitwise_count


@lru_cache(maxsize=None)
def field_tables(q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(add, mul, neg, inv) lookup tables over GF(q) integer codes."""
    ctx = field_create(*prime_power(q))
    add = np.zeros((q, q), dtype=np.uint8)
    mul = np.zeros((q, q), dtype=np.uint8)
    for a in range(q):
        for b in range(q):
            add[a, b] = ctx.add(a, b)
            mul[a, b] = ctx.mul(a, b)
    neg = np.array([ctx.neg(a) for a in range(q)], dtype=np.uint8)
    inv = np.array([0] + [ctx.inv(a) for a in range(1, q)], dtype=np.uint8)
    for t in (add, mul, neg, inv):
        t.setflags(write=False)
    return add, mul, neg, inv


class Backend:
    q: int
    n: int
    shape: tuple[int, ...]
    dtype = np.uint64

    @property
    def ctx(self) -> FieldCtx:
        return field_create(*prime_power(self.q))

    @property
    def scalars(self) -> list[int]:
        return list(range(1, self.q))

    def zeros(self, count: int) -> np.ndarray:
        return np.zeros((count, *self.shape), dtype=self.dtype)

    # to be provided by subclasses
    def pack(self, dense: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def unpack(self, packed: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def scale(self, c: int, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def weight(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def odd_like(self, a: np.ndarray) -> np.ndarray:
        raise NotImplementedError


def _words(n: int) -> int:
    return (n + 63) // 64


def _pack_bits(bits: np.ndarray, n: int) -> np.ndarray:
    """Pack a (..., n) boolean array into (..., words) uint64, LSB first."""
    w = _words(n)
    padded = np.zeros((*bits.shape[:-1], w * 64), dtype=np.uint8)
    padded[..., :n] = bits
    as_bytes = np.packbits(padded, axis=-1, bitorder="little")
    return as_bytes.view(np.uint64).reshape(*bits.shape[:-1], w)


def _unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    as_bytes = np.ascontiguousarray(words).view(np.uint8)
    bits = np.unpackbits(as_bytes, axis=-1, bitorder="little")
    return bits[..., :n]


class GF2Backend(Backend):
    q = 2

    def __init__(self, n: int):
        self.n = n
        self.shape = (_words(n),)

    def pack(self, dense):
        return _pack_bits(np.asarray(dense) != 0, self.n)

    def unpack(self, packed):
        return _unpack_bits(packed, self.n)

    def add(self, a, b):
        return a ^ b

    def scale(self, c, a):
        return a if c % 2 else np.zeros_like(a)

    def weight(self, a):
        return _popcount(a).sum(axis=-1, dtype=np.int64)

    def odd_like(self, a):
        return (self.weight(a) & 1).astype(bool)


class GF3Backend(Backend):
    q = 3

    def __init__(self, n: int):
        self.n = n
        self.shape = (2, _words(n))

    def pack(self, dense):
        d = np.asarray(dense)
        return np.stack([_pack_bits(d == 1, self.n), _pack_bits(d == 2, self.n)], axis=-2)

    def unpack(self, packed):
        ones = _unpack_bits(packed[..., 0, :], self.n)
        twos = _unpack_bits(packed[..., 1, :], self.n)
        return ones + 2 * twos

    def add(self, a, b):
        a1, a2 = a[..., 0, :], a[..., 1, :]
        b1, b2 = b[..., 0, :], b[..., 1, :]
        t = (a1 | b2) ^ (a2 | b1)
        return np.stack([(a2 | b2) ^ t, (a1 | b1) ^ t], axis=-2)

    def scale(self, c, a):
        c %= 3
        if c == 1:
            return a
        if c == 2:
            return a[..., ::-1, :]
        return np.zeros_like(a)

    def weight(self, a):
        return _popcount(a[..., 0, :] | a[..., 1, :]).sum(axis=-1, dtype=np.int64)

    def odd_like(self, a):
        ones = _popcount(a[..., 0, :]).sum(axis=-1, dtype=np.int64)
        twos = _popcount(a[..., 1, :]).sum(axis=-1, dtype=np.int64)
        return (ones - twos) % 3 != 0


class GF4Backend(Backend):
    """Elements a0 + a1*w with integer code a0 + 2*a1."""

    q = 4

    def __init__(self, n: int):
        self.n = n
        self.shape = (2, _words(n))

    def pack(self, dense):
        d = np.asarray(dense)
        return np.stack([_pack_bits(d & 1, self.n), _pack_bits(d >> 1 & 1, self.n)], axis=-2)

    def unpack(self, packed):
        lo = _unpack_bits(packed[..., 0, :], self.n)
        hi = _unpack_bits(packed[..., 1, :], self.n)
        return lo + 2 * hi

    def add(self, a, b):
        return a ^ b

    def scale(self, c, a):
        a0, a1 = a[..., 0, :], a[..., 1, :]
        if c == 1:
            return a
        if c == 2:  # w
            return np.stack([a1, a0 ^ a1], axis=-2)
        if c == 3:  # w^2 = w + 1
            return np.stack([a0 ^ a1, a0], axis=-2)
        return np.zeros_like(a)

    def weight(self, a):
        return _popcount(a[..., 0, :] | a[..., 1, :]).sum(axis=-1, dtype=np.int64)

    def odd_like(self, a):
        p0 = _popcount(a[..., 0, :]).sum(axis=-1, dtype=np.int64)
        p1 = _popcount(a[..., 1, :]).sum(axis=-1, dtype=np.int64)
        return ((p0 | p1) & 1).astype(bool)


class DenseBackend(Backend):
    """One uint8 field code per coordinate; works for any q < 256."""

    dtype = np.uint8

    def __init__(self, n: int, q: int):
        self.n = n
        self.q = q
        self.shape = (n,)
        self.add_t, self.mul_t, self.neg_t, self.inv_t = field_tables(q)
        self._prime = prime_power(q)[1] == 1

    def pack(self, dense):
        return np.asarray(dense, dtype=np.uint8)

    def unpack(self, packed):
        return np.asarray(packed, dtype=np.uint8)

    def add(self, a, b):
        if self._prime:
            return ((a.astype(np.uint16) + b) % self.q).astype(np.uint8)
        return self.add_t[a, b]

    def scale(self, c, a):
        return self.mul_t[c][a]

    def weight(self, a):
        return np.count_nonzero(a, axis=-1).astype(np.int64)

    def coordinate_sum(self, a):
        if self._prime:
            return (a.astype(np.int64).sum(axis=-1) % self.q).astype(np.uint8)
        acc = np.zeros(a.shape[:-1], dtype=np.uint8)
        for i in range(self.n):
            acc = self.add_t[acc, a[..., i]]
        return acc

    def odd_like(self, a):
        return self.coordinate_sum(a) != 0


def get_backend(n: int, q: int, dense: bool = False) -> Backend:
    if not dense:
        if q == 2:
            return GF2Backend(n)
        if q == 3:
            return GF3Backend(n)
        if q == 4:
            return GF4Backend(n)
    return DenseBackend(n, q)
