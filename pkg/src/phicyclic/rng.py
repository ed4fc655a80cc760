"""Deterministic, portable random stream used for all key and message sampling.

The stream is pinned so test vectors can be replayed by any implementation:

* seed: unsigned 64-bit integer, encoded as 8 bytes little-endian.
* block i (i = 0, 1, 2, ...): SHA-256(b"phicyclic/rng/v1" || seed_le64 || i_le64).
* blocks are concatenated into one byte stream and consumed 4 bytes at a
  time as little-endian uint32 words.
* below(k): k == 1 returns 0 without consuming; otherwise draw words until
  w < 2^32 - (2^32 mod k) and return w mod k.
* shuffle(xs): Fisher-Yates from the end, for i = len-1 down to 1,
  j = below(i + 1), swap xs[i] and xs[j].
"""

from __future__ import annotations

import hashlib

DOMAIN_TAG = b"phicyclic/rng/v1"
_U32 = 1 << 32


class SeededStream:
    def __init__(self, seed):
        if not isinstance(seed, int) or not 0 <= seed < 1 << 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed
        self._prefix = DOMAIN_TAG + seed.to_bytes(8, "little")
        self._counter = 0
        self._buf = b""

    def _refill(self):
        block = hashlib.sha256(self._prefix + self._counter.to_bytes(8, "little")).digest()
        self._counter += 1
        self._buf += block

    def next_u32(self):
        if len(self._buf) < 4:
            self._refill()
        word, self._buf = self._buf[:4], self._buf[4:]
        return int.from_bytes(word, "little")

    def below(self, k):
        if k < 1:
            raise ValueError("below() needs k >= 1")
        if k == 1:
            return 0
        limit = _U32 - _U32 % k
        while True:
            w = self.next_u32()
            if w < limit:
                return w % k

    def shuffle(self, xs):
        for i in range(len(xs) - 1, 0, -1):
            j = self.below(i + 1)
            xs[i], xs[j] = xs[j], xs[i]
        return xs
