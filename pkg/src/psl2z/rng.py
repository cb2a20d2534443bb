#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/6
# author: clarkmonkey@163.com

""" rng
Deterministic random streams on top of numpy's ``SeedSequence``/``PCG64``.

Draws never go through floating point: ``below(k)`` is exact for integers of
any size, which the samplers need for weights that overflow 64 bits.
"""

from typing import List, Sequence, Tuple, TypeVar

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

T = TypeVar('T')

_native_limit: int = 1 << 62
_word_bits: int = 32


class Rng:
    """ A seeded stream; ``child(*key)`` derives independent, reproducible sub-streams """

    def __init__(self, seed: int, key: Tuple[int, ...] = ()) -> None:
        if not isinstance(seed, int) or seed < 0 or seed >= 1 << 64:
            raise ValueError(f'seed must be an unsigned 64-bit integer, got {seed!r}')
        self.seed: int = seed
        self.key: Tuple[int, ...] = tuple(key)
        self._gen: Generator = Generator(PCG64(SeedSequence(seed, spawn_key=self.key)))

    def child(self, *key: int) -> 'Rng':
        return Rng(self.seed, self.key + tuple(key))

    def below(self, k: int) -> int:
        """ Uniform integer in ``[0, k)`` """
        if k <= 0:
            raise ValueError(f'below() needs a positive bound, got {k}')
        if k <= _native_limit:
            return int(self._gen.integers(0, k))
        bits: int = (k - 1).bit_length()
        words: int = -(-bits // _word_bits)
        while True:
            chunk = self._gen.integers(0, 1 << _word_bits, size=words, dtype=np.uint64)
            value: int = 0
            for word in chunk.tolist():
                value = (value << _word_bits) | word
            value >>= words * _word_bits - bits
            if value < k:
                return value

    def coin(self) -> bool:
        return self.below(2) == 1

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def permutation(self, n: int) -> List[int]:
        """ A uniform permutation of ``1..n`` as a list """
        return (self._gen.permutation(n) + 1).tolist()

    def __repr__(self) -> str:
        return f'<Rng seed={self.seed} key={self.key}>'
