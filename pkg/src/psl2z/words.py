#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/3
# author: clarkmonkey@163.com

""" words
Words over ``a``, ``b`` and ``B`` (= b^-1) in the presentation <a, b | a^2 = b^3 = 1>.
"""

import re
from typing import List, Tuple

from .util import WordError

ALPHABET: str = 'abB'

# b-type letters as exponents mod 3
_exponent = {'b': 1, 'B': 2}
_letter = {1: 'b', 2: 'B'}
_inverse = {'a': 'a', 'b': 'B', 'B': 'b'}
_aliases = re.compile(r'b\^-1|b-')


def letters_of(w: str) -> str:
    """ Maps the accepted input spellings onto the alphabet ``abB`` """
    text: str = _aliases.sub('B', ''.join(w.split())).replace('A', 'a')
    for position, char in enumerate(text):
        if char not in ALPHABET:
            raise WordError(f'illegal character {char!r} at position {position} in {w!r}')
    return text


def normalize(w: str) -> str:
    """ Geodesic normal form: alternates a-letters and b-type letters """
    stack: List[str] = []
    for char in letters_of(w):
        top: str = stack[-1] if stack else ''
        if char == 'a':
            if top == 'a':
                stack.pop()
            else:
                stack.append('a')
        elif top in _exponent:
            stack.pop()
            exponent: int = (_exponent[top] + _exponent[char]) % 3
            if exponent:
                stack.append(_letter[exponent])
        else:
            stack.append(char)
    return ''.join(stack)


def is_geodesic(w: str) -> bool:
    return normalize(w) == w


def inverse(w: str) -> str:
    return ''.join(_inverse[char] for char in reversed(letters_of(w)))


def multiply(*words: str) -> str:
    return normalize(''.join(words))


def power(w: str, k: int) -> str:
    if k < 0:
        return normalize(inverse(w) * -k)
    return normalize(w * k)


def _same_type(x: str, y: str) -> bool:
    return (x == 'a') == (y == 'a')


def is_cyclically_reduced_word(w: str) -> bool:
    return len(w) <= 1 or not _same_type(w[0], w[-1])


def cyclic_reduce(w: str) -> Tuple[str, str]:
    """ Returns ``(conjugator, core)`` with ``w = conjugator . core . conjugator^-1``.

    The core is cyclically reduced and the conjugator has minimal length.
    """
    core: str = normalize(w)
    conjugator: str = ''
    while not is_cyclically_reduced_word(core):
        first, last = core[0], core[-1]
        conjugator += first
        if first == 'a' or _inverse[first] == last:
            core = core[1:-1]
        else:
            # b u b = b (u B) B, and u B is cyclically reduced
            core = core[1:-1] + _inverse[first]
    return conjugator, core


def recompose(conjugator: str, core: str) -> str:
    return normalize(conjugator + core + inverse(conjugator))


def is_infinite_order(w: str) -> bool:
    return len(cyclic_reduce(w)[1]) >= 2


def geodesic_words(length: int) -> List[str]:
    """ Every geodesic word of exactly ``length`` letters, in a fixed order """
    if length == 0:
        return ['']
    found: List[str] = ['a', 'b', 'B']
    for _ in range(length - 1):
        found = [
            w + x for w in found
            for x in (('b', 'B') if w[-1] == 'a' else ('a',))
        ]
    return found


def random_word(length: int, rng) -> str:
    """ A raw (not necessarily geodesic) word of ``length`` uniform letters """
    return ''.join(ALPHABET[rng.below(3)] for _ in range(length))
