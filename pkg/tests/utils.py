#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/13
# author: clarkmonkey@163.com

import random
from typing import Iterable, List, Optional, Tuple

from psl2z.codec import GRAPH_FORMAT_VERSION, parse_text
from psl2z.core import LabeledGraph
from psl2z.stallings import trace
from psl2z.words import (
    geodesic_words, inverse, is_cyclically_reduced_word, is_infinite_order, multiply,
)

# generating sets of the three example subgroups
GENS_H: List[str] = ['abaB', 'babab']
GENS_K: List[str] = ['abab', 'babaB']
GENS_L: List[str] = [
    'BaBabab',
    'BababaBab',
    'abaBabaB',
    'babaBabababaBa',
    'abababababababab' + 'aBa',
]


def graph(body: str, n: int, root: Optional[int] = None) -> LabeledGraph:
    """ Builds a graph from the body lines of the text format """
    lines: List[str] = [GRAPH_FORMAT_VERSION, f'n {n}', f'root {"none" if root is None else root}']
    lines.extend(line.strip() for line in body.strip().splitlines())
    return parse_text('\n'.join(lines) + '\n')


def rand_word(_min: int = 1, _max: int = 8) -> str:
    return ''.join(random.choice('abB') for _ in range(random.randint(_min, _max)))


def rand_products(gens: List[str], count: int, _max: int = 4) -> Iterable[str]:
    """ Random products of at most ``_max`` generators and their inverses """
    pool: List[str] = gens + [inverse(w) for w in gens]
    for _ in range(count):
        yield multiply(*(random.choice(pool) for _ in range(random.randint(1, _max))))


def cyclic_words(max_length: int) -> List[str]:
    """ Cyclically reduced words of infinite order, up to ``max_length`` letters """
    return [
        w for length in range(2, max_length + 1) for w in geodesic_words(length)
        if is_cyclically_reduced_word(w) and is_infinite_order(w)
    ]


def common_loop(g: LabeledGraph, words: List[str]) -> Optional[Tuple[str, int, int]]:
    """ Brute-force search for a word labeling loops at two distinct vertices """
    for w in words:
        closing: List[int] = [v for v in g.vertices if trace(g, w, v) == v]
        if len(closing) >= 2:
            return w, closing[0], closing[1]
    return None
