#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/8
# author: clarkmonkey@163.com

""" enumeration
Brute-force enumeration of small labeled graphs, the ground truth for the
counting and sampling code. Streams are generators: nothing is materialized
beyond the a- and b-structures of one size.
"""

from collections import Counter
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence

from .core import CombType, LabeledGraph, comb_type, iso_type, trivial_graph
from .util import Label, get_logger

logger = get_logger(__name__)

Structure = Dict[Label, Label]


def involutions(labels: Sequence[Label], fixed: Optional[int] = None) -> Iterator[Structure]:
    """ Involutions of ``labels`` (fixed points map to themselves), optionally with ``fixed`` fixed points """
    if not labels:
        if not fixed:
            yield {}
        return
    first, rest = labels[0], labels[1:]
    if fixed is None or fixed > 0:
        for tail in involutions(rest, None if fixed is None else fixed - 1):
            tail[first] = first
            yield tail
    for i, partner in enumerate(rest):
        for tail in involutions(rest[:i] + rest[i + 1:], fixed):
            tail[first] = partner
            tail[partner] = first
            yield tail


def b_structures(labels: Sequence[Label],
                 loops: Optional[int] = None,
                 edges: Optional[int] = None,
                 ) -> Iterator[Structure]:
    """ b-maps on ``labels``: loops, directed isolated edges and oriented triangles """
    if not labels:
        if not loops and not edges:
            yield {}
        return
    if loops is not None and edges is not None and loops + 2 * edges > len(labels):
        return
    first, rest = labels[0], labels[1:]
    if loops is None or loops > 0:
        for tail in b_structures(rest, None if loops is None else loops - 1, edges):
            tail[first] = first
            yield tail
    if edges is None or edges > 0:
        fewer: Optional[int] = None if edges is None else edges - 1
        for i, other in enumerate(rest):
            remaining: Sequence[Label] = rest[:i] + rest[i + 1:]
            for tail in b_structures(remaining, loops, fewer):
                yield {**tail, first: other}
                yield {**tail, other: first}
    for i, x in enumerate(rest):
        for j in range(i + 1, len(rest)):
            y: Label = rest[j]
            remaining = rest[:i] + rest[i + 1:j] + rest[j + 1:]
            for tail in b_structures(remaining, loops, edges):
                yield {**tail, first: x, x: y, y: first}
                yield {**tail, first: y, y: x, x: first}


def _connected(n: int, a: Structure, b: Structure) -> bool:
    parent: List[int] = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components: int = n
    for table in (a, b):
        for v, w in table.items():
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[rv] = rw
                components -= 1
    return components == 1


def enum_cyclically_reduced(n: int, ctype: Optional[Sequence[int]] = None) -> Iterator[LabeledGraph]:
    """ Every labeled cyclically reduced graph on ``{1..n}`` exactly once.

    With ``ctype`` only graphs of that combinatorial type are produced.
    """
    if n < 1:
        raise ValueError(f'enumeration needs n >= 1, got {n}')
    labels: List[Label] = list(range(1, n + 1))
    fixed = loops = edges = None
    if ctype is not None:
        tau: CombType = CombType(*ctype)
        if tau.n != n:
            return
        fixed, loops, edges = tau.l2, tau.l3, tau.k3
    bs: List[Structure] = list(b_structures(labels, loops, edges))
    logger.debug('enumerating size %d over %d b-structures', n, len(bs))
    for a in involutions(labels, fixed):
        for b in bs:
            if _connected(n, a, b):
                yield LabeledGraph(labels, a, b)


def rootings(g: LabeledGraph) -> Iterator[LabeledGraph]:
    """ Rooted graphs whose completion is ``g``: plain rootings, then loop deletions """
    for v in g.vertices:
        yield g.edit().set_root(v).freeze()
    for v in g.a_loops():
        yield g.edit().remove_a(v).set_root(v).freeze()
    for v in g.b_loops():
        yield g.edit().remove_b_out(v).set_root(v).freeze()


def enum_rooted(n: int, include_trivial: bool = False) -> Iterator[LabeledGraph]:
    """ Every labeled rooted reduced graph on ``{1..n}`` exactly once """
    if n == 1 and include_trivial:
        yield trivial_graph()
    for g in enum_cyclically_reduced(n):
        yield from rootings(g)


def tally(graphs: Iterable[LabeledGraph], key: Callable[[LabeledGraph], object] = comb_type) -> Counter:
    return Counter(key(g) for g in graphs)


def tally_by_type(graphs: Iterable[LabeledGraph]) -> Counter:
    return tally(graphs, comb_type)


def tally_by_iso(graphs: Iterable[LabeledGraph]) -> Counter:
    return tally(graphs, iso_type)
