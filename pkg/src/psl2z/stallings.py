#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/4
# author: clarkmonkey@163.com

""" stallings
Stallings graphs of finitely generated subgroups: construction by folding,
b-triangle closure and pruning, membership, and generating sets read back
from a graph.
"""

from collections import defaultdict, deque
from typing import DefaultDict, Dict, Iterable, List, Optional, Set, Tuple

from .core import GraphBuilder, LabeledGraph, canonical_relabel
from .util import Label, get_logger
from .words import inverse, letters_of, normalize

logger = get_logger(__name__)


class _Folder:
    """ Multigraph under construction; vertices are merged until a and b are injective """

    def __init__(self) -> None:
        self.root: int = 0
        self.alive: Set[int] = {0}
        self.a: DefaultDict[int, Set[int]] = defaultdict(set)
        self.b_out: DefaultDict[int, Set[int]] = defaultdict(set)
        self.b_in: DefaultDict[int, Set[int]] = defaultdict(set)
        self.folds: int = 0
        self.closures: int = 0

    def new_vertex(self) -> int:
        v: int = max(self.alive) + 1
        self.alive.add(v)
        return v

    def add_a(self, v: int, w: int) -> None:
        self.a[v].add(w)
        self.a[w].add(v)

    def add_b(self, v: int, w: int) -> None:
        self.b_out[v].add(w)
        self.b_in[w].add(v)

    def add_path(self, word: str) -> None:
        if not word:
            return
        current: int = self.root
        for position, letter in enumerate(word):
            target: int = self.root if position == len(word) - 1 else self.new_vertex()
            if letter == 'a':
                self.add_a(current, target)
            elif letter == 'b':
                self.add_b(current, target)
            else:
                self.add_b(target, current)
            current = target

    def merge(self, x: int, y: int) -> None:
        if y == self.root:
            x, y = y, x
        for w in self.a.pop(y, set()):
            if w != y:
                self.a[w].discard(y)
            self.add_a(x, x if w == y else w)
        for w in self.b_out.pop(y, set()):
            if w != y:
                self.b_in[w].discard(y)
            self.add_b(x, x if w == y else w)
        for u in self.b_in.pop(y, set()):
            if u != y:
                self.b_out[u].discard(y)
            self.add_b(x if u == y else u, x)
        self.alive.discard(y)
        self.folds += 1

    def fold_once(self) -> bool:
        for v in sorted(self.alive):
            for table in (self.a, self.b_out, self.b_in):
                targets: Set[int] = table.get(v, set())
                if len(targets) > 1:
                    x, y = sorted(targets)[:2]
                    self.merge(x, y)
                    return True
        return False

    def close_once(self) -> bool:
        """ A b-path v>w>u forces the edge u>v """
        for v in sorted(self.alive):
            for w in list(self.b_out.get(v, ())):
                for u in list(self.b_out.get(w, ())):
                    if v not in self.b_out.get(u, ()):
                        self.add_b(u, v)
                        self.closures += 1
                        return True
        return False

    def prune(self) -> int:
        removed: int = 0
        stack: List[int] = sorted(self.alive - {self.root})
        while stack:
            v: int = stack.pop()
            if v not in self.alive:
                continue
            if self.a.get(v) and (self.b_out.get(v) or self.b_in.get(v)):
                continue
            partners: Set[int] = self.a.pop(v, set())
            heads: Set[int] = self.b_out.pop(v, set())
            tails: Set[int] = self.b_in.pop(v, set())
            for w in partners - {v}:
                self.a[w].discard(v)
            for w in heads - {v}:
                self.b_in[w].discard(v)
            for u in tails - {v}:
                self.b_out[u].discard(v)
            self.alive.discard(v)
            removed += 1
            stack.extend((partners | heads | tails) - {v, self.root})
        return removed

    def freeze(self) -> LabeledGraph:
        builder: GraphBuilder = GraphBuilder(self.alive, root=self.root)
        for v in self.alive:
            for w in self.a.get(v, ()):
                builder.add_a_edge(v, w)
            for w in self.b_out.get(v, ()):
                builder.add_b_edge(v, w)
        return canonical_relabel(builder.freeze())


def build_stallings(gens: Iterable[str]) -> LabeledGraph:
    """ Returns the rooted Stallings graph of the subgroup generated by ``gens`` """
    folder: _Folder = _Folder()
    for word in gens:
        folder.add_path(normalize(word))
    while folder.fold_once() or folder.close_once():
        pass
    removed: int = folder.prune()
    logger.debug(
        'stallings graph: %d vertices after %d folds, %d closures, %d pruned',
        len(folder.alive), folder.folds, folder.closures, removed,
    )
    return folder.freeze()


def trace(g: LabeledGraph, w: str, start: Optional[Label] = None) -> Optional[Label]:
    """ End vertex of the path reading ``w`` from ``start`` (the root by default) """
    v: Optional[Label] = g.root if start is None else start
    for letter in letters_of(w):
        if v is None:
            return None
        if letter == 'a':
            v = g.a(v)
        elif letter == 'b':
            v = g.b(v)
        else:
            v = g.b_inv(v)
    return v


def member(g: LabeledGraph, w: str) -> bool:
    return trace(g, normalize(w)) == g.root


def read_generators(g: LabeledGraph) -> List[str]:
    """ One generator per edge outside a breadth-first spanning tree """
    path: Dict[Label, str] = {g.root: ''}
    tree: Set[Tuple[str, Label, Label]] = set()
    queue: deque = deque([g.root])
    while queue:
        v: Label = queue.popleft()
        steps: List[Tuple[str, Optional[Label], Tuple[str, Label, Label]]] = [
            ('a', g.a(v), ('a',) + tuple(sorted((v, g.a(v) or v)))),
            ('b', g.b(v), ('b', v, g.b(v) or v)),
            ('B', g.b_inv(v), ('b', g.b_inv(v) or v, v)),
        ]
        for letter, w, key in steps:
            if w is not None and w not in path:
                path[w] = path[v] + letter
                tree.add(key)
                queue.append(w)

    gens: List[str] = []
    for v, w in sorted(g.a_map.items()):
        if v <= w and ('a', v, w) not in tree:
            gens.append(normalize(path[v] + 'a' + inverse(path[w])))
    for v, w in sorted(g.b_map.items()):
        if ('b', v, w) not in tree:
            gens.append(normalize(path[v] + 'b' + inverse(path[w])))
    return [w for w in gens if w]


def is_finite_index(g: LabeledGraph) -> bool:
    """ Every vertex, root included, has an a-edge and lies on a b-loop or b-triangle """
    return all(
        g.a_adjacent(v) and g.b_kind(v) in ('loop', 'triangle')
        for v in g.vertices
    )


def index(g: LabeledGraph) -> Optional[int]:
    """ Index of the subgroup, None when it is infinite """
    return g.n if is_finite_index(g) else None


def is_free(g: LabeledGraph) -> bool:
    """ Torsion-free: no a-loop and no b-loop """
    return not g.a_loops() and not g.b_loops()
