#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/3
# author: clarkmonkey@163.com

""" codec
Line-oriented text format for graphs.

    psl2z-graph v1
    n 2
    root none
    aloop 1 2
    bedge 1>2

Keys are ``n``, ``root``, ``labels`` (only for quasi-labeled graphs),
``aloop``, ``a``, ``bloop``, ``bedge`` and ``btri``; ``#`` starts a comment.
Emission is canonical: empty lines are skipped and items are sorted.
"""

from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .core import GraphBuilder, LabeledGraph, check
from .util import GraphParseError, Label

GRAPH_FORMAT_VERSION: str = 'psl2z-graph v1'


def emit_text(g: LabeledGraph) -> str:
    lines: List[str] = [
        GRAPH_FORMAT_VERSION,
        f'n {g.n}',
        f'root {"none" if g.root is None else g.root}',
    ]
    if g.vertices != tuple(range(1, g.n + 1)):
        lines.append('labels ' + ' '.join(map(str, g.vertices)))

    body: List[Tuple[str, List[str]]] = [
        ('aloop', [str(v) for v in g.a_loops()]),
        ('a', [f'{v}-{w}' for v, w in g.a_edges()]),
        ('bloop', [str(v) for v in g.b_loops()]),
        ('bedge', [f'{v}>{w}' for v, w in g.b_edges()]),
        ('btri', ['>'.join(map(str, t)) for t in g.b_triangles()]),
    ]
    for key, items in body:
        if items:
            lines.append(key + ' ' + ' '.join(items))
    return '\n'.join(lines) + '\n'


def emit_many(graphs: Iterable[LabeledGraph]) -> str:
    """ Records separated by a blank line """
    return '\n'.join(emit_text(g) for g in graphs)


def _label(token: str, lineno: int) -> Label:
    try:
        value: int = int(token)
    except ValueError:
        raise GraphParseError(lineno, f'expected a vertex label, got {token!r}') from None
    if value < 1:
        raise GraphParseError(lineno, f'labels are positive integers, got {value}')
    return value


def _chain(token: str, size: int, sep: str, lineno: int) -> List[Label]:
    parts: List[str] = token.split(sep)
    if len(parts) != size:
        raise GraphParseError(lineno, f'malformed item {token!r}')
    return [_label(part, lineno) for part in parts]


class _Reader:

    def __init__(self) -> None:
        self.builder: GraphBuilder = GraphBuilder()
        self.n: Optional[int] = None
        self.root: Optional[Label] = None
        self.labels: Optional[List[Label]] = None
        self.seen_root: bool = False

    def claim(self, table: Dict[Label, Label], v: Label, letter: str, lineno: int) -> None:
        if v in table:
            raise GraphParseError(lineno, f'vertex {v} already has an outgoing {letter}-edge')

    def feed(self, key: str, items: List[str], lineno: int) -> None:
        builder: GraphBuilder = self.builder
        if key == 'n':
            if self.n is not None or len(items) != 1:
                raise GraphParseError(lineno, 'expected a single "n <int>" line')
            self.n = _label(items[0], lineno)
        elif key == 'root':
            if self.seen_root or len(items) != 1:
                raise GraphParseError(lineno, 'expected a single "root <int|none>" line')
            self.seen_root = True
            self.root = None if items[0] == 'none' else _label(items[0], lineno)
        elif key == 'labels':
            self.labels = [_label(item, lineno) for item in items]
        elif key == 'aloop':
            for item in items:
                v: Label = _label(item, lineno)
                self.claim(builder.a, v, 'a', lineno)
                builder.add_a_loop(v)
        elif key == 'a':
            for item in items:
                v, w = _chain(item, 2, '-', lineno)
                self.claim(builder.a, v, 'a', lineno)
                self.claim(builder.a, w, 'a', lineno)
                builder.add_a_edge(v, w)
        elif key == 'bloop':
            for item in items:
                v = _label(item, lineno)
                self.claim(builder.b, v, 'b', lineno)
                builder.add_b_loop(v)
        elif key == 'bedge':
            for item in items:
                v, w = _chain(item, 2, '>', lineno)
                self.claim(builder.b, v, 'b', lineno)
                builder.add_b_edge(v, w)
        elif key == 'btri':
            for item in items:
                chain: List[Label] = _chain(item, 3, '>', lineno)
                for v in chain:
                    self.claim(builder.b, v, 'b', lineno)
                builder.add_b_triangle(*chain)
        else:
            raise GraphParseError(lineno, f'unknown key {key!r}')

    def finish(self, lineno: int) -> LabeledGraph:
        if self.n is None:
            raise GraphParseError(lineno, 'missing "n" line')
        if not self.seen_root:
            raise GraphParseError(lineno, 'missing "root" line')
        vertices: List[Label] = self.labels if self.labels is not None else list(range(1, self.n + 1))
        if len(set(vertices)) != self.n:
            raise GraphParseError(lineno, f'"labels" lists {len(set(vertices))} vertices, n is {self.n}')
        # edges or a root outside the declared labels are reported by validate
        return check(LabeledGraph(vertices, self.builder.a, self.builder.b, self.root))


def _records(text: str) -> Iterator[Tuple[int, List[Tuple[int, str, List[str]]]]]:
    current: Optional[List[Tuple[int, str, List[str]]]] = None
    start: int = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line: str = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line == GRAPH_FORMAT_VERSION:
            if current is not None:
                yield start, current
            current, start = [], lineno
            continue
        if current is None:
            raise GraphParseError(lineno, f'expected header {GRAPH_FORMAT_VERSION!r}')
        key, *items = line.split()
        current.append((lineno, key, items))
    if current is None:
        raise GraphParseError(1, f'expected header {GRAPH_FORMAT_VERSION!r}')
    yield start, current


def parse_many(text: str) -> List[LabeledGraph]:
    graphs: List[LabeledGraph] = []
    for start, lines in _records(text):
        reader: _Reader = _Reader()
        last: int = start
        for lineno, key, items in lines:
            reader.feed(key, items, lineno)
            last = lineno
        graphs.append(reader.finish(last))
    return graphs


def parse_text(text: str) -> LabeledGraph:
    graphs: List[LabeledGraph] = parse_many(text)
    if len(graphs) != 1:
        raise GraphParseError(1, f'expected one graph, found {len(graphs)}')
    return graphs[0]
