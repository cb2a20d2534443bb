#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/7
# author: clarkmonkey@163.com

""" moves
Moves shrinking a cyclically reduced graph towards its silhouette.

Each move carries exactly the data needed to undo it: ``apply`` turns a graph
into a smaller one, ``invert`` rebuilds the original from the result. Moves
work on quasi-labeled graphs, labels are never renumbered here.
"""

import re
from dataclasses import dataclass, fields
from typing import ClassVar, Iterable, List, Optional, Tuple

from .core import (
    GraphBuilder, LabeledGraph, completion, is_delta1, is_delta2, is_delta3,
    relab, root_missing,
)
from .util import Edge, Label, MoveError, get_logger

logger = get_logger(__name__)


def a_edge_rank(g: LabeledGraph, edge: Edge) -> int:
    """ 1-based rank of an isolated a-edge, edges ordered by their smaller endpoint """
    v, w = sorted(edge)
    edges: List[Edge] = g.a_edges()
    try:
        return edges.index((v, w)) + 1
    except ValueError:
        raise MoveError(f'{v}-{w} is not an isolated a-edge') from None


def _require(condition: bool, move: 'Move', reason: str) -> None:
    if not condition:
        raise MoveError(f'{move} is not applicable: {reason}')


def _fresh(g: LabeledGraph, labels: Iterable[Label]) -> bool:
    return all(not g.has(v) for v in labels)


@dataclass(frozen=True)
class Move:
    """ Base class; ``label`` names the family, ``delta`` is its type change """

    label: ClassVar[str] = ''
    delta: ClassVar[Tuple[int, ...]] = (0, 0, 0, 0, 0)

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        raise NotImplementedError

    def valid_for(self, g: LabeledGraph) -> bool:
        raise NotImplementedError

    def invert(self, g: LabeledGraph) -> LabeledGraph:
        if not self.valid_for(g):
            raise MoveError(f'{self} cannot be inverted on this graph')
        return self._invert(g)

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        raise NotImplementedError

    def _fields(self) -> Tuple:
        return tuple(getattr(self, item.name) for item in fields(self))

    def __str__(self) -> str:
        return ' '.join([self.label] + [str(value) for value in self._fields()])


@dataclass(frozen=True)
class Lambda3(Move):
    """ b-loop at ``v`` and a-edge ``v-w``: delete ``v``, a-loop at ``w`` """

    v: Label
    w: Label
    label: ClassVar[str] = 'lambda3'
    delta: ClassVar[Tuple[int, ...]] = (-1, -1, 0, 1, -1)

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        _require(not g.rooted, self, 'graph is rooted')
        _require(g.has_b_loop(self.v), self, f'no b-loop at {self.v}')
        _require(self.v != self.w and g.a(self.v) == self.w, self, f'no a-edge {self.v}-{self.w}')
        return g.edit().remove_vertex(self.v).add_a_loop(self.w).freeze()

    def valid_for(self, g: LabeledGraph) -> bool:
        return not g.rooted and _fresh(g, (self.v,)) and g.has_a_loop(self.w)

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        return (
            g.edit().remove_a(self.w)
            .add_a_edge(self.v, self.w).add_b_loop(self.v).freeze()
        )


@dataclass(frozen=True)
class Lambda21(Move):
    """ a-loop at ``v`` on a b-triangle ``w>v>w_prime``: delete ``v`` """

    v: Label
    w_prime: Label
    label: ClassVar[str] = 'lambda21'
    delta: ClassVar[Tuple[int, ...]] = (-1, 0, 1, -1, 0)

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        _require(not g.rooted, self, 'graph is rooted')
        _require(g.has_a_loop(self.v), self, f'no a-loop at {self.v}')
        _require(g.b_kind(self.v) == 'triangle', self, f'{self.v} is not on a b-triangle')
        _require(g.b(self.v) == self.w_prime, self, f'no b-edge {self.v}>{self.w_prime}')
        return g.edit().remove_vertex(self.v).freeze()

    def valid_for(self, g: LabeledGraph) -> bool:
        return (
            not g.rooted and _fresh(g, (self.v,))
            and g.b(self.w_prime) is not None and g.b_kind(self.w_prime) == 'edge'
        )

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        w: Label = g.b(self.w_prime)
        return (
            g.edit().add_a_loop(self.v)
            .add_b_edge(w, self.v).add_b_edge(self.v, self.w_prime).freeze()
        )


@dataclass(frozen=True)
class Lambda22(Move):
    """ a-loop at ``v``, isolated b-edge between ``v`` and ``w``, a-edge ``w-w_prime``.

    ``forward`` is True for the b-edge ``v>w`` and False for ``w>v``.
    """

    v: Label
    w: Label
    w_prime: Label
    forward: bool
    label: ClassVar[str] = 'lambda22'
    delta: ClassVar[Tuple[int, ...]] = (-2, -1, -1, 0, 0)

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        v, w = self.v, self.w
        _require(not g.rooted, self, 'graph is rooted')
        _require(g.has_a_loop(v), self, f'no a-loop at {v}')
        tail, head = (v, w) if self.forward else (w, v)
        _require(g.b(tail) == head and g.b_kind(tail) == 'edge', self, f'no isolated b-edge {tail}>{head}')
        _require(g.a(w) == self.w_prime and self.w_prime != w, self, f'no a-edge {w}-{self.w_prime}')
        return (
            g.edit().remove_vertex(v).remove_vertex(w)
            .add_a_loop(self.w_prime).freeze()
        )

    def valid_for(self, g: LabeledGraph) -> bool:
        return (
            not g.rooted and self.v != self.w and _fresh(g, (self.v, self.w))
            and g.has_a_loop(self.w_prime)
        )

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        v, w = self.v, self.w
        tail, head = (v, w) if self.forward else (w, v)
        return (
            g.edit().remove_a(self.w_prime)
            .add_a_loop(v).add_a_edge(w, self.w_prime).add_b_edge(tail, head).freeze()
        )

    def __str__(self) -> str:
        return f'{self.label} {self.v} {self.w} {self.w_prime} {">" if self.forward else "<"}'


@dataclass(frozen=True)
class Kappa3(Move):
    """ Isolated b-edge ``v>w`` with a-edges ``v-v'`` and ``w-w'``: replace by the a-edge ``v'-w'``.

    ``rank`` is the rank of ``v'-w'`` in the result and ``sign`` is '-' iff ``v' < w'``.
    """

    v: Label
    w: Label
    rank: int
    sign: str
    label: ClassVar[str] = 'kappa3'
    delta: ClassVar[Tuple[int, ...]] = (-2, -1, -1, 0, 0)

    def __post_init__(self) -> None:
        if self.rank < 1 or self.sign not in '+-' or len(self.sign) != 1:
            raise MoveError(f'bad kappa3 parameters rank={self.rank} sign={self.sign!r}')

    @classmethod
    def at(cls, g: LabeledGraph, v: Label) -> 'Kappa3':
        """ The move removing the isolated b-edge starting at ``v`` """
        w: Label = g.b(v)
        v_prime, w_prime = g.a(v), g.a(w)
        low: Label = min(v_prime, w_prime)
        rank: int = 1 + sum(
            1 for x, y in g.a_edges()
            if x < low and x not in (v, w) and y not in (v, w)
        )
        return cls(v, w, rank, '-' if v_prime < w_prime else '+')

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        v, w = self.v, self.w
        _require(not g.rooted, self, 'graph is rooted')
        _require(g.b(v) == w and g.b_kind(v) == 'edge', self, f'no isolated b-edge {v}>{w}')
        v_prime, w_prime = g.a(v), g.a(w)
        _require(
            v_prime not in (None, v) and w_prime not in (None, w),
            self, 'both ends need an isolated a-edge',
        )
        _require(v_prime != w, self, 'the a-edge is parallel to the b-edge')
        _require((self.sign == '-') == (v_prime < w_prime), self, f'sign should be {"-" if v_prime < w_prime else "+"}')
        result: LabeledGraph = (
            g.edit().remove_vertex(v).remove_vertex(w)
            .add_a_edge(v_prime, w_prime).freeze()
        )
        _require(
            a_edge_rank(result, (v_prime, w_prime)) == self.rank, self,
            f'the new a-edge has rank {a_edge_rank(result, (v_prime, w_prime))}',
        )
        return result

    def valid_for(self, g: LabeledGraph) -> bool:
        return (
            not g.rooted and self.v != self.w and _fresh(g, (self.v, self.w))
            and self.rank <= len(g.a_edges())
        )

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        low, high = g.a_edges()[self.rank - 1]
        v_prime, w_prime = (low, high) if self.sign == '-' else (high, low)
        return (
            g.edit().remove_a(low)
            .add_a_edge(self.v, v_prime).add_a_edge(self.w, w_prime)
            .add_b_edge(self.v, self.w).freeze()
        )


@dataclass(frozen=True)
class Exc(Move):
    """ The two-vertex graph with a-loops at both ends of ``v>w`` becomes a single vertex ``v`` """

    w: Label
    label: ClassVar[str] = 'exc'
    delta: ClassVar[Tuple[int, ...]] = (-1, 0, -1, -1, 1)

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        _require(not g.rooted and is_delta3(g), self, 'graph is not the two-vertex a-loop pair')
        v: Optional[Label] = g.b_inv(self.w)
        _require(v is not None, self, f'{self.w} is not the head of the b-edge')
        return GraphBuilder().add_a_loop(v).add_b_loop(v).freeze()

    def valid_for(self, g: LabeledGraph) -> bool:
        return not g.rooted and is_delta1(g) and _fresh(g, (self.w,))

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        v: Label = g.vertices[0]
        return GraphBuilder().add_a_loop(v).add_a_loop(self.w).add_b_edge(v, self.w).freeze()


@dataclass(frozen=True)
class Unroot(Move):
    """ Forget the root ``v`` and add the loop it misses (``alpha`` is 'a', 'b' or '0') """

    alpha: str
    v: Label
    label: ClassVar[str] = 'unroot'

    def __post_init__(self) -> None:
        if self.alpha not in ('a', 'b', '0'):
            raise MoveError(f'unroot letter must be a, b or 0, got {self.alpha!r}')

    def apply(self, g: LabeledGraph) -> LabeledGraph:
        _require(g.root == self.v, self, f'{self.v} is not the root')
        _require((root_missing(g) or '0') == self.alpha, self, f'the root misses {root_missing(g) or "nothing"}')
        return completion(g)

    def valid_for(self, g: LabeledGraph) -> bool:
        if g.rooted or not g.has(self.v):
            return False
        if self.alpha == 'a':
            return g.has_a_loop(self.v)
        if self.alpha == 'b':
            return g.has_b_loop(self.v)
        return True

    def _invert(self, g: LabeledGraph) -> LabeledGraph:
        builder: GraphBuilder = g.edit().set_root(self.v)
        if self.alpha == 'a':
            builder.remove_a(self.v)
        elif self.alpha == 'b':
            builder.remove_b_out(self.v)
        return builder.freeze()


MoveSequence = List[Move]

# unroot? lambda3* (lambda21 + lambda22)* kappa3* exc?
_codes = {'unroot': 'u', 'lambda3': 'l', 'lambda21': 'p', 'lambda22': 'q', 'kappa3': 'k', 'exc': 'e'}
_language = re.compile(r'u?l*[pq]*k*e?')


def move_word(labels: Iterable[str]) -> str:
    return ''.join(_codes[label] for label in labels)


def in_move_language(labels: Iterable[str]) -> bool:
    return _language.fullmatch(move_word(labels)) is not None


def apply_move(g: LabeledGraph, m: Move) -> LabeledGraph:
    return m.apply(g)


def valid_for(g: LabeledGraph, m: Move) -> bool:
    return m.valid_for(g)


def invert_move(g: LabeledGraph, m: Move) -> LabeledGraph:
    return m.invert(g)


def type_delta(m: Move) -> Tuple[int, ...]:
    return m.delta


def _lambda2_at(g: LabeledGraph, v: Label) -> Move:
    if g.b_kind(v) == 'triangle':
        return Lambda21(v, g.b(v))
    if g.b(v) is not None:
        w: Label = g.b(v)
        return Lambda22(v, w, g.a(w), True)
    w = g.b_inv(v)
    return Lambda22(v, w, g.a(w), False)


def minimal_move(g: LabeledGraph) -> Optional[Move]:
    """ The move applied first by the minimal sequence, None at a silhouette """
    if g.rooted:
        missing: Optional[str] = root_missing(g)
        if missing == 'ab':
            # trivial subgroup, already minimal
            return None
        return Unroot(missing or '0', g.root)
    b_loops: List[Label] = g.b_loops()
    if b_loops:
        v: Label = b_loops[0]
        return None if g.a(v) == v else Lambda3(v, g.a(v))
    if is_delta3(g):
        return Exc(g.b_edges()[0][1])
    a_loops: List[Label] = g.a_loops()
    if a_loops:
        return _lambda2_at(g, a_loops[0])
    if is_delta2(g):
        return None
    b_edges: List[Edge] = g.b_edges()
    if b_edges:
        return Kappa3.at(g, b_edges[0][0])
    return None


def applicable_moves(g: LabeledGraph) -> List[Move]:
    """ Every move applicable to ``g``, in label order """
    if g.rooted:
        move: Optional[Move] = minimal_move(g)
        return [move] if move is not None else []
    if is_delta3(g):
        return [Exc(g.b_edges()[0][1])]
    found: List[Move] = [
        Lambda3(v, g.a(v)) for v in g.b_loops() if g.a(v) != v
    ]
    found.extend(_lambda2_at(g, v) for v in g.a_loops() if g.b_kind(v) in ('triangle', 'edge'))
    if not is_delta2(g):
        found.extend(
            Kappa3.at(g, v) for v, w in g.b_edges()
            if g.a(v) not in (None, v) and g.a(w) not in (None, w)
        )
    return found


def minimal_sequence(g: LabeledGraph) -> MoveSequence:
    return reduce(g)[0]


def reduce(g: LabeledGraph) -> Tuple[MoveSequence, LabeledGraph]:
    """ Applies minimal moves to a fixpoint; returns the moves and the end graph """
    sequence: MoveSequence = []
    move: Optional[Move] = minimal_move(g)
    while move is not None:
        g = move.apply(g)
        sequence.append(move)
        move = minimal_move(g)
    logger.debug('reduced to %d vertices in %d moves', g.n, len(sequence))
    return sequence, g


def quasi_silhouette(g: LabeledGraph) -> LabeledGraph:
    return reduce(g)[1]


def silhouette(g: LabeledGraph) -> LabeledGraph:
    return relab(quasi_silhouette(g))
