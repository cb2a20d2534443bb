#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/2
# author: clarkmonkey@163.com

""" core
The graph data model: labeled and quasi-labeled PSL2(Z)-reduced graphs.

A graph carries two partial maps on its vertex labels. ``a`` is a symmetric
pairing (``a[v] == v`` is an a-loop) and ``b`` is an injective successor map
whose orbits are b-loops, isolated b-edges ``v>w`` or b-triangles. Values are
immutable once frozen; use :meth:`LabeledGraph.edit` to derive new graphs.
"""

from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Set, Tuple
import warnings

from .util import (
    Edge, InvalidGraph, InvariantBreach, Label, LegacyValueWarning, get_logger,
)

logger = get_logger(__name__)


class CombType(NamedTuple):
    """ Combinatorial type ``(n, k2, k3, l2, l3)`` """

    n: int
    k2: int
    k3: int
    l2: int
    l3: int

    @property
    def phi(self) -> int:
        """ The linear form left unchanged by every move """
        return self.n - 2 * self.k3 - 3 * self.l2 - 4 * self.l3

    @property
    def m(self) -> int:
        """ Number of b-triangles (only meaningful for cyclically reduced types) """
        return (self.n - 2 * self.k3 - self.l3) // 3

    def shift(self, delta: Iterable[int]) -> 'CombType':
        return CombType(*(x + d for x, d in zip(self, delta)))

    def __str__(self) -> str:
        return ','.join(map(str, self))


class IsoType(NamedTuple):
    """ Isomorphism type ``(l2, l3, r)``: Z2 factors, Z3 factors, free rank """

    l2: int
    l3: int
    r: int

    def __str__(self) -> str:
        return ','.join(map(str, self))


class LabeledGraph:
    """ An immutable edge-labeled graph, rooted or not.

    The constructor stores what it is given; structural checks live in
    :func:`validate` so that broken inputs can still be represented and
    diagnosed.
    """

    def __init__(self,
                 vertices: Iterable[Label],
                 a: Mapping[Label, Label],
                 b: Mapping[Label, Label],
                 root: Optional[Label] = None,
                 ) -> None:
        self._vertex_set: frozenset = frozenset(vertices)
        self._vertices: Tuple[Label, ...] = tuple(sorted(self._vertex_set))
        self._a: Dict[Label, Label] = dict(a)
        self._b: Dict[Label, Label] = dict(b)
        self._b_prev: Dict[Label, Label] = {w: v for v, w in self._b.items()}
        self._root: Optional[Label] = root
        self._key: Optional[tuple] = None

    # -- structure ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def vertices(self) -> Tuple[Label, ...]:
        return self._vertices

    @property
    def root(self) -> Optional[Label]:
        return self._root

    @property
    def rooted(self) -> bool:
        return self._root is not None

    @property
    def a_map(self) -> Mapping[Label, Label]:
        return self._a

    @property
    def b_map(self) -> Mapping[Label, Label]:
        return self._b

    def has(self, v: Label) -> bool:
        return v in self._vertex_set

    def a(self, v: Label) -> Optional[Label]:
        """ a-partner of ``v`` (``v`` itself for an a-loop), None if absent """
        return self._a.get(v)

    def b(self, v: Label) -> Optional[Label]:
        return self._b.get(v)

    def b_inv(self, v: Label) -> Optional[Label]:
        return self._b_prev.get(v)

    def has_a_loop(self, v: Label) -> bool:
        return self._a.get(v) == v

    def has_b_loop(self, v: Label) -> bool:
        return self._b.get(v) == v

    def a_adjacent(self, v: Label) -> bool:
        return v in self._a

    def b_adjacent(self, v: Label) -> bool:
        """ Incoming edges count: the head of an isolated b-edge is adjacent """
        return v in self._b or v in self._b_prev

    def b_kind(self, v: Label) -> Optional[str]:
        """ One of 'loop', 'edge', 'triangle' or None """
        if v in self._b:
            w: Label = self._b[v]
            if w == v:
                return 'loop'
            return 'triangle' if w in self._b else 'edge'
        if v in self._b_prev:
            u: Label = self._b_prev[v]
            return 'triangle' if u in self._b_prev else 'edge'
        return None

    def a_loops(self) -> List[Label]:
        return sorted(v for v, w in self._a.items() if v == w)

    def b_loops(self) -> List[Label]:
        return sorted(v for v, w in self._b.items() if v == w)

    def a_edges(self) -> List[Edge]:
        """ Non-loop a-edges as ``(v, w)`` with ``v < w``, sorted """
        return sorted((v, w) for v, w in self._a.items() if v < w)

    def b_edges(self) -> List[Edge]:
        """ Isolated b-edges ``(v, w)`` meaning ``v>w``, sorted by tail """
        return sorted(
            (v, w) for v, w in self._b.items()
            if v != w and w not in self._b
        )

    def b_triangles(self) -> List[Tuple[Label, Label, Label]]:
        """ b-triangles rotated so the orbit minimum comes first, sorted """
        found: List[Tuple[Label, Label, Label]] = []
        for v, w in self._b.items():
            if v == w or w not in self._b:
                continue
            u: Label = self._b[w]
            if v < w and v < u:
                found.append((v, w, u))
        return sorted(found)

    def neighbours(self, v: Label) -> Iterator[Label]:
        for table in (self._a, self._b, self._b_prev):
            w: Optional[Label] = table.get(v)
            if w is not None:
                yield w

    def edit(self) -> 'GraphBuilder':
        return GraphBuilder(self._vertices, self._a, self._b, self._root)

    # -- value semantics ---------------------------------------------------

    def _identity(self) -> tuple:
        if self._key is None:
            self._key = (
                self._vertices,
                tuple(sorted(self._a.items())),
                tuple(sorted(self._b.items())),
                self._root,
            )
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._identity() == other._identity()

    def __hash__(self) -> int:
        return hash(self._identity())

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        root: str = 'none' if self._root is None else str(self._root)
        return f'<LabeledGraph n={self.n} root={root}>'


class GraphBuilder:
    """ Mutable companion of :class:`LabeledGraph`, edges are kept consistent """

    def __init__(self,
                 vertices: Iterable[Label] = (),
                 a: Optional[Mapping[Label, Label]] = None,
                 b: Optional[Mapping[Label, Label]] = None,
                 root: Optional[Label] = None,
                 ) -> None:
        self.vertices: Set[Label] = set(vertices)
        self.a: Dict[Label, Label] = dict(a or {})
        self.b: Dict[Label, Label] = dict(b or {})
        self.root: Optional[Label] = root

    def remove_vertex(self, v: Label) -> 'GraphBuilder':
        self.remove_a(v)
        self.remove_b_out(v)
        for u in [u for u, w in self.b.items() if w == v]:
            del self.b[u]
        self.vertices.discard(v)
        if self.root == v:
            self.root = None
        return self

    def add_a_loop(self, v: Label) -> 'GraphBuilder':
        return self.add_a_edge(v, v)

    def add_a_edge(self, v: Label, w: Label) -> 'GraphBuilder':
        self.vertices.update((v, w))
        self.a[v] = w
        self.a[w] = v
        return self

    def remove_a(self, v: Label) -> 'GraphBuilder':
        w: Optional[Label] = self.a.pop(v, None)
        if w is not None and w != v:
            self.a.pop(w, None)
        return self

    def add_b_loop(self, v: Label) -> 'GraphBuilder':
        return self.add_b_edge(v, v)

    def add_b_edge(self, v: Label, w: Label) -> 'GraphBuilder':
        self.vertices.update((v, w))
        self.b[v] = w
        return self

    def add_b_triangle(self, v: Label, w: Label, u: Label) -> 'GraphBuilder':
        return self.add_b_edge(v, w).add_b_edge(w, u).add_b_edge(u, v)

    def remove_b_out(self, v: Label) -> 'GraphBuilder':
        self.b.pop(v, None)
        return self

    def set_root(self, v: Optional[Label]) -> 'GraphBuilder':
        if v is not None:
            self.vertices.add(v)
        self.root = v
        return self

    def freeze(self) -> LabeledGraph:
        return LabeledGraph(self.vertices, self.a, self.b, self.root)


# -- small shapes ------------------------------------------------------------

def trivial_graph(v: Label = 1) -> LabeledGraph:
    """ Graph of the trivial subgroup: a single rooted vertex, no edges """
    return LabeledGraph((v,), {}, {}, root=v)


def delta1(v: Label = 1) -> LabeledGraph:
    return GraphBuilder().add_a_loop(v).add_b_loop(v).freeze()


def delta2(v: Label = 1, w: Label = 2) -> LabeledGraph:
    return GraphBuilder().add_a_edge(v, w).add_b_edge(v, w).freeze()


def delta3(v: Label = 1, w: Label = 2) -> LabeledGraph:
    return GraphBuilder().add_a_loop(v).add_a_loop(w).add_b_edge(v, w).freeze()


def delta4(v: Label = 1, w: Label = 2) -> LabeledGraph:
    return GraphBuilder().add_a_edge(v, w).add_b_loop(v).add_b_loop(w).freeze()


def is_delta1(g: LabeledGraph) -> bool:
    return g.n == 1 and g.has_a_loop(g.vertices[0]) and g.has_b_loop(g.vertices[0])


def is_delta2(g: LabeledGraph) -> bool:
    if g.n != 2:
        return False
    v, w = g.vertices
    return g.a(v) == w and (g.b(v) == w or g.b(w) == v) and g.b_kind(v) == 'edge'


def is_delta3(g: LabeledGraph) -> bool:
    if g.n != 2:
        return False
    v, w = g.vertices
    return g.has_a_loop(v) and g.has_a_loop(w) and g.b_kind(v) == 'edge'


# -- diagnostics ---------------------------------------------------------------

def is_connected(g: LabeledGraph) -> bool:
    if g.n <= 1:
        return True
    start: Label = g.vertices[0]
    seen: Set[Label] = {start}
    queue: deque = deque([start])
    while queue:
        v: Label = queue.popleft()
        for w in g.neighbours(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def validate(g: LabeledGraph, labeled: bool = False) -> List[str]:
    """ Returns every violated invariant, an empty list means the graph is valid.

    With ``labeled=True`` the label set must also be exactly ``{1..n}``.
    """
    violations: List[str] = []
    vertices: Set[Label] = set(g.vertices)
    if not vertices:
        return ['graph has no vertex']
    if any(not isinstance(v, int) or v < 1 for v in vertices):
        violations.append('labels must be positive integers')
    if labeled and vertices != set(range(1, g.n + 1)):
        violations.append(f'label set is not {{1..{g.n}}}')
    if g.root is not None and g.root not in vertices:
        violations.append(f'root {g.root} is not a vertex')

    for v, w in sorted(g.a_map.items()):
        if v not in vertices or w not in vertices:
            violations.append(f'a-edge {v}-{w} leaves the vertex set')
        elif g.a(w) != v:
            violations.append(f'a is not symmetric at {v}: a({v})={w} but a({w})={g.a(w)}')

    heads: Dict[Label, Label] = {}
    for v, w in sorted(g.b_map.items()):
        if v not in vertices or w not in vertices:
            violations.append(f'b-edge {v}>{w} leaves the vertex set')
            continue
        if w in heads:
            violations.append(f'b is not injective: {heads[w]}>{w} and {v}>{w}')
        heads[w] = v
    for v, w in sorted(g.b_map.items()):
        u: Optional[Label] = g.b(w)
        if v != w and u is not None and g.b(u) != v:
            violations.append(f'non-closed b-orbit at {v}')

    for v in sorted(vertices):
        if v == g.root:
            continue
        if not g.a_adjacent(v):
            violations.append(f'vertex {v} has no a-edge')
        if not g.b_adjacent(v):
            violations.append(f'vertex {v} has no b-edge')

    if not is_connected(g):
        violations.append('graph is not connected')
    return violations


def check(g: LabeledGraph, labeled: bool = False) -> LabeledGraph:
    """ Returns ``g`` unchanged or raises :class:`InvalidGraph` """
    violations: List[str] = validate(g, labeled)
    if violations:
        raise InvalidGraph(violations)
    return g


def is_cyclically_reduced(g: LabeledGraph) -> bool:
    return all(g.a_adjacent(v) and g.b_adjacent(v) for v in g.vertices)


# -- types -----------------------------------------------------------------------

def comb_type(g: LabeledGraph) -> CombType:
    """ Edge census of ``g``; the root is ignored """
    k2 = k3 = l2 = l3 = 0
    for v, w in g.a_map.items():
        if v == w:
            l2 += 1
        elif v < w:
            k2 += 1
    for v, w in g.b_map.items():
        if v == w:
            l3 += 1
        elif w not in g.b_map:
            k3 += 1
        elif g.b(g.b(w)) != v:
            raise InvalidGraph([f'non-closed b-orbit at {v}'])
    return CombType(g.n, k2, k3, l2, l3)


def root_missing(g: LabeledGraph) -> Optional[str]:
    """ Letter missing at the root: 'a', 'b', 'ab' (trivial graph) or None """
    if g.root is None:
        return None
    missing: str = ''
    if not g.a_adjacent(g.root):
        missing += 'a'
    if not g.b_adjacent(g.root):
        missing += 'b'
    return missing or None


def completion(g: LabeledGraph) -> LabeledGraph:
    """ The cyclically reduced graph obtained by adding the missing loops at the root """
    builder: GraphBuilder = g.edit().set_root(None)
    missing: str = root_missing(g) or ''
    if 'a' in missing:
        builder.add_a_loop(g.root)
    if 'b' in missing:
        builder.add_b_loop(g.root)
    return builder.freeze()


def free_rank(g: LabeledGraph) -> int:
    """ Free rank of the conjugacy class of a cyclically reduced graph """
    phi: int = comb_type(g).phi
    quotient, remainder = divmod(phi, 6)
    if remainder or quotient < -1:
        raise InvariantBreach(f'phi={phi} does not give a non-negative integer rank')
    return quotient + 1


_size_one_iso: Dict[Tuple[bool, bool], IsoType] = {
    (False, False): IsoType(0, 0, 0),
    (True, False): IsoType(1, 0, 0),
    (False, True): IsoType(0, 1, 0),
    (True, True): IsoType(1, 1, 0),
}

_rank_offsets: Dict[Optional[str], Fraction] = {
    None: Fraction(1),
    'b': Fraction(1, 3),
    'a': Fraction(1, 2),
}


def iso_type(g: LabeledGraph, legacy_offset: bool = False) -> IsoType:
    """ Kurosh isomorphism type of the subgroup represented by the rooted graph ``g``.

    The free rank is ``1 + phi(g°)/6`` on the completion ``g°``, that is
    ``offset + phi(g)/6`` where the offset depends on the letter missing at
    the root. With ``legacy_offset=True`` a missing a-letter uses the legacy
    2/3 offset, which does not always produce an integer.
    """
    if g.root is None:
        raise InvalidGraph(['iso_type needs a rooted graph'])
    if g.n == 1:
        v: Label = g.vertices[0]
        return _size_one_iso[(g.has_a_loop(v), g.has_b_loop(v))]
    missing: Optional[str] = root_missing(g)
    offset: Fraction = _rank_offsets[missing]
    if legacy_offset and missing == 'a':
        warnings.warn('using the legacy 2/3 rank offset', LegacyValueWarning)
        offset = Fraction(2, 3)
    ctype: CombType = comb_type(g)
    r: Fraction = offset + Fraction(ctype.phi, 6)
    if r.denominator != 1 or r < 0:
        raise InvariantBreach(f'rank {r} of a graph of type {ctype} is not a natural number')
    return IsoType(ctype.l2, ctype.l3, int(r))


def iso_type_via_collapse(g: LabeledGraph) -> IsoType:
    """ Isomorphism type read off the quotient by b-orbits (first Betti number) """
    parent: Dict[Label, Label] = {v: v for v in g.vertices}

    def find(x: Label) -> Label:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, w in g.b_map.items():
        parent[find(v)] = find(w)
    nodes: Set[Label] = {find(v) for v in g.vertices}
    edges: List[Edge] = g.a_edges()

    quotient: Dict[Label, Label] = {node: node for node in nodes}

    def find_node(x: Label) -> Label:
        while quotient[x] != x:
            x = quotient[x]
        return x

    for v, w in edges:
        quotient[find_node(find(v))] = find_node(find(w))
    if len({find_node(node) for node in nodes}) != 1:
        raise InvariantBreach('the b-orbit quotient is disconnected')

    ctype: CombType = comb_type(g)
    return IsoType(ctype.l2, ctype.l3, len(edges) - len(nodes) + 1)


# -- relabeling -------------------------------------------------------------------

def relabel(g: LabeledGraph, mapping: Mapping[Label, Label]) -> LabeledGraph:
    """ Applies an injective label mapping to every vertex """
    return LabeledGraph(
        (mapping[v] for v in g.vertices),
        {mapping[v]: mapping[w] for v, w in g.a_map.items()},
        {mapping[v]: mapping[w] for v, w in g.b_map.items()},
        None if g.root is None else mapping[g.root],
    )


def relab(g: LabeledGraph) -> LabeledGraph:
    """ Order-preserving relabeling onto ``{1..n}`` """
    if g.vertices == tuple(range(1, g.n + 1)):
        return g
    return relabel(g, {v: i for i, v in enumerate(g.vertices, 1)})


def canonical_relabel(g: LabeledGraph) -> LabeledGraph:
    """ Breadth-first relabeling from the root, edge order a < b < b^-1 """
    if g.root is None:
        raise InvalidGraph(['canonical relabeling needs a rooted graph'])
    order: Dict[Label, Label] = {g.root: 1}
    queue: deque = deque([g.root])
    while queue:
        v: Label = queue.popleft()
        for w in (g.a(v), g.b(v), g.b_inv(v)):
            if w is not None and w not in order:
                order[w] = len(order) + 1
                queue.append(w)
    if len(order) != g.n:
        raise InvalidGraph(['graph is not connected'])
    return relabel(g, order)
