#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/10
# author: clarkmonkey@163.com

""" analyze
ab-cycles, parabolicity and almost-malnormality of subgroups given by their
Stallings graphs.
"""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, NamedTuple, Optional, Set, Tuple

from .core import LabeledGraph
from .stallings import trace
from .util import InvariantBreach, Label, get_logger

logger = get_logger(__name__)

DEFAULT_ALPHA: float = 0.15

Pair = Tuple[Label, Label]


@dataclass(frozen=True)
class AbCycle:
    """ A cycle of ``v -> b(a(v))``, rotated so that its smallest vertex comes first """

    vertices: Tuple[Label, ...]
    simple: bool

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def word(self) -> str:
        return 'ab' * self.length


def _step(g: LabeledGraph, v: Label) -> Optional[Label]:
    w: Optional[Label] = g.a(v)
    return None if w is None else g.b(w)


def _b_orbit(g: LabeledGraph, v: Label) -> Label:
    """ Smallest vertex of the b-orbit of ``v`` """
    orbit: Set[Label] = {v}
    for table in (g.b, g.b_inv):
        w: Optional[Label] = table(v)
        while w is not None and w not in orbit:
            orbit.add(w)
            w = table(w)
    return min(orbit)


def ab_cycles(g: LabeledGraph) -> List[AbCycle]:
    """ Every cycle of the partial map ``v -> b(a(v))``, once each """
    seen: Set[Label] = set()
    found: List[AbCycle] = []
    for start in g.vertices:
        if start in seen:
            continue
        walk: List[Label] = []
        position: Dict[Label, int] = {}
        v: Optional[Label] = start
        while v is not None and v not in seen:
            seen.add(v)
            position[v] = len(walk)
            walk.append(v)
            v = _step(g, v)
        if v is None or v not in position:
            # ran off the map or into an earlier walk
            continue
        cycle: List[Label] = walk[position[v]:]
        lowest: int = cycle.index(min(cycle))
        cycle = cycle[lowest:] + cycle[:lowest]
        orbits: List[Label] = [_b_orbit(g, w) for w in cycle]
        found.append(AbCycle(tuple(cycle), len(set(orbits)) == len(orbits)))
    found.sort(key=lambda item: item.vertices[0])
    return found


def ab_cycle_census(g: LabeledGraph) -> Counter:
    """ Number of ab-cycles per length """
    return Counter(cycle.length for cycle in ab_cycles(g))


def is_parabolic(g: LabeledGraph) -> bool:
    """ True iff the subgroup contains a conjugate of a power of ``ab``.

    Any loop of the connected graph is conjugate into the subgroup through a
    path from the root, so an ab-cycle anywhere suffices.
    """
    return bool(ab_cycles(g))


def has_small_simple_ab_cycle(g: LabeledGraph, alpha: float = DEFAULT_ALPHA) -> bool:
    """ Is there a simple ab-cycle of length in ``[2, floor(n ** alpha)]`` """
    if not 0 < alpha < 1 / 6:
        raise ValueError(f'alpha must lie strictly between 0 and 1/6, got {alpha}')
    bound: int = math.floor(g.n ** alpha)
    return any(cycle.simple and 2 <= cycle.length <= bound for cycle in ab_cycles(g))


# -- almost malnormality ---------------------------------------------------------

class Witness(NamedTuple):
    """ ``word`` labels a loop at both vertices of ``pair`` """

    word: str
    pair: Pair


class MalnormalityVerdict(NamedTuple):

    almost_malnormal: bool
    witness: Optional[Witness] = None


def _pair_arcs(g: LabeledGraph, pair: Pair) -> Iterator[Tuple[str, Pair]]:
    p, q = pair
    ap, aq = g.a(p), g.a(q)
    if ap is None or aq is None:
        return
    for letter, table in (('b', g.b), ('B', g.b_inv)):
        tp, tq = table(ap), table(aq)
        if tp is not None and tq is not None and tp != tq:
            yield 'a' + letter, (tp, tq)


def _pair_cycle(g: LabeledGraph) -> Optional[Witness]:
    """ Iterative depth-first search for a directed cycle in the pair graph """
    colour: Dict[Pair, int] = {}
    for v in g.vertices:
        for w in g.vertices:
            if v == w or (v, w) in colour:
                continue
            colour[(v, w)] = 1
            path: List[Tuple[Pair, str]] = [((v, w), '')]
            stack: List[Iterator[Tuple[str, Pair]]] = [_pair_arcs(g, (v, w))]
            while stack:
                step: Optional[Tuple[str, Pair]] = next(stack[-1], None)
                if step is None:
                    colour[path.pop()[0]] = 2
                    stack.pop()
                    continue
                syllable, target = step
                state: int = colour.get(target, 0)
                if state == 1:
                    nodes: List[Pair] = [node for node, _ in path]
                    start: int = nodes.index(target)
                    word: str = ''.join(label for _, label in path[start + 1:]) + syllable
                    return Witness(word, target)
                if state == 0:
                    colour[target] = 1
                    path.append((target, syllable))
                    stack.append(_pair_arcs(g, target))
    return None


def is_almost_malnormal(g: LabeledGraph) -> MalnormalityVerdict:
    """ Decides almost malnormality; a negative verdict carries a common loop word """
    witness: Optional[Witness] = _pair_cycle(g)
    if witness is None:
        return MalnormalityVerdict(True)
    p, q = witness.pair
    if trace(g, witness.word, p) != p or trace(g, witness.word, q) != q:
        raise InvariantBreach(f'witness {witness.word} does not close at {p} and {q}')
    logger.debug('common loop %s at %d and %d', witness.word, p, q)
    return MalnormalityVerdict(False, witness)
