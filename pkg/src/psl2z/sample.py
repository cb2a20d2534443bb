#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/9
# author: clarkmonkey@163.com

""" sample
Uniform random generation by the recursive method.

A type is first walked down to a terminal type along a stochastic path whose
branch probabilities are exact count ratios. The terminal graph is drawn
directly, then every move of the path is undone with uniform parameters and
fresh labels taken as the smallest unused ones. A final uniform relabeling
makes the result uniform over labeled graphs.
"""

from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Type

from .core import (
    CombType, GraphBuilder, LabeledGraph, delta1, delta2, is_connected, relabel,
)
from .count import (
    Counter, Recurrence, b_structure_counts, default_counter, involution_counts,
    recurrence,
)
from .moves import Exc, Kappa3, Lambda21, Lambda22, Lambda3, Move
from .rng import Rng
from .util import Label, SamplingError, get_logger

logger = get_logger(__name__)

_default_rejection_cap: int = 1000

_delta1_type: CombType = CombType(1, 0, 0, 1, 1)
_delta2_type: CombType = CombType(2, 1, 1, 0, 0)
_delta3_type: CombType = CombType(2, 0, 1, 2, 0)

_moves: Dict[str, Type[Move]] = {
    cls.label: cls for cls in (Lambda3, Lambda21, Lambda22, Kappa3, Exc)
}


class TypePath(NamedTuple):
    """ ``steps`` holds ``(type before the move, move label)``; ``terminal`` is where it stops """

    steps: Tuple[Tuple[CombType, str], ...]
    terminal: CombType

    @property
    def labels(self) -> List[str]:
        return [label for _, label in self.steps]

    @property
    def start(self) -> CombType:
        return self.steps[0][0] if self.steps else self.terminal

    def types(self) -> Iterator[CombType]:
        for tau, _ in self.steps:
            yield tau
        yield self.terminal

    def __len__(self) -> int:
        return len(self.steps)


def is_terminal(tau: CombType) -> bool:
    if tau in (_delta1_type, _delta2_type):
        return True
    return tau.n >= 6 and tau.n % 6 == 0 and tau.k3 == tau.l2 == tau.l3 == 0 and 2 * tau.k2 == tau.n


def step_recurrence(tau: CombType, label: str) -> Tuple[Recurrence, int]:
    """ The recurrence behind one path step and the index of the term it follows """
    if label == Exc.label:
        # the two labelings of the b-edge between the a-loops
        return Recurrence(1, ((2, _delta1_type),)), 0
    if label == Lambda3.label:
        return recurrence(tau, 'l3'), 0
    if label in (Lambda21.label, Lambda22.label):
        return recurrence(tau, 'l2'), 0 if label == Lambda21.label else 1
    if label == Kappa3.label:
        return recurrence(tau, 'k3'), 0
    raise ValueError(f'unknown move label {label!r}')


def _pick(weights: Sequence[int], rng: Rng) -> int:
    """ Index drawn with probability proportional to the integer weights """
    p: int = rng.below(sum(weights))
    for index, weight in enumerate(weights):
        if p < weight:
            return index
        p -= weight
    raise SamplingError('weights changed while drawing')


def build_path(tau: Sequence[int], rng: Rng, counter: Optional[Counter] = None) -> TypePath:
    """ Stochastic path from ``tau`` down to a terminal type """
    counter = counter or default_counter
    tau = CombType(*tau)
    if counter.s_count(tau) == 0:
        raise SamplingError(f'no cyclically reduced graph has type {tau}')
    steps: List[Tuple[CombType, str]] = []
    while not is_terminal(tau):
        if tau == _delta3_type:
            label: str = Exc.label
        elif tau.l3 > 0:
            label = Lambda3.label
        elif tau.l2 > 0:
            weights: List[int] = recurrence(tau, 'l2').weights(counter.s_count)
            label = (Lambda21.label, Lambda22.label)[_pick(weights, rng)]
        elif tau.k3 > 0:
            label = Kappa3.label
        else:
            raise SamplingError(f'type {tau} has no move and is not terminal')
        steps.append((tau, label))
        tau = tau.shift(_moves[label].delta)
    return TypePath(tuple(steps), tau)


def path_weight(path: TypePath, counter: Optional[Counter] = None) -> Fraction:
    """ Terminal count divided by the probability of each step, times the step's factor.

    For a consistent recurrence this reproduces ``s_count(path.start)``.
    """
    counter = counter or default_counter
    weight: Fraction = Fraction(counter.s_count(path.terminal))
    for tau, label in path.steps:
        rec, index = step_recurrence(tau, label)
        weights: List[int] = rec.weights(counter.s_count)
        probability: Fraction = Fraction(weights[index], sum(weights))
        weight *= Fraction(rec.terms[index][0], rec.divisor) / probability
    return weight


# -- raw pairs and silhouettes -----------------------------------------------------

def sample_permutation_pair(n: int, rng: Rng) -> LabeledGraph:
    """ Uniform pair of fixpoint-free permutations of orders 2 and 3, possibly disconnected """
    if n < 6 or n % 6:
        raise ValueError(f'silhouette sizes are positive multiples of 6, got {n}')
    builder: GraphBuilder = GraphBuilder(range(1, n + 1))
    pairs: List[int] = rng.permutation(n)
    for i in range(0, n, 2):
        builder.add_a_edge(pairs[i], pairs[i + 1])
    triples: List[int] = rng.permutation(n)
    for i in range(0, n, 3):
        builder.add_b_triangle(triples[i], triples[i + 1], triples[i + 2])
    return builder.freeze()


def sample_silhouette(n: int, rng: Rng, cap: int = _default_rejection_cap) -> LabeledGraph:
    """ Uniform labeled silhouette graph of size ``n`` by rejecting disconnected pairs """
    for attempt in range(cap):
        g: LabeledGraph = sample_permutation_pair(n, rng)
        if is_connected(g):
            return g
        logger.debug('rejected a disconnected pair of size %d (attempt %d)', n, attempt + 1)
    raise SamplingError(f'no connected pair of size {n} after {cap} draws')


# -- cyclically reduced graphs by type ------------------------------------------------

def _draw_terminal(tau: CombType, rng: Rng, cap: int) -> LabeledGraph:
    if tau == _delta1_type:
        return delta1()
    if tau == _delta2_type:
        return delta2()
    return sample_silhouette(tau.n, rng, cap)


def _undo(g: LabeledGraph, label: str, rng: Rng) -> LabeledGraph:
    fresh: Label = g.n + 1
    if label == Exc.label:
        move: Move = Exc(fresh)
    elif label == Lambda3.label:
        move = Lambda3(fresh, rng.choice(g.a_loops()))
    elif label == Lambda21.label:
        move = Lambda21(fresh, rng.choice(g.b_edges())[0])
    elif label == Lambda22.label:
        move = Lambda22(fresh, fresh + 1, rng.choice(g.a_loops()), rng.coin())
    else:
        move = Kappa3(fresh, fresh + 1, 1 + rng.below(len(g.a_edges())), rng.choice('+-'))
    return move.invert(g)


def shuffle_labels(g: LabeledGraph, rng: Rng) -> LabeledGraph:
    """ Applies a uniform permutation of ``{1..n}`` """
    image: List[int] = rng.permutation(g.n)
    return relabel(g, {v: image[v - 1] for v in g.vertices})


def sample_cyclically_reduced(tau: Sequence[int],
                              rng: Rng,
                              counter: Optional[Counter] = None,
                              cap: int = _default_rejection_cap,
                              ) -> LabeledGraph:
    """ Uniform labeled cyclically reduced graph of type ``tau`` """
    path: TypePath = build_path(tau, rng, counter)
    g: LabeledGraph = _draw_terminal(path.terminal, rng, cap)
    for _, label in reversed(path.steps):
        g = _undo(g, label, rng)
    return shuffle_labels(g, rng)


# -- rooted graphs and subgroups --------------------------------------------------

def _root(g: LabeledGraph, case: str, rng: Rng) -> LabeledGraph:
    """ Roots ``g`` at a uniform vertex ('0'), or deletes a uniform a-loop / b-loop and roots there """
    if case == 'a':
        v: Label = rng.choice(g.a_loops())
        return g.edit().remove_a(v).set_root(v).freeze()
    if case == 'b':
        v = rng.choice(g.b_loops())
        return g.edit().remove_b_out(v).set_root(v).freeze()
    return g.edit().set_root(rng.choice(g.vertices)).freeze()


def sample_rooted(tau: Sequence[int],
                  rng: Rng,
                  counter: Optional[Counter] = None,
                  cap: int = _default_rejection_cap,
                  ) -> LabeledGraph:
    """ Uniform labeled rooted reduced graph of type ``tau`` """
    counter = counter or default_counter
    n, k2, k3, l2, l3 = tau = CombType(*tau)
    cases: List[Tuple[str, CombType, int]] = [
        ('0', tau, n * counter.s_count(tau)),
        ('a', CombType(n, k2, k3, l2 + 1, l3), (l2 + 1) * counter.s_count((n, k2, k3, l2 + 1, l3))),
        ('b', CombType(n, k2, k3, l2, l3 + 1), (l3 + 1) * counter.s_count((n, k2, k3, l2, l3 + 1))),
    ]
    weights: List[int] = [weight for _, _, weight in cases]
    if not sum(weights):
        raise SamplingError(f'no rooted graph has type {tau}')
    case, completed, _ = cases[_pick(weights, rng)]
    return _root(sample_cyclically_reduced(completed, rng, counter, cap), case, rng)


_family_case: Dict[str, str] = {'cyclically-reduced': '0', 'missing-b': 'b', 'missing-a': 'a'}


def sample_by_iso(n: int,
                  sigma: Sequence[int],
                  rng: Rng,
                  mode: str = 'all',
                  counter: Optional[Counter] = None,
                  cap: int = _default_rejection_cap,
                  ) -> LabeledGraph:
    """ Uniform subgroup graph of size ``n`` and isomorphism type ``sigma`` """
    if mode not in ('all', 'cyclically-reduced'):
        raise ValueError(f'unknown mode {mode!r}')
    counter = counter or default_counter
    families = counter.iso_families(n, sigma)
    if mode == 'cyclically-reduced':
        families = [item for item in families if item[0] == 'cyclically-reduced']
    if not families:
        raise SamplingError(f'no subgroup of size {n} has isomorphism type {tuple(sigma)}')
    family, _, _, completed = families[_pick([weight for _, weight, _, _ in families], rng)]
    logger.debug('drawing from the %s family with completed type %s', family, completed)
    return _root(sample_cyclically_reduced(completed, rng, counter, cap), _family_case[family], rng)


# -- cyclically reduced graphs by size ------------------------------------------------

def _unrank_involution(labels: List[Label], p: int, table: List[int]) -> Dict[Label, Label]:
    mapping: Dict[Label, Label] = {}
    while labels:
        m: int = len(labels)
        first: Label = labels.pop(0)
        if p < table[m - 1]:
            mapping[first] = first
            continue
        p -= table[m - 1]
        index, p = divmod(p, table[m - 2])
        partner: Label = labels.pop(index)
        mapping[first] = partner
        mapping[partner] = first
    return mapping


def _unrank_b_structure(labels: List[Label], p: int, table: List[int]) -> Dict[Label, Label]:
    mapping: Dict[Label, Label] = {}
    while labels:
        m: int = len(labels)
        first: Label = labels.pop(0)
        if p < table[m - 1]:
            mapping[first] = first
            continue
        p -= table[m - 1]
        if p < 2 * (m - 1) * table[m - 2]:
            index, p = divmod(p, 2 * table[m - 2])
            forward, p = divmod(p, table[m - 2])
            other: Label = labels.pop(index)
            if forward:
                mapping[first] = other
            else:
                mapping[other] = first
            continue
        p -= 2 * (m - 1) * table[m - 2]
        index, p = divmod(p, 2 * table[m - 3])
        clockwise, p = divmod(p, table[m - 3])
        i, j = _pair_at(m - 1, index)
        x, y = labels[i], labels[j]
        del labels[j], labels[i]
        if clockwise:
            mapping.update({first: x, x: y, y: first})
        else:
            mapping.update({first: y, y: x, x: first})
    return mapping


def _pair_at(size: int, index: int) -> Tuple[int, int]:
    """ The ``index``-th pair ``i < j`` of ``range(size)`` in lexicographic order """
    for i in range(size):
        row: int = size - 1 - i
        if index < row:
            return i, i + 1 + index
        index -= row
    raise IndexError('pair index out of range')


def sample_cyclically_reduced_by_size(n: int, rng: Rng, cap: int = _default_rejection_cap) -> LabeledGraph:
    """ Uniform labeled cyclically reduced graph of size ``n``, all types together """
    if n < 1:
        raise ValueError(f'size must be positive, got {n}')
    inv: List[int] = involution_counts(n)
    bs: List[int] = b_structure_counts(n)
    for attempt in range(cap):
        a: Dict[Label, Label] = _unrank_involution(list(range(1, n + 1)), rng.below(inv[n]), inv)
        b: Dict[Label, Label] = _unrank_b_structure(list(range(1, n + 1)), rng.below(bs[n]), bs)
        g: LabeledGraph = LabeledGraph(range(1, n + 1), a, b)
        if is_connected(g):
            return g
        logger.debug('rejected a disconnected structure of size %d (attempt %d)', n, attempt + 1)
    raise SamplingError(f'no connected structure of size {n} after {cap} draws')


def _rooting(g: LabeledGraph, k: int) -> LabeledGraph:
    """ The ``k``-th rooting of ``g``: plain rootings in vertex order, then a-loop and b-loop deletions """
    if k < g.n:
        return g.edit().set_root(g.vertices[k]).freeze()
    k -= g.n
    a_loops: List[Label] = g.a_loops()
    if k < len(a_loops):
        return g.edit().remove_a(a_loops[k]).set_root(a_loops[k]).freeze()
    v: Label = g.b_loops()[k - len(a_loops)]
    return g.edit().remove_b_out(v).set_root(v).freeze()


def sample_rooted_by_size(n: int, rng: Rng, cap: int = _default_rejection_cap) -> LabeledGraph:
    """ Uniform labeled rooted reduced graph of size ``n``, all types together.

    A uniform cyclically reduced graph with ``w = n + l2 + l3`` rootings is
    kept with probability ``w / 3n``, then rooted in one of its ``w`` ways.
    """
    if n < 1:
        raise ValueError(f'size must be positive, got {n}')
    for attempt in range(cap):
        g: LabeledGraph = sample_cyclically_reduced_by_size(n, rng, cap)
        k: int = rng.below(3 * n)
        if k < n + len(g.a_loops()) + len(g.b_loops()):
            return _rooting(g, k)
        logger.debug('rejected a graph with too few rootings at size %d (attempt %d)', n, attempt + 1)
    raise SamplingError(f'no rooted graph of size {n} after {cap} draws')
