#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/5
# author: clarkmonkey@163.com

""" count
Exact counts of labeled cyclically reduced graphs, of rooted graphs and of
subgroups, by combinatorial type or by isomorphism type.

All arithmetic is on Python integers. Every division in a recurrence is
checked for exactness; a remainder means a transcription error and raises
:class:`InvariantBreach`.
"""

import math
import warnings
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from .core import CombType, IsoType
from .memo import CountCache
from .util import InvariantBreach, LegacyValueWarning, exact_div, get_logger

logger = get_logger(__name__)

_base_table: Dict[CombType, int] = {
    CombType(1, 0, 0, 1, 1): 1,
    CombType(2, 1, 1, 0, 0): 2,
    CombType(2, 0, 1, 2, 0): 2,
    CombType(2, 1, 0, 0, 2): 1,
}

# (L, H) of the small-size table where it disagrees with L = n s + (l2 + 1) s + (l3 + 1) s
_legacy_rooted_table: Dict[CombType, Tuple[int, int]] = {
    CombType(2, 0, 1, 1, 0): (2, 1),
}

BRANCHES: Tuple[str, ...] = ('l3', 'l2', 'k3')

_delta2_type: CombType = CombType(2, 1, 1, 0, 0)

# (silhouette size, count) pairs in increasing size
SizeTable = Tuple[Tuple[int, int], ...]


class Recurrence(NamedTuple):
    """ ``s(tau) = sum(factor * s(sub)) / divisor`` over ``terms`` """

    divisor: int
    terms: Tuple[Tuple[int, CombType], ...]

    def weights(self, lookup: Callable[[CombType], int]) -> List[int]:
        """ Summands before the division, proportional to the branch probabilities """
        return [factor * lookup(sub) for factor, sub in self.terms]


def is_feasible(tau: Sequence[int]) -> bool:
    """ Parity and divisibility conditions of a cyclically reduced type """
    n, k2, k3, l2, l3 = tau
    if min(tau) < 0 or n == 0 or n != 2 * k2 + l2:
        return False
    rest: int = n - 2 * k3 - l3
    return rest >= 0 and rest % 3 == 0


def default_branch(tau: CombType) -> Optional[str]:
    """ Branch priority l3 -> l2 -> k3, shared with the sampler's path construction """
    if tau.n <= 2:
        return None
    if tau.l3 > 0:
        return 'l3'
    if tau.l2 > 0:
        return 'l2'
    if tau.k3 > 0:
        return 'k3'
    return None


def recurrence(tau: CombType, branch: str) -> Recurrence:
    """ How ``s(tau)`` is expressed through the chosen branch """
    n, k2, k3, l2, l3 = tau
    if branch == 'l3':
        if l3 <= 0:
            raise ValueError(f'the l3 branch needs a b-loop, got {tau}')
        return Recurrence(l3, ((n * (l2 + 1), CombType(n - 1, k2 - 1, k3, l2 + 1, l3 - 1)),))
    if branch == 'l2':
        if l2 <= 0:
            raise ValueError(f'the l2 branch needs an a-loop, got {tau}')
        return Recurrence(l2, (
            (n * (k3 + 1), CombType(n - 1, k2, k3 + 1, l2 - 1, l3)),
            (2 * n * (n - 1) * l2, CombType(n - 2, k2 - 1, k3 - 1, l2, l3)),
        ))
    if branch == 'k3':
        if k3 <= 0 or l2 or l3:
            raise ValueError(f'the k3 branch needs a loop-free type with an isolated b-edge, got {tau}')
        return Recurrence(k3, ((2 * n * (n - 1) * (k2 - 1 + l2), CombType(n - 2, k2 - 1, k3 - 1, l2, l3)),))
    raise ValueError(f'unknown branch {branch!r}, expected one of {BRANCHES}')


def T2(n: int) -> int:
    """ Fixpoint-free involutions of [n]: the product of odd numbers below n """
    if n < 0 or n % 2:
        return 0
    return math.prod(range(1, n, 2))


def T3(n: int) -> int:
    """ Fixpoint-free permutations of [n] of order 3: n! / (3^(n/3) (n/3)!) """
    if n < 0 or n % 3:
        return 0
    return exact_div(math.factorial(n), 3 ** (n // 3) * math.factorial(n // 3), 'T3')


def gtilde(n: int) -> int:
    """ Pairs of fixpoint-free permutations of orders 2 and 3 on [n] """
    if n < 6 or n % 6:
        raise ValueError(f'gtilde needs a positive multiple of 6, got {n}')
    return T2(n) * T3(n)


def involution_counts(n: int) -> List[int]:
    """ ``I(0..n)``: involutions of [m], fixed points allowed """
    table: List[int] = [1, 1]
    for m in range(2, n + 1):
        table.append(table[m - 1] + (m - 1) * table[m - 2])
    return table[:n + 1]


def b_structure_counts(n: int) -> List[int]:
    """ ``A(0..n)``: b-maps of [m] made of loops, directed isolated edges and oriented triangles """
    table: List[int] = [1, 1, 3]
    for m in range(3, n + 1):
        table.append(table[m - 1] + 2 * (m - 1) * table[m - 2] + (m - 1) * (m - 2) * table[m - 3])
    return table[:n + 1]


class Counter:
    """ Counting functions sharing one :class:`CountCache`.

    The module-level functions use a process-wide default instance; build a
    private one with ``Counter(CountCache())`` for isolated runs.
    """

    def __init__(self, cache: Optional[CountCache] = None) -> None:
        self.cache: CountCache = cache if cache is not None else CountCache('counts')
        self.silhouette_count = self.cache.memoize(self._silhouette_count)

    # -- s(tau) --------------------------------------------------------------

    def _evaluate(self, tau: CombType, rec: Recurrence) -> int:
        return exact_div(sum(rec.weights(self._lookup)), rec.divisor, f'recurrence for {tau}')

    def _lookup(self, tau: CombType) -> int:
        """ Value of an already computed (or trivially known) type """
        if not is_feasible(tau):
            return 0
        if tau.n <= 2:
            return _base_table.get(tau, 0)
        branch: Optional[str] = default_branch(tau)
        if branch is None:
            return self.silhouette_count(tau.n) if 2 * tau.k2 == tau.n else 0
        return self.cache.get(('s_count',) + tuple(tau))

    def _pending(self, tau: CombType) -> bool:
        return (
            is_feasible(tau) and tau.n > 2 and default_branch(tau) is not None
            and not self.cache.has_key(('s_count',) + tuple(tau))
        )

    def s_count(self, tau: Sequence[int]) -> int:
        """ Number of labeled cyclically reduced graphs of type ``tau`` """
        tau = CombType(*tau)
        if not self._pending(tau):
            return self._lookup(tau)
        # depth-first over the recurrence without recursion
        stack: List[CombType] = [tau]
        while stack:
            top: CombType = stack[-1]
            if not self._pending(top):
                stack.pop()
                continue
            rec: Recurrence = recurrence(top, default_branch(top))
            missing: List[CombType] = [sub for _, sub in rec.terms if self._pending(sub)]
            if missing:
                stack.extend(missing)
                continue
            self.cache.ex_set(('s_count',) + tuple(top), self._evaluate(top, rec))
            stack.pop()
        return self._lookup(tau)

    def s_count_via(self, tau: Sequence[int], branch: str) -> int:
        """ One step through ``branch``, the sub-counts through the default order """
        tau = CombType(*tau)
        if not is_feasible(tau):
            return 0
        rec: Recurrence = recurrence(tau, branch)
        for _, sub in rec.terms:
            self.s_count(sub)
        return self._evaluate(tau, rec)

    # -- silhouettes -----------------------------------------------------------

    def _silhouette_count(self, n: int) -> int:
        """ Connected pairs: all pairs minus those whose component of vertex 1 has 6m < n vertices """
        if n < 6 or n % 6:
            return 0
        total: int = gtilde(n)
        for size in range(6, n, 6):
            total -= math.comb(n - 1, size - 1) * self.silhouette_count(size) * gtilde(n - size)
        if total < 0:
            raise InvariantBreach(f'negative silhouette count at n={n}')
        return total

    def silhouette_count_legacy(self, n: int) -> int:
        """ The connectivity recurrence without the binomial factor, kept for comparison """
        warnings.warn('the legacy silhouette recurrence omits the vertex choice', LegacyValueWarning)
        if n < 6 or n % 6:
            return 0
        nu: int = n // 6
        return gtilde(n) - sum(
            gtilde(6 * m) * self.silhouette_count(6 * (nu - m)) for m in range(1, nu)
        )

    # -- rooted graphs and subgroups ----------------------------------------------

    def L_count(self, tau: Sequence[int]) -> int:
        """ Labeled rooted reduced graphs of type ``tau`` """
        n, k2, k3, l2, l3 = CombType(*tau)
        return (
            n * self.s_count((n, k2, k3, l2, l3))
            + (l2 + 1) * self.s_count((n, k2, k3, l2 + 1, l3))
            + (l3 + 1) * self.s_count((n, k2, k3, l2, l3 + 1))
        )

    def H_count(self, tau: Sequence[int]) -> int:
        """ Subgroups whose Stallings graph has type ``tau`` """
        tau = CombType(*tau)
        return exact_div(self.L_count(tau), math.factorial(tau.n), f'L{tuple(tau)} / n!')

    def rooted_counts_legacy(self, tau: Sequence[int]) -> Tuple[int, int]:
        """ ``(L, H)``, taking the legacy table value where one exists """
        tau = CombType(*tau)
        legacy: Optional[Tuple[int, int]] = _legacy_rooted_table.get(tau)
        if legacy is None:
            return self.L_count(tau), self.H_count(tau)
        warnings.warn(
            f'legacy (L, H) = {legacy} for {tau}, the formula gives '
            f'{(self.L_count(tau), self.H_count(tau))}',
            LegacyValueWarning,
        )
        return legacy

    def iso_families(self, n: int, sigma: Sequence[int]) -> List[Tuple[str, int, int, CombType]]:
        """ ``(family, weight, multiplier, completed type)`` for the three root shapes.

        The labeled rooted count of a family is ``multiplier * s(completed type)``;
        families whose derived type is not integral are left out.
        """
        l2, l3, r = IsoType(*sigma)
        rest: int = n - 3 * l2 - 4 * l3 - 6 * r
        found: List[Tuple[str, int, int, CombType]] = []
        shapes: List[Tuple[str, int, int, int, Tuple[int, int]]] = [
            # family, numerator of k2, numerator of k3, multiplier, added loops
            ('cyclically-reduced', n - l2, rest + 6, n, (0, 0)),
            ('missing-b', n - l2, rest + 2, l3 + 1, (0, 1)),
            ('missing-a', n - 1 - l2, rest + 3, l2 + 1, (1, 0)),
        ]
        for family, k2_twice, k3_twice, multiplier, (extra_a, extra_b) in shapes:
            if k2_twice < 0 or k3_twice < 0 or k2_twice % 2 or k3_twice % 2:
                continue
            completed: CombType = CombType(n, k2_twice // 2, k3_twice // 2, l2 + extra_a, l3 + extra_b)
            weight: int = multiplier * self.s_count(completed)
            if weight:
                found.append((family, weight, multiplier, completed))
        return found

    def count_by_iso(self,
                     n: int,
                     sigma: Sequence[int],
                     mode: str = 'all',
                     labeled: bool = False,
                     ) -> int:
        """ Subgroups of size ``n`` and isomorphism type ``sigma``.

        ``mode='cyclically-reduced'`` keeps the first family only. With
        ``labeled=True`` the labeled rooted total is returned instead.
        """
        if mode not in ('all', 'cyclically-reduced'):
            raise ValueError(f'unknown mode {mode!r}')
        families = self.iso_families(n, sigma)
        if mode == 'cyclically-reduced':
            families = [item for item in families if item[0] == 'cyclically-reduced']
        total: int = sum(weight for _, weight, _, _ in families)
        if labeled:
            return total
        return exact_div(total, math.factorial(n), f'count_by_iso({n}, {tuple(sigma)}) / n!')

    def count_of_size(self, n: int) -> int:
        """ Labeled cyclically reduced graphs of size ``n``, all types together """
        return sum(self.s_count(tau) for tau in types_of_size(n))

    # -- silhouette sizes -------------------------------------------------------

    def _terminal_sizes(self, tau: CombType) -> Optional[SizeTable]:
        """ Size table of a type the recurrence does not expand, None otherwise """
        if not is_feasible(tau):
            return ()
        if tau.n <= 2:
            value: int = _base_table.get(tau, 0)
            return ((2 if tau == _delta2_type else 1, value),) if value else ()
        if default_branch(tau) is None:
            value = self._lookup(tau)
            return ((tau.n, value),) if value else ()
        return None

    def _size_table(self, tau: CombType) -> Optional[SizeTable]:
        found: Optional[SizeTable] = self._terminal_sizes(tau)
        if found is not None:
            return found
        return self.cache.get(('silhouette_sizes',) + tuple(tau))

    def silhouette_sizes(self, tau: Sequence[int]) -> Dict[int, int]:
        """ Labeled cyclically reduced graphs of type ``tau``, by the size of their silhouette.

        Runs the recurrence of :meth:`s_count`; each branch is a move and
        moves keep the silhouette, so the size travels down to the terminal type.
        """
        tau = CombType(*tau)
        stack: List[CombType] = [tau]
        while stack:
            top: CombType = stack[-1]
            if self._size_table(top) is not None:
                stack.pop()
                continue
            rec: Recurrence = recurrence(top, default_branch(top))
            missing: List[CombType] = [sub for _, sub in rec.terms if self._size_table(sub) is None]
            if missing:
                stack.extend(missing)
                continue
            totals: Dict[int, int] = {}
            for factor, sub in rec.terms:
                for size, value in self._size_table(sub):
                    totals[size] = totals.get(size, 0) + factor * value
            table: SizeTable = tuple(
                (size, exact_div(value, rec.divisor, f'silhouette sizes of {top}'))
                for size, value in sorted(totals.items())
            )
            self.cache.ex_set(('silhouette_sizes',) + tuple(top), table)
            stack.pop()
        return dict(self._size_table(tau))

    def silhouette_sizes_of_size(self, n: int) -> Dict[int, int]:
        """ All labeled cyclically reduced graphs of size ``n``, by silhouette size """
        totals: Dict[int, int] = {}
        for tau in types_of_size(n):
            for size, value in self.silhouette_sizes(tau).items():
                totals[size] = totals.get(size, 0) + value
        return dict(sorted(totals.items()))


def types_of_size(n: int) -> Iterator[CombType]:
    """ Every feasible cyclically reduced type of size ``n`` """
    for l2 in range(n % 2, n + 1, 2):
        for k3 in range(n // 2 + 1):
            for l3 in range((n - 2 * k3) % 3, n - 2 * k3 + 1, 3):
                yield CombType(n, (n - l2) // 2, k3, l2, l3)


def rooted_types_of_size(n: int) -> Iterator[CombType]:
    """ Candidate types of rooted graphs of size ``n`` (the root may miss a letter) """
    seen: set = set()
    for tau in types_of_size(n):
        candidates = (
            tau,
            CombType(tau.n, tau.k2, tau.k3, tau.l2, tau.l3 - 1),
            CombType(tau.n, tau.k2, tau.k3, tau.l2 - 1, tau.l3),
        )
        for candidate in candidates:
            if min(candidate) >= 0 and candidate not in seen:
                seen.add(candidate)
                yield candidate


default_counter: Counter = Counter(CountCache('default'))

s_count = default_counter.s_count
s_count_via = default_counter.s_count_via
silhouette_count = default_counter.silhouette_count
silhouette_count_legacy = default_counter.silhouette_count_legacy
L_count = default_counter.L_count
H_count = default_counter.H_count
rooted_counts_legacy = default_counter.rooted_counts_legacy
count_by_iso = default_counter.count_by_iso
count_of_size = default_counter.count_of_size
silhouette_sizes = default_counter.silhouette_sizes
silhouette_sizes_of_size = default_counter.silhouette_sizes_of_size
