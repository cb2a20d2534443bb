#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/14
# author: clarkmonkey@163.com

import math

import pytest

from psl2z.core import CombType, IsoType
from psl2z.count import (
    BRANCHES, Counter, H_count, L_count, T2, T3, b_structure_counts, count_by_iso, count_of_size,
    default_branch, gtilde, involution_counts, is_feasible, recurrence, rooted_types_of_size,
    rooted_counts_legacy, s_count, s_count_via, silhouette_count, silhouette_count_legacy,
    silhouette_sizes, silhouette_sizes_of_size, types_of_size,
)
from psl2z.enumeration import (
    enum_cyclically_reduced, enum_rooted, involutions, tally, tally_by_iso, tally_by_type,
)
from psl2z.moves import silhouette
from psl2z.memo import CountCache
from psl2z.util import LegacyValueWarning

params = pytest.mark.parametrize
raises = pytest.raises
slow = pytest.mark.slow


class TestSmallTypes:

    @params('tau, value', [
        ((1, 0, 0, 1, 1), 1),
        ((2, 1, 1, 0, 0), 2),
        ((2, 0, 1, 2, 0), 2),
        ((2, 1, 0, 0, 2), 1),
        ((3, 1, 0, 1, 0), 6),
        ((4, 2, 0, 0, 1), 24),
        ((4, 2, 2, 0, 0), 24),
        ((5, 2, 1, 1, 0), 480),
        ((6, 3, 0, 0, 0), 600),
    ])
    def test_values(self, tau, value):
        assert s_count(tau) == value

    @params('tau', [(2, 1, 1, 1, 0), (3, 1, 0, 0, 0), (4, 2, 0, 0, 2), (0, 0, 0, 0, 0), (3, 1, -1, 1, 3)])
    def test_infeasible(self, tau):
        assert not is_feasible(tau)
        assert s_count(tau) == 0

    @params('tau, L, H', [
        ((1, 0, 0, 1, 1), 1, 1),
        ((1, 0, 0, 1, 0), 1, 1),
        ((1, 0, 0, 0, 1), 1, 1),
        ((2, 1, 1, 0, 0), 4, 2),
        ((2, 0, 1, 2, 0), 4, 2),
        ((2, 1, 0, 0, 2), 2, 1),
        ((2, 0, 1, 1, 0), 4, 2),
        ((2, 1, 0, 0, 1), 2, 1),
    ])
    def test_rooted(self, tau, L, H):
        assert L_count(tau) == L
        assert H_count(tau) == H

    def test_legacy_rooted_counts(self):
        with pytest.warns(LegacyValueWarning, match='legacy'):
            assert rooted_counts_legacy((2, 0, 1, 1, 0)) == (2, 1)
        assert (L_count((2, 0, 1, 1, 0)), H_count((2, 0, 1, 1, 0))) == (4, 2)

    def test_legacy_rooted_counts_elsewhere(self, recwarn):
        assert rooted_counts_legacy((2, 1, 0, 0, 1)) == (2, 1)
        assert rooted_counts_legacy((3, 1, 0, 1, 0)) == (L_count((3, 1, 0, 1, 0)), H_count((3, 1, 0, 1, 0)))
        assert not [w for w in recwarn if issubclass(w.category, LegacyValueWarning)]


class TestRecurrence:

    def test_default_branch(self):
        assert default_branch(CombType(2, 1, 1, 0, 0)) is None
        assert default_branch(CombType(4, 2, 0, 0, 1)) == 'l3'
        assert default_branch(CombType(5, 2, 1, 1, 0)) == 'l2'
        assert default_branch(CombType(4, 2, 2, 0, 0)) == 'k3'
        assert default_branch(CombType(6, 3, 0, 0, 0)) is None

    def test_shape(self):
        rec = recurrence(CombType(5, 2, 1, 1, 0), 'l2')
        assert rec.divisor == 1
        assert rec.terms == (
            (10, CombType(4, 2, 2, 0, 0)),
            (40, CombType(3, 1, 0, 1, 0)),
        )
        assert rec.weights(s_count) == [240, 240]

    def test_bad_branch(self):
        with raises(ValueError):
            recurrence(CombType(4, 2, 0, 0, 1), 'l2')
        with raises(ValueError):
            recurrence(CombType(5, 2, 1, 1, 0), 'k3')
        with raises(ValueError, match='unknown branch'):
            recurrence(CombType(5, 2, 1, 1, 0), 'k2')

    @params('n', range(3, 13))
    def test_branch_independence(self, n):
        for tau in types_of_size(n):
            if s_count(tau) == 0:
                continue
            for branch in BRANCHES:
                try:
                    recurrence(tau, branch)
                except ValueError:
                    continue
                assert s_count_via(tau, branch) == s_count(tau), (tau, branch)

    def test_large_types_stay_exact(self):
        counter = Counter(CountCache())
        value = counter.s_count((120, 58, 9, 4, 6))
        assert value > 0
        assert value == s_count((120, 58, 9, 4, 6))


class TestSilhouettes:

    def test_closed_forms(self):
        assert T2(6) == 15 and T2(5) == 0
        assert T3(6) == 40 and T3(4) == 0
        assert gtilde(12) == 10395 * 246400
        with raises(ValueError):
            gtilde(8)

    @params('n, value', [(6, 600), (12, 2395008000), (5, 0), (8, 0)])
    def test_count(self, n, value):
        assert silhouette_count(n) == value

    def test_legacy_recurrence(self):
        with pytest.warns(LegacyValueWarning):
            assert silhouette_count_legacy(12) == 2560968000
        with pytest.warns(LegacyValueWarning):
            assert silhouette_count_legacy(6) == silhouette_count(6)

    def test_fixed_triangles(self):
        # sigma3 fixed to four triangles, sigma2 any fixed-point-free involution
        b = {v: v + 1 if v % 3 else v - 2 for v in range(1, 13)}
        connected = 0
        for a in involutions(list(range(1, 13)), 0):
            parent = list(range(13))

            def find(x):
                while parent[x] != x:
                    x = parent[x]
                return x

            for table in (a, b):
                for v, w in table.items():
                    parent[find(v)] = find(w)
            connected += len({find(v) for v in range(1, 13)}) == 1
        assert connected == 9720
        assert T3(12) == 246400
        assert connected * T3(12) == silhouette_count(12)

    @params('n', [6, 12, 18])
    def test_sizes_of_silhouettes(self, n):
        assert silhouette_sizes((n, n // 2, 0, 0, 0)) == {n: silhouette_count(n)}

    def test_silhouettes_are_loop_free_types(self):
        assert s_count((12, 6, 0, 0, 0)) == silhouette_count(12)

    def test_memoized(self):
        counter = Counter(CountCache())
        counter.silhouette_count(18)
        assert len(counter.cache) == 3
        assert counter.cache.stats()['hits'] >= 1


class TestIsoCounts:

    @params('n, sigma, value', [
        (1, (1, 1, 0), 1),
        (1, (1, 0, 0), 1),
        (1, (0, 1, 0), 1),
        (2, (0, 1, 0), 1),
        (2, (1, 0, 0), 2),
        (2, (0, 0, 1), 2),
    ])
    def test_values(self, n, sigma, value):
        assert count_by_iso(n, sigma) == value

    def test_free_rank_two_index_six(self):
        assert count_by_iso(6, IsoType(0, 0, 2), 'cyclically-reduced', labeled=True) == 3600
        assert count_by_iso(6, IsoType(0, 0, 2), 'cyclically-reduced') == 5

    def test_unknown_mode(self):
        with raises(ValueError):
            count_by_iso(2, (0, 0, 1), 'rooted')


class TestAgainstEnumeration:

    @params('n', [1, 2, 3, 4, 5, pytest.param(6, marks=slow), pytest.param(7, marks=slow), pytest.param(8, marks=slow)])
    def test_s_count(self, n):
        found = tally_by_type(enum_cyclically_reduced(n))
        for tau in types_of_size(n):
            assert s_count(tau) == found.get(tau, 0), tau
        assert count_of_size(n) == sum(found.values())

    @params('n', [1, 2, 3, 4, 5, pytest.param(6, marks=slow), pytest.param(7, marks=slow)])
    def test_rooted(self, n):
        found = tally_by_type(enum_rooted(n))
        for tau in rooted_types_of_size(n):
            assert L_count(tau) == found.get(tau, 0), tau
            assert L_count(tau) % math.factorial(n) == 0

    @params('n', [1, 2, 3, 4, 5, pytest.param(6, marks=slow), pytest.param(7, marks=slow)])
    def test_iso(self, n):
        found = tally_by_iso(enum_rooted(n))
        for sigma, value in found.items():
            assert count_by_iso(n, sigma, labeled=True) == value, sigma

    def test_structure_counts(self):
        assert involution_counts(6) == [1, 1, 2, 4, 10, 26, 76]
        assert b_structure_counts(6) == [1, 1, 3, 9, 33, 141, 651]


def test_benchmark_s_count(benchmark):
    tau = (60, 28, 6, 4, 3)

    def fresh():
        return Counter(CountCache()).s_count(tau)

    assert benchmark(fresh) == s_count(tau)


class TestSilhouetteSizes:

    @params('tau, expected', [
        ((1, 0, 0, 1, 1), {1: 1}),
        ((2, 1, 1, 0, 0), {2: 2}),
        ((2, 0, 1, 2, 0), {1: 2}),
        ((2, 1, 0, 0, 2), {1: 1}),
        ((3, 1, 0, 0, 0), {}),
    ])
    def test_small_types(self, tau, expected):
        assert silhouette_sizes(tau) == expected

    @params('n', [1, 2, 3, 4, 5, pytest.param(6, marks=slow)])
    def test_against_enumeration(self, n):
        found = tally(enum_cyclically_reduced(n), key=lambda g: silhouette(g).n)
        assert silhouette_sizes_of_size(n) == dict(sorted(found.items()))

    @params('n', [12, 18, 30])
    def test_totals(self, n):
        for tau in types_of_size(n):
            assert sum(silhouette_sizes(tau).values()) == s_count(tau), tau
        assert sum(silhouette_sizes_of_size(n).values()) == count_of_size(n)

    def test_sizes_are_silhouette_sizes(self):
        sizes = set(silhouette_sizes_of_size(30))
        assert sizes <= {1, 2, 6, 12, 18, 24, 30}

    def test_private_cache(self):
        counter = Counter(CountCache())
        assert counter.silhouette_sizes((5, 2, 1, 1, 0)) == silhouette_sizes((5, 2, 1, 1, 0))
        assert counter.cache.has_key(('silhouette_sizes', 5, 2, 1, 1, 0))
